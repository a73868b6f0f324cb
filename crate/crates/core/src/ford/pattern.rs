//! Which parts of each isometric circle are exposed, by angular sampling.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rayon::prelude::*;

use super::lattice::CuspLattice;
use super::sphere::IsometricSphere;
use super::FordError;

pub const DEFAULT_SAMPLES: usize = 2048;
pub const MIN_SAMPLES: usize = 256;
/// Relative shrink of a disk when testing strict containment.
const STRICT: f64 = 1e-12;

/// Angular interval `[start, end)` in radians, `0 <= start < 2 pi`,
/// `end - start <= 2 pi`. `end` may exceed `2 pi` for arcs crossing angle 0.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Arc {
    pub start: f64,
    pub end: f64,
}

impl Arc {
    pub fn measure(&self) -> f64 {
        self.end - self.start
    }

    pub fn is_full(&self) -> bool {
        self.measure() >= TAU
    }
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct FordPattern {
    /// Spheres reduced into the lattice cell, sorted by descending radius.
    pub spheres: Vec<IsometricSphere>,
    /// Per sphere, the arcs not strictly inside any other (translated) disk.
    pub visible_arcs: Vec<Vec<Arc>>,
    /// Fraction of a grid over the cell covered by at least one disk.
    pub coverage: f64,
    pub samples: usize,
}

impl FordPattern {
    pub fn visible_measure(&self, i: usize) -> f64 {
        // An empty float sum is -0.0; add 0.0 so hidden circles report 0.
        self.visible_arcs[i].iter().map(Arc::measure).sum::<f64>() + 0.0
    }
}

pub fn ford_pattern(
    spheres: &[IsometricSphere],
    lattice: &CuspLattice,
    samples: usize,
) -> Result<FordPattern, FordError> {
    if spheres.is_empty() {
        return Err(FordError::EmptyPattern);
    }
    if samples < MIN_SAMPLES {
        return Err(FordError::TooFewSamples { samples });
    }
    let mut reduced: Vec<IsometricSphere> = spheres
        .iter()
        .map(|s| {
            let (center, (k, m)) = lattice.reduce(s.center);
            IsometricSphere {
                center,
                shift: (s.shift.0 + k, s.shift.1 + m),
                ..s.clone()
            }
        })
        .collect();
    reduced.sort_by(|a, b| {
        b.radius
            .total_cmp(&a.radius)
            .then(a.center.re.total_cmp(&b.center.re))
            .then(a.center.im.total_cmp(&b.center.im))
    });

    let r_max = reduced.iter().map(|s| s.radius).fold(0.0, f64::max);
    let cell_diam = match lattice.cell() {
        Some(c) => (c[2] - c[0]).norm().max((c[3] - c[1]).norm()),
        None => 1.0 + extent(&reduced).1 - extent(&reduced).0,
    };
    let translations = lattice.translations_within(2.0 * r_max + cell_diam + 1.0);

    let visible_arcs = (0..reduced.len())
        .into_par_iter()
        .map(|i| visible_arcs_of(i, &reduced, &translations, samples))
        .collect();
    let coverage = coverage(&reduced, lattice, &translations, samples);
    Ok(FordPattern {
        spheres: reduced,
        visible_arcs,
        coverage,
        samples,
    })
}

/// Vertical extent `(min, max)` of the spheres.
pub(crate) fn extent(spheres: &[IsometricSphere]) -> (f64, f64) {
    spheres
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), s| {
            (
                lo.min(s.center.im - s.radius),
                hi.max(s.center.im + s.radius),
            )
        })
}

fn visible_arcs_of(
    i: usize,
    spheres: &[IsometricSphere],
    translations: &[Complex64],
    samples: usize,
) -> Vec<Arc> {
    let me = &spheres[i];
    let blockers: Vec<(Complex64, f64)> = spheres
        .iter()
        .enumerate()
        .flat_map(|(j, s)| {
            translations
                .iter()
                .filter(move |t| !(j == i && t.norm() == 0.0))
                .map(move |&t| (s.center + t, s.radius))
        })
        .filter(|(c, r)| (c - me.center).norm() < r + me.radius)
        .collect();

    let visible: Vec<bool> = (0..samples)
        .map(|s| {
            let theta = TAU * (s as f64 + 0.5) / samples as f64;
            let p = me.center + Complex64::from_polar(me.radius, theta);
            !blockers
                .iter()
                .any(|(c, r)| (p - c).norm() < r * (1.0 - STRICT))
        })
        .collect();
    runs_to_arcs(&visible)
}

fn runs_to_arcs(visible: &[bool]) -> Vec<Arc> {
    let n = visible.len();
    if visible.iter().all(|&v| v) {
        return vec![Arc {
            start: 0.0,
            end: TAU,
        }];
    }
    let step = TAU / n as f64;
    // Start scanning just after a hidden sample so runs never wrap.
    let Some(first_hidden) = visible.iter().position(|&v| !v) else {
        return Vec::new();
    };
    let mut arcs = Vec::new();
    let mut run_start: Option<usize> = None;
    for off in 1..=n {
        let s = (first_hidden + off) % n;
        let idx = first_hidden + off;
        match (visible[s], run_start) {
            (true, None) => run_start = Some(idx),
            (false, Some(st)) => {
                arcs.push((st, idx));
                run_start = None;
            }
            _ => {}
        }
    }
    let mut out: Vec<Arc> = arcs
        .into_iter()
        .map(|(a, b)| {
            let start_idx = a % n;
            Arc {
                start: start_idx as f64 * step,
                end: (start_idx + (b - a)) as f64 * step,
            }
        })
        .collect();
    out.sort_by(|a, b| a.start.total_cmp(&b.start));
    out
}

fn coverage(
    spheres: &[IsometricSphere],
    lattice: &CuspLattice,
    translations: &[Complex64],
    samples: usize,
) -> f64 {
    let g = ((samples as f64).sqrt().ceil() as usize).max(16);
    let (lo, hi) = extent(spheres);
    let point = |a: usize, b: usize| -> Complex64 {
        let x = (a as f64 + 0.5) / g as f64;
        let y = (b as f64 + 0.5) / g as f64;
        if lattice.degenerate {
            Complex64::new(x, lo + y * (hi - lo))
        } else {
            lattice.t1 * x + lattice.t2 * y
        }
    };
    let covered = (0..g * g)
        .filter(|&n| {
            let p = point(n % g, n / g);
            spheres.iter().any(|s| {
                translations
                    .iter()
                    .any(|t| (p - s.center - t).norm() < s.radius)
            })
        })
        .count();
    covered as f64 / (g * g) as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FreeWord;
    use crate::ford::lattice::cusp_lattice;

    fn sphere(x: f64, y: f64, r: f64) -> IsometricSphere {
        IsometricSphere {
            center: Complex64::new(x, y),
            radius: r,
            label: FreeWord::empty(),
            aliases: vec![],
            shift: (0, 0),
        }
    }

    #[test]
    fn lone_sphere_fully_visible() {
        // Wide lattice so translates do not touch.
        let l = cusp_lattice(Complex64::new(0.0, 10.0));
        let mut big = l;
        big.t1 = Complex64::new(10.0, 0.0);
        let p = ford_pattern(&[sphere(5.0, 5.0, 1.0)], &big, 512).unwrap();
        assert_eq!(p.visible_arcs[0].len(), 1);
        assert!((p.visible_measure(0) - TAU).abs() < 1e-12);
    }

    #[test]
    fn overlapping_pair_is_symmetric() {
        let mut l = cusp_lattice(Complex64::new(0.0, 10.0));
        l.t1 = Complex64::new(10.0, 0.0);
        let p = ford_pattern(&[sphere(4.6, 5.0, 1.0), sphere(5.4, 5.0, 1.0)], &l, 2048).unwrap();
        let (m0, m1) = (p.visible_measure(0), p.visible_measure(1));
        assert!((m0 - m1).abs() < 1e-3);
        // Exact hidden half-angle: acos(d / 2r) with d = 0.8.
        let hidden = 2.0 * (0.4f64).acos();
        assert!((m0 - (TAU - hidden)).abs() < 2.0 * TAU / 2048.0);
    }

    #[test]
    fn empty_and_undersampled() {
        let l = cusp_lattice(Complex64::new(0.0, 2.0));
        assert_eq!(ford_pattern(&[], &l, 512), Err(FordError::EmptyPattern));
        assert!(matches!(
            ford_pattern(&[sphere(0.5, 0.5, 0.2)], &l, 16),
            Err(FordError::TooFewSamples { .. })
        ));
    }

    #[test]
    fn wrapping_arc_is_single() {
        let mut v = vec![true; 8];
        v[3] = false;
        v[4] = false;
        let arcs = runs_to_arcs(&v);
        assert_eq!(arcs.len(), 1);
        assert!((arcs[0].measure() - TAU * 6.0 / 8.0).abs() < 1e-12);
        assert!((arcs[0].start - TAU * 5.0 / 8.0).abs() < 1e-12);
    }

    #[test]
    fn unit_disks_cover_figure_eight_cell() {
        let l = cusp_lattice(Complex64::new(0.0, 2.0 * 3f64.sqrt()));
        let p = ford_pattern(&[sphere(0.0, 0.0, 1.0)], &l, 1024).unwrap();
        assert!(p.coverage > 0.0 && p.coverage < 1.0);
    }
}
