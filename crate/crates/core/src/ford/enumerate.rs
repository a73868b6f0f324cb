//! Isometric spheres seeded from cyclic subwords of the relator.

use std::collections::BTreeSet;

use num_complex::Complex64;
use rayon::prelude::*;

use super::lattice::{cusp_lattice, CuspLattice};
use super::sphere::{isometric_sphere, IsometricSphere};
use super::FordError;
use crate::algebra::FreeWord;
use crate::prep::{longitude_entry, ParabolicPair};
use crate::twobridge::{relator_word, TwoBridgeForm};

/// Spheres closer than this in centre and radius are the same sphere.
pub const DEDUP_TOL: f64 = 1e-9;
/// Relative `|c|` threshold below which a subword is treated as fixing
/// infinity; long words accumulate rounding in `c`.
const SUBWORD_NO_SPHERE_TOL: f64 = 1e-9;

/// The cusp lattice of the representation at `omega`.
pub fn representation_lattice(
    form: &TwoBridgeForm,
    omega: Complex64,
) -> Result<CuspLattice, FordError> {
    Ok(cusp_lattice(longitude_entry(form, omega)?))
}

/// Spheres of all cyclic subwords of `w` (and their inverses) of length at
/// most `depth`, reduced into the lattice cell and deduplicated. Sorted by
/// descending radius, then centre.
pub fn enumerate_spheres(
    form: &TwoBridgeForm,
    omega: Complex64,
    depth: usize,
) -> Result<Vec<IsometricSphere>, FordError> {
    let lattice = representation_lattice(form, omega)?;
    Ok(enumerate_spheres_in(form, omega, depth, &lattice))
}

pub(crate) fn enumerate_spheres_in(
    form: &TwoBridgeForm,
    omega: Complex64,
    depth: usize,
    lattice: &CuspLattice,
) -> Vec<IsometricSphere> {
    let w = relator_word(form);
    let words: BTreeSet<FreeWord> = w
        .cyclic_subwords(depth.max(1))
        .into_iter()
        .flat_map(|s| {
            let inv = s.inverse();
            [s, inv]
        })
        .collect();
    let pair = ParabolicPair::numeric(omega);
    let raw: Vec<IsometricSphere> = words
        .into_par_iter()
        .filter_map(|word| {
            let m = pair.image(&word);
            if m.c.norm() <= SUBWORD_NO_SPHERE_TOL * m.max_norm().max(1.0) {
                return None;
            }
            let mut s = isometric_sphere(&m, word).ok()?;
            let (center, shift) = lattice.reduce(s.center);
            s.center = center;
            s.shift = shift;
            Some(s)
        })
        .collect();
    dedup_spheres(raw)
}

fn sphere_order(a: &IsometricSphere, b: &IsometricSphere) -> std::cmp::Ordering {
    b.radius
        .total_cmp(&a.radius)
        .then(a.center.re.total_cmp(&b.center.re))
        .then(a.center.im.total_cmp(&b.center.im))
}

fn same_sphere(a: &IsometricSphere, b: &IsometricSphere) -> bool {
    (a.radius - b.radius).abs() <= DEDUP_TOL && (a.center - b.center).norm() <= DEDUP_TOL
}

/// Merges coincident spheres; the shortest word becomes the label and the
/// others become aliases.
pub fn dedup_spheres(mut raw: Vec<IsometricSphere>) -> Vec<IsometricSphere> {
    raw.sort_by(sphere_order);
    let mut clusters: Vec<Vec<IsometricSphere>> = Vec::new();
    for s in raw {
        // Members of a cluster have radii within DEDUP_TOL, and `raw` is
        // sorted by radius, so only recent clusters can match.
        let hit = clusters
            .iter_mut()
            .rev()
            .take_while(|c| c[0].radius - s.radius <= 2.0 * DEDUP_TOL)
            .find(|c| same_sphere(&c[0], &s));
        match hit {
            Some(c) => c.push(s),
            None => clusters.push(vec![s]),
        }
    }
    let mut out: Vec<IsometricSphere> = clusters
        .into_iter()
        .map(|mut c| {
            c.sort_by(|a, b| {
                a.label
                    .len()
                    .cmp(&b.label.len())
                    .then_with(|| a.label.to_string().cmp(&b.label.to_string()))
            });
            let mut head = c[0].clone();
            head.aliases = c[1..]
                .iter()
                .flat_map(|s| s.labels().cloned().collect::<Vec<_>>())
                .collect();
            head
        })
        .collect();
    out.sort_by(sphere_order);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twobridge::validate_form;

    #[test]
    fn depth_one_gives_x2_spheres_only() {
        let form = validate_form(5, 3).unwrap();
        let omega = Complex64::new(-0.5, 3f64.sqrt() / 2.0);
        let spheres = enumerate_spheres(&form, omega, 1).unwrap();
        assert_eq!(spheres.len(), 2);
        for s in &spheres {
            let l = s.label.to_string();
            assert!(l == "x2" || l == "x2^-1", "{l}");
            assert!((s.radius - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn dedup_merges_labels() {
        let s = |c: f64, l: &str| IsometricSphere {
            center: Complex64::new(c, 0.0),
            radius: 0.5,
            label: l.parse().unwrap(),
            aliases: vec![],
            shift: (0, 0),
        };
        let out = dedup_spheres(vec![
            s(0.25, "x1^-1 x2 x1^-1"),
            s(0.25 + 1e-12, "x2"),
            s(0.75, "x2^-1"),
        ]);
        assert_eq!(out.len(), 2);
        assert_eq!(out[0].label.to_string(), "x2");
        assert_eq!(out[0].aliases[0].to_string(), "x1^-1 x2 x1^-1");
    }
}
