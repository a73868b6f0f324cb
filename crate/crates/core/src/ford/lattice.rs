use num_complex::Complex64;

/// Imaginary parts of `g` below this (relative) make the lattice degenerate.
pub const DEGENERATE_TOL: f64 = 1e-9;
const FRACTION_SNAP: f64 = 1e-9;

/// Translations `z -> z + t1`, `z -> z + t2` fixing infinity.
///
/// When `t2` is (numerically) real the lattice is degenerate and reduction
/// happens modulo `t1` only, onto the strip `0 <= Re z < 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CuspLattice {
    pub t1: Complex64,
    pub t2: Complex64,
    pub degenerate: bool,
}

/// The lattice spanned by `1` and the longitude translation `g`. A
/// non-degenerate `t2` is taken as `±g` with positive imaginary part.
pub fn cusp_lattice(g: Complex64) -> CuspLattice {
    let degenerate = g.im.abs() <= DEGENERATE_TOL * g.norm().max(1.0);
    let t2 = if !degenerate && g.im < 0.0 { -g } else { g };
    CuspLattice {
        t1: Complex64::new(1.0, 0.0),
        t2,
        degenerate,
    }
}

impl CuspLattice {
    pub fn translation(&self, k: i64, m: i64) -> Complex64 {
        if self.degenerate {
            self.t1 * k as f64
        } else {
            self.t1 * k as f64 + self.t2 * m as f64
        }
    }

    /// Coordinates `(x, y)` with `z = x t1 + y t2` (`y = 0` when degenerate).
    pub fn coordinates(&self, z: Complex64) -> (f64, f64) {
        if self.degenerate {
            return ((z / self.t1).re, 0.0);
        }
        let y = z.im / self.t2.im;
        let x = ((z - self.t2 * y) / self.t1).re;
        (x, y)
    }

    /// Moves `z` into the fundamental cell; returns the reduced point and the
    /// `(k, m)` that was added.
    pub fn reduce(&self, z: Complex64) -> (Complex64, (i64, i64)) {
        let (x, y) = self.coordinates(z);
        let k = -snapped_floor(x);
        let m = if self.degenerate {
            0
        } else {
            -snapped_floor(y)
        };
        (z + self.translation(k, m), (k, m))
    }

    /// Corners of the fundamental parallelogram `0, t1, t1 + t2, t2`, or
    /// `None` for a strip.
    pub fn cell(&self) -> Option<[Complex64; 4]> {
        (!self.degenerate).then(|| {
            [
                Complex64::new(0.0, 0.0),
                self.t1,
                self.t1 + self.t2,
                self.t2,
            ]
        })
    }

    /// All translations of length at most `reach`.
    pub fn translations_within(&self, reach: f64) -> Vec<Complex64> {
        let kmax = (reach / self.t1.norm()).ceil() as i64 + 1;
        let mmax = if self.degenerate {
            0
        } else {
            (reach / self.t2.im.abs()).ceil() as i64 + 1
        };
        let mut out = Vec::new();
        for m in -mmax..=mmax {
            for k in -(kmax + mmax * (self.t2.re.abs().ceil() as i64))
                ..=(kmax + mmax * (self.t2.re.abs().ceil() as i64))
            {
                let t = self.translation(k, m);
                if t.norm() <= reach {
                    out.push(t);
                }
            }
        }
        out
    }
}

/// `floor(x)`, except values within `1e-9` below an integer round up to it.
fn snapped_floor(x: f64) -> i64 {
    let f = x.floor();
    if x - f > 1.0 - FRACTION_SNAP {
        f as i64 + 1
    } else {
        f as i64
    }
}
