use num_complex::Complex64;

use super::FordError;
use crate::algebra::{ComplexMatrix2, FreeWord};

/// `|c|` below this (relative to the largest entry) means the element fixes
/// infinity.
pub const NO_SPHERE_TOL: f64 = 1e-12;

/// Isometric circle `|cz + d| = 1` of a labelled group element.
#[derive(Clone, Debug, PartialEq)]
pub struct IsometricSphere {
    pub center: Complex64,
    pub radius: f64,
    /// Word of the element whose sphere this is, before any lattice shift.
    pub label: FreeWord,
    /// Other words whose (reduced) spheres coincide with this one.
    pub aliases: Vec<FreeWord>,
    /// Lattice translation `(k, m)` applied to reach `center`:
    /// `center = -d/c + k t1 + m t2`.
    pub shift: (i64, i64),
}

impl IsometricSphere {
    /// Copy translated by `t`.
    pub fn translated(&self, t: Complex64) -> Self {
        IsometricSphere {
            center: self.center + t,
            ..self.clone()
        }
    }

    /// All labels, primary first.
    pub fn labels(&self) -> impl Iterator<Item = &FreeWord> {
        std::iter::once(&self.label).chain(self.aliases.iter())
    }
}

pub fn isometric_sphere(m: &ComplexMatrix2, label: FreeWord) -> Result<IsometricSphere, FordError> {
    let c = m.c.norm();
    if c.is_nan() || c <= NO_SPHERE_TOL * m.max_norm().max(1.0) {
        return Err(FordError::NoIsometricSphere { label });
    }
    Ok(IsometricSphere {
        center: -m.d / m.c,
        radius: 1.0 / c,
        label,
        aliases: Vec::new(),
        shift: (0, 0),
    })
}
