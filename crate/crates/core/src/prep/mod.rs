//! Parabolic representations of two-bridge knot groups.
//!
//! A normalized p-rep sends `x1` to `A = [[1, 1], [0, 1]]` and `x2` to
//! `B = [[1, 0], [-omega, 1]]`. Comparing entries of `W A = B W` for the
//! relator image `W` forces `W11 = 0`, so `omega` runs over the roots of the
//! p-rep polynomial `Lambda = ±W11(u)`.

mod factors;
mod roots;

use num_complex::Complex64;
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{
    mod_reduce, word_image, AlgebraError, ComplexMatrix2, FreeWord, IntPolynomial, PolyMatrix2, Sl2,
};
use crate::twobridge::{longitude_word, relator_word, TwoBridgeForm};

pub use factors::{detect_factors, reconstruct_factors, snap_rational, PRepClass, RecoveredFactor};
pub use roots::{find_roots, residual_bound, RootSet};

/// Shape tolerance for the longitude image `[[-1, g], [0, -1]]`.
pub const LONGITUDE_SHAPE_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PrepError {
    #[error("relator (1,1) entry vanishes identically for {0}")]
    DegenerateForm(TwoBridgeForm),
    #[error("root finder did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },
    #[error("polynomial has no roots (degree < 1)")]
    ConstantPolynomial,
    #[error("omega = {omega} is not a p-rep root (|Lambda(omega)| = {residual:e})")]
    NotARepresentation { omega: Complex64, residual: f64 },
    #[error("longitude image is not of the form [[-1, g], [0, -1]]: {detail}")]
    ShapeViolation { detail: String },
    #[error("no integer factor reconstruction: {reason}")]
    FactorReconstructionFailed {
        reason: String,
        partial: Vec<IntPolynomial>,
    },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// The meridian images `A` and `B_omega`.
#[derive(Clone, Debug, PartialEq)]
pub struct ParabolicPair<M> {
    pub a: M,
    pub b: M,
}

impl<M: Sl2> ParabolicPair<M> {
    pub fn image(&self, w: &FreeWord) -> M {
        word_image(w, &self.a, &self.b)
    }
}

impl ParabolicPair<PolyMatrix2> {
    /// `omega` is the indeterminate `u`.
    pub fn symbolic() -> Self {
        ParabolicPair {
            a: PolyMatrix2::from_i64s([[&[1], &[1]], [&[], &[1]]]),
            b: PolyMatrix2::from_i64s([[&[1], &[]], [&[0, -1], &[1]]]),
        }
    }

    /// Symbolic pair reduced modulo a monic polynomial.
    pub fn modulo(f: &IntPolynomial) -> Result<Self, AlgebraError> {
        let s = Self::symbolic();
        Ok(ParabolicPair {
            a: mod_reduce(&s.a, f)?,
            b: mod_reduce(&s.b, f)?,
        })
    }
}

impl ParabolicPair<ComplexMatrix2> {
    pub fn numeric(omega: Complex64) -> Self {
        ParabolicPair {
            a: ComplexMatrix2::real(1.0, 1.0, 0.0, 1.0),
            b: ComplexMatrix2::new(1.0.into(), 0.0.into(), -omega, 1.0.into()),
        }
    }
}

/// `Lambda(u)` together with its form; leading coefficient positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PRepPolynomial {
    pub lambda: IntPolynomial,
    pub form: TwoBridgeForm,
}

impl PRepPolynomial {
    pub fn degree(&self) -> usize {
        self.lambda.degree().unwrap_or(0)
    }
}

/// Symbolic image of the relator over `Z[u]`.
pub fn relator_image(form: &TwoBridgeForm) -> PolyMatrix2 {
    ParabolicPair::symbolic().image(&relator_word(form))
}

pub fn prep_polynomial(form: &TwoBridgeForm) -> Result<PRepPolynomial, PrepError> {
    let w = relator_image(form);
    if w.a.is_zero() {
        return Err(PrepError::DegenerateForm(*form));
    }
    let lambda = w.a.sign_normalized();
    debug_assert_eq!(lambda.degree(), Some((form.alpha() as usize - 1) / 2));
    Ok(PRepPolynomial {
        lambda,
        form: *form,
    })
}

/// Upper-right entry `g` of the longitude image at a p-rep root `omega`.
pub fn longitude_entry(form: &TwoBridgeForm, omega: Complex64) -> Result<Complex64, PrepError> {
    let lambda = prep_polynomial(form)?.lambda;
    longitude_entry_checked(form, &lambda, omega)
}

pub(crate) fn longitude_entry_checked(
    form: &TwoBridgeForm,
    lambda: &IntPolynomial,
    omega: Complex64,
) -> Result<Complex64, PrepError> {
    let residual = lambda.eval(omega).norm();
    let degree = lambda.degree().unwrap_or(0);
    if residual.is_nan() || residual >= residual_bound(omega, degree) {
        return Err(PrepError::NotARepresentation { omega, residual });
    }
    let gamma = longitude_word(form).word;
    let m = ParabolicPair::numeric(omega).image(&gamma);
    let minus_one = Complex64::new(-1.0, 0.0);
    let bad = [
        ("lower-left", m.c.norm()),
        ("upper-left", (m.a - minus_one).norm()),
        ("lower-right", (m.d - minus_one).norm()),
    ]
    .into_iter()
    .find(|(_, dev)| dev.is_nan() || *dev >= LONGITUDE_SHAPE_TOL);
    if let Some((entry, dev)) = bad {
        return Err(PrepError::ShapeViolation {
            detail: format!("{entry} entry deviates by {dev:e} at omega = {omega}"),
        });
    }
    Ok(m.b)
}

/// The longitude entry as a residue modulo `factor`; a constant residue means
/// `g` is the same rational integer at every root of `factor`.
pub fn longitude_entry_exact(
    form: &TwoBridgeForm,
    factor: &IntPolynomial,
) -> Result<IntPolynomial, PrepError> {
    let pair = ParabolicPair::modulo(factor)?;
    let m = pair.image(&longitude_word(form).word);
    let minus_one = IntPolynomial::from_i64s(&[-1]).rem_monic(&factor.sign_normalized())?;
    if !m.c.is_zero() || m.a != minus_one || m.d != minus_one {
        return Err(PrepError::ShapeViolation {
            detail: format!("exact longitude image modulo {} is {m}", factor.pretty()),
        });
    }
    Ok(m.b)
}

/// Numeric longitude entries for each root, computed in parallel.
pub(crate) fn longitude_entries(
    form: &TwoBridgeForm,
    lambda: &IntPolynomial,
    roots: &[Complex64],
) -> Result<Vec<Complex64>, PrepError> {
    roots
        .par_iter()
        .map(|&w| longitude_entry_checked(form, lambda, w))
        .collect()
}

/// Everything computed for one form, in deterministic order.
#[derive(Clone, Debug, PartialEq)]
pub struct PrepReport {
    pub form: TwoBridgeForm,
    pub lambda: IntPolynomial,
    pub roots: RootSet,
    pub classes: Vec<PRepClass>,
}

pub fn prep_report(form: &TwoBridgeForm) -> Result<PrepReport, PrepError> {
    let p = prep_polynomial(form)?;
    let roots = find_roots(&p.lambda)?;
    let classes = detect_factors(&p)?;
    Ok(PrepReport {
        form: *form,
        lambda: p.lambda,
        roots,
        classes,
    })
}
