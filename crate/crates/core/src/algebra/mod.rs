//! Exact arithmetic: integer polynomials, 2×2 matrices over `Z[u]` and `C`,
//! and free words in two generators.

mod matrix;
mod poly;
mod word;

pub use matrix::{mod_reduce, word_image, ComplexMatrix2, PolyMatrix2, Sl2};
pub use poly::{is_squarefree, poly_gcd, DivRem, IntPolynomial};
pub use word::{free_reduce, FreeWord, Generator, Letter};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("modulus must have leading coefficient 1 or -1")]
    NonMonicModulus,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Division with remainder; see [`IntPolynomial::divrem`].
pub fn poly_divrem(n: &IntPolynomial, d: &IntPolynomial) -> Result<DivRem, AlgebraError> {
    n.divrem(d)
}

/// Horner evaluation at a complex point.
pub fn poly_eval(p: &IntPolynomial, z: num_complex::Complex64) -> num_complex::Complex64 {
    p.eval(z)
}
