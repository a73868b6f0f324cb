//! Parabolic representations of two-bridge knot groups.
//!
//! * [`algebra`]: exact integer polynomials, 2×2 matrices and free words.
//! * [`twobridge`]: exponent sequences, relators and longitudes of `(alpha, beta)`.
//! * [`prep`]: the p-rep polynomial, its roots, longitude entries and factors.
//! * [`ford`]: isometric spheres, Ford patterns, Shimizu scans and relation checks.

pub mod algebra;
pub mod ford;
pub mod prep;
pub mod twobridge;

pub use algebra::{ComplexMatrix2, FreeWord, IntPolynomial, PolyMatrix2};
pub use prep::{PRepClass, PRepPolynomial, PrepReport, RootSet};
pub use twobridge::{validate_form, TwoBridgeForm};
