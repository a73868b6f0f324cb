//! 2×2 matrices of determinant one, over `Z[u]` (optionally modulo a monic
//! polynomial) and over `C`.

use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::poly::IntPolynomial;
use super::word::{FreeWord, Generator};
use super::AlgebraError;

/// Matrices that words can be evaluated in.
pub trait Sl2: Clone {
    /// The identity in the same ring (same modulus, if any).
    fn identity_like(&self) -> Self;
    fn product(&self, rhs: &Self) -> Self;
    /// `[[d, -b], [-c, a]]`; the inverse when the determinant is one.
    fn adjugate(&self) -> Self;
}

/// Image of `w` under `x1 -> g1`, `x2 -> g2`, multiplied in letter order.
pub fn word_image<M: Sl2>(w: &FreeWord, g1: &M, g2: &M) -> M {
    let g1_inv = g1.adjugate();
    let g2_inv = g2.adjugate();
    w.letters().iter().fold(g1.identity_like(), |acc, l| {
        let m = match (l.generator, l.inverse) {
            (Generator::X1, false) => g1,
            (Generator::X1, true) => &g1_inv,
            (Generator::X2, false) => g2,
            (Generator::X2, true) => &g2_inv,
        };
        acc.product(m)
    })
}

/// `Z[u]`-entried matrix, optionally reduced modulo a monic polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMatrix2 {
    pub a: IntPolynomial,
    pub b: IntPolynomial,
    pub c: IntPolynomial,
    pub d: IntPolynomial,
    modulus: Option<IntPolynomial>,
}

impl PolyMatrix2 {
    pub fn new(a: IntPolynomial, b: IntPolynomial, c: IntPolynomial, d: IntPolynomial) -> Self {
        PolyMatrix2 {
            a,
            b,
            c,
            d,
            modulus: None,
        }
    }

    pub fn from_i64s(rows: [[&[i64]; 2]; 2]) -> Self {
        Self::new(
            IntPolynomial::from_i64s(rows[0][0]),
            IntPolynomial::from_i64s(rows[0][1]),
            IntPolynomial::from_i64s(rows[1][0]),
            IntPolynomial::from_i64s(rows[1][1]),
        )
    }

    pub fn identity() -> Self {
        Self::new(
            IntPolynomial::one(),
            IntPolynomial::zero(),
            IntPolynomial::zero(),
            IntPolynomial::one(),
        )
    }

    pub fn modulus(&self) -> Option<&IntPolynomial> {
        self.modulus.as_ref()
    }

    pub fn entries(&self) -> [&IntPolynomial; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn det(&self) -> IntPolynomial {
        let det = &(&self.a * &self.d) - &(&self.b * &self.c);
        reduce_entry(self.modulus.as_ref(), det)
    }

    pub fn trace(&self) -> IntPolynomial {
        reduce_entry(self.modulus.as_ref(), &self.a + &self.d)
    }

    pub fn neg(&self) -> Self {
        self.map(|p| -p)
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }

    /// Equality up to global sign (equality in `PSL2`).
    pub fn projectively_eq(&self, other: &Self) -> bool {
        self == other || *self == other.neg()
    }

    fn map(&self, f: impl Fn(&IntPolynomial) -> IntPolynomial) -> Self {
        let mut out = Self::new(f(&self.a), f(&self.b), f(&self.c), f(&self.d));
        out.modulus = self.modulus.clone();
        out.reduce_in_place();
        out
    }

    fn reduce_in_place(&mut self) {
        if self.modulus.is_some() {
            let m = self.modulus.take();
            for e in [&mut self.a, &mut self.b, &mut self.c, &mut self.d] {
                *e = reduce_entry(m.as_ref(), std::mem::take(e));
            }
            self.modulus = m;
        }
    }
}

fn reduce_entry(m: Option<&IntPolynomial>, p: IntPolynomial) -> IntPolynomial {
    match m {
        Some(m) => p
            .rem_monic(m)
            .unwrap_or_else(|_| unreachable!("modulus is monic by construction")),
        None => p,
    }
}

/// Reduces every entry modulo `f`, after which products stay reduced.
///
/// `f` must have leading coefficient ±1; it is stored negated if needed so
/// that the recorded modulus is monic.
pub fn mod_reduce(m: &PolyMatrix2, f: &IntPolynomial) -> Result<PolyMatrix2, AlgebraError> {
    if f.is_zero() {
        return Err(AlgebraError::DivisionByZeroPoly);
    }
    if !f.is_monic_up_to_sign() {
        return Err(AlgebraError::NonMonicModulus);
    }
    let mut out = PolyMatrix2::new(m.a.clone(), m.b.clone(), m.c.clone(), m.d.clone());
    out.modulus = Some(f.sign_normalized());
    out.reduce_in_place();
    Ok(out)
}

impl Sl2 for PolyMatrix2 {
    fn identity_like(&self) -> Self {
        let mut id = PolyMatrix2::identity();
        id.modulus = self.modulus.clone();
        id.reduce_in_place();
        id
    }

    fn product(&self, rhs: &Self) -> Self {
        let mut out = PolyMatrix2::new(
            &(&self.a * &rhs.a) + &(&self.b * &rhs.c),
            &(&self.a * &rhs.b) + &(&self.b * &rhs.d),
            &(&self.c * &rhs.a) + &(&self.d * &rhs.c),
            &(&self.c * &rhs.b) + &(&self.d * &rhs.d),
        );
        out.modulus = self.modulus.clone().or_else(|| rhs.modulus.clone());
        out.reduce_in_place();
        out
    }

    fn adjugate(&self) -> Self {
        let mut out = PolyMatrix2::new(self.d.clone(), -&self.b, -&self.c, self.a.clone());
        out.modulus = self.modulus.clone();
        out
    }
}

impl fmt::Display for PolyMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.a.pretty(),
            self.b.pretty(),
            self.c.pretty(),
            self.d.pretty()
        )
    }
}

/// Complex 2×2 matrix in double precision.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexMatrix2 {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl ComplexMatrix2 {
    pub const fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        ComplexMatrix2 { a, b, c, d }
    }

    pub fn real(a: f64, b: f64, c: f64, d: f64) -> Self {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        Self::real(1.0, 0.0, 0.0, 1.0)
    }

    /// `z -> z + t`.
    pub fn translation(t: Complex64) -> Self {
        Self::new(Complex64::one(), t, Complex64::zero(), Complex64::one())
    }

    pub fn det(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> Complex64 {
        self.a + self.d
    }

    /// Largest entry modulus.
    pub fn max_norm(&self) -> f64 {
        [self.a, self.b, self.c, self.d]
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// Möbius action `z -> (az + b)/(cz + d)`.
    pub fn apply(&self, z: Complex64) -> Complex64 {
        (self.a * z + self.b) / (self.c * z + self.d)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self.a - other.a).norm() <= tol
            && (self.b - other.b).norm() <= tol
            && (self.c - other.c).norm() <= tol
            && (self.d - other.d).norm() <= tol
    }
}

impl Sl2 for ComplexMatrix2 {
    fn identity_like(&self) -> Self {
        ComplexMatrix2::identity()
    }

    fn product(&self, r: &Self) -> Self {
        let out = ComplexMatrix2::new(
            self.a * r.a + self.b * r.c,
            self.a * r.b + self.b * r.d,
            self.c * r.a + self.d * r.c,
            self.c * r.b + self.d * r.d,
        );
        debug_assert!(
            (out.det() - 1.0).norm() <= 1e-9 * out.max_norm().max(1.0).powi(2),
            "determinant drifted: {}",
            out.det()
        );
        out
    }

    fn adjugate(&self) -> Self {
        ComplexMatrix2::new(self.d, -self.b, -self.c, self.a)
    }
}
