//! Dense univariate polynomials over `Z` with arbitrary-precision coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::AlgebraError;

/// An element of `Z[u]`, coefficients stored in ascending degree.
///
/// The zero polynomial has no coefficients; otherwise the last coefficient is
/// nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

/// Result of [`IntPolynomial::divrem`].
///
/// Satisfies `scale * n = quotient * d + remainder` with
/// `deg remainder < deg d`. When the quotient and remainder over `Q` are
/// integral the scale is one; otherwise they come from pseudo-division and the
/// scale is a power of the divisor's leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivRem {
    pub quotient: IntPolynomial,
    pub remainder: IntPolynomial,
    pub scale: BigInt,
}

impl DivRem {
    pub fn is_integral(&self) -> bool {
        self.scale.is_one()
    }
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `u`.
    pub fn var() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// The constant value if the polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn is_monic_up_to_sign(&self) -> bool {
        self.leading().is_some_and(|c| c.abs().is_one())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Negates if necessary so the leading coefficient is positive.
    pub fn sign_normalized(&self) -> Self {
        match self.leading() {
            Some(c) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }

    /// Horner evaluation at a complex point.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::zero(), |acc, c| acc * z + big_to_f64(c))
    }

    /// Horner evaluation over `Z`.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Coefficients as `f64`, ascending.
    pub fn to_f64s(&self) -> Vec<f64> {
        self.coeffs.iter().map(big_to_f64).collect()
    }

    pub fn divrem(&self, d: &Self) -> Result<DivRem, AlgebraError> {
        let Some(dd) = d.degree() else {
            return Err(AlgebraError::DivisionByZeroPoly);
        };
        let Some(nd) = self.degree() else {
            return Ok(DivRem {
                quotient: Self::zero(),
                remainder: Self::zero(),
                scale: BigInt::one(),
            });
        };
        if nd < dd {
            return Ok(DivRem {
                quotient: Self::zero(),
                remainder: self.clone(),
                scale: BigInt::one(),
            });
        }

        let (q, r) = rational_divrem(&to_rational(&self.coeffs), &to_rational(&d.coeffs));
        if let (Some(q), Some(r)) = (from_rational(&q), from_rational(&r)) {
            return Ok(DivRem {
                quotient: q,
                remainder: r,
                scale: BigInt::one(),
            });
        }

        // Pseudo-division: lc(d)^(nd - dd + 1) * n = q * d + r.
        let lc = d.coeffs[dd].clone();
        let steps = nd - dd + 1;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); steps];
        for k in (0..steps).rev() {
            let top = rem[k + dd].clone();
            for c in quot.iter_mut() {
                *c *= &lc;
            }
            for c in rem.iter_mut() {
                *c *= &lc;
            }
            quot[k] += &top;
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &top * dc;
            }
        }
        Ok(DivRem {
            quotient: Self::new(quot),
            remainder: Self::new(rem),
            scale: lc.pow(steps as u32),
        })
    }

    /// The exact integer quotient `self / d`, if `d` divides `self` in `Z[u]`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let dr = self.divrem(d).ok()?;
        (dr.is_integral() && dr.remainder.is_zero()).then_some(dr.quotient)
    }

    /// Remainder modulo a polynomial with leading coefficient ±1.
    pub fn rem_monic(&self, m: &Self) -> Result<Self, AlgebraError> {
        let Some(md) = m.degree() else {
            return Err(AlgebraError::DivisionByZeroPoly);
        };
        if !m.is_monic_up_to_sign() {
            return Err(AlgebraError::NonMonicModulus);
        }
        let lc_neg = m.coeffs[md].is_negative();
        let mut rem = self.coeffs.clone();
        while rem.len() > md {
            let k = rem.len() - 1 - md;
            let mut top = rem.pop().unwrap_or_default();
            if lc_neg {
                top = -top;
            }
            if !top.is_zero() {
                for (j, mc) in m.coeffs[..md].iter().enumerate() {
                    rem[k + j] -= &top * mc;
                }
            }
        }
        Ok(Self::new(rem))
    }

    /// Human-readable form such as `u^3 + 2u^2 + u - 1`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !mag.is_one() || i == 0 {
                out.push_str(&mag.to_string());
            }
            match i {
                0 => {}
                1 => out.push('u'),
                _ => out.push_str(&format!("u^{i}")),
            }
        }
        out
    }
}

/// Greatest common divisor in `Z[u]`, primitive with positive leading
/// coefficient. `gcd(0, 0)` is zero.
pub fn poly_gcd(p: &IntPolynomial, q: &IntPolynomial) -> IntPolynomial {
    let mut a = p.primitive_part();
    let mut b = q.primitive_part();
    while !b.is_zero() {
        let r = match a.divrem(&b) {
            Ok(dr) => dr.remainder,
            Err(_) => unreachable!("b is nonzero"),
        };
        a = b;
        b = r.primitive_part();
    }
    a.primitive_part()
}

pub fn is_squarefree(p: &IntPolynomial) -> bool {
    poly_gcd(p, &p.derivative()).degree() == Some(0)
}

fn big_to_f64(c: &BigInt) -> f64 {
    c.to_f64().unwrap_or(f64::NAN)
}

fn to_rational(c: &[BigInt]) -> Vec<BigRational> {
    c.iter()
        .map(|x| BigRational::from_integer(x.clone()))
        .collect()
}

fn from_rational(c: &[BigRational]) -> Option<IntPolynomial> {
    c.iter()
        .map(|x| x.is_integer().then(|| x.to_integer()))
        .collect::<Option<Vec<_>>>()
        .map(IntPolynomial::new)
}

fn rational_divrem(n: &[BigRational], d: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let dd = d.len() - 1;
    let mut rem = n.to_vec();
    let mut quot = vec![BigRational::zero(); n.len() - dd];
    for k in (0..quot.len()).rev() {
        let t = &rem[k + dd] / &d[dd];
        for (j, dc) in d.iter().enumerate() {
            rem[k + j] -= &t * dc;
        }
        quot[k] = t;
    }
    rem.truncate(dd);
    while rem.last().is_some_and(Zero::is_zero) {
        rem.pop();
    }
    (quot, rem)
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

/// Text format: ascending coefficients, comma separated (`-1,1,2,1`).
/// The zero polynomial prints as `0`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for IntPolynomial {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(AlgebraError::Parse("empty polynomial".into()));
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<BigInt>()
                    .map_err(|_| AlgebraError::Parse(format!("bad coefficient {t:?}")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(IntPolynomial::new)
    }
}
