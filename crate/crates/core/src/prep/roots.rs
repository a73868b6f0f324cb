//! Simultaneous root finding (Aberth–Ehrlich) with Newton polishing.

use std::f64::consts::TAU;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Float, ToPrimitive, Zero};

use super::PrepError;
use crate::algebra::IntPolynomial;

const MAX_ITERATIONS: usize = 500;
const POLISH_STEPS: usize = 4;
const EXACT_STEPS: usize = 3;
/// Imaginary parts below this (relative) are treated as real roots.
const REAL_CLUSTER: f64 = 1e-8;

/// Complex roots of a squarefree polynomial with their residuals `|p(root)|`.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSet {
    pub roots: Vec<Complex64>,
    pub residuals: Vec<f64>,
}

impl RootSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Complex64, f64)> + '_ {
        self.roots
            .iter()
            .copied()
            .zip(self.residuals.iter().copied())
    }
}

/// Residual bound a root of a degree-`n` polynomial must satisfy.
pub fn residual_bound(root: Complex64, degree: usize) -> f64 {
    1e-8 * (1.0 + root.norm()).powi(degree as i32)
}

/// All complex roots, sorted by real then imaginary part. Conjugate pairs are
/// made exactly conjugate.
pub fn find_roots(p: &IntPolynomial) -> Result<RootSet, PrepError> {
    let n = match p.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(PrepError::ConstantPolynomial),
    };
    let coeffs = p.to_f64s();
    let lead = coeffs[n];
    let monic: Vec<Complex64> = coeffs
        .iter()
        .map(|c| Complex64::new(c / lead, 0.0))
        .collect();

    let mut roots = if n == 1 {
        vec![-monic[0]]
    } else {
        aberth(&monic)?
    };

    for z in roots.iter_mut() {
        *z = polish(&monic, *z);
    }
    pair_conjugates(&mut roots);
    for z in roots.iter_mut() {
        *z = refine_exact(p, *z);
    }

    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let residuals = roots.iter().map(|&z| exact_residual(p, z)).collect();
    Ok(RootSet { roots, residuals })
}

fn eval_with_derivative(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

fn initial_guesses(c: &[Complex64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    // Fujiwara-type bound on root moduli.
    let radius = (0..n)
        .map(|i| c[i].norm().powf(1.0 / (n - i) as f64))
        .fold(0.0, f64::max)
        .max(1e-3);
    // Spread over two rings so a symmetric polynomial cannot trap the start.
    (0..n)
        .map(|k| {
            let r = if k % 2 == 0 { radius } else { 0.5 * radius };
            Complex64::from_polar(r, TAU * k as f64 / n as f64 + 0.4)
        })
        .collect()
}

fn aberth(c: &[Complex64]) -> Result<Vec<Complex64>, PrepError> {
    let n = c.len() - 1;
    let mut z = initial_guesses(c);
    for _ in 0..MAX_ITERATIONS {
        let mut worst = 0.0f64;
        for k in 0..n {
            let (p, dp) = eval_with_derivative(c, z[k]);
            if p.is_zero() {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                worst = worst.max(step.norm() / (1.0 + z[k].norm()));
            }
        }
        if worst < 1e-14 {
            return Ok(z);
        }
    }
    // The cap was hit; accept if every iterate is already a good root.
    let ok = z.iter().all(|&r| {
        let (p, _) = eval_with_derivative(c, r);
        p.norm() < residual_bound(r, n)
    });
    if ok {
        Ok(z)
    } else {
        Err(PrepError::NoConvergence {
            iterations: MAX_ITERATIONS,
        })
    }
}

/// A few Newton steps, kept only while they reduce the residual.
fn polish(c: &[Complex64], mut z: Complex64) -> Complex64 {
    let mut best = eval_with_derivative(c, z).0.norm();
    for _ in 0..POLISH_STEPS {
        let (p, dp) = eval_with_derivative(c, z);
        if dp.is_zero() {
            break;
        }
        let next = z - p / dp;
        let r = eval_with_derivative(c, next).0.norm();
        if r.is_nan() || r >= best {
            break;
        }
        best = r;
        z = next;
    }
    z
}

/// `z` as `(x + iy) / 2^s` with integer `x`, `y`.
fn dyadic(z: Complex64) -> (BigInt, BigInt, u32) {
    let parts = [z.re, z.im].map(|x| {
        let (m, e, sign) = x.integer_decode();
        (BigInt::from(m) * sign, if m == 0 { i16::MAX } else { e })
    });
    let min_e = parts[0].1.min(parts[1].1);
    let s = if min_e == i16::MAX {
        0
    } else {
        (-i32::from(min_e)).max(0) as u32
    };
    let [x, y] = parts.map(|(m, e)| {
        if e == i16::MAX {
            BigInt::zero()
        } else {
            m << (i32::from(e) + s as i32) as usize
        }
    });
    (x, y, s)
}

/// Exact `(2^(s n) p(z), 2^(s (n-1)) p'(z), s)` for a float `z`.
fn exact_eval(p: &IntPolynomial, z: Complex64) -> ((BigInt, BigInt), (BigInt, BigInt), u32) {
    let (x, y, s) = dyadic(z);
    let c = p.coeffs();
    let n = c.len() - 1;
    let mul = |(a, b): (BigInt, BigInt)| (&a * &x - &b * &y, &a * &y + &b * &x);
    let mut val = (c[n].clone(), BigInt::zero());
    let mut der = (c[n].clone() * n, BigInt::zero());
    for k in (0..n).rev() {
        let shift = s as usize * (n - k);
        let v = mul(val);
        val = (v.0 + (&c[k] << shift), v.1);
        if k > 0 {
            let d = mul(der);
            der = (d.0 + ((&c[k] * k) << shift), d.1);
        }
    }
    (val, der, s)
}

/// `num / (den 2^shift)` rounded to a float.
fn ratio_f64(num: &BigInt, den: &BigInt, shift: i64) -> f64 {
    if num.is_zero() {
        return 0.0;
    }
    let k = den.bits() as i64 + 64 - num.bits() as i64;
    let scaled = if k >= 0 {
        num << k as usize
    } else {
        num >> (-k) as usize
    };
    let q = (scaled / den).to_f64().unwrap_or(f64::NAN);
    scale_pow2(q, -(k + shift))
}

fn scale_pow2(mut x: f64, mut e: i64) -> f64 {
    while e != 0 {
        let step = e.clamp(-1000, 1000);
        x *= 2f64.powi(step as i32);
        e -= step;
    }
    x
}

/// `|p(z)|` evaluated without rounding error before the final conversion.
fn exact_residual(p: &IntPolynomial, z: Complex64) -> f64 {
    let ((re, im), _, s) = exact_eval(p, z);
    let n = p.degree().unwrap_or(0) as i64;
    let one = BigInt::from(1);
    ratio_f64(&re, &one, s as i64 * n).hypot(ratio_f64(&im, &one, s as i64 * n))
}

/// Newton steps whose correction is computed from exact values of `p` and
/// `p'`, so the result is limited only by the float grid. Needed where roots
/// cluster and the float evaluation is dominated by cancellation.
fn refine_exact(p: &IntPolynomial, mut z: Complex64) -> Complex64 {
    let mut best = exact_residual(p, z);
    for _ in 0..EXACT_STEPS {
        let ((pr, pi), (dr, di), s) = exact_eval(p, z);
        let den = &dr * &dr + &di * &di;
        if den.is_zero() {
            break;
        }
        // p / p' = p conj(p') / |p'|^2, and the scales differ by 2^s.
        let nr = &pr * &dr + &pi * &di;
        let ni = &pi * &dr - &pr * &di;
        let delta = Complex64::new(
            ratio_f64(&nr, &den, s as i64),
            ratio_f64(&ni, &den, s as i64),
        );
        let next = z - delta;
        if next == z || !next.is_finite() {
            break;
        }
        let r = exact_residual(p, next);
        if r.is_nan() || r >= best {
            break;
        }
        best = r;
        z = next;
    }
    z
}

fn pair_conjugates(roots: &mut [Complex64]) {
    let n = roots.len();
    let mut paired = vec![false; n];
    for i in 0..n {
        if paired[i] {
            continue;
        }
        let z = roots[i];
        if z.im.abs() <= REAL_CLUSTER * (1.0 + z.norm()) {
            roots[i] = Complex64::new(z.re, 0.0);
            paired[i] = true;
            continue;
        }
        let partner = (0..n).filter(|&j| j != i && !paired[j]).min_by(|&a, &b| {
            (roots[a] - z.conj())
                .norm()
                .total_cmp(&(roots[b] - z.conj()).norm())
        });
        if let Some(j) = partner {
            let avg = (z + roots[j].conj()) * 0.5;
            let upper = Complex64::new(avg.re, avg.im.abs());
            roots[i] = if z.im > 0.0 { upper } else { upper.conj() };
            roots[j] = roots[i].conj();
            paired[i] = true;
            paired[j] = true;
        }
    }
}
