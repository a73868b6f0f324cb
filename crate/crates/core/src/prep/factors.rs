//! Splitting `Lambda` into integer factors from its roots and the longitude
//! entries attached to them.
//!
//! Roots whose longitude entries agree are grouped together (closing each
//! group under complex conjugation), the monic product over each group is
//! rounded to integer coefficients, and the candidate is accepted only if it
//! divides `Lambda` exactly in `Z[u]`. Roots left over are searched by
//! conjugation-closed subsets.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

use super::{find_roots, longitude_entries, longitude_entry_exact, PRepPolynomial, PrepError};
use crate::algebra::IntPolynomial;

/// Longitude entries closer than this (relative) are the same value.
pub const TAG_TOL: f64 = 1e-6;
/// Coefficients of a root product must be this close to integers.
pub const ROUNDING_TOL: f64 = 1e-5;
/// Largest number of leftover roots handed to the subset search.
pub const SUBSET_SEARCH_MAX_ROOTS: usize = 16;
/// Largest denominator accepted by [`snap_rational`].
pub const MAX_DENOMINATOR: u32 = 16;

/// One algebraic equivalence class of p-reps.
#[derive(Clone, Debug, PartialEq)]
pub struct PRepClass {
    pub factor: IntPolynomial,
    pub roots: Vec<Complex64>,
    /// `g(omega)` for each root, in the same order.
    pub longitude_entries: Vec<Complex64>,
    /// `g` as a residue modulo `factor`, when the factor is monic.
    pub g_residue: Option<IntPolynomial>,
}

impl PRepClass {
    /// The common integer value of `g` when the residue is constant.
    pub fn g_constant(&self) -> Option<BigInt> {
        self.g_residue.as_ref().and_then(IntPolynomial::as_constant)
    }
}

/// An integer factor together with the indices of the roots it accounts for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecoveredFactor {
    pub factor: IntPolynomial,
    pub root_indices: Vec<usize>,
}

/// `g` as `p/q` with `q <= 16` when it is within `1e-6` of such a ratio.
pub fn snap_rational(g: Complex64) -> Option<(i64, u32)> {
    if g.im.abs() > TAG_TOL {
        return None;
    }
    (1..=MAX_DENOMINATOR).find_map(|q| {
        let scaled = g.re * f64::from(q);
        let p = scaled.round();
        ((scaled - p).abs() <= TAG_TOL * f64::from(q)).then_some((p as i64, q))
    })
}

pub fn detect_factors(p: &PRepPolynomial) -> Result<Vec<PRepClass>, PrepError> {
    let roots = find_roots(&p.lambda)?.roots;
    let tags = longitude_entries(&p.form, &p.lambda, &roots)?;
    let recovered = reconstruct_factors(&p.lambda, &roots, &tags)?;
    recovered
        .into_iter()
        .map(|rf| {
            let g_residue = if rf.factor.is_monic_up_to_sign() {
                Some(longitude_entry_exact(&p.form, &rf.factor)?)
            } else {
                None
            };
            Ok(PRepClass {
                roots: rf.root_indices.iter().map(|&i| roots[i]).collect(),
                longitude_entries: rf.root_indices.iter().map(|&i| tags[i]).collect(),
                factor: rf.factor,
                g_residue,
            })
        })
        .collect()
}

/// Splits `lambda` using per-root tags; roots with equal tags are assumed to
/// be Galois conjugate. The product of the returned factors is `lambda`.
pub fn reconstruct_factors(
    lambda: &IntPolynomial,
    roots: &[Complex64],
    tags: &[Complex64],
) -> Result<Vec<RecoveredFactor>, PrepError> {
    let n = roots.len();
    if lambda.degree() != Some(n) || tags.len() != n {
        return Err(PrepError::FactorReconstructionFailed {
            reason: format!(
                "{} roots and {} tags for a polynomial of degree {:?}",
                n,
                tags.len(),
                lambda.degree()
            ),
            partial: Vec::new(),
        });
    }

    let partner = conjugate_partners(roots);
    let mut uf = UnionFind::new(n);
    for i in 0..n {
        uf.union(i, partner[i]);
        for j in i + 1..n {
            if tags_agree(tags[i], tags[j]) {
                uf.union(i, j);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        groups.entry(uf.find(i)).or_default().push(i);
    }
    let mut groups: Vec<Vec<usize>> = groups.into_values().collect();
    groups.sort_by_key(|g| g[0]);

    let mut remaining = lambda.clone();
    let mut found = Vec::new();
    let mut leftover = Vec::new();
    for g in groups {
        match try_factor(&remaining, roots, &g) {
            Some((f, q)) => {
                remaining = q;
                found.push(RecoveredFactor {
                    factor: f,
                    root_indices: g,
                });
            }
            None => leftover.extend(g),
        }
    }

    if !leftover.is_empty() {
        leftover.sort_unstable();
        if leftover.len() <= SUBSET_SEARCH_MAX_ROOTS {
            let (more, rest, quotient) = subset_search(&remaining, roots, &partner, leftover);
            found.extend(more);
            leftover = rest;
            remaining = quotient;
        }
    }
    if !leftover.is_empty() {
        if remaining.degree() != Some(leftover.len()) {
            return Err(PrepError::FactorReconstructionFailed {
                reason: format!(
                    "cofactor of degree {:?} left for {} roots",
                    remaining.degree(),
                    leftover.len()
                ),
                partial: found.into_iter().map(|f| f.factor).collect(),
            });
        }
        found.push(RecoveredFactor {
            factor: std::mem::replace(&mut remaining, IntPolynomial::one()),
            root_indices: leftover,
        });
    }
    if !remaining.is_one() {
        return Err(PrepError::FactorReconstructionFailed {
            reason: format!("unexplained cofactor {}", remaining.pretty()),
            partial: found.into_iter().map(|f| f.factor).collect(),
        });
    }
    found.sort_by(|a, b| {
        a.factor
            .degree()
            .cmp(&b.factor.degree())
            .then(a.root_indices[0].cmp(&b.root_indices[0]))
    });
    debug_assert_eq!(
        found
            .iter()
            .fold(IntPolynomial::one(), |acc, f| &acc * &f.factor),
        *lambda
    );
    Ok(found)
}

fn tags_agree(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= TAG_TOL * a.norm().max(b.norm()).max(1.0)
}

fn conjugate_partners(roots: &[Complex64]) -> Vec<usize> {
    roots
        .iter()
        .map(|z| {
            (0..roots.len())
                .min_by(|&a, &b| {
                    (roots[a] - z.conj())
                        .norm()
                        .total_cmp(&(roots[b] - z.conj()).norm())
                })
                .unwrap_or(0)
        })
        .collect()
}

/// Monic `prod (u - root)` if every coefficient rounds to an integer.
fn integer_product(roots: &[Complex64], idx: &[usize]) -> Option<IntPolynomial> {
    let mut c = vec![Complex64::one()];
    for &i in idx {
        let mut next = vec![Complex64::zero(); c.len() + 1];
        for (k, &a) in c.iter().enumerate() {
            next[k + 1] += a;
            next[k] -= a * roots[i];
        }
        c = next;
    }
    c.iter()
        .map(|z| {
            let r = z.re.round();
            let close = (z.re - r).abs() <= ROUNDING_TOL && z.im.abs() <= ROUNDING_TOL;
            (close && r.abs() < 9.0e15).then(|| BigInt::from(r as i64))
        })
        .collect::<Option<Vec<_>>>()
        .map(IntPolynomial::new)
}

fn try_factor(
    remaining: &IntPolynomial,
    roots: &[Complex64],
    idx: &[usize],
) -> Option<(IntPolynomial, IntPolynomial)> {
    let f = integer_product(roots, idx)?;
    let q = remaining.exact_div(&f)?;
    Some((f, q))
}

/// Searches conjugation-closed subsets of `leftover`, smallest first, for
/// integer factors of `remaining`.
fn subset_search(
    remaining: &IntPolynomial,
    roots: &[Complex64],
    partner: &[usize],
    leftover: Vec<usize>,
) -> (Vec<RecoveredFactor>, Vec<usize>, IntPolynomial) {
    let mut atoms: Vec<Vec<usize>> = Vec::new();
    for &i in &leftover {
        if atoms.iter().any(|a| a.contains(&i)) {
            continue;
        }
        let j = partner[i];
        if j != i && leftover.contains(&j) {
            atoms.push(vec![i, j]);
        } else {
            atoms.push(vec![i]);
        }
    }

    let mut remaining = remaining.clone();
    let mut found = Vec::new();
    'restart: loop {
        let k = atoms.len();
        if k <= 1 {
            break;
        }
        let mut masks: Vec<u32> = (1..(1u32 << k) - 1).collect();
        masks.sort_by_key(|m| (m.count_ones(), *m));
        for mask in masks {
            if mask.count_ones() as usize * 2 > k {
                break;
            }
            let idx: Vec<usize> = (0..k)
                .filter(|b| mask & (1 << b) != 0)
                .flat_map(|b| atoms[b].iter().copied())
                .collect();
            if let Some((f, q)) = try_factor(&remaining, roots, &idx) {
                remaining = q;
                let mut idx = idx;
                idx.sort_unstable();
                found.push(RecoveredFactor {
                    factor: f,
                    root_indices: idx,
                });
                atoms = (0..k)
                    .filter(|b| mask & (1 << b) == 0)
                    .map(|b| atoms[b].clone())
                    .collect();
                continue 'restart;
            }
        }
        break;
    }
    let mut rest: Vec<usize> = atoms.into_iter().flatten().collect();
    rest.sort_unstable();
    (found, rest, remaining)
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, i: usize) -> usize {
        let mut r = i;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut i = i;
        while self.0[i] != r {
            let next = self.0[i];
            self.0[i] = r;
            i = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn cube_roots() -> Vec<Complex64> {
        let h = 3f64.sqrt() / 2.0;
        vec![
            Complex64::new(-0.5, -h),
            Complex64::new(-0.5, h),
            Complex64::new(1.0, 0.0),
        ]
    }

    #[test]
    fn synthetic_tags_split_cubic() {
        let tags = [7.0, 7.0, 5.0].map(|x| Complex64::new(x, 0.0));
        let out = reconstruct_factors(&p(&[-1, 0, 0, 1]), &cube_roots(), &tags).unwrap();
        let factors: Vec<_> = out.iter().map(|f| f.factor.clone()).collect();
        assert_eq!(factors, vec![p(&[-1, 1]), p(&[1, 1, 1])]);
        assert_eq!(out[1].root_indices, vec![0, 1]);
    }

    #[test]
    fn uninformative_tags_fall_back_to_subsets() {
        // Every root tagged differently; closing under conjugation still
        // pairs the complex roots.
        let tags = [1.0, 2.0, 3.0].map(|x| Complex64::new(0.0, x));
        let out = reconstruct_factors(&p(&[-1, 0, 0, 1]), &cube_roots(), &tags).unwrap();
        assert_eq!(out.len(), 2);
    }

    #[test]
    fn wrong_tags_still_reconstruct_exactly() {
        // Tags join the real root to one of the pair, so all three land in
        // one group; reconstruction must still be exact.
        let tags = [1.0, 2.0, 1.0].map(|x| Complex64::new(x, 0.0));
        let out = reconstruct_factors(&p(&[-1, 0, 0, 1]), &cube_roots(), &tags).unwrap();
        let product = out
            .iter()
            .fold(IntPolynomial::one(), |acc, f| &acc * &f.factor);
        assert_eq!(product, p(&[-1, 0, 0, 1]));
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let err = reconstruct_factors(&p(&[1, 1, 1]), &cube_roots(), &[Complex64::zero(); 3]);
        assert!(matches!(
            err,
            Err(PrepError::FactorReconstructionFailed { .. })
        ));
    }

    #[test]
    fn rational_snapping() {
        assert_eq!(
            snap_rational(Complex64::new(-6.0000001, 0.0)),
            Some((-6, 1))
        );
        assert_eq!(snap_rational(Complex64::new(2.5, 1e-9)), Some((5, 2)));
        assert_eq!(snap_rational(Complex64::new(0.0, -3.4641)), None);
        assert_eq!(
            snap_rational(Complex64::new(std::f64::consts::PI, 0.0)),
            None
        );
    }
}
