//! Exact check of the proposed presentation for the 8_11 group
//! `Gamma = <A, B_omega>`, `omega` a root of `f(u) = u^3 + 2u^2 + u - 1`.
//!
//! Side-pairing elements come from the words
//!
//! ```text
//! u  = x1^-1 x2 x1^-1
//! v1 = u x2^-1 x1 x2^-1
//! w1 = v1 x1^-1 v1^-2 x2^-1 v1 x1^-1
//! ```
//!
//! and every relation is checked in `SL2(Z[u])` modulo `f`.

use crate::algebra::{mod_reduce, FreeWord, IntPolynomial, Letter, PolyMatrix2, Sl2};
use crate::prep::ParabolicPair;

use super::FordError;

/// `u^3 + 2u^2 + u - 1`.
pub fn eight_eleven_factor() -> IntPolynomial {
    IntPolynomial::from_i64s(&[-1, 1, 2, 1])
}

/// The words `u`, `v1`, `w1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureWords {
    pub u: FreeWord,
    pub v1: FreeWord,
    pub w1: FreeWord,
}

impl Default for FixtureWords {
    fn default() -> Self {
        let u = FreeWord::new(vec![Letter::X1_INV, Letter::X2, Letter::X1_INV]);
        let v1 = &u * &FreeWord::new(vec![Letter::X2_INV, Letter::X1, Letter::X2_INV]);
        let w1 = [
            v1.clone(),
            FreeWord::letter(Letter::X1_INV),
            v1.pow(-2),
            FreeWord::letter(Letter::X2_INV),
            v1.clone(),
            FreeWord::letter(Letter::X1_INV),
        ]
        .into_iter()
        .fold(FreeWord::empty(), |acc, w| &acc * &w);
        FixtureWords { u, v1, w1 }
    }
}

/// Named elements of `SL2(Z[u]/f)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RelationFixture {
    pub factor: IntPolynomial,
    pub words: FixtureWords,
    pub a: PolyMatrix2,
    pub b: PolyMatrix2,
    pub u: PolyMatrix2,
    /// Image of the word `v1`.
    pub v1: PolyMatrix2,
    /// `U^-1 W1`.
    pub v2: PolyMatrix2,
    pub w1: PolyMatrix2,
    /// `[[1, u + u^2], [0, 1]]`.
    pub a_star: PolyMatrix2,
    pub identity: PolyMatrix2,
}

pub fn build_relation_fixture(factor: &IntPolynomial) -> Result<RelationFixture, FordError> {
    let pair = ParabolicPair::modulo(factor)?;
    let words = FixtureWords::default();
    let u = pair.image(&words.u);
    let v1 = pair.image(&words.v1);
    let w1 = pair.image(&words.w1);
    let v2 = u.adjugate().product(&w1);
    let a_star = mod_reduce(
        &PolyMatrix2::from_i64s([[&[1], &[0, 1, 1]], [&[], &[1]]]),
        factor,
    )?;
    let identity = pair.a.identity_like();
    Ok(RelationFixture {
        factor: factor.sign_normalized(),
        words,
        a: pair.a,
        b: pair.b,
        u,
        v1,
        v2,
        w1,
        a_star,
        identity,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: &'static str,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.holds)
    }
}

/// Checks each relation modulo `f`. Torsion relations and equalities hold up
/// to sign (in `PSL2`); the defining relation `W1 A = B W1` is checked on the
/// nose.
pub fn verify_relations(fix: &RelationFixture) -> RelationReport {
    let mul = |ms: &[&PolyMatrix2]| {
        ms.iter()
            .fold(fix.identity.clone(), |acc, m| acc.product(m))
    };
    let e = &fix.identity;
    let a_inv = fix.a.adjugate();
    let u_inv = fix.u.adjugate();
    let a_star_inv = fix.a_star.adjugate();
    let modular = |rows: [[&[i64]; 2]; 2]| {
        mod_reduce(&PolyMatrix2::from_i64s(rows), &fix.factor)
            .unwrap_or_else(|_| unreachable!("factor is monic"))
    };
    let s = modular([[&[], &[-1]], [&[1], &[1]]]);
    let t = modular([[&[1], &[-1]], [&[1], &[]]]);
    let a_inv_v1 = mul(&[&a_inv, &fix.v1]);
    let a_inv_v2 = mul(&[&a_inv, &fix.v2]);

    let checks = vec![
        ("W1^2 = E", mul(&[&fix.w1, &fix.w1]).projectively_eq(e)),
        (
            "V1^3 = E",
            mul(&[&fix.v1, &fix.v1, &fix.v1]).projectively_eq(e),
        ),
        (
            "V2^3 = E",
            mul(&[&fix.v2, &fix.v2, &fix.v2]).projectively_eq(e),
        ),
        (
            "(A^-1 V1)^2 = E",
            mul(&[&a_inv_v1, &a_inv_v1]).projectively_eq(e),
        ),
        (
            "(A^-1 V2)^2 = E",
            mul(&[&a_inv_v2, &a_inv_v2]).projectively_eq(e),
        ),
        (
            "V1 = W1 U^-1",
            fix.v1.projectively_eq(&mul(&[&fix.w1, &u_inv])),
        ),
        (
            "V2 = U^-1 W1",
            fix.v2.projectively_eq(&mul(&[&u_inv, &fix.w1])),
        ),
        (
            "U = A^-1 W1 A W1 A^-1",
            fix.u
                .projectively_eq(&mul(&[&a_inv, &fix.w1, &fix.a, &fix.w1, &a_inv])),
        ),
        (
            "V1 = A*^-1 [[0,-1],[1,1]] A*",
            fix.v1
                .projectively_eq(&mul(&[&a_star_inv, &s, &fix.a_star])),
        ),
        (
            "V2 = A* [[1,-1],[1,0]] A*^-1",
            fix.v2
                .projectively_eq(&mul(&[&fix.a_star, &t, &a_star_inv])),
        ),
        (
            "W1 A = B W1",
            mul(&[&fix.w1, &fix.a]) == mul(&[&fix.b, &fix.w1]),
        ),
    ];
    RelationReport {
        checks: checks
            .into_iter()
            .map(|(name, holds)| RelationCheck { name, holds })
            .collect(),
    }
}
