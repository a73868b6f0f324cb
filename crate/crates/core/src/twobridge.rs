//! Two-bridge normal forms: exponent sequences, relators and longitudes.
//!
//! For a form `(alpha, beta)` the knot group is `<x1, x2 | w x1 = x2 w>` where
//! `w = x1^e1 x2^e2 ... x2^e(alpha-1)` and `e_i = (-1)^floor(i*beta/alpha)`.

use std::fmt;

use num_integer::Integer;
use thiserror::Error;

use crate::algebra::{FreeWord, Generator, Letter};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwoBridgeError {
    #[error("invalid two-bridge form ({alpha}, {beta}): {reason}")]
    InvalidForm {
        alpha: i64,
        beta: i64,
        reason: &'static str,
    },
}

/// A validated pair `(alpha, beta)`: both odd, coprime, `0 < beta < alpha`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoBridgeForm {
    alpha: u32,
    beta: u32,
}

impl TwoBridgeForm {
    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn beta(&self) -> u32 {
        self.beta
    }

    /// All valid forms with `alpha <= max_alpha`, ordered by `(alpha, beta)`.
    pub fn all_up_to(max_alpha: u32) -> Vec<TwoBridgeForm> {
        (3..=max_alpha)
            .step_by(2)
            .flat_map(|a| {
                (1..a)
                    .step_by(2)
                    .filter_map(move |b| validate_form(a.into(), b.into()).ok())
            })
            .collect()
    }
}

impl fmt::Display for TwoBridgeForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.alpha, self.beta)
    }
}

/// Checks the form and replaces `beta` by `|beta|`; the group only depends on
/// `|beta|`.
pub fn validate_form(alpha: i64, beta: i64) -> Result<TwoBridgeForm, TwoBridgeError> {
    let bad = |reason| TwoBridgeError::InvalidForm {
        alpha,
        beta,
        reason,
    };
    if alpha <= 1 {
        return Err(bad("alpha must exceed 1"));
    }
    if alpha.is_even() {
        return Err(bad("alpha must be odd"));
    }
    if beta.is_even() {
        return Err(bad("beta must be odd"));
    }
    if beta <= -alpha || beta >= alpha {
        return Err(bad("beta must satisfy -alpha < beta < alpha"));
    }
    if alpha.gcd(&beta) != 1 {
        return Err(bad("alpha and beta must be coprime"));
    }
    let alpha = u32::try_from(alpha).map_err(|_| bad("alpha too large"))?;
    Ok(TwoBridgeForm {
        alpha,
        beta: beta.unsigned_abs() as u32,
    })
}

/// Signs `e_1, ..., e_(alpha-1)`, each `+1` or `-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentSequence(Vec<i8>);

impl ExponentSequence {
    pub fn signs(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_palindromic(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().map(|&e| i64::from(e)).sum()
    }
}

pub fn exponent_sequence(form: &TwoBridgeForm) -> ExponentSequence {
    let (a, b) = (u64::from(form.alpha), u64::from(form.beta));
    ExponentSequence(
        (1..a)
            .map(|i| if ((i * b) / a).is_even() { 1 } else { -1 })
            .collect(),
    )
}

/// The relator word `w`: generators alternate `x1, x2, x1, ...`, ending on
/// `x2`, with the exponent sequence as signs.
pub fn relator_word(form: &TwoBridgeForm) -> FreeWord {
    exponent_sequence(form)
        .signs()
        .iter()
        .enumerate()
        .map(|(i, &e)| {
            let g = if i % 2 == 0 {
                Generator::X1
            } else {
                Generator::X2
            };
            Letter::with_sign(g, e)
        })
        .collect()
}

/// A longitude commuting with `x1`, built as `reverse(w) · w · x1^(2 sigma)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LongitudeWord {
    pub word: FreeWord,
    pub sigma: i64,
    /// Exponent sum of the relator `w`.
    pub relator_exponent_sum: i64,
}

pub fn longitude_word(form: &TwoBridgeForm) -> LongitudeWord {
    let w = relator_word(form);
    let ew = w.exponent_sum();
    let sigma = -ew;
    let correction = FreeWord::letter(Letter::X1).pow(2 * sigma);
    let word = (&(&w.reversed() * &w) * &correction).reduced();
    debug_assert_eq!(word.exponent_sum(), 0);
    LongitudeWord {
        word,
        sigma,
        relator_exponent_sum: ew,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(a: i64, b: i64) -> TwoBridgeForm {
        validate_form(a, b).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(form(5, 3).beta(), 3);
        assert_eq!(form(27, -17), form(27, 17));
        for (a, b) in [
            (4, 3),
            (4, 2),
            (9, 3),
            (5, 5),
            (5, 7),
            (5, 2),
            (1, 1),
            (-5, 3),
        ] {
            assert!(validate_form(a, b).is_err(), "({a},{b}) accepted");
        }
    }

    #[test]
    fn exponent_sequences() {
        assert_eq!(exponent_sequence(&form(5, 3)).signs(), &[1, -1, -1, 1]);
        assert_eq!(exponent_sequence(&form(3, 1)).signs(), &[1, 1]);
        assert_eq!(
            exponent_sequence(&form(7, 3)).signs(),
            &[1, 1, -1, -1, 1, 1]
        );
    }

    #[test]
    fn relators() {
        assert_eq!(relator_word(&form(5, 3)).to_string(), "x1 x2^-1 x1^-1 x2");
        assert_eq!(relator_word(&form(3, 1)).to_string(), "x1 x2");
        assert_eq!(relator_word(&form(27, 17)).len(), 26);
    }

    #[test]
    fn longitudes() {
        let l = longitude_word(&form(5, 3));
        assert_eq!((l.relator_exponent_sum, l.sigma, l.word.len()), (0, 0, 8));
        assert_eq!(l.word.to_string(), "x2 x1^-1 x2^-1 x1 x1 x2^-1 x1^-1 x2");

        let l = longitude_word(&form(3, 1));
        assert_eq!((l.relator_exponent_sum, l.sigma), (2, -2));
        assert_eq!(l.word, "x2 x1 x1 x2 x1^-4".parse().unwrap());

        let l = longitude_word(&form(7, 3));
        assert_eq!((l.relator_exponent_sum, l.sigma), (2, -2));
    }

    #[test]
    fn all_up_to_counts_coprime_pairs() {
        let forms = TwoBridgeForm::all_up_to(9);
        // alpha = 3: 1; 5: 1,3; 7: 1,3,5; 9: 1,5,7
        assert_eq!(forms.len(), 9);
        assert_eq!(forms[0], form(3, 1));
    }
}
