//! Words in the free group on `x1`, `x2`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use super::AlgebraError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    X1,
    X2,
}

impl Generator {
    pub fn index(self) -> u8 {
        match self {
            Generator::X1 => 1,
            Generator::X2 => 2,
        }
    }
}

/// A generator raised to `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: Generator,
    pub inverse: bool,
}

impl Letter {
    pub const X1: Letter = Letter::new(Generator::X1, false);
    pub const X1_INV: Letter = Letter::new(Generator::X1, true);
    pub const X2: Letter = Letter::new(Generator::X2, false);
    pub const X2_INV: Letter = Letter::new(Generator::X2, true);

    pub const fn new(generator: Generator, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    /// Builds a letter from a sign, `+1` or `-1`.
    pub fn with_sign(generator: Generator, sign: i8) -> Self {
        debug_assert!(sign == 1 || sign == -1);
        Letter::new(generator, sign < 0)
    }

    pub fn sign(self) -> i8 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inv(self) -> Self {
        Letter::new(self.generator, !self.inverse)
    }

    fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.generator.index())?;
        if self.inverse {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

/// A word in `x1`, `x2` and their inverses, not necessarily reduced.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        FreeWord { letters }
    }

    pub fn empty() -> Self {
        FreeWord::default()
    }

    pub fn letter(l: Letter) -> Self {
        FreeWord { letters: vec![l] }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of all exponents.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| i64::from(l.sign())).sum()
    }

    /// The group inverse: reversed order, each letter inverted.
    pub fn inverse(&self) -> Self {
        FreeWord::new(self.letters.iter().rev().map(|l| l.inv()).collect())
    }

    /// Letter reversal, exponents unchanged.
    pub fn reversed(&self) -> Self {
        FreeWord::new(self.letters.iter().rev().copied().collect())
    }

    /// Every letter inverted in place, order unchanged.
    pub fn letters_inverted(&self) -> Self {
        FreeWord::new(self.letters.iter().map(|l| l.inv()).collect())
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * n.unsigned_abs() as usize);
        for _ in 0..n.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        FreeWord::new(letters)
    }

    /// Freely reduced form.
    pub fn reduced(&self) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last().is_some_and(|&t| t.cancels(l)) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        FreeWord::new(out)
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|p| !p[0].cancels(p[1]))
    }

    /// All cyclic subwords of length `1..=max_len`, read around the word as a
    /// cycle, in order of starting position then length.
    pub fn cyclic_subwords(&self, max_len: usize) -> Vec<FreeWord> {
        let n = self.letters.len();
        let mut out = Vec::new();
        for start in 0..n {
            for len in 1..=max_len.min(n) {
                out.push(FreeWord::new(
                    (0..len).map(|k| self.letters[(start + k) % n]).collect(),
                ));
            }
        }
        out
    }

    /// Whether `other` occurs as a contiguous cyclic subword.
    pub fn contains_cyclic(&self, other: &FreeWord) -> bool {
        let n = self.letters.len();
        let m = other.letters.len();
        if m == 0 {
            return true;
        }
        if m > n {
            return false;
        }
        (0..n).any(|s| (0..m).all(|k| self.letters[(s + k) % n] == other.letters[k]))
    }
}

/// Free reduction as a standalone operation.
pub fn free_reduce(w: &FreeWord) -> FreeWord {
    w.reduced()
}

impl Mul for &FreeWord {
    type Output = FreeWord;
    fn mul(self, rhs: &FreeWord) -> FreeWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        FreeWord::new(letters)
    }
}

impl Mul for FreeWord {
    type Output = FreeWord;
    fn mul(self, rhs: FreeWord) -> FreeWord {
        &self * &rhs
    }
}

impl FromIterator<Letter> for FreeWord {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        FreeWord::new(iter.into_iter().collect())
    }
}

/// Space separated letters, e.g. `x1 x2^-1 x1^-1 x2`; the empty word is `1`.
impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Accepts the display format; tokens may also carry integer powers such as
/// `x1^-4` or `x2^3`.
impl FromStr for FreeWord {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(FreeWord::empty());
        }
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (
                    b,
                    e.parse::<i64>()
                        .map_err(|_| AlgebraError::Parse(format!("bad exponent in {tok:?}")))?,
                ),
                None => (tok, 1),
            };
            let generator = match base {
                "x1" => Generator::X1,
                "x2" => Generator::X2,
                _ => return Err(AlgebraError::Parse(format!("unknown generator {base:?}"))),
            };
            let l = Letter::new(generator, exp < 0);
            letters.extend(std::iter::repeat_n(l, exp.unsigned_abs() as usize));
        }
        Ok(FreeWord::new(letters))
    }
}
