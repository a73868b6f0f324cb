//! Breadth-first search for an element violating Shimizu's inequality.
//!
//! If `<[[1, 1], [0, 1]], M>` is discrete and `M` does not fix infinity then
//! `|c(M)| >= 1`. Any word with `0 < |c| < 1` therefore proves the group is
//! not discrete.

use std::collections::HashSet;

use crate::algebra::{ComplexMatrix2, FreeWord, Letter, Sl2};

/// Longest word length the scan accepts.
pub const MAX_SCAN_LEN: usize = 16;
/// `|c|` must lie in `(BAND, 1 - BAND)` to count as a witness.
pub const BAND: f64 = 1e-9;
const DEDUP_GRID: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct ShimizuWitness {
    pub word: FreeWord,
    pub c_abs: f64,
    pub matrix: ComplexMatrix2,
}

/// Returns the first witness in shortlex order of freely reduced words, or
/// `None`. Matrices already seen (within `1e-9`) are not expanded again.
///
/// # Panics
///
/// If `max_len` exceeds [`MAX_SCAN_LEN`].
pub fn shimizu_scan(
    g1: &ComplexMatrix2,
    g2: &ComplexMatrix2,
    max_len: usize,
) -> Option<ShimizuWitness> {
    assert!(
        max_len <= MAX_SCAN_LEN,
        "max_len {max_len} > {MAX_SCAN_LEN}"
    );
    let letters = [
        (Letter::X1, *g1),
        (Letter::X1_INV, g1.adjugate()),
        (Letter::X2, *g2),
        (Letter::X2_INV, g2.adjugate()),
    ];
    let id = ComplexMatrix2::identity();
    let mut seen: HashSet<[i64; 8]> = HashSet::new();
    seen.insert(grid_key(&id));
    let mut frontier: Vec<(Vec<Letter>, ComplexMatrix2)> = vec![(Vec::new(), id)];

    for _ in 0..max_len {
        let mut next = Vec::with_capacity(frontier.len() * 3);
        for (word, m) in &frontier {
            for (l, g) in &letters {
                if word.last().is_some_and(|t| *t == l.inv()) {
                    continue;
                }
                let prod = m.product(g);
                if !seen.insert(grid_key(&prod)) {
                    continue;
                }
                let mut w = word.clone();
                w.push(*l);
                let c_abs = prod.c.norm();
                if c_abs > BAND && c_abs < 1.0 - BAND {
                    return Some(ShimizuWitness {
                        word: FreeWord::new(w),
                        c_abs,
                        matrix: prod,
                    });
                }
                next.push((w, prod));
            }
        }
        frontier = next;
    }
    None
}

fn grid_key(m: &ComplexMatrix2) -> [i64; 8] {
    let q = |x: f64| (x / DEDUP_GRID).round() as i64;
    [
        q(m.a.re),
        q(m.a.im),
        q(m.b.re),
        q(m.b.im),
        q(m.c.re),
        q(m.c.im),
        q(m.d.re),
        q(m.d.im),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn pair(omega: Complex64) -> (ComplexMatrix2, ComplexMatrix2) {
        (
            ComplexMatrix2::real(1.0, 1.0, 0.0, 1.0),
            ComplexMatrix2::new(1.0.into(), 0.0.into(), -omega, 1.0.into()),
        )
    }

    #[test]
    fn half_gives_immediate_witness() {
        let (a, b) = pair(Complex64::new(0.5, 0.0));
        let w = shimizu_scan(&a, &b, 4).unwrap();
        assert_eq!(w.word.len(), 1);
        assert!((w.c_abs - 0.5).abs() < 1e-15);
    }

    #[test]
    fn integral_group_has_none() {
        let (a, b) = pair(Complex64::new(1.0, 0.0));
        assert!(shimizu_scan(&a, &b, 8).is_none());
    }

    #[test]
    fn eisenstein_group_has_none() {
        let (a, b) = pair(Complex64::new(-0.5, 3f64.sqrt() / 2.0));
        assert!(shimizu_scan(&a, &b, 8).is_none());
    }

    #[test]
    fn witness_found_deeper() {
        // Generators and length-2 words have |c| >= 1.5, but x2 x1 x2 has
        // c = -omega (2 - omega) = -0.75.
        let (a, b) = pair(Complex64::new(1.5, 0.0));
        let w = shimizu_scan(&a, &b, 6).expect("witness");
        assert_eq!(w.word.len(), 3);
        assert!((w.c_abs - 0.75).abs() < 1e-12);
        assert!((w.matrix.det() - 1.0).norm() < 1e-9);
        assert!(w.c_abs > 0.0 && w.c_abs < 1.0);
    }

    #[test]
    #[should_panic]
    fn rejects_long_scans() {
        let (a, b) = pair(Complex64::new(1.0, 0.0));
        shimizu_scan(&a, &b, 17);
    }
}
