use std::collections::BTreeSet;

use num_complex::Complex64;
use proptest::prelude::*;
use tbk_core::algebra::{is_squarefree, mod_reduce, IntPolynomial, Sl2};
use tbk_core::prep::{
    detect_factors, find_roots, longitude_entry, longitude_entry_exact, prep_polynomial,
    relator_image, residual_bound, ParabolicPair,
};
use tbk_core::twobridge::longitude_word;
use tbk_core::TwoBridgeForm;

#[test]
fn lambda_shape_for_small_forms() {
    for form in TwoBridgeForm::all_up_to(33) {
        let p = prep_polynomial(&form).unwrap();
        assert_eq!(p.degree(), (form.alpha() as usize - 1) / 2, "{form}");
        assert!(p.lambda.is_monic_up_to_sign(), "{form}");
        assert!(is_squarefree(&p.lambda), "{form}");
        assert!(
            p.lambda.coeff(0) != 0.into(),
            "{form}: zero is never a root"
        );
    }
}

#[test]
fn relator_becomes_relation_modulo_lambda() {
    for form in TwoBridgeForm::all_up_to(25) {
        let lambda = prep_polynomial(&form).unwrap().lambda;
        let w = relator_image(&form);
        // W21 + u W12 vanishes wherever W11 does.
        let second = &w.c + &(&IntPolynomial::var() * &w.b);
        assert!(
            second.divrem(&lambda).unwrap().remainder.is_zero(),
            "{form}"
        );

        let pair = ParabolicPair::modulo(&lambda).unwrap();
        let wm = mod_reduce(&w, &lambda).unwrap();
        assert_eq!(wm.product(&pair.a), pair.b.product(&wm), "{form}");
    }
}

#[test]
fn longitude_is_parabolic_modulo_lambda() {
    for form in TwoBridgeForm::all_up_to(25) {
        let lambda = prep_polynomial(&form).unwrap().lambda;
        let pair = ParabolicPair::modulo(&lambda).unwrap();
        let l = pair.image(&longitude_word(&form).word);
        assert!(l.c.is_zero(), "{form}");
        assert_eq!(l.product(&pair.a), pair.a.product(&l), "{form}");
        let g = longitude_entry_exact(&form, &lambda).unwrap();
        assert_eq!(g, l.b);
    }
}

#[test]
fn numeric_and_exact_longitudes_agree() {
    for form in TwoBridgeForm::all_up_to(21) {
        let p = prep_polynomial(&form).unwrap();
        for class in detect_factors(&p).unwrap() {
            let Some(residue) = &class.g_residue else {
                continue;
            };
            for (w, g) in class.roots.iter().zip(&class.longitude_entries) {
                let exact = residue.eval(*w);
                assert!(
                    (exact - g).norm() < 1e-6 * (1.0 + g.norm()),
                    "{form} at {w}"
                );
            }
        }
    }
}

#[test]
fn factors_multiply_back_to_lambda() {
    for form in TwoBridgeForm::all_up_to(27) {
        let p = prep_polynomial(&form).unwrap();
        let classes = detect_factors(&p).unwrap();
        let prod = classes
            .iter()
            .fold(IntPolynomial::one(), |acc, c| &acc * &c.factor);
        assert_eq!(prod.sign_normalized(), p.lambda, "{form}");
        let n: usize = classes.iter().map(|c| c.roots.len()).sum();
        assert_eq!(n, p.degree());
    }
}

#[test]
fn every_root_is_a_representation() {
    for form in TwoBridgeForm::all_up_to(21) {
        let lambda = prep_polynomial(&form).unwrap().lambda;
        let roots = find_roots(&lambda).unwrap();
        for (w, r) in roots.iter() {
            assert!(
                r <= residual_bound(w, roots.len()),
                "{form}: {w} residual {r:e}"
            );
            longitude_entry(&form, w).unwrap();
        }
    }
}

#[test]
fn non_roots_are_rejected() {
    let form = tbk_core::validate_form(5, 3).unwrap();
    assert!(longitude_entry(&form, Complex64::new(0.3, 0.2)).is_err());
}

fn from_roots(ints: &[i64], gauss: &[(i64, i64)]) -> IntPolynomial {
    let mut p = IntPolynomial::one();
    for &r in ints {
        p = &p * &IntPolynomial::from_i64s(&[-r, 1]);
    }
    for &(a, b) in gauss {
        p = &p * &IntPolynomial::from_i64s(&[a * a + b * b, -2 * a, 1]);
    }
    p
}

fn nearest(z: Complex64, roots: &[Complex64]) -> f64 {
    roots
        .iter()
        .map(|r| (r - z).norm())
        .fold(f64::INFINITY, f64::min)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn recovers_planted_roots(
        ints in prop::collection::btree_set(-6i64..=6, 0..=6),
        gauss in prop::collection::btree_set((-3i64..=3, 1i64..=3), 0..=3),
    ) {
        let ints: Vec<i64> = ints.into_iter().collect();
        let gauss: Vec<(i64, i64)> = gauss.into_iter().collect();
        let deg = ints.len() + 2 * gauss.len();
        prop_assume!(deg >= 1);
        let p = from_roots(&ints, &gauss);
        let found = find_roots(&p).unwrap();
        prop_assert_eq!(found.len(), deg);
        let mut planted: Vec<Complex64> = ints.iter().map(|&r| Complex64::new(r as f64, 0.0)).collect();
        for &(a, b) in &gauss {
            planted.push(Complex64::new(a as f64, b as f64));
            planted.push(Complex64::new(a as f64, -b as f64));
        }
        for z in &planted {
            prop_assert!(nearest(*z, &found.roots) < 1e-8, "{} missed in {:?}", z, found.roots);
        }
        // Distinct planted roots are matched one to one.
        let hits: BTreeSet<usize> = planted
            .iter()
            .map(|z| {
                found.roots.iter().enumerate()
                    .min_by(|a, b| (a.1 - z).norm().total_cmp(&(b.1 - z).norm()))
                    .unwrap().0
            })
            .collect();
        prop_assert_eq!(hits.len(), deg);
    }
}
