use num_bigint::BigInt;
use proptest::prelude::*;
use tbk_core::algebra::{
    free_reduce, mod_reduce, word_image, FreeWord, IntPolynomial, Letter, PolyMatrix2, Sl2,
};
use tbk_core::prep::ParabolicPair;

fn letter() -> impl Strategy<Value = Letter> {
    prop_oneof![
        Just(Letter::X1),
        Just(Letter::X1_INV),
        Just(Letter::X2),
        Just(Letter::X2_INV),
    ]
}

fn word(max: usize) -> impl Strategy<Value = FreeWord> {
    prop::collection::vec(letter(), 0..=max).prop_map(FreeWord::new)
}

fn poly(max_deg: usize) -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-20i64..=20, 0..=max_deg + 1).prop_map(|c| IntPolynomial::from_i64s(&c))
}

proptest! {
    #[test]
    fn symbolic_images_have_unit_determinant(w in word(30)) {
        let m = ParabolicPair::<PolyMatrix2>::symbolic().image(&w);
        prop_assert!(m.det().is_one());
    }

    #[test]
    fn word_image_is_a_homomorphism(v in word(12), w in word(12)) {
        let pair = ParabolicPair::<PolyMatrix2>::symbolic();
        let lhs = pair.image(&(&v * &w));
        let rhs = pair.image(&v).product(&pair.image(&w));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reduction_does_not_change_image(w in word(20)) {
        let pair = ParabolicPair::<PolyMatrix2>::symbolic();
        prop_assert_eq!(pair.image(&w), pair.image(&free_reduce(&w)));
    }

    #[test]
    fn free_reduce_is_idempotent(w in word(30)) {
        let r = free_reduce(&w);
        prop_assert!(r.is_reduced());
        prop_assert_eq!(free_reduce(&r), r.clone());
        prop_assert_eq!(r.exponent_sum(), w.exponent_sum());
    }

    #[test]
    fn inverse_word_gives_identity(w in word(20)) {
        let pair = ParabolicPair::<PolyMatrix2>::symbolic();
        prop_assert!(pair.image(&(&w * &w.inverse())).is_identity());
    }

    #[test]
    fn divrem_round_trips(n in poly(8), d in poly(4)) {
        prop_assume!(!d.is_zero());
        let r = n.divrem(&d).unwrap();
        let scaled = n.scale(&r.scale);
        prop_assert_eq!(&(&r.quotient * &d) + &r.remainder, scaled);
        if let Some(dr) = r.remainder.degree() {
            prop_assert!(dr < d.degree().unwrap());
        }
    }

    #[test]
    fn exact_division_recovers_factor(a in poly(5), b in poly(5)) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(prod.exact_div(&b), Some(a));
    }

    #[test]
    fn gcd_divides_both(a in poly(4), b in poly(4), c in poly(3)) {
        prop_assume!(!c.is_zero() && !(a.is_zero() && b.is_zero()));
        let p = &a * &c;
        let q = &b * &c;
        let g = tbk_core::algebra::poly_gcd(&p, &q);
        prop_assert!(p.divrem(&g).unwrap().remainder.is_zero());
        prop_assert!(q.divrem(&g).unwrap().remainder.is_zero());
        // c (up to content and sign) divides the gcd.
        prop_assert!(g.divrem(&c.primitive_part()).unwrap().remainder.is_zero());
    }

    #[test]
    fn mod_reduce_is_a_ring_map(v in word(10), w in word(10)) {
        let f = IntPolynomial::from_i64s(&[-1, 1, 2, 1]);
        let pair = ParabolicPair::<PolyMatrix2>::symbolic();
        let (mv, mw) = (pair.image(&v), pair.image(&w));
        let lhs = mod_reduce(&mv.product(&mw), &f).unwrap();
        let rhs = mod_reduce(&mv, &f).unwrap().product(&mod_reduce(&mw, &f).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn text_format_round_trips(p in poly(10)) {
        let s = p.to_string();
        prop_assert_eq!(s.parse::<IntPolynomial>().unwrap(), p);
    }

    #[test]
    fn word_text_round_trips(w in word(20)) {
        let s = w.to_string();
        prop_assert_eq!(s.parse::<FreeWord>().unwrap(), w);
    }

    #[test]
    fn eval_int_matches_float_eval(p in poly(6), x in -5i64..=5) {
        let exact = p.eval_int(&BigInt::from(x));
        let approx = p.eval(num_complex::Complex64::new(x as f64, 0.0));
        prop_assert!((approx.re - exact.to_string().parse::<f64>().unwrap()).abs() < 1e-6);
    }
}

#[test]
fn generic_word_image_matches_numeric() {
    let omega = num_complex::Complex64::new(-0.5, 0.75f64.sqrt());
    let w: FreeWord = "x2 x1^-1 x2^-1 x1 x1 x2^-1 x1^-1 x2".parse().unwrap();
    let sym = ParabolicPair::<PolyMatrix2>::symbolic().image(&w);
    let num = ParabolicPair::numeric(omega);
    let m = word_image(&w, &num.a, &num.b);
    for (p, z) in sym.entries().into_iter().zip([m.a, m.b, m.c, m.d]) {
        assert!((p.eval(omega) - z).norm() < 1e-12);
    }
}
