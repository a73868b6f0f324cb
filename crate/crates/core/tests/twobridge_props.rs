use tbk_core::algebra::Letter;
use tbk_core::twobridge::{exponent_sequence, longitude_word, relator_word, validate_form};
use tbk_core::TwoBridgeForm;

#[test]
fn exponent_sequences_are_palindromes() {
    for form in TwoBridgeForm::all_up_to(99) {
        let eps = exponent_sequence(&form);
        assert_eq!(eps.len(), form.alpha() as usize - 1, "{form}");
        assert!(eps.is_palindromic(), "{form}");
    }
}

#[test]
fn relators_alternate_generators() {
    for form in TwoBridgeForm::all_up_to(99) {
        let w = relator_word(&form);
        assert_eq!(w.len(), form.alpha() as usize - 1);
        for (i, l) in w.letters().iter().enumerate() {
            let expected = if i % 2 == 0 { Letter::X1 } else { Letter::X2 };
            assert_eq!(l.generator, expected.generator, "{form} position {i}");
        }
        assert_eq!(w.exponent_sum(), exponent_sequence(&form).sum());
    }
}

#[test]
fn longitudes_are_null_homologous() {
    for form in TwoBridgeForm::all_up_to(99) {
        let l = longitude_word(&form);
        assert_eq!(l.word.exponent_sum(), 0, "{form}");
        assert!(l.word.is_reduced());
        assert_eq!(l.sigma, -l.relator_exponent_sum);
    }
}

#[test]
fn enumeration_counts() {
    // Forms with 0 < beta < alpha, both odd and coprime.
    let forms = TwoBridgeForm::all_up_to(9);
    let listed: Vec<String> = forms.iter().map(ToString::to_string).collect();
    assert_eq!(forms.len(), 1 + 2 + 3 + 3, "{listed:?}");
    assert!(forms
        .iter()
        .all(|f| validate_form(f.alpha().into(), f.beta().into()).is_ok()));
}

#[test]
fn rejects_invalid_forms() {
    for (a, b) in [
        (4, 2),
        (9, 3),
        (5, 5),
        (5, 7),
        (0, 1),
        (-5, 3),
        (7, 0),
        (7, 2),
    ] {
        assert!(validate_form(a, b).is_err(), "({a},{b}) accepted");
    }
}
