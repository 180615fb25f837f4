use proptest::prelude::*;

use toda_weyl::algebra::{format_rational, parse_rational, ratio};
use toda_weyl::permutations::{
    check_rotation_covariance, fold_ct_to_a, unfold_a_to_ct, CyclicRotation, SPermC,
};
use toda_weyl::weyl::{apply_generator, apply_word};
use toda_weyl::{AlgebraSpec, LinForm, MassVector, Rational, Word};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
}

fn lin_form(max_index: usize) -> impl Strategy<Value = LinForm> {
    (
        small_rational(),
        prop::collection::vec((1..=max_index, small_rational()), 0..4),
        prop::collection::vec((1..=max_index, small_rational()), 0..4),
    )
        .prop_map(|(c, mu, s)| LinForm::from_parts(c, mu, s))
}

fn mass_vector(spec: AlgebraSpec, with_s: bool) -> impl Strategy<Value = MassVector> {
    let size = spec.size();
    prop::collection::vec(lin_form(size), size).prop_map(move |forms| {
        let entries = if with_s {
            forms
        } else {
            forms.iter().map(drop_s).collect()
        };
        MassVector::new(spec, entries).unwrap()
    })
}

fn drop_s(f: &LinForm) -> LinForm {
    LinForm::from_parts(
        f.constant().clone(),
        f.mu_terms().map(|(i, c)| (i, c.clone())),
        std::iter::empty(),
    )
}

fn values(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(small_rational(), n)
}

fn any_spec() -> impl Strategy<Value = AlgebraSpec> {
    (any::<bool>(), 2usize..=5).prop_map(|(a, n)| {
        if a {
            AlgebraSpec::affine_a(n).unwrap()
        } else {
            AlgebraSpec::affine_ct(n).unwrap()
        }
    })
}

proptest! {
    #[test]
    fn addition_is_a_commutative_group(a in lin_form(5), b in lin_form(5), c in lin_form(5)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a + &LinForm::zero(), a.clone());
        prop_assert_eq!(-(-a.clone()), a);
    }

    #[test]
    fn scaling_distributes(a in lin_form(5), b in lin_form(5), x in small_rational(), y in small_rational()) {
        prop_assert_eq!((&a + &b).scale(&x), &a.scale(&x) + &b.scale(&x));
        prop_assert_eq!(a.scale(&(&x + &y)), &a.scale(&x) + &a.scale(&y));
        prop_assert_eq!(a.scale(&x).scale(&y), a.scale(&(&x * &y)));
    }

    #[test]
    fn evaluation_is_linear(a in lin_form(5), b in lin_form(5), x in small_rational(), mu in values(5), s in values(5)) {
        let ev = |f: &LinForm| f.evaluate(&mu, Some(&s)).unwrap();
        prop_assert_eq!(ev(&(&a + &b)), ev(&a) + ev(&b));
        prop_assert_eq!(ev(&a.scale(&x)), ev(&a) * &x);
    }

    #[test]
    fn product_evaluates_to_product(a in lin_form(4), b in lin_form(4), mu in values(4)) {
        let (a, b) = (drop_s(&a), drop_s(&b));
        let q = a.product(&b).unwrap();
        prop_assert_eq!(q.evaluate(&mu).unwrap(), a.evaluate(&mu, None).unwrap() * b.evaluate(&mu, None).unwrap());
    }

    #[test]
    fn canonical_key_matches_equality(a in lin_form(3), b in lin_form(3)) {
        prop_assert_eq!(a.canonical_key() == b.canonical_key(), a == b);
        let sum = &a + &b;
        let other = &b + &a;
        prop_assert_eq!(sum.canonical_key(), other.canonical_key());
    }

    #[test]
    fn rationals_round_trip(x in small_rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }

    #[test]
    fn generators_are_involutions(spec in any_spec(), seed in any::<u64>()) {
        let g = MassVector::generic(spec);
        let i = (seed as usize % spec.size()) + 1;
        let once = apply_generator(i, &g).unwrap();
        prop_assert_ne!(&once, &g);
        prop_assert_eq!(apply_generator(i, &once).unwrap(), g);
    }

    #[test]
    fn involution_on_arbitrary_vectors(v in mass_vector(AlgebraSpec::affine_ct(3).unwrap(), true), i in 1usize..=4) {
        prop_assert_eq!(apply_generator(i, &apply_generator(i, &v).unwrap()).unwrap(), v);
    }

    #[test]
    fn words_and_inverses_cancel(spec in any_spec(), letters in prop::collection::vec(1usize..=6, 0..12)) {
        let letters: Vec<usize> = letters.into_iter().map(|i| (i - 1) % spec.size() + 1).collect();
        let w = Word::new(letters);
        let g = MassVector::generic(spec);
        let there = apply_word(&w, &g).unwrap();
        prop_assert_eq!(apply_word(&w.inverse(), &there).unwrap(), g);
    }

    #[test]
    fn json_round_trip(v in mass_vector(AlgebraSpec::affine_a(3).unwrap(), true)) {
        prop_assert_eq!(MassVector::from_json_str(&v.to_json_string()).unwrap(), v);
    }

    #[test]
    fn palindromic_permutations_are_closed(l in 0usize..=5, word in prop::collection::vec(0usize..=5, 0..=20)) {
        let word: Vec<usize> = word.into_iter().map(|i| i % (l + 1)).collect();
        let f = SPermC::from_word(l, &word).unwrap();
        prop_assert!(f.satisfies_constraint());
        let g = SPermC::from_word(l, &word.iter().rev().copied().collect::<Vec<_>>()).unwrap();
        // simple generators are involutions, so the reversed word is the inverse
        prop_assert_eq!(f.compose(&g).unwrap(), SPermC::identity(l));
    }

    #[test]
    fn rotation_is_covariant(n in 2usize..=5, r in 1usize..=6, letters in prop::collection::vec(1usize..=6, 0..10)) {
        let spec = AlgebraSpec::affine_a(n).unwrap();
        let size = spec.size();
        let rot = CyclicRotation::new((r - 1) % size + 1, size).unwrap();
        let w = Word::new(letters.into_iter().map(|i| (i - 1) % size + 1).collect());
        prop_assert!(check_rotation_covariance(&w, &rot, spec).unwrap());
    }

    #[test]
    fn fold_round_trips(v in mass_vector(AlgebraSpec::affine_ct(3).unwrap(), false)) {
        let folded = fold_ct_to_a(&v).unwrap();
        prop_assert_eq!(folded.len(), 6);
        prop_assert_eq!(unfold_a_to_ct(&folded).unwrap(), v);
    }
}
