use lorenz_knots::braids::*;
use lorenz_knots::invariants::*;
use lorenz_knots::modular;
use lorenz_knots::orbits::*;
use lorenz_knots::poly::LaurentPoly;
use num_bigint::BigInt;
use proptest::prelude::*;

fn letters(max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(prop_oneof![Just(Letter::X), Just(Letter::Y)], 1..=max_len)
}

fn template() -> impl Strategy<Value = TemplateSpec> {
    (-3i64..=3, -3i64..=3, any::<bool>()).prop_map(|(m, n, mirrored)| TemplateSpec { m, n, mirrored })
}

/// Random braids whose closure is a knot.
fn knot_braid(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands)
        .prop_flat_map(move |n| {
            let gen = (1..n as i64, any::<bool>()).prop_map(|(i, pos)| if pos { i } else { -i });
            (Just(n), prop::collection::vec(gen, 0..=max_len))
        })
        .prop_map(|(n, gens)| BraidWord::from_signed(n, &gens).unwrap())
        .prop_filter("closure must be a knot", |b| b.is_knot())
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..=6, -20i64..=20), 0..6).prop_map(LaurentPoly::from_pairs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_form_is_rotation_invariant(w in letters(14), k in 0usize..14) {
        match canonical_word(&w) {
            Ok(c) => {
                prop_assert_eq!(canonical_word(&rotate(&w, k % w.len())).unwrap(), c.clone());
                prop_assert_eq!(canonical_word(c.letters()).unwrap(), c);
            }
            Err(e) => {
                let is_non_primitive = matches!(e, lorenz_knots::Error::NonPrimitive { .. });
                prop_assert!(is_non_primitive);
            }
        }
    }

    #[test]
    fn builder_yields_knots(w in letters(12), spec in template()) {
        if let Ok(w) = canonical_word(&w) {
            let b = build_braid(&w, spec).unwrap();
            prop_assert!(b.is_knot());
            let s = simplify_braid(&b);
            prop_assert!(s.is_knot());
        }
    }

    #[test]
    fn alexander_routes_agree(b in knot_braid(6, 20)) {
        let a = alexander_burau(&b).unwrap();
        prop_assert_eq!(alexander_seifert(&b).unwrap(), a.clone());
        prop_assert_eq!(alexander_burau(&simplify_braid(&b)).unwrap(), a.clone());
        prop_assert_eq!(alexander_hash(&b).unwrap(), AlexanderHash::of_poly(&a));
    }

    #[test]
    fn signature_sign_matches_determinant(b in knot_braid(6, 20)) {
        // sign Δ(-1) = (-1)^(σ/2) under the symmetric normalization
        let d = alexander_burau(&b).unwrap().eval_at_neg_one();
        let s = signature(&b).unwrap();
        let expected = if (s / 2) % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(d.sign(), BigInt::from(expected).sign());
        prop_assert_eq!(signature(&mirror_braid(&b)).unwrap(), -s);
    }

    #[test]
    fn jones_routes_agree(b in knot_braid(5, 14)) {
        let v = jones_tl(&b).unwrap();
        prop_assert_eq!(kauffman_oracle(&b).unwrap(), v.clone());
        prop_assert_eq!(jones_tl(&mirror_braid(&b)).unwrap(), v.reciprocal());
        prop_assert_eq!(jones_tl(&simplify_braid(&b)).unwrap(), v);
    }

    #[test]
    fn fingerprint_json_round_trip(w in letters(9), spec in template()) {
        if let Ok(w) = canonical_word(&w) {
            let fp = fingerprint(&w, spec, 12).unwrap();
            let json = serde_json::to_string(&fp).unwrap();
            prop_assert_eq!(serde_json::from_str::<Fingerprint>(&json).unwrap(), fp);
        }
    }

    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        }
        prop_assert_eq!(a.reciprocal().reciprocal(), a);
    }

    #[test]
    fn crt_recovers_signed_integers(v in any::<i128>()) {
        let value = BigInt::from(v);
        let primes = modular::primes_for_bound(&value.magnitude().clone().into()).unwrap();
        let residues: Vec<u64> = primes.iter().map(|&p| modular::bigint_mod(&value, p)).collect();
        prop_assert_eq!(modular::crt_symmetric(&residues, &primes), value);
    }
}
