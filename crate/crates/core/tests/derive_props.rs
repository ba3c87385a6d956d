use braidcat::derive::{candidate_permutation, derived_pair};
use braidcat::examples::{b1, b2, b3, b4};
use braidcat::lk::LkRepresentation;
use braidcat::{
    braids_equal, cable, check, coset_element, derived_braid, embed, handle_equal, underlying_permutation,
    BraidWord, CableWidths, CheckKind, CosetIndex, DerivedKind, HandleVerdict, DEFAULT_FUEL,
};
use proptest::prelude::*;

fn word_on(n: usize, max_len: usize, positive: bool) -> impl Strategy<Value = BraidWord> {
    let k = n as i32 - 1;
    prop::collection::vec((1..=k, any::<bool>()), 0..=max_len).prop_map(move |v| {
        let signed: Vec<i32> = v.into_iter().map(|(i, s)| if s || positive { i } else { -i }).collect();
        BraidWord::from_signed(n, &signed)
    })
}

/// Words in `B_4` with underlying permutation `(2 3)`: `u σ₂ u⁻¹`-style
/// candidates are built as `x · σ₂ · y` with `σ(y) = σ(x)⁻¹`, which is easiest
/// via a pure braid factor.
fn candidate() -> impl Strategy<Value = BraidWord> {
    (word_on(4, 5, false), word_on(4, 3, false)).prop_map(|(x, p)| {
        // p·p is pure only for involutions; squaring each letter always is.
        let pure: Vec<i32> = p.letters().iter().flat_map(|l| [l.signed(), l.signed()]).collect();
        let pure = BraidWord::from_signed(4, &pure);
        let conj = x.compose(&BraidWord::from_signed(4, &[2])).unwrap().compose(&x.invert()).unwrap();
        let w = pure.compose(&conj).unwrap();
        if underlying_permutation(&w) == candidate_permutation() {
            w
        } else {
            pure.compose(&BraidWord::from_signed(4, &[2])).unwrap()
        }
    })
}

fn widths() -> impl Strategy<Value = CableWidths> {
    prop::collection::vec(1usize..=3, 4).prop_map(|v| CableWidths::new(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn derived_permutations_agree(b in candidate()) {
        prop_assert_eq!(underlying_permutation(&b), candidate_permutation());
        let p = |k| underlying_permutation(&derived_braid(&b, k).unwrap());
        prop_assert_eq!(p(DerivedKind::L), p(DerivedKind::R));
        prop_assert_eq!(p(DerivedKind::FL), p(DerivedKind::FR));
    }

    #[test]
    fn cabling_is_functorial(a in word_on(4, 5, true), b in word_on(4, 5, true), w in widths()) {
        let lhs = cable(&a.compose(&b).unwrap(), &w).unwrap();
        let rhs = cable(&a, &w).unwrap().compose(&cable(&b, &w.after(&a)).unwrap()).unwrap();
        prop_assert!(braids_equal(&lhs, &rhs));
    }

    #[test]
    fn cabling_respects_relations(a in word_on(4, 6, false), w in widths()) {
        let n = w.total();
        let back = cable(&a.compose(&a.invert()).unwrap(), &w).unwrap();
        prop_assert!(braids_equal(&back, &BraidWord::identity(n).unwrap()));
        // braid relation σ1σ2σ1 = σ2σ1σ2 survives cabling
        let l = cable(&BraidWord::from_signed(4, &[1, 2, 1]), &w).unwrap();
        let r = cable(&BraidWord::from_signed(4, &[2, 1, 2]), &w).unwrap();
        prop_assert!(braids_equal(&l, &r));
    }

    #[test]
    fn embed_is_a_homomorphism(a in word_on(4, 8, false), b in word_on(4, 8, false), off in 0usize..=2) {
        let lhs = embed(&a.compose(&b).unwrap(), 6, off).unwrap();
        let rhs = embed(&a, 6, off).unwrap().compose(&embed(&b, 6, off).unwrap()).unwrap();
        prop_assert!(braids_equal(&lhs, &rhs));
    }
}

#[test]
fn coset_elements_satisfy_l_equals_r() {
    for m in -3..=3 {
        for p in -3..=3 {
            for q in -3..=3 {
                let b = coset_element(CosetIndex::new(m, p, q));
                let l = derived_braid(&b, DerivedKind::L).unwrap();
                let r = derived_braid(&b, DerivedKind::R).unwrap();
                assert!(braids_equal(&l, &r), "({m},{p},{q})");
                if underlying_permutation(&b) == candidate_permutation() {
                    assert!(check(&b, CheckKind::Assoc).unwrap());
                }
            }
        }
    }
}

#[test]
fn verdicts_agree_across_oracles() {
    let rep = LkRepresentation::new(6).unwrap();
    for b in [b1(), b2(), b3(), b4()] {
        for kind in [CheckKind::Assoc, CheckKind::Funct] {
            let (x, y) = derived_pair(&b, kind).unwrap();
            let nf = braids_equal(&x, &y);
            let handle = handle_equal(&x, &y, DEFAULT_FUEL).unwrap();
            assert_ne!(handle, HandleVerdict::BudgetExhausted);
            assert_eq!(nf, handle == HandleVerdict::Equal, "{b} {kind:?}");
            assert_eq!(nf, rep.equal(&x, &y).unwrap(), "{b} {kind:?}");
        }
    }
}

#[test]
fn verdicts_do_not_depend_on_crossing_sign() {
    // Under the opposite global sign convention every braid is mirrored.
    for b in [b1(), b2(), b3(), b4()] {
        for kind in [CheckKind::Assoc, CheckKind::Funct] {
            assert_eq!(check(&b, kind).unwrap(), check(&b.mirror(), kind).unwrap(), "{b} {kind:?}");
        }
    }
}

#[test]
fn mirrored_cables_are_inverse_cables() {
    // Cabling commutes with mirroring, so the sign convention is global.
    let w = CableWidths::new(vec![2, 1, 3, 2]).unwrap();
    let b = BraidWord::from_signed(4, &[1, -3, 2, 2, -1]);
    assert!(braids_equal(&cable(&b.mirror(), &w).unwrap(), &cable(&b, &w).unwrap().mirror()));
}
