use braidcat::garside::positive_word_for;
use braidcat::handle::{handle_reduce, Reduction};
use braidcat::lk::LkRepresentation;
use braidcat::relations::shuffle;
use braidcat::{
    braids_equal, handle_equal, left_normal_form, lk_matrix, underlying_permutation, BraidWord, HandleVerdict,
    Letter, DEFAULT_FUEL,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn word_on(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let k = n as i32 - 1;
    prop::collection::vec((1..=k, any::<bool>()), 0..=max_len).prop_map(move |v| {
        let signed: Vec<i32> = v.into_iter().map(|(i, pos)| if pos { i } else { -i }).collect();
        BraidWord::from_signed(n, &signed)
    })
}

fn word(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_n).prop_flat_map(move |n| word_on(n, max_len))
}

fn pair(max_n: usize, max_len: usize) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (2..=max_n).prop_flat_map(move |n| (word_on(n, max_len), word_on(n, max_len)))
}

fn shuffled(w: &BraidWord, seed: u64) -> BraidWord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let steps = rng.random_range(0..=20);
    shuffle(w, steps, |k| rng.random_range(0..k))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn normal_form_is_well_formed(w in word(6, 16)) {
        let nf = left_normal_form(&w);
        prop_assert!(nf.is_well_formed());
        prop_assert_eq!(left_normal_form(&nf.to_word()), nf);
    }

    #[test]
    fn shuffle_preserves_the_element(w in word(6, 12), seed in any::<u64>()) {
        let v = shuffled(&w, seed);
        prop_assert!(braids_equal(&w, &v));
        prop_assert_eq!(left_normal_form(&w).serialize(), left_normal_form(&v).serialize());
        prop_assert_eq!(w.exponent_sum(), v.exponent_sum());
    }

    #[test]
    fn permutation_is_a_homomorphism((a, b) in pair(6, 12)) {
        let ab = a.compose(&b).unwrap();
        let (pa, pb) = (underlying_permutation(&a), underlying_permutation(&b));
        let p = underlying_permutation(&ab);
        for i in 0..a.strands() {
            prop_assert_eq!(p.apply(i), pb.apply(pa.apply(i)));
        }
    }

    #[test]
    fn word_times_inverse_is_trivial(w in word(6, 12)) {
        prop_assert!(left_normal_form(&w.compose(&w.invert()).unwrap()).is_identity());
        prop_assert!(left_normal_form(&w.invert().compose(&w).unwrap()).is_identity());
    }

    #[test]
    fn rot180_is_an_anti_automorphism((a, b) in pair(6, 12)) {
        let lhs = a.compose(&b).unwrap().rot180();
        let rhs = b.rot180().compose(&a.rot180()).unwrap();
        prop_assert!(braids_equal(&lhs, &rhs));
        prop_assert_eq!(lhs.rot180(), a.compose(&b).unwrap());
    }

    #[test]
    fn equality_is_a_congruence((a, c) in pair(5, 8), seed in any::<u64>()) {
        let b = shuffled(&a, seed);
        prop_assert!(braids_equal(&a.compose(&c).unwrap(), &b.compose(&c).unwrap()));
        prop_assert!(braids_equal(&c.compose(&a).unwrap(), &c.compose(&b).unwrap()));
    }

    #[test]
    fn parse_inverts_format(w in word(6, 12)) {
        prop_assert_eq!(BraidWord::parse(&w.format(), w.strands()).unwrap(), w);
    }

    #[test]
    fn handle_reduction_decides_triviality(w in word(5, 12)) {
        let trivial = left_normal_form(&w).is_identity();
        match handle_reduce(&w, DEFAULT_FUEL) {
            Reduction::Reduced(r) => prop_assert_eq!(r.is_empty(), trivial),
            Reduction::OutOfFuel { .. } => prop_assert!(false, "fuel exhausted"),
        }
    }

    #[test]
    fn handle_agrees_with_normal_form((a, b) in pair(4, 6), seed in any::<u64>()) {
        // Mix equal and unequal pairs.
        let b = if seed % 2 == 0 { shuffled(&a, seed) } else { b };
        let expect = if braids_equal(&a, &b) { HandleVerdict::Equal } else { HandleVerdict::Unequal };
        prop_assert_eq!(handle_equal(&a, &b, DEFAULT_FUEL).unwrap(), expect);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn lk_is_a_homomorphism((a, b) in (3usize..=5).prop_flat_map(|n| (word_on(n, 6), word_on(n, 6)))) {
        let rep = LkRepresentation::new(a.strands()).unwrap();
        let ab = rep.matrix(&a.compose(&b).unwrap()).unwrap();
        prop_assert_eq!(ab, rep.matrix(&a).unwrap().mul(&rep.matrix(&b).unwrap()));
        prop_assert!(rep.matrix(&a).unwrap().mul(&rep.matrix(&a.invert()).unwrap()).is_identity());
    }

    #[test]
    fn lk_agrees_with_normal_form(a in (3usize..=5).prop_flat_map(|n| word_on(n, 8)), seed in any::<u64>()) {
        let b = shuffled(&a, seed);
        let c = a.compose(&BraidWord::from_signed(a.strands(), &[1])).unwrap();
        let rep = LkRepresentation::new(a.strands()).unwrap();
        prop_assert!(rep.equal(&a, &b).unwrap());
        prop_assert!(!rep.equal(&a, &c).unwrap());
    }
}

#[test]
fn positive_permutation_braids_have_minimal_length() {
    // Every permutation of 4 letters, spelled positively, has length equal
    // to its inversion count and recovers the permutation.
    let mut images = [0usize, 1, 2, 3];
    let mut count = 0;
    permute(&mut images, 0, &mut |p| {
        let perm = braidcat::Permutation::from_images(p).unwrap();
        let w = BraidWord::new(4, positive_word_for(&perm)).unwrap();
        assert_eq!(w.len(), perm.inversions());
        assert_eq!(underlying_permutation(&w), perm);
        count += 1;
    });
    assert_eq!(count, 24);
}

fn permute(v: &mut [usize; 4], k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}

#[test]
fn lk_matrix_of_empty_word_is_identity() {
    for n in 2..=6 {
        assert!(lk_matrix(&BraidWord::identity(n).unwrap()).unwrap().is_identity());
    }
}

#[test]
fn garside_delta_squared_is_central() {
    let d2 = BraidWord::from_signed(4, &[1, 2, 3, 1, 2, 1]).pow(2);
    for i in 1..4 {
        let g = BraidWord::new(4, vec![Letter::pos(i)]).unwrap();
        assert!(braids_equal(&d2.compose(&g).unwrap(), &g.compose(&d2).unwrap()));
    }
}
