//! Left-greedy Garside normal form for `B_n`.
//!
//! Every braid is uniquely `Δ^p · A₁ ⋯ A_r` where each `A_k` is a positive
//! permutation braid other than `e` and `Δ`, and each consecutive pair is
//! left-weighted: the starting set of `A_{k+1}` lies in the finishing set of
//! `A_k`. Simple elements are stored as their permutations.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::perm::Permutation;
use crate::word::{BraidWord, Letter};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GarsideNormalForm {
    strands: usize,
    delta_power: i64,
    factors: Vec<Permutation>,
}

fn is_delta(p: &[u8]) -> bool {
    let n = p.len();
    p.iter().enumerate().all(|(i, &x)| x as usize == n - 1 - i)
}

fn is_identity(p: &[u8]) -> bool {
    p.iter().enumerate().all(|(i, &x)| x as usize == i)
}

/// `i ∈ S(A)`: strands starting at `i`, `i+1` cross.
fn in_starting_set(p: &[u8], i: usize) -> bool {
    p[i] > p[i + 1]
}

/// `i ∈ F(A)`: strands ending at `i`, `i+1` cross.
fn in_finishing_set(p: &[u8], i: usize) -> bool {
    let a = p.iter().position(|&x| x as usize == i).unwrap();
    let b = p.iter().position(|&x| x as usize == i + 1).unwrap();
    a > b
}

/// Conjugation by `Δ`: `σ_i ↦ σ_{n-i}`.
fn flip(p: &mut [u8]) {
    let n = p.len();
    p.reverse();
    for x in p.iter_mut() {
        *x = (n - 1) as u8 - *x;
    }
}

/// Moves generators from the front of `b` to the back of `a` until the pair
/// is left-weighted. Returns whether anything moved.
fn left_weight(a: &mut [u8], b: &mut [u8]) -> bool {
    let n = a.len();
    let mut changed = false;
    'outer: loop {
        for i in 0..n - 1 {
            if in_starting_set(b, i) && !in_finishing_set(a, i) {
                // a ← a·σ_i swaps the values i, i+1 in a's images;
                // b ← σ_i⁻¹·b swaps b's entries at positions i, i+1.
                for x in a.iter_mut() {
                    if *x as usize == i {
                        *x = (i + 1) as u8;
                    } else if *x as usize == i + 1 {
                        *x = i as u8;
                    }
                }
                b.swap(i, i + 1);
                changed = true;
                continue 'outer;
            }
        }
        return changed;
    }
}

impl GarsideNormalForm {
    pub fn identity(strands: usize) -> Self {
        GarsideNormalForm {
            strands,
            delta_power: 0,
            factors: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    /// Canonical length: number of non-Δ simple factors.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// Right-multiplies by a simple element given as permutation images.
    fn push_simple(&mut self, s: Vec<u8>) {
        if is_identity(&s) {
            return;
        }
        if is_delta(&s) {
            // X·Δ = Δ·τ(X)
            for f in &mut self.factors {
                flip(f.raw_mut());
            }
            self.delta_power += 1;
            return;
        }
        // One right-to-left sweep restores left-weightedness.
        self.factors.push(Permutation::from_raw(s));
        let mut k = self.factors.len() - 1;
        while k > 0 {
            let (left, right) = self.factors.split_at_mut(k);
            if !left_weight(left[k - 1].raw_mut(), right[0].raw_mut()) {
                break;
            }
            k -= 1;
        }
        self.tidy();
    }

    /// Left-weighted sequences hold their Δ factors first and their
    /// identity factors last.
    fn tidy(&mut self) {
        while self.factors.last().is_some_and(|f| is_identity(f.raw())) {
            self.factors.pop();
        }
        let deltas = self.factors.iter().take_while(|f| is_delta(f.raw())).count();
        if deltas > 0 {
            self.factors.drain(..deltas);
            self.delta_power += deltas as i64;
        }
    }

    /// Right-multiplies by one letter in place.
    pub fn push_letter(&mut self, l: Letter) {
        let n = self.strands;
        let i = l.index() - 1;
        if l.is_positive() {
            let mut s: Vec<u8> = (0..n as u8).collect();
            s.swap(i, i + 1);
            self.push_simple(s);
        } else {
            // σ_i⁻¹ = Δ⁻¹·(Δσ_i⁻¹) and X·Δ⁻¹ = Δ⁻¹·τ(X).
            for f in &mut self.factors {
                flip(f.raw_mut());
            }
            self.delta_power -= 1;
            // Δσ_i⁻¹ has permutation j ↦ s_i(n-1-j).
            let s: Vec<u8> = (0..n)
                .map(|j| {
                    let x = n - 1 - j;
                    if x == i {
                        (i + 1) as u8
                    } else if x == i + 1 {
                        i as u8
                    } else {
                        x as u8
                    }
                })
                .collect();
            self.push_simple(s);
        }
    }

    /// Serialised as `D^p | f1 | f2 | ...`, each factor a 1-based image list.
    pub fn serialize(&self) -> String {
        let mut s = alloc::format!("D^{}", self.delta_power);
        for f in &self.factors {
            s.push_str(" | [");
            for (k, x) in f.one_based_images().iter().enumerate() {
                if k > 0 {
                    s.push(',');
                }
                s.push_str(&alloc::format!("{x}"));
            }
            s.push(']');
        }
        s
    }

    /// A word for this normal form: `Δ^p` spelled with the standard positive
    /// half-twist word (or its inverse), then each factor spelled as a
    /// positive word.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta = positive_word_for(&Permutation::reversal(n));
        let mut letters = Vec::new();
        for _ in 0..self.delta_power.unsigned_abs() {
            if self.delta_power > 0 {
                letters.extend(delta.iter().copied());
            } else {
                letters.extend(delta.iter().rev().map(|l| l.inverse()));
            }
        }
        for f in &self.factors {
            letters.extend(positive_word_for(f));
        }
        BraidWord::new(n, letters).expect("normal form letters are in range")
    }

    /// Packs the form into a `u128` (delta power, factor count, factor ranks)
    /// when it fits. Distinct forms on the same strand count get distinct keys.
    pub fn packed_key(&self) -> Option<u128> {
        let n = self.strands;
        let mut count: u128 = 1;
        for k in 2..=n as u128 {
            count = count.checked_mul(k)?;
        }
        let bits = 128 - (count - 1).leading_zeros();
        let len = self.factors.len();
        if len > 255 || 40 + len as u32 * bits > 128 {
            return None;
        }
        let delta = i32::try_from(self.delta_power).ok()?;
        let mut key: u128 = ((delta as u32) as u128) << 8 | len as u128;
        for f in &self.factors {
            key = key << bits | f.lehmer_rank();
        }
        Some(key)
    }

    /// Checks the structural invariants. Used by tests.
    pub fn is_well_formed(&self) -> bool {
        let n = self.strands;
        if self.factors.iter().any(|f| f.size() != n || is_identity(f.raw()) || is_delta(f.raw())) {
            return false;
        }
        self.factors.windows(2).all(|w| {
            (0..n - 1).all(|i| !in_starting_set(w[1].raw(), i) || in_finishing_set(w[0].raw(), i))
        })
    }
}

impl fmt::Display for GarsideNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

/// A positive word for a permutation braid (bubble sort on the images).
pub fn positive_word_for(p: &Permutation) -> Vec<Letter> {
    // Repeatedly peel a starting-set generator off the front.
    let mut rest = p.raw().to_vec();
    let mut out = Vec::new();
    'outer: loop {
        for i in 0..rest.len().saturating_sub(1) {
            if in_starting_set(&rest, i) {
                out.push(Letter::pos(i + 1));
                rest.swap(i, i + 1);
                continue 'outer;
            }
        }
        return out;
    }
}

pub fn left_normal_form(b: &BraidWord) -> GarsideNormalForm {
    let mut nf = GarsideNormalForm::identity(b.strands());
    for &l in b.letters() {
        nf.push_letter(l);
    }
    nf
}

/// Decides equality in `B_n` by comparing normal forms. Words on different
/// strand counts are never equal.
pub fn braids_equal(a: &BraidWord, b: &BraidWord) -> bool {
    a.strands() == b.strands() && left_normal_form(a) == left_normal_form(b)
}

/// Whether the braid is the identity.
pub fn is_trivial(b: &BraidWord) -> bool {
    left_normal_form(b).is_identity()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::underlying_permutation;

    fn w(n: usize, s: &[i32]) -> BraidWord {
        BraidWord::from_signed(n, s)
    }

    #[test]
    fn far_commutation() {
        assert!(braids_equal(&w(4, &[1, 3]), &w(4, &[3, 1])));
    }

    #[test]
    fn braid_relation() {
        assert!(braids_equal(&w(3, &[1, 2, 1]), &w(3, &[2, 1, 2])));
        assert!(braids_equal(&w(5, &[3, 4, 3]), &w(5, &[4, 3, 4])));
    }

    #[test]
    fn identity_normal_form() {
        let nf = left_normal_form(&w(4, &[1, -1]));
        assert_eq!(nf.delta_power(), 0);
        assert!(nf.factors().is_empty());
        assert_eq!(nf.serialize(), "D^0");
    }

    #[test]
    fn half_twist_is_delta() {
        let nf = left_normal_form(&w(4, &[1, 2, 3, 1, 2, 1]));
        assert_eq!(nf.delta_power(), 1);
        assert!(nf.factors().is_empty());
        let nf = left_normal_form(&w(4, &[-1, -2, -3, -1, -2, -1]));
        assert_eq!(nf.delta_power(), -1);
        assert!(nf.factors().is_empty());
    }

    #[test]
    fn distinguishes_powers_of_a_generator() {
        assert!(!braids_equal(&w(4, &[2]), &w(4, &[2, 2, 2])));
        assert!(!braids_equal(&w(4, &[2]), &w(4, &[-2])));
        assert!(!braids_equal(&w(3, &[1, 2]), &w(3, &[2, 1])));
    }

    #[test]
    fn serialization_shape() {
        let nf = left_normal_form(&w(4, &[2]));
        assert_eq!(nf.serialize(), "D^0 | [1,3,2,4]");
        let nf = left_normal_form(&w(3, &[-1]));
        // σ1⁻¹ = Δ⁻¹·(σ1σ2)
        assert_eq!(nf.delta_power(), -1);
        assert_eq!(nf.factors().len(), 1);
        assert_eq!(positive_word_for(&nf.factors()[0]), [Letter::pos(1), Letter::pos(2)]);
    }

    #[test]
    fn two_strands() {
        assert!(braids_equal(&w(2, &[1, -1, 1]), &w(2, &[1])));
        assert_eq!(left_normal_form(&w(2, &[-1, -1])).delta_power(), -2);
    }

    #[test]
    fn positive_word_round_trip() {
        let p = Permutation::from_one_based(&[3, 1, 4, 2]).unwrap();
        let word = BraidWord::new(4, positive_word_for(&p)).unwrap();
        assert_eq!(underlying_permutation(&word), p);
        assert_eq!(word.len(), p.inversions());
    }

    #[test]
    fn to_word_reproduces_the_element() {
        let b = w(5, &[1, -3, 2, 2, -4, 1, 3, -2]);
        let nf = left_normal_form(&b);
        assert!(nf.is_well_formed());
        assert_eq!(left_normal_form(&nf.to_word()), nf);
    }
}
