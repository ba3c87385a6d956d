//! Embeddings, block crossings, cabling and the derived `B_6` braids.
//!
//! For a composition braid `b ∈ B_4` the product enriched category's
//! composition is associative iff `L(b) = R(b)`, and the associator is an
//! enriched functor iff `FL(b) = FR(b)`.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::BraidError;
use crate::garside::braids_equal;
use crate::perm::{underlying_permutation, Permutation};
use crate::word::{BraidWord, Letter};

/// `σ_i ↦ σ_{i+offset}` into `B_{n_target}`.
pub fn embed(b: &BraidWord, n_target: usize, offset: usize) -> Result<BraidWord, BraidError> {
    if offset + b.strands() > n_target {
        return Err(BraidError::OffsetOutOfRange {
            offset,
            strands: b.strands(),
            target: n_target,
        });
    }
    let letters = b.letters().iter().map(|l| l.shifted(offset)).collect();
    BraidWord::new(n_target, letters)
}

/// Positive crossing of the block of `a` strands starting at `p` over the
/// adjacent block of `c` strands:
/// `∏_{j=0}^{c-1} (σ_{p+a-1+j} σ_{p+a-2+j} ⋯ σ_{p+j})`.
pub fn block_cross(p: usize, a: usize, c: usize, n: usize) -> Result<BraidWord, BraidError> {
    if p == 0 || a == 0 || c == 0 || p + a + c - 1 > n {
        return Err(BraidError::BlockOutOfRange {
            start: p,
            left: a,
            right: c,
            strands: n,
        });
    }
    let mut letters = Vec::with_capacity(a * c);
    for j in 0..c {
        for s in (0..a).rev() {
            letters.push(Letter::pos(p + s + j));
        }
    }
    BraidWord::new(n, letters)
}

/// Widths of the cables replacing each strand, in top order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CableWidths(Vec<usize>);

impl CableWidths {
    pub fn new(widths: Vec<usize>) -> Result<Self, BraidError> {
        if widths.contains(&0) {
            return Err(BraidError::ZeroWidth);
        }
        Ok(CableWidths(widths))
    }

    pub fn widths(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Widths at the bottom of `b`: each letter swaps the cables it crosses.
    pub fn after(&self, b: &BraidWord) -> CableWidths {
        let mut w = self.0.clone();
        for l in b.letters() {
            w.swap(l.index() - 1, l.index());
        }
        CableWidths(w)
    }
}

/// Replaces strand `k` of `b` by a ribbon of `widths[k]` parallel strands.
pub fn cable(b: &BraidWord, widths: &CableWidths) -> Result<BraidWord, BraidError> {
    if b.strands() != widths.0.len() {
        return Err(BraidError::WidthMismatch {
            strands: b.strands(),
            widths: widths.0.len(),
        });
    }
    let n = widths.total();
    let mut w = widths.0.clone();
    let mut letters = Vec::new();
    for l in b.letters() {
        let i = l.index();
        let p = 1 + w[..i - 1].iter().sum::<usize>();
        if l.is_positive() {
            letters.extend(block_cross(p, w[i - 1], w[i], n)?.into_letters());
        } else {
            // σ_i⁻¹ undoes the crossing of cables arriving in swapped order.
            letters.extend(block_cross(p, w[i], w[i - 1], n)?.invert().into_letters());
        }
        w.swap(i - 1, i);
    }
    BraidWord::new(n, letters)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DerivedKind {
    L,
    R,
    FL,
    FR,
}

fn widths(w: [usize; 4]) -> CableWidths {
    CableWidths(w.to_vec())
}

pub fn derived_braid(b: &BraidWord, kind: DerivedKind) -> Result<BraidWord, BraidError> {
    if b.strands() != 4 {
        return Err(BraidError::WrongStrandCount {
            expected: 4,
            found: b.strands(),
        });
    }
    let (first, second) = match kind {
        DerivedKind::L => (embed(b, 6, 0)?, cable(b, &widths([2, 2, 1, 1]))?),
        DerivedKind::R => (embed(b, 6, 2)?, cable(b, &widths([1, 1, 2, 2]))?),
        DerivedKind::FL => (cable(b, &widths([1, 2, 1, 2]))?, embed(b, 6, 2)?),
        DerivedKind::FR => (cable(b, &widths([2, 1, 2, 1]))?, embed(b, 6, 0)?),
    };
    first.compose(&second)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckKind {
    Assoc,
    Funct,
}

impl CheckKind {
    pub fn kinds(self) -> (DerivedKind, DerivedKind) {
        match self {
            CheckKind::Assoc => (DerivedKind::L, DerivedKind::R),
            CheckKind::Funct => (DerivedKind::FL, DerivedKind::FR),
        }
    }
}

/// The transposition `(2 3)` in `S_4`.
pub fn candidate_permutation() -> Permutation {
    Permutation::from_one_based(&[1, 3, 2, 4]).expect("valid")
}

fn require_candidate(b: &BraidWord) -> Result<(), BraidError> {
    if b.strands() != 4 {
        return Err(BraidError::WrongStrandCount {
            expected: 4,
            found: b.strands(),
        });
    }
    let p = underlying_permutation(b);
    if p != candidate_permutation() {
        return Err(BraidError::NotACandidate {
            found: p.cycle_notation(),
        });
    }
    Ok(())
}

/// The two derived braids compared by `check`, after the candidacy test.
pub fn derived_pair(b: &BraidWord, kind: CheckKind) -> Result<(BraidWord, BraidWord), BraidError> {
    require_candidate(b)?;
    let (x, y) = kind.kinds();
    Ok((derived_braid(b, x)?, derived_braid(b, y)?))
}

/// `assoc ⟺ L(b) = R(b)`, `funct ⟺ FL(b) = FR(b)`. Requires `σ(b) = (2 3)`.
pub fn check(b: &BraidWord, kind: CheckKind) -> Result<bool, BraidError> {
    let (x, y) = derived_pair(b, kind)?;
    Ok(braids_equal(&x, &y))
}

/// `(m, p, q)` indexes `h^m · σ₂ · σ₁^p · σ₃^q` with `h = σ₂σ₁σ₃σ₂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetIndex {
    pub m: i64,
    pub p: i64,
    pub q: i64,
}

impl CosetIndex {
    pub fn new(m: i64, p: i64, q: i64) -> Self {
        CosetIndex { m, p, q }
    }
}

/// The generator `σ₂σ₁σ₃σ₂` of `H`.
pub fn h_generator() -> BraidWord {
    BraidWord::from_signed(4, &[2, 1, 3, 2])
}

pub fn coset_element(ix: CosetIndex) -> BraidWord {
    let parts = [
        h_generator().pow(ix.m),
        BraidWord::from_signed(4, &[2]),
        BraidWord::from_signed(4, &[1]).pow(ix.p),
        BraidWord::from_signed(4, &[3]).pow(ix.q),
    ];
    BraidWord::product(4, &parts).expect("all parts live in B_4")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OpSide {
    /// Left multiplication by the `H` generator.
    Outer,
    /// Right multiplication by `σ₁`.
    A,
    /// Right multiplication by `σ₃`.
    B,
}

pub fn op_transform(b: &BraidWord, which: OpSide) -> Result<BraidWord, BraidError> {
    match which {
        OpSide::Outer => h_generator().compose(b),
        OpSide::A => b.compose(&BraidWord::from_signed(4, &[1])),
        OpSide::B => b.compose(&BraidWord::from_signed(4, &[3])),
    }
}

/// Both sides of `x·σ₁σ₃ = σ₂σ₁σ₃σ₂·x`.
pub fn braiding_sides(x: &BraidWord) -> Result<(BraidWord, BraidWord), BraidError> {
    if x.strands() != 4 {
        return Err(BraidError::WrongStrandCount {
            expected: 4,
            found: x.strands(),
        });
    }
    let left = x.compose(&BraidWord::from_signed(4, &[1, 3]))?;
    let right = h_generator().compose(x)?;
    Ok((left, right))
}

pub fn braiding_equation_holds(x: &BraidWord) -> Result<bool, BraidError> {
    let (l, r) = braiding_sides(x)?;
    Ok(braids_equal(&l, &r))
}

impl core::fmt::Display for DerivedKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            DerivedKind::L => "L",
            DerivedKind::R => "R",
            DerivedKind::FL => "FL",
            DerivedKind::FR => "FR",
        })
    }
}

impl core::str::FromStr for DerivedKind {
    type Err = BraidError;
    fn from_str(s: &str) -> Result<Self, BraidError> {
        match s {
            "L" => Ok(DerivedKind::L),
            "R" => Ok(DerivedKind::R),
            "FL" => Ok(DerivedKind::FL),
            "FR" => Ok(DerivedKind::FR),
            _ => Err(BraidError::BadToken {
                token: s.to_string(),
                reason: "expected L, R, FL or FR",
            }),
        }
    }
}

impl core::str::FromStr for CheckKind {
    type Err = BraidError;
    fn from_str(s: &str) -> Result<Self, BraidError> {
        match s {
            "assoc" => Ok(CheckKind::Assoc),
            "funct" => Ok(CheckKind::Funct),
            _ => Err(BraidError::BadToken {
                token: s.to_string(),
                reason: "expected assoc or funct",
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::{b1, b2, b3, b4};

    fn w(n: usize, s: &[i32]) -> BraidWord {
        BraidWord::from_signed(n, s)
    }

    /// Independent oracle: follow each strand through the crossings.
    fn track(word: &BraidWord) -> Vec<usize> {
        let n = word.strands();
        // at[pos] = strand currently at pos
        let mut at: Vec<usize> = (0..n).collect();
        for l in word.letters() {
            at.swap(l.index() - 1, l.index());
        }
        let mut out = alloc::vec![0; n];
        for (pos, &strand) in at.iter().enumerate() {
            out[strand] = pos;
        }
        out
    }

    /// Expected bottom positions when blocks `[p, p+a)` and `[p+a, p+a+c)`
    /// (1-based) trade places.
    fn block_swap(p: usize, a: usize, c: usize, n: usize) -> Vec<usize> {
        (0..n)
            .map(|s| {
                let s1 = s + 1;
                if s1 >= p && s1 < p + a {
                    s + c
                } else if s1 >= p + a && s1 < p + a + c {
                    s - a
                } else {
                    s
                }
            })
            .collect()
    }

    #[test]
    fn embed_examples() {
        assert_eq!(embed(&b1(), 6, 0).unwrap(), w(6, &[2]));
        assert_eq!(embed(&b1(), 6, 2).unwrap(), w(6, &[4]));
        assert!(embed(&b1(), 6, 3).is_err());
    }

    #[test]
    fn block_cross_examples() {
        assert_eq!(block_cross(1, 2, 2, 4).unwrap(), w(4, &[2, 1, 3, 2]));
        assert_eq!(block_cross(3, 1, 1, 5).unwrap(), w(5, &[3]));
        assert_eq!(block_cross(3, 2, 1, 6).unwrap(), w(6, &[4, 3]));
        assert_eq!(
            underlying_permutation(&block_cross(1, 2, 2, 4).unwrap()).cycle_notation(),
            "(1 3)(2 4)"
        );
        assert!(block_cross(5, 1, 2, 6).is_err());
        assert!(block_cross(0, 1, 1, 6).is_err());
    }

    #[test]
    fn block_cross_moves_blocks() {
        for n in 2..8 {
            for p in 1..n {
                for a in 1..=n - p {
                    for c in 1..=n + 1 - p - a {
                        let bc = block_cross(p, a, c, n).unwrap();
                        assert_eq!(track(&bc), block_swap(p, a, c, n), "p={p} a={a} c={c} n={n}");
                        assert_eq!(bc.len(), a * c);
                        assert!(bc.is_positive());
                    }
                }
            }
        }
    }

    #[test]
    fn cable_examples() {
        let cw = |v: &[usize]| CableWidths::new(v.to_vec()).unwrap();
        assert_eq!(cable(&b1(), &cw(&[2, 2, 1, 1])).unwrap(), w(6, &[4, 3]));
        assert_eq!(cable(&b1(), &cw(&[1, 1, 1, 1])).unwrap(), b1());
        let back = cable(&w(4, &[2, -2]), &cw(&[2, 2, 1, 1])).unwrap();
        assert!(braids_equal(&back, &BraidWord::identity(6).unwrap()));
        assert!(cable(&b1(), &cw(&[1, 1, 1])).is_err());
        assert!(CableWidths::new(alloc::vec![1, 0]).is_err());
    }

    #[test]
    fn cable_moves_cables() {
        // Every strand of a cable ends where the cable ends.
        let cw = CableWidths::new(alloc::vec![2, 1, 3, 1]).unwrap();
        let b = w(4, &[1, -3, 2, 2, -1]);
        let cabled = cable(&b, &cw).unwrap();
        let ends = track(&cabled);
        let coarse = track(&b);
        let start = |ws: &[usize], k: usize| ws[..k].iter().sum::<usize>();
        let bottom = cw.after(&b);
        for k in 0..4 {
            for s in 0..cw.widths()[k] {
                let top = start(cw.widths(), k) + s;
                assert_eq!(ends[top], start(bottom.widths(), coarse[k]) + s);
            }
        }
    }

    #[test]
    fn derived_b1_figures() {
        assert!(braids_equal(&derived_braid(&b1(), DerivedKind::L).unwrap(), &w(6, &[2, 4, 3])));
        assert!(braids_equal(&derived_braid(&b1(), DerivedKind::R).unwrap(), &w(6, &[4, 2, 3])));
        assert!(braids_equal(&derived_braid(&b1(), DerivedKind::FL).unwrap(), &w(6, &[3, 2, 4])));
        assert!(braids_equal(&derived_braid(&b1(), DerivedKind::FR).unwrap(), &w(6, &[3, 4, 2])));
        assert!(derived_braid(&w(5, &[2]), DerivedKind::L).is_err());
    }

    #[test]
    fn truth_table() {
        let assoc: Vec<bool> = [b1(), b2(), b3(), b4()].iter().map(|b| check(b, CheckKind::Assoc).unwrap()).collect();
        let funct: Vec<bool> = [b1(), b2(), b3(), b4()].iter().map(|b| check(b, CheckKind::Funct).unwrap()).collect();
        assert_eq!(assoc, [true, false, true, false]);
        assert_eq!(funct, [true, true, false, false]);
    }

    #[test]
    fn check_rejects_non_candidates() {
        assert!(matches!(check(&w(4, &[1]), CheckKind::Assoc), Err(BraidError::NotACandidate { .. })));
        assert!(matches!(check(&w(4, &[2, 2]), CheckKind::Funct), Err(BraidError::NotACandidate { .. })));
    }

    #[test]
    fn transcription_self_checks() {
        for b in [b1(), b2(), b3(), b4()] {
            assert_eq!(underlying_permutation(&b), candidate_permutation());
        }
        assert!(braids_equal(&b2().rot180(), &b3()));
        assert_eq!(b1().rot180(), b1());
        assert_eq!(b4().rot180(), b4());
        assert!(braids_equal(&b3(), &coset_element(CosetIndex::new(0, 2, 0))));
    }

    #[test]
    fn coset_examples() {
        assert_eq!(coset_element(CosetIndex::new(0, 0, 0)), b1());
        assert_eq!(coset_element(CosetIndex::new(0, 2, 0)), b3());
        let twice = op_transform(&op_transform(&b1(), OpSide::Outer).unwrap(), OpSide::Outer).unwrap();
        assert!(braids_equal(&twice, &coset_element(CosetIndex::new(2, 0, 0))));
        let ix = CosetIndex::new(-1, 2, -3);
        let e = coset_element(ix);
        assert!(braids_equal(&op_transform(&e, OpSide::A).unwrap(), &coset_element(CosetIndex::new(-1, 3, -3))));
        assert!(braids_equal(&op_transform(&e, OpSide::B).unwrap(), &coset_element(CosetIndex::new(-1, 2, -2))));
        assert!(braids_equal(&op_transform(&e, OpSide::Outer).unwrap(), &coset_element(CosetIndex::new(0, 2, -3))));
    }

    #[test]
    fn braiding_equation_examples() {
        assert!(!braiding_equation_holds(&BraidWord::identity(4).unwrap()).unwrap());
        assert!(!braiding_equation_holds(&w(4, &[-2])).unwrap());
        assert!(braiding_equation_holds(&w(3, &[])).is_err());
    }

    #[test]
    fn kinds_parse() {
        assert_eq!("FR".parse::<DerivedKind>().unwrap(), DerivedKind::FR);
        assert_eq!("funct".parse::<CheckKind>().unwrap(), CheckKind::Funct);
        assert!("X".parse::<DerivedKind>().is_err());
    }
}
