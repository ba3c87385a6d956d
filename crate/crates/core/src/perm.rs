//! Permutations of `{1..n}`, stored 0-based.
//!
//! A permutation `π` records where each strand ends: `π(i)` is the bottom
//! position of the strand entering at top position `i`. Under this reading the
//! permutation of a product `ab` (a on top) is `σ(b) ∘ σ(a)`, which
//! [`Permutation::then`] computes as `σ(a).then(σ(b))`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::word::BraidWord;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= u8::MAX as usize, "permutation size {n} too large");
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    /// From 0-based images. Returns `None` unless the slice is a bijection.
    pub fn from_images(images: &[usize]) -> Option<Self> {
        let n = images.len();
        if n > u8::MAX as usize {
            return None;
        }
        let mut seen = alloc::vec![false; n];
        for &x in images {
            if x >= n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Permutation {
            images: images.iter().map(|&x| x as u8).collect(),
        })
    }

    /// From 1-based images, the form used in text output.
    pub fn from_one_based(images: &[usize]) -> Option<Self> {
        let zero: Option<Vec<usize>> = images.iter().map(|&x| x.checked_sub(1)).collect();
        Self::from_images(&zero?)
    }

    /// Product of disjoint or overlapping cycles written 1-based; cycles are
    /// applied right to left.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Option<Self> {
        let mut p = Self::identity(n);
        for cycle in cycles.iter().rev() {
            let mut c = Self::identity(n);
            for k in 0..cycle.len() {
                let from = cycle[k].checked_sub(1)?;
                let to = cycle[(k + 1) % cycle.len()].checked_sub(1)?;
                if from >= n || to >= n {
                    return None;
                }
                c.images[from] = to as u8;
            }
            Permutation::from_images(&c.images.iter().map(|&x| x as usize).collect::<Vec<_>>())?;
            p = p.then(&c);
        }
        Some(p)
    }

    /// The transposition `(i i+1)` for a 1-based generator index.
    pub fn adjacent_transposition(n: usize, index: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(index - 1, index);
        p
    }

    /// `w₀`: position `i` goes to `n-1-i`.
    pub fn reversal(n: usize) -> Self {
        Permutation {
            images: (0..n as u8).rev().collect(),
        }
    }

    pub(crate) fn from_raw(images: Vec<u8>) -> Self {
        Permutation { images }
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.images
    }

    pub(crate) fn raw_mut(&mut self) -> &mut [u8] {
        &mut self.images
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// 0-based image of a 0-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn one_based_images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// First `self`, then `other`: `i ↦ other(self(i))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size(), "permutation sizes differ");
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0u8; self.size()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    /// Number of inversions, i.e. the length of the permutation braid.
    pub fn inversions(&self) -> usize {
        let n = self.size();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Position in the lexicographic order of `S_n` (Lehmer code).
    pub fn lehmer_rank(&self) -> u128 {
        let n = self.size();
        let mut rank: u128 = 0;
        for i in 0..n {
            let smaller = self.images[i + 1..].iter().filter(|&&x| x < self.images[i]).count();
            rank = rank * (n - i) as u128 + smaller as u128;
        }
        rank
    }

    /// Disjoint-cycle notation, 1-based, fixed points omitted; `()` for the
    /// identity.
    pub fn cycle_notation(&self) -> String {
        let n = self.size();
        let mut seen = alloc::vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            out.push('(');
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    out.push(' ');
                }
                first = false;
                out.push_str(&alloc::format!("{}", i + 1));
                i = self.apply(i);
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_notation())
    }
}

/// The image of a braid under `B_n → S_n`, `σ_i ↦ (i i+1)`.
pub fn underlying_permutation(b: &BraidWord) -> Permutation {
    // Track which strand sits at each position, then invert.
    let n = b.strands();
    let mut strand_at: Vec<u8> = (0..n as u8).collect();
    for l in b.letters() {
        strand_at.swap(l.index() - 1, l.index());
    }
    let mut images = alloc::vec![0u8; n];
    for (pos, &strand) in strand_at.iter().enumerate() {
        images[strand as usize] = pos as u8;
    }
    Permutation { images }
}
