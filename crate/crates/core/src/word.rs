//! Braid words in the Artin generators.
//!
//! Letters are read left to right, which corresponds to the rows of a braid
//! diagram read top to bottom. `σ_i` is the positive generator, `σ_i⁻¹` its
//! inverse; the text format writes them as `i` and `-i`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::BraidError;

/// One Artin generator or its inverse, stored as a signed index (`±i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(i32);

impl Letter {
    /// `σ_index`.
    pub const fn pos(index: usize) -> Self {
        Letter(index as i32)
    }

    /// `σ_index⁻¹`.
    pub const fn neg(index: usize) -> Self {
        Letter(-(index as i32))
    }

    /// Builds a letter from its signed form. Returns `None` for zero.
    pub const fn from_signed(value: i32) -> Option<Self> {
        if value == 0 {
            None
        } else {
            Some(Letter(value))
        }
    }

    pub const fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub const fn is_positive(self) -> bool {
        self.0 > 0
    }

    /// `+1` or `-1`.
    pub const fn sign(self) -> i32 {
        self.0.signum()
    }

    pub const fn signed(self) -> i32 {
        self.0
    }

    pub const fn inverse(self) -> Self {
        Letter(-self.0)
    }

    /// Same sign, index shifted by `offset`.
    pub const fn shifted(self, offset: usize) -> Self {
        if self.0 > 0 {
            Letter(self.0 + offset as i32)
        } else {
            Letter(self.0 - offset as i32)
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A word in the generators of `B_n`. The empty word is the identity braid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn identity(strands: usize) -> Result<Self, BraidError> {
        Self::new(strands, Vec::new())
    }

    /// Checks every letter against the strand count.
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self, BraidError> {
        if strands < 2 {
            return Err(BraidError::TooFewStrands(strands));
        }
        if let Some(bad) = letters.iter().find(|l| l.index() >= strands) {
            return Err(BraidError::IndexOutOfRange {
                index: bad.index(),
                strands,
            });
        }
        Ok(BraidWord { strands, letters })
    }

    /// Builds a word from signed indices; panics on invalid input. Intended for
    /// literals in tests and fixed constructions.
    pub fn from_signed(strands: usize, signed: &[i32]) -> Self {
        let letters = signed
            .iter()
            .map(|&s| Letter::from_signed(s).expect("zero letter"))
            .collect();
        Self::new(strands, letters).expect("invalid braid word literal")
    }

    pub fn generator(strands: usize, index: usize) -> Result<Self, BraidError> {
        Self::new(strands, alloc::vec![Letter::pos(index)])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of the letter signs; a homomorphism `B_n → ℤ`.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign() as i64).sum()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.is_positive())
    }

    /// Concatenation `self · other`.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Concatenates a sequence of words over the same strand count.
    pub fn product<'a, I>(strands: usize, words: I) -> Result<BraidWord, BraidError>
    where
        I: IntoIterator<Item = &'a BraidWord>,
    {
        let mut acc = BraidWord::identity(strands)?;
        for w in words {
            acc = acc.compose(w)?;
        }
        Ok(acc)
    }

    pub fn invert(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `self^k`; negative powers use the inverse word.
    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Cancels adjacent `σ_i σ_i⁻¹` and `σ_i⁻¹ σ_i` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut letters = self.letters.clone();
        loop {
            let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
            let mut changed = false;
            for &l in &letters {
                if out.last() == Some(&l.inverse()) {
                    out.pop();
                    changed = true;
                } else {
                    out.push(l);
                }
            }
            letters = out;
            if !changed {
                break;
            }
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Whether no two adjacent letters are mutually inverse.
    pub fn is_freely_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != w[1].inverse())
    }

    /// The braid turned by 180° in the plane of the diagram: letter order is
    /// reversed and `σ_i ↦ σ_{n-i}` with signs kept.
    pub fn rot180(&self) -> BraidWord {
        let n = self.strands;
        BraidWord {
            strands: n,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| {
                    let j = n - l.index();
                    if l.is_positive() {
                        Letter::pos(j)
                    } else {
                        Letter::neg(j)
                    }
                })
                .collect(),
        }
    }

    /// Flips every letter sign (the mirror image).
    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|l| l.inverse()).collect(),
        }
    }

    /// The same word viewed on more strands.
    pub fn widen(&self, strands: usize) -> Result<BraidWord, BraidError> {
        BraidWord::new(strands, self.letters.clone())
    }

    /// Whitespace-separated signed indices; the empty word formats as `""`.
    pub fn format(&self) -> String {
        let mut s = String::new();
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                s.push(' ');
            }
            s.push_str(&alloc::format!("{}", l.signed()));
        }
        s
    }

    /// Parses the signed-integer text format. The parse does not reduce.
    pub fn parse(text: &str, strands: usize) -> Result<BraidWord, BraidError> {
        if strands < 2 {
            return Err(BraidError::TooFewStrands(strands));
        }
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let value: i64 = token.parse().map_err(|_| BraidError::BadToken {
                token: token.into(),
                reason: "not an integer",
            })?;
            if value == 0 {
                return Err(BraidError::BadToken {
                    token: token.into(),
                    reason: "generator index 0",
                });
            }
            if value.unsigned_abs() >= strands as u64 {
                return Err(BraidError::BadToken {
                    token: token.into(),
                    reason: "generator index out of range",
                });
            }
            letters.push(Letter(value as i32));
        }
        Ok(BraidWord { strands, letters })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if l.is_positive() {
                write!(f, "s{}", l.index())?;
            } else {
                write!(f, "s{}^-1", l.index())?;
            }
        }
        Ok(())
    }
}
