//! The Lawrence–Krammer representation `B_n → GL_m(ℤ[q^±, t^±])`,
//! `m = n(n-1)/2`, which is faithful.
//!
//! Basis vectors are `v_{j,k}` for `1 ≤ j < k ≤ n`, ordered
//! lexicographically. Column `(j,k)` of the generator matrix holds the image
//! of `v_{j,k}`:
//!
//! ```text
//! i ∉ {j-1, j, k-1, k}   v_{j,k}
//! i = j-1                q v_{i,k} + (q²-q) v_{i,j} + (1-q) v_{j,k}
//! i = j ≠ k-1            v_{j+1,k}
//! i = k-1 ≠ j            q v_{j,i} + (1-q) v_{j,k} - (q²-q) t v_{i,k}
//! i = k                  v_{j,k+1}
//! i = j = k-1            -t q² v_{j,k}
//! ```
//!
//! Inverse generators are obtained by exact elimination with unit pivots.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::BraidError;
use crate::laurent::LaurentPoly2;
use crate::word::BraidWord;

/// Dense square matrix over `ℤ[q^±, t^±]`, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LkMatrix {
    dim: usize,
    entries: Vec<LaurentPoly2>,
}

/// A sparse column: `(row, coefficient)` pairs.
type Column = Vec<(usize, LaurentPoly2)>;

fn pair_index(n: usize, j: usize, k: usize) -> usize {
    // rows before j: Σ_{r<j} (n - r)
    let before = (j - 1) * n - (j - 1) * j / 2;
    before + (k - j - 1)
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::with_capacity(n * (n - 1) / 2);
    for j in 1..=n {
        for k in j + 1..=n {
            v.push((j, k));
        }
    }
    v
}

fn poly(terms: &[((i32, i32), i128)]) -> LaurentPoly2 {
    LaurentPoly2::from_terms(terms.iter().copied())
}

/// Sparse columns of the matrix of `σ_i`.
fn generator_columns(n: usize, i: usize) -> Vec<Column> {
    pairs(n)
        .into_iter()
        .map(|(j, k)| {
            let at = |a: usize, b: usize| pair_index(n, a, b);
            let one_minus_q = poly(&[((0, 0), 1), ((1, 0), -1)]);
            if i + 1 == j {
                alloc::vec![
                    (at(i, k), LaurentPoly2::q()),
                    (at(i, j), poly(&[((2, 0), 1), ((1, 0), -1)])),
                    (at(j, k), one_minus_q),
                ]
            } else if i == j && i + 1 != k {
                alloc::vec![(at(j + 1, k), LaurentPoly2::one())]
            } else if i + 1 == k && i != j {
                alloc::vec![
                    (at(j, i), LaurentPoly2::q()),
                    (at(j, k), one_minus_q),
                    (at(i, k), poly(&[((2, 1), -1), ((1, 1), 1)])),
                ]
            } else if i == k {
                alloc::vec![(at(j, k + 1), LaurentPoly2::one())]
            } else if i == j && i + 1 == k {
                alloc::vec![(at(j, k), LaurentPoly2::monomial(-1, 2, 1))]
            } else {
                alloc::vec![(at(j, k), LaurentPoly2::one())]
            }
        })
        .map(|mut c: Column| {
            c.sort_by_key(|e| e.0);
            c
        })
        .collect()
}

impl LkMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut entries = alloc::vec![LaurentPoly2::zero(); dim * dim];
        for r in 0..dim {
            entries[r * dim + r] = LaurentPoly2::one();
        }
        LkMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &LaurentPoly2 {
        &self.entries[row * self.dim + col]
    }

    fn from_columns(dim: usize, cols: &[Column]) -> Self {
        let mut entries = alloc::vec![LaurentPoly2::zero(); dim * dim];
        for (c, col) in cols.iter().enumerate() {
            for (r, v) in col {
                entries[r * dim + c] = v.clone();
            }
        }
        LkMatrix { dim, entries }
    }

    pub fn mul(&self, other: &LkMatrix) -> LkMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let d = self.dim;
        let mut entries = alloc::vec![LaurentPoly2::zero(); d * d];
        for r in 0..d {
            for k in 0..d {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..d {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let e = &mut entries[r * d + c];
                        *e = &*e + &(a * b);
                    }
                }
            }
        }
        LkMatrix { dim: d, entries }
    }

    /// `self · G` for `G` given by sparse columns.
    fn mul_sparse(&self, cols: &[Column]) -> LkMatrix {
        let d = self.dim;
        let mut entries = alloc::vec![LaurentPoly2::zero(); d * d];
        for (c, col) in cols.iter().enumerate() {
            for (k, g) in col {
                for r in 0..d {
                    let a = self.get(r, *k);
                    if !a.is_zero() {
                        let e = &mut entries[r * d + c];
                        *e = &*e + &(a * g);
                    }
                }
            }
        }
        LkMatrix { dim: d, entries }
    }

    pub fn is_identity(&self) -> bool {
        *self == LkMatrix::identity(self.dim)
    }

    /// Exact inverse by Gauss–Jordan elimination, pivoting only on units.
    /// `None` if no unit pivot is available at some step.
    pub fn unit_pivot_inverse(&self) -> Option<LkMatrix> {
        let d = self.dim;
        let mut a = self.clone();
        let mut inv = LkMatrix::identity(d);
        for col in 0..d {
            let piv = (col..d).find(|&r| a.get(r, col).is_unit())?;
            if piv != col {
                for c in 0..d {
                    a.entries.swap(piv * d + c, col * d + c);
                    inv.entries.swap(piv * d + c, col * d + c);
                }
            }
            let u = a.get(col, col).unit_inverse()?;
            for c in 0..d {
                a.entries[col * d + c] = &a.entries[col * d + c] * &u;
                inv.entries[col * d + c] = &inv.entries[col * d + c] * &u;
            }
            for r in 0..d {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for c in 0..d {
                    let (ra, rc) = (a.get(col, c).clone(), inv.get(col, c).clone());
                    if !ra.is_zero() {
                        a.entries[r * d + c] = &a.entries[r * d + c] - &(&f * &ra);
                    }
                    if !rc.is_zero() {
                        inv.entries[r * d + c] = &inv.entries[r * d + c] - &(&f * &rc);
                    }
                }
            }
        }
        Some(inv)
    }

    fn columns(&self) -> Vec<Column> {
        (0..self.dim)
            .map(|c| {
                (0..self.dim)
                    .filter(|&r| !self.get(r, c).is_zero())
                    .map(|r| (r, self.get(r, c).clone()))
                    .collect()
            })
            .collect()
    }

    /// One row per line, entries separated by ` ; `.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in 0..self.dim {
            for c in 0..self.dim {
                if c > 0 {
                    s.push_str(" ; ");
                }
                s.push_str(&alloc::format!("{}", self.get(r, c)));
            }
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for LkMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Generator matrices and their inverses for a fixed `n`, built once and
/// reused across words.
#[derive(Debug, Clone)]
pub struct LkRepresentation {
    strands: usize,
    dim: usize,
    gens: Vec<Vec<Column>>,
    invs: Vec<Vec<Column>>,
}

impl LkRepresentation {
    pub fn new(strands: usize) -> Result<Self, BraidError> {
        if strands < 2 {
            return Err(BraidError::TooFewStrands(strands));
        }
        let dim = strands * (strands - 1) / 2;
        let mut gens = Vec::with_capacity(strands - 1);
        let mut invs = Vec::with_capacity(strands - 1);
        for i in 1..strands {
            let g = generator_columns(strands, i);
            let inv = LkMatrix::from_columns(dim, &g)
                .unit_pivot_inverse()
                .expect("generator matrices have unit pivots");
            gens.push(g);
            invs.push(inv.columns());
        }
        Ok(LkRepresentation {
            strands,
            dim,
            gens,
            invs,
        })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Matrix of `σ_i` (or `σ_i⁻¹`).
    pub fn generator(&self, i: usize, inverse: bool) -> LkMatrix {
        let cols = if inverse { &self.invs[i - 1] } else { &self.gens[i - 1] };
        LkMatrix::from_columns(self.dim, cols)
    }

    /// `ρ(w) = ρ(l₁)·ρ(l₂)⋯`, so `ρ(ab) = ρ(a)ρ(b)`.
    pub fn matrix(&self, w: &BraidWord) -> Result<LkMatrix, BraidError> {
        if w.strands() != self.strands {
            return Err(BraidError::WrongStrandCount {
                expected: self.strands,
                found: w.strands(),
            });
        }
        let mut m = LkMatrix::identity(self.dim);
        for l in w.letters() {
            let cols = if l.is_positive() {
                &self.gens[l.index() - 1]
            } else {
                &self.invs[l.index() - 1]
            };
            m = m.mul_sparse(cols);
        }
        Ok(m)
    }

    pub fn equal(&self, a: &BraidWord, b: &BraidWord) -> Result<bool, BraidError> {
        if a.strands() != b.strands() {
            return Err(BraidError::StrandMismatch {
                left: a.strands(),
                right: b.strands(),
            });
        }
        Ok(self.matrix(a)? == self.matrix(b)?)
    }
}

pub fn lk_matrix(w: &BraidWord) -> Result<LkMatrix, BraidError> {
    LkRepresentation::new(w.strands())?.matrix(w)
}

/// Decides equality by comparing representation matrices entrywise.
pub fn lk_equal(a: &BraidWord, b: &BraidWord) -> Result<bool, BraidError> {
    if a.strands() != b.strands() {
        return Err(BraidError::StrandMismatch {
            left: a.strands(),
            right: b.strands(),
        });
    }
    LkRepresentation::new(a.strands())?.equal(a, b)
}
