//! Dehornoy handle reduction.
//!
//! A `σ_i`-handle is a subword `σ_i^e v σ_i^{-e}` where `v` contains no
//! `σ_j^{±1}` with `j ≤ i`. Reducing it deletes the two ends and replaces
//! each `σ_{i+1}^d` in `v` by `σ_{i+1}^{-e} σ_i^d σ_{i+1}^e`. The handle with
//! the leftmost right end contains no other handle, so it is always
//! permitted. A word with no handles is empty, σ-positive or σ-negative, and
//! only the empty word represents the identity.

use alloc::vec::Vec;

use crate::error::BraidError;
use crate::word::{BraidWord, Letter};

/// Default budget of handle reductions.
pub const DEFAULT_FUEL: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HandleVerdict {
    Equal,
    Unequal,
    /// The budget ran out before the word was fully reduced.
    BudgetExhausted,
}

/// Outcome of reducing a single word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reduction {
    Reduced(BraidWord),
    OutOfFuel { steps: u64, partial: BraidWord },
}

/// Finds the handle with the leftmost right end, as `(start, end)`.
fn first_handle(ls: &[Letter]) -> Option<(usize, usize)> {
    for end in 1..ls.len() {
        let target = ls[end];
        let i = target.index();
        for start in (0..end).rev() {
            let l = ls[start];
            if l.index() < i {
                break;
            }
            if l.index() == i {
                if l == target.inverse() {
                    return Some((start, end));
                }
                break;
            }
        }
    }
    None
}

fn reduce_handle(ls: &mut Vec<Letter>, start: usize, end: usize) {
    let head = ls[start];
    let i = head.index();
    let e_pos = head.is_positive();
    let mut middle = Vec::with_capacity(end - start);
    for &l in &ls[start + 1..end] {
        if l.index() == i + 1 {
            let (up, down) = if e_pos {
                (Letter::neg(i + 1), Letter::pos(i + 1))
            } else {
                (Letter::pos(i + 1), Letter::neg(i + 1))
            };
            middle.push(up);
            middle.push(if l.is_positive() { Letter::pos(i) } else { Letter::neg(i) });
            middle.push(down);
        } else {
            middle.push(l);
        }
    }
    ls.splice(start..=end, middle);
}

/// Runs handle reduction to completion or until `fuel` reductions were spent.
pub fn handle_reduce(w: &BraidWord, fuel: u64) -> Reduction {
    let mut ls: Vec<Letter> = w.free_reduce().into_letters();
    let mut steps = 0u64;
    while let Some((start, end)) = first_handle(&ls) {
        if steps == fuel {
            return Reduction::OutOfFuel {
                steps,
                partial: BraidWord::new(w.strands(), ls).expect("indices preserved"),
            };
        }
        reduce_handle(&mut ls, start, end);
        steps += 1;
    }
    Reduction::Reduced(BraidWord::new(w.strands(), ls).expect("indices preserved"))
}

/// Decides `a = b` by handle-reducing `a·b⁻¹`.
pub fn handle_equal(a: &BraidWord, b: &BraidWord, fuel: u64) -> Result<HandleVerdict, BraidError> {
    let w = a.compose(&b.invert())?;
    Ok(match handle_reduce(&w, fuel) {
        Reduction::Reduced(r) if r.is_empty() => HandleVerdict::Equal,
        Reduction::Reduced(_) => HandleVerdict::Unequal,
        Reduction::OutOfFuel { .. } => HandleVerdict::BudgetExhausted,
    })
}
