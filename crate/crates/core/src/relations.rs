//! Elementary rewriting moves that preserve the braid a word represents.
//!
//! Used to produce equal-but-different words for property tests and the
//! oracle fuzzer. Randomness is supplied by the caller.

use alloc::vec::Vec;

use crate::word::{BraidWord, Letter};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    /// `σ_i σ_j → σ_j σ_i` at this position, `|i-j| ≥ 2`.
    Commute(usize),
    /// `σ_i σ_j σ_i → σ_j σ_i σ_j` at this position, `|i-j| = 1`, all three
    /// letters of one sign.
    Braid(usize),
    /// Insert `l · l⁻¹` before this position.
    Insert(usize, Letter),
    /// Delete an adjacent inverse pair starting here.
    Cancel(usize),
}

/// Every move that applies to `w`.
pub fn applicable_moves(w: &BraidWord) -> Vec<Move> {
    let ls = w.letters();
    let mut out = Vec::new();
    for k in 0..ls.len().saturating_sub(1) {
        let (a, b) = (ls[k], ls[k + 1]);
        if a.index().abs_diff(b.index()) >= 2 {
            out.push(Move::Commute(k));
        }
        if a == b.inverse() {
            out.push(Move::Cancel(k));
        }
        if k + 2 < ls.len() {
            let c = ls[k + 2];
            if a == c && a.index().abs_diff(b.index()) == 1 && a.sign() == b.sign() {
                out.push(Move::Braid(k));
            }
        }
    }
    for at in 0..=ls.len() {
        for i in 1..w.strands() {
            out.push(Move::Insert(at, Letter::pos(i)));
            out.push(Move::Insert(at, Letter::neg(i)));
        }
    }
    out
}

/// Applies a move; `None` if it does not apply at that position.
pub fn apply_move(w: &BraidWord, m: Move) -> Option<BraidWord> {
    let mut ls: Vec<Letter> = w.letters().to_vec();
    match m {
        Move::Commute(k) => {
            let (a, b) = (*ls.get(k)?, *ls.get(k + 1)?);
            if a.index().abs_diff(b.index()) < 2 {
                return None;
            }
            ls.swap(k, k + 1);
        }
        Move::Braid(k) => {
            let (a, b, c) = (*ls.get(k)?, *ls.get(k + 1)?, *ls.get(k + 2)?);
            if a != c || a.index().abs_diff(b.index()) != 1 || a.sign() != b.sign() {
                return None;
            }
            ls[k] = b;
            ls[k + 1] = a;
            ls[k + 2] = b;
        }
        Move::Insert(at, l) => {
            if at > ls.len() || l.index() == 0 || l.index() >= w.strands() {
                return None;
            }
            ls.insert(at, l.inverse());
            ls.insert(at, l);
        }
        Move::Cancel(k) => {
            let (a, b) = (*ls.get(k)?, *ls.get(k + 1)?);
            if a != b.inverse() {
                return None;
            }
            ls.drain(k..k + 2);
        }
    }
    Some(BraidWord::new(w.strands(), ls).expect("moves keep indices in range"))
}

/// Applies up to `steps` moves chosen by `pick(k)`, which must return an
/// index below `k`. Insertions are drawn only when `pick` selects them, so
/// the word does not grow without bound for uniform choices on long words.
pub fn shuffle<F: FnMut(usize) -> usize>(w: &BraidWord, steps: usize, mut pick: F) -> BraidWord {
    let mut cur = w.clone();
    for _ in 0..steps {
        let moves = applicable_moves(&cur);
        // Bias towards structural moves: choose the class first.
        let structural: Vec<Move> = moves.iter().copied().filter(|m| !matches!(m, Move::Insert(..))).collect();
        let chosen = if !structural.is_empty() && pick(3) != 0 {
            structural[pick(structural.len())]
        } else {
            moves[pick(moves.len())]
        };
        cur = apply_move(&cur, chosen).expect("applicable move applies");
    }
    cur
}
