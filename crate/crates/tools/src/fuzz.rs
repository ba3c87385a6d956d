//! Seeded cross-checks of the three equality deciders.

use braidcat::lk::LkRepresentation;
use braidcat::relations::shuffle;
use braidcat::{braids_equal, handle_equal, BraidError, BraidWord, HandleVerdict, Letter, DEFAULT_FUEL};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub const MAX_FUZZ_LEN: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disagreement {
    pub strands: usize,
    pub a: String,
    pub b: String,
    pub normal_form: bool,
    pub handle: String,
    pub lawrence_krammer: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzReport {
    pub trials: usize,
    pub seed: u64,
    pub equal_pairs: usize,
    pub unequal_pairs: usize,
    pub disagreements: Vec<Disagreement>,
}

fn random_word(rng: &mut ChaCha8Rng, n: usize) -> BraidWord {
    let len = rng.random_range(0..=MAX_FUZZ_LEN);
    let letters = (0..len)
        .map(|_| {
            let i = rng.random_range(1..n);
            if rng.random_bool(0.5) {
                Letter::pos(i)
            } else {
                Letter::neg(i)
            }
        })
        .collect();
    BraidWord::new(n, letters).expect("indices in range")
}

/// Rewrites `a` by relation moves, rejecting moves past the length cap.
fn rewrite(rng: &mut ChaCha8Rng, a: &BraidWord) -> BraidWord {
    let mut cur = a.clone();
    for _ in 0..20 {
        let next = shuffle(&cur, 1, |k| rng.random_range(0..k));
        if next.len() <= MAX_FUZZ_LEN {
            cur = next;
        }
    }
    cur
}

/// Word pairs of three kinds in equal shares: relation rewrites (equal),
/// rewrites with one letter inverted (usually unequal), independent words.
pub fn fuzz_pairs(trials: usize, seed: u64) -> Vec<(BraidWord, BraidWord)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials)
        .map(|t| {
            let n = if rng.random_bool(0.5) { 4 } else { 6 };
            let a = random_word(&mut rng, n);
            let b = match t % 3 {
                0 => rewrite(&mut rng, &a),
                1 if !a.is_empty() => {
                    let mut ls = rewrite(&mut rng, &a).into_letters();
                    if !ls.is_empty() {
                        let k = rng.random_range(0..ls.len());
                        ls[k] = ls[k].inverse();
                    }
                    BraidWord::new(n, ls).expect("indices in range")
                }
                _ => random_word(&mut rng, n),
            };
            (a, b)
        })
        .collect()
}

/// Decides each pair with all three oracles; any mismatch or exhausted
/// handle budget is a disagreement.
pub fn oracle_fuzz(trials: usize, seed: u64, jobs: usize) -> Result<FuzzReport, BraidError> {
    let pairs = fuzz_pairs(trials, seed);
    let reps = [LkRepresentation::new(4)?, LkRepresentation::new(6)?];
    let verdicts = crate::with_jobs(jobs, || {
        pairs
            .par_iter()
            .map(|(a, b)| {
                let rep = &reps[usize::from(a.strands() == 6)];
                let nf = braids_equal(a, b);
                let handle = handle_equal(a, b, DEFAULT_FUEL)?;
                let lk = rep.equal(a, b)?;
                let agree = handle != HandleVerdict::BudgetExhausted && (handle == HandleVerdict::Equal) == nf && lk == nf;
                Ok((nf, agree, handle, lk))
            })
            .collect::<Result<Vec<_>, BraidError>>()
    })?;
    let mut report = FuzzReport {
        trials,
        seed,
        equal_pairs: 0,
        unequal_pairs: 0,
        disagreements: Vec::new(),
    };
    for ((a, b), (nf, agree, handle, lk)) in pairs.iter().zip(verdicts) {
        if nf {
            report.equal_pairs += 1;
        } else {
            report.unequal_pairs += 1;
        }
        if !agree {
            report.disagreements.push(Disagreement {
                strands: a.strands(),
                a: a.format(),
                b: b.format(),
                normal_form: nf,
                handle: format!("{handle:?}"),
                lawrence_krammer: lk,
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs_respect_the_bounds_and_seed() {
        let p = fuzz_pairs(300, 9);
        assert_eq!(p, fuzz_pairs(300, 9));
        assert!(p.iter().all(|(a, b)| a.len() <= MAX_FUZZ_LEN && b.len() <= MAX_FUZZ_LEN));
        assert!(p.iter().all(|(a, b)| a.strands() == b.strands() && [4, 6].contains(&a.strands())));
    }

    #[test]
    fn small_fuzz_agrees_and_mixes_verdicts() {
        let r = oracle_fuzz(90, 2, 2).unwrap();
        assert!(r.disagreements.is_empty());
        assert!(r.equal_pairs >= 30 && r.unequal_pairs >= 30);
    }
}
