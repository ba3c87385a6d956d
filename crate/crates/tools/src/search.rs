//! Exhaustive search for `B_4` braids that pass both the associativity and
//! the associator-functoriality checks.

use std::time::Instant;

use braidcat::derive::{candidate_permutation, derived_pair};
use braidcat::enumerate::{chunks, scan_chunk, ScanResult, SCAN_STRANDS};
use braidcat::lk::LkRepresentation;
use braidcat::{
    braids_equal, check, handle_equal, underlying_permutation, BraidError, BraidWord, CheckKind, HandleVerdict,
    DEFAULT_FUEL,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Prefix length used to cut the word space into parallel chunks.
pub const CHUNK_DEPTH: usize = 2;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Survivor {
    /// Least word of the class, as signed generator indices.
    pub word: String,
    pub normal_form: String,
    pub assoc: bool,
    pub funct: bool,
    /// The class of `σ₂` or `σ₂⁻¹`.
    pub expected: bool,
    /// Normal form, handle reduction and Lawrence–Krammer agree on both
    /// derived pairs.
    pub oracles_agree: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub max_len: usize,
    pub alphabet: String,
    pub words_enumerated: u64,
    pub classes_after_dedup: u64,
    /// Classes whose permutation is `(2 3)`.
    pub candidates: u64,
    /// Sorted by normal form.
    pub survivors: Vec<Survivor>,
    /// Survivors other than `σ₂^{±1}`.
    pub counterexamples: u64,
    pub wall_time_secs: f64,
}

impl SearchReport {
    /// The report with the timing zeroed, for byte comparisons.
    pub fn without_timing(&self) -> SearchReport {
        SearchReport {
            wall_time_secs: 0.0,
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn summary(&self) -> String {
        let mut s = format!(
            "max_len {}: {} words, {} classes, {} candidates, {} survivors, {} counterexamples, {:.2}s\n",
            self.max_len,
            self.words_enumerated,
            self.classes_after_dedup,
            self.candidates,
            self.survivors.len(),
            self.counterexamples,
            self.wall_time_secs
        );
        for v in &self.survivors {
            let tag = if v.expected { "expected" } else { "COUNTEREXAMPLE" };
            s.push_str(&format!("  [{}] {}  ({tag})\n", v.word, v.normal_form));
        }
        s
    }
}

/// Normal form, handle reduction and Lawrence–Krammer verdicts on both
/// derived pairs all agree.
pub fn triple_oracle_agree(b: &BraidWord) -> Result<bool, BraidError> {
    let rep = LkRepresentation::new(6)?;
    for kind in [CheckKind::Assoc, CheckKind::Funct] {
        let (x, y) = derived_pair(b, kind)?;
        let nf = braids_equal(&x, &y);
        let handle = handle_equal(&x, &y, DEFAULT_FUEL)?;
        if handle == HandleVerdict::BudgetExhausted || (handle == HandleVerdict::Equal) != nf {
            return Ok(false);
        }
        if rep.equal(&x, &y)? != nf {
            return Ok(false);
        }
    }
    Ok(true)
}

fn evaluate(word: &BraidWord, form: String) -> Result<Option<Survivor>, BraidError> {
    let assoc = check(word, CheckKind::Assoc)?;
    let funct = check(word, CheckKind::Funct)?;
    if !(assoc && funct) {
        return Ok(None);
    }
    let s2 = BraidWord::from_signed(SCAN_STRANDS, &[2]);
    let expected = braids_equal(word, &s2) || braids_equal(word, &s2.invert());
    Ok(Some(Survivor {
        word: word.format(),
        normal_form: form,
        assoc,
        funct,
        expected,
        oracles_agree: triple_oracle_agree(word)?,
    }))
}

/// Enumerates freely reduced words of length `≤ max_len`, keeps one
/// representative per normal-form class with permutation `(2 3)`, and
/// reports the classes passing both checks. The result apart from
/// `wall_time_secs` does not depend on `jobs`.
pub fn conjecture_search(max_len: usize, jobs: usize) -> Result<SearchReport, BraidError> {
    let start = Instant::now();
    let target = candidate_permutation();
    let parts = crate::with_jobs(jobs, || {
        chunks(max_len, CHUNK_DEPTH)
            .par_iter()
            .map(|c| {
                scan_chunk(max_len, c, &[], |letters, _| {
                    let w = BraidWord::new(SCAN_STRANDS, letters.to_vec()).expect("alphabet letters");
                    underlying_permutation(&w) == target
                })
            })
            .collect::<Result<Vec<ScanResult>, BraidError>>()
    })?;
    let merged = ScanResult::merge(parts);
    let evaluated = crate::with_jobs(jobs, || {
        merged
            .hits
            .par_iter()
            .map(|h| evaluate(&h.word, h.form.serialize()))
            .collect::<Result<Vec<_>, BraidError>>()
    })?;
    let survivors: Vec<Survivor> = evaluated.into_iter().flatten().collect();
    Ok(SearchReport {
        max_len,
        alphabet: "σ1, σ1⁻¹, σ2, σ2⁻¹, σ3, σ3⁻¹; freely reduced words".into(),
        words_enumerated: merged.words,
        classes_after_dedup: merged.classes() as u64,
        candidates: merged.hits.len() as u64,
        counterexamples: survivors.iter().filter(|s| !s.expected).count() as u64,
        survivors,
        wall_time_secs: start.elapsed().as_secs_f64(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn length_one_survivors_are_sigma_two_and_inverse() {
        let r = conjecture_search(1, 1).unwrap();
        assert_eq!(r.words_enumerated, 7);
        assert_eq!(r.classes_after_dedup, 7);
        assert_eq!(r.candidates, 2);
        let words: Vec<&str> = r.survivors.iter().map(|s| s.word.as_str()).collect();
        assert_eq!(words.len(), 2);
        assert!(words.contains(&"2") && words.contains(&"-2"));
        assert!(r.survivors.iter().all(|s| s.expected && s.oracles_agree && s.assoc && s.funct));
    }

    #[test]
    fn survivors_are_sorted_candidates() {
        let r = conjecture_search(3, 2).unwrap();
        for s in &r.survivors {
            let w = BraidWord::parse(&s.word, 4).unwrap();
            assert_eq!(underlying_permutation(&w), candidate_permutation());
        }
        let forms: Vec<_> = r
            .survivors
            .iter()
            .map(|s| braidcat::left_normal_form(&BraidWord::parse(&s.word, 4).unwrap()))
            .collect();
        assert!(forms.windows(2).all(|p| p[0] < p[1]));
        assert!(r.classes_after_dedup <= r.words_enumerated);
    }

    #[test]
    fn report_does_not_depend_on_workers() {
        let a = conjecture_search(4, 1).unwrap().without_timing();
        let b = conjecture_search(4, 3).unwrap().without_timing();
        assert_eq!(a.to_json(), b.to_json());
    }
}
