//! Parallel obstruction and coset scans.

use braidcat::enumerate::{braiding_from_forms, braiding_starts, chunks, scan_chunk, ScanResult};
use braidcat::{braids_equal, coset_element, derived_braid, BraidError, CosetIndex, DerivedKind};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::search::CHUNK_DEPTH;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub word: String,
    pub normal_form: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub max_len: usize,
    pub words_enumerated: u64,
    pub classes: u64,
    /// Classes `x` with `x·σ₁σ₃ = σ₂σ₁σ₃σ₂·x`.
    pub witnesses: Vec<Witness>,
}

/// The braiding-obstruction scan of `braidcat::enumerate`, split over workers.
pub fn obstruction_scan(max_len: usize, jobs: usize) -> Result<ObstructionReport, BraidError> {
    let starts = braiding_starts();
    let parts = crate::with_jobs(jobs, || {
        chunks(max_len, CHUNK_DEPTH)
            .par_iter()
            .map(|c| scan_chunk(max_len, c, &starts, |_, forms| braiding_from_forms(forms)))
            .collect::<Result<Vec<ScanResult>, BraidError>>()
    })?;
    let merged = ScanResult::merge(parts);
    Ok(ObstructionReport {
        max_len,
        words_enumerated: merged.words,
        classes: merged.classes() as u64,
        witnesses: merged
            .hits
            .iter()
            .map(|h| Witness {
                word: h.word.format(),
                normal_form: h.form.serialize(),
            })
            .collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetReport {
    pub range: i64,
    pub total: u64,
    pub passed: u64,
    /// `(m, p, q)` with `L ≠ R`.
    pub failures: Vec<[i64; 3]>,
}

/// Checks `L = R` for every coset element with `(m, p, q) ∈ [-range, range]³`.
pub fn coset_scan(range: i64, jobs: usize) -> Result<CosetReport, BraidError> {
    let r = range.abs();
    let triples: Vec<[i64; 3]> = (-r..=r)
        .flat_map(|m| (-r..=r).flat_map(move |p| (-r..=r).map(move |q| [m, p, q])))
        .collect();
    let verdicts = crate::with_jobs(jobs, || {
        triples
            .par_iter()
            .map(|&[m, p, q]| {
                let b = coset_element(CosetIndex::new(m, p, q));
                let l = derived_braid(&b, DerivedKind::L)?;
                let rr = derived_braid(&b, DerivedKind::R)?;
                Ok(braids_equal(&l, &rr))
            })
            .collect::<Result<Vec<bool>, BraidError>>()
    })?;
    let failures: Vec<[i64; 3]> = triples.iter().zip(&verdicts).filter(|(_, ok)| !**ok).map(|(t, _)| *t).collect();
    Ok(CosetReport {
        range: r,
        total: triples.len() as u64,
        passed: (triples.len() - failures.len()) as u64,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_obstruction_matches_sequential() {
        let par = obstruction_scan(5, 2).unwrap();
        let seq = braidcat::enumerate::obstruction_scan(5).unwrap();
        assert_eq!(par.words_enumerated, seq.words);
        assert_eq!(par.classes, seq.classes() as u64);
        assert!(par.witnesses.is_empty());
    }

    #[test]
    fn small_coset_scan_passes() {
        let r = coset_scan(1, 2).unwrap();
        assert_eq!((r.total, r.passed), (27, 27));
    }
}
