//! Bounded enumeration of freely reduced words in `B_4`, deduplicated by
//! normal form.
//!
//! The word space is cut into [`Chunk`]s by prefix so callers can scan chunks
//! independently and merge the results with [`ScanResult::merge`]. Within a
//! chunk the walk is depth first and each step extends the normal forms of the
//! parent by one letter, so no word is normalised from scratch.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::derive::h_generator;
use crate::error::BraidError;
use crate::garside::{left_normal_form, GarsideNormalForm};
use crate::word::{BraidWord, Letter};

/// Strand count of every scan in this module.
pub const SCAN_STRANDS: usize = 4;

/// Longest scan whose normal forms are guaranteed to pack into a `u128`.
pub const MAX_SCAN_LEN: usize = 17;

/// `σ₁, σ₁⁻¹, σ₂, σ₂⁻¹, …` for `n` strands.
pub fn alphabet(n: usize) -> Vec<Letter> {
    (1..n).flat_map(|i| [Letter::pos(i), Letter::neg(i)]).collect()
}

/// Number of freely reduced words of exactly `len` letters on `n` strands.
pub fn count_reduced_words(n: usize, len: usize) -> u128 {
    let k = 2 * (n as u128 - 1);
    if len == 0 {
        1
    } else {
        k * (k - 1).pow(len as u32 - 1)
    }
}

/// Words of length `prefix.len()` only, or the prefix and every reduced
/// extension up to the scan length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chunk {
    pub prefix: Vec<Letter>,
    pub extend: bool,
}

fn reduced_words_of_len(alpha: &[Letter], len: usize) -> Vec<Vec<Letter>> {
    let mut out: Vec<Vec<Letter>> = alloc::vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &out {
            for &l in alpha {
                if w.last() != Some(&l.inverse()) {
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
        }
        out = next;
    }
    out
}

/// Partitions all reduced words of length `≤ max_len` by their first
/// `min(depth, max_len)` letters. Every word lies in exactly one chunk.
pub fn chunks(max_len: usize, depth: usize) -> Vec<Chunk> {
    let alpha = alphabet(SCAN_STRANDS);
    let d = depth.min(max_len);
    let mut out = Vec::new();
    for len in 0..d {
        out.extend(reduced_words_of_len(&alpha, len).into_iter().map(|prefix| Chunk { prefix, extend: false }));
    }
    out.extend(reduced_words_of_len(&alpha, d).into_iter().map(|prefix| Chunk { prefix, extend: true }));
    out
}

/// A class representative found by a scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hit {
    pub word: BraidWord,
    pub form: GarsideNormalForm,
}

/// Tally and hits of one or more chunks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ScanResult {
    pub words: u64,
    /// Packed normal forms, sorted and unique.
    pub keys: Vec<u128>,
    /// Sorted by normal form, one per class, shortest then least word.
    pub hits: Vec<Hit>,
}

fn word_order(a: &BraidWord, b: &BraidWord) -> core::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.letters().cmp(b.letters()))
}

fn normalise_hits(hits: &mut Vec<Hit>) {
    hits.sort_by(|a, b| a.form.cmp(&b.form).then_with(|| word_order(&a.word, &b.word)));
    hits.dedup_by(|later, earlier| later.form == earlier.form);
}

impl ScanResult {
    /// Order-independent merge: the result depends only on the multiset of
    /// inputs.
    pub fn merge<I: IntoIterator<Item = ScanResult>>(parts: I) -> ScanResult {
        let mut words = 0;
        let mut keys = Vec::new();
        let mut hits = Vec::new();
        for p in parts {
            words += p.words;
            keys.extend(p.keys);
            hits.extend(p.hits);
        }
        keys.sort_unstable();
        keys.dedup();
        normalise_hits(&mut hits);
        ScanResult { words, keys, hits }
    }

    pub fn classes(&self) -> usize {
        self.keys.len()
    }
}

fn check_len(max_len: usize) -> Result<(), BraidError> {
    if max_len > MAX_SCAN_LEN {
        return Err(BraidError::ScanTooLong {
            max_len,
            limit: MAX_SCAN_LEN,
        });
    }
    Ok(())
}

struct Walker<'a, F> {
    alpha: Vec<Letter>,
    max_len: usize,
    seen: BTreeSet<u128>,
    words: u64,
    hits: BTreeMap<u128, Hit>,
    eval: &'a mut F,
}

impl<F: FnMut(&[Letter], &[GarsideNormalForm]) -> bool> Walker<'_, F> {
    fn visit(&mut self, word: &[Letter], forms: &[GarsideNormalForm]) {
        self.words += 1;
        let key = forms[0].packed_key().expect("length is bounded by MAX_SCAN_LEN");
        let to_word = || BraidWord::new(SCAN_STRANDS, word.to_vec()).expect("alphabet letters are in range");
        if self.seen.insert(key) {
            if (self.eval)(word, forms) {
                self.hits.insert(key, Hit { word: to_word(), form: forms[0].clone() });
            }
        } else if let Some(hit) = self.hits.get_mut(&key) {
            let w = to_word();
            if word_order(&w, &hit.word).is_lt() {
                hit.word = w;
            }
        }
    }

    fn rec(&mut self, word: &mut Vec<Letter>, forms: &[GarsideNormalForm]) {
        self.visit(word, forms);
        if word.len() >= self.max_len {
            return;
        }
        for k in 0..self.alpha.len() {
            let l = self.alpha[k];
            if word.last() == Some(&l.inverse()) {
                continue;
            }
            let next: Vec<GarsideNormalForm> = forms
                .iter()
                .map(|f| {
                    let mut g = f.clone();
                    g.push_letter(l);
                    g
                })
                .collect();
            word.push(l);
            self.rec(word, &next);
            word.pop();
        }
    }
}

/// Scans one chunk. `starts` are normal forms `s_k`; the walk hands `eval`
/// the word `w` and the forms of `w` followed by `s_k · w` for each start.
/// `eval` runs once per normal-form class of `w` within the chunk and the
/// classes where it returns `true` are reported.
pub fn scan_chunk<F>(max_len: usize, chunk: &Chunk, starts: &[GarsideNormalForm], mut eval: F) -> Result<ScanResult, BraidError>
where
    F: FnMut(&[Letter], &[GarsideNormalForm]) -> bool,
{
    check_len(max_len)?;
    let prefix = BraidWord::new(SCAN_STRANDS, chunk.prefix.clone())?;
    let mut forms = alloc::vec![left_normal_form(&prefix)];
    for s in starts {
        let mut f = s.clone();
        for &l in prefix.letters() {
            f.push_letter(l);
        }
        forms.push(f);
    }
    let mut walker = Walker {
        alpha: alphabet(SCAN_STRANDS),
        max_len: if chunk.extend { max_len } else { chunk.prefix.len() },
        seen: BTreeSet::new(),
        words: 0,
        hits: BTreeMap::new(),
        eval: &mut eval,
    };
    if chunk.prefix.len() <= max_len {
        let mut word = chunk.prefix.clone();
        walker.rec(&mut word, &forms);
    }
    let Walker { seen, words, hits, .. } = walker;
    let mut hits: Vec<Hit> = hits.into_values().collect();
    normalise_hits(&mut hits);
    Ok(ScanResult {
        words,
        keys: seen.into_iter().collect(),
        hits,
    })
}

/// Evaluates `x·σ₁σ₃ = σ₂σ₁σ₃σ₂·x` from the forms of `x` and `h·x`.
pub fn braiding_from_forms(forms: &[GarsideNormalForm]) -> bool {
    let mut left = forms[0].clone();
    left.push_letter(Letter::pos(1));
    left.push_letter(Letter::pos(3));
    left == forms[1]
}

/// Start forms for [`braiding_from_forms`].
pub fn braiding_starts() -> Vec<GarsideNormalForm> {
    alloc::vec![left_normal_form(&h_generator())]
}

/// Every normal-form class among reduced words of length `≤ max_len` that
/// satisfies the braiding equation. Single-threaded; see `chunks` for
/// partitioning.
pub fn obstruction_scan(max_len: usize) -> Result<ScanResult, BraidError> {
    let starts = braiding_starts();
    let mut parts = Vec::new();
    for c in chunks(max_len, 1) {
        parts.push(scan_chunk(max_len, &c, &starts, |_, forms| braiding_from_forms(forms))?);
    }
    Ok(ScanResult::merge(parts))
}
