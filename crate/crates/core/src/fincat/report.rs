use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::FincatError;

/// First failing tuple of a check, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub tuple: Vec<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub name: String,
    /// Tuples examined.
    pub cases: u64,
    /// Only typing was checked because the base category is thin.
    pub thin: bool,
    pub failure: Option<Failure>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.failure.is_none())
    }

    pub fn first_failure(&self) -> Option<&Entry> {
        self.entries.iter().find(|e| e.failure.is_some())
    }

    pub fn entry(&self, name: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub(crate) fn push(&mut self, name: impl Into<String>, cases: u64, thin: bool, failure: Option<Failure>) {
        self.entries.push(Entry {
            name: name.into(),
            cases,
            thin,
            failure,
        });
    }

    /// Appends another report's entries, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut e in other.entries {
            e.name = alloc::format!("{prefix}: {}", e.name);
            self.entries.push(e);
        }
    }

    pub fn into_result(self) -> Result<Report, FincatError> {
        match self.first_failure() {
            Some(e) => {
                let f = e.failure.clone().expect("failing entry");
                Err(FincatError::Axiom {
                    axiom: e.name.clone(),
                    tuple: f.tuple,
                    detail: f.detail,
                })
            }
            None => Ok(self),
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            let mode = if e.thin { " [thin]" } else { "" };
            match &e.failure {
                None => writeln!(f, "PASS {} ({} cases){mode}", e.name, e.cases)?,
                Some(x) => writeln!(f, "FAIL {} at {:?}: {}", e.name, x.tuple, x.detail)?,
            }
        }
        Ok(())
    }
}

/// Runs `check` over all `len`-tuples of `0..n` in lexicographic order and
/// stops at the first failure.
pub(crate) fn scan_tuples<F>(n: usize, len: usize, mut check: F) -> (u64, Option<Failure>)
where
    F: FnMut(&[usize]) -> Result<(), String>,
{
    let mut t = alloc::vec![0usize; len];
    let mut cases = 0u64;
    if n == 0 && len > 0 {
        return (0, None);
    }
    loop {
        cases += 1;
        if let Err(detail) = check(&t) {
            return (cases, Some(Failure { tuple: t, detail }));
        }
        let mut k = len;
        loop {
            if k == 0 {
                return (cases, None);
            }
            k -= 1;
            t[k] += 1;
            if t[k] < n {
                break;
            }
            t[k] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scan_visits_in_lex_order_and_stops() {
        let mut seen = Vec::new();
        let (cases, fail) = scan_tuples(3, 2, |t| {
            seen.push(t.to_vec());
            if t == [1, 2] {
                Err("boom".into())
            } else {
                Ok(())
            }
        });
        assert_eq!(cases, 6);
        assert_eq!(seen[0], [0, 0]);
        assert_eq!(seen[3], [1, 0]);
        assert_eq!(fail.unwrap().tuple, [1, 2]);
        let (cases, fail) = scan_tuples(2, 3, |_| Ok(()));
        assert_eq!((cases, fail), (8, None));
        assert_eq!(scan_tuples(4, 0, |_| Ok(())).0, 1);
    }
}
