//! Exhaustive checkers for monoidal, symmetric, k-fold monoidal and enriched
//! structure on finite instances.
//!
//! Objects and morphisms are dense `usize` ids. Component families (tensor on
//! morphisms, associators, symmetries, interchanges, enriched composition and
//! units) are stored as [`Family`] tables, either explicitly or as the unique
//! morphism of the right type in a thin category with explicit overrides.
//!
//! When the base category is thin every diagram of well-typed morphisms
//! commutes, so the checkers only verify that every component exists with
//! the right source and target and skip the equational passes.

mod category;
mod enriched;
pub mod instances;
mod monoidal;
mod report;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

pub use category::FinCategory;
pub use enriched::{
    check_enriched, check_functor, check_nat, enriched_tables_equal, product_enriched, unit_enriched,
    verify_theorem41, EnrichedCell, FinEnrichedCategory, FinEnrichedFunctor, FinEnrichedNat,
};
pub use monoidal::{check_kfold, check_monoidal, check_symmetry, eta_from_symmetry, Cell, FinMonoidalInstance, Tensor};
pub use report::{Entry, Failure, Report};

pub type ObjId = usize;
pub type MorId = usize;

/// A table of component morphisms indexed by a flattened tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// One explicit cell per index; `None` marks a missing component.
    Dense(Vec<Option<MorId>>),
    /// The unique morphism of the expected type, except at overridden
    /// indices. Only meaningful over a thin category.
    Induced(BTreeMap<usize, MorId>),
}

impl Family {
    pub fn dense(len: usize) -> Self {
        Family::Dense(alloc::vec![None; len])
    }

    pub fn induced() -> Self {
        Family::Induced(BTreeMap::new())
    }

    pub fn set(&mut self, idx: usize, m: MorId) {
        match self {
            Family::Dense(v) => v[idx] = Some(m),
            Family::Induced(o) => {
                o.insert(idx, m);
            }
        }
    }

    /// `Some(cell)` for an explicit cell, `None` when the induced default
    /// applies.
    pub fn explicit(&self, idx: usize) -> Option<Option<MorId>> {
        match self {
            Family::Dense(v) => Some(v.get(idx).copied().flatten()),
            Family::Induced(o) => o.get(&idx).map(|&m| Some(m)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FincatError {
    #[error("{axiom} fails at {tuple:?}: {detail}")]
    Axiom {
        axiom: String,
        tuple: Vec<usize>,
        detail: String,
    },
    #[error("missing table: {0}")]
    Missing(String),
    #[error("needs {needed} tensor products, instance has {available}")]
    TooFewProducts { needed: usize, available: usize },
    #[error("enriched categories over different base instances")]
    BaseMismatch,
    #[error("{what} {index} is out of range")]
    OutOfRange { what: &'static str, index: usize },
    #[error("invalid argument: {0}")]
    Invalid(String),
}

/// Row-major flattening of a tuple with every coordinate below `n`.
pub(crate) fn flat(n: usize, tuple: &[usize]) -> usize {
    tuple.iter().fold(0, |acc, &x| acc * n + x)
}
