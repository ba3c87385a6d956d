//! Exact braid-group arithmetic and finite-instance category checkers.
//!
//! The braid half decides equality in `B_n` three independent ways (Garside
//! normal form, handle reduction, the Lawrence–Krammer representation) and
//! builds the derived `B_6` braids whose equality governs associativity of
//! composition and functoriality of the associator for products of
//! categories enriched over a braided monoidal category.
//!
//! The [`fincat`] half checks monoidal, symmetric, k-fold monoidal and
//! enriched axioms by exhaustive quantification over finite tables.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod derive;
pub mod enumerate;
mod error;
pub mod fincat;
pub mod garside;
pub mod handle;
pub mod laurent;
pub mod lk;
pub mod perm;
pub mod relations;
pub mod word;

pub use derive::{
    block_cross, braiding_equation_holds, cable, check, coset_element, derived_braid, embed,
    op_transform, CableWidths, CheckKind, CosetIndex, DerivedKind, OpSide,
};
pub use error::BraidError;
pub use garside::{braids_equal, left_normal_form, GarsideNormalForm};
pub use handle::{handle_equal, HandleVerdict, DEFAULT_FUEL};
pub use laurent::LaurentPoly2;
pub use lk::{lk_equal, lk_matrix, LkMatrix};
pub use perm::{underlying_permutation, Permutation};
pub use word::{BraidWord, Letter};

/// The four test braids in `B_4` used throughout: `σ₂`, `σ₃σ₃σ₂`, `σ₂σ₁σ₁`
/// and `σ₂σ₂σ₂`.
pub mod examples {
    use super::BraidWord;

    pub fn b1() -> BraidWord {
        BraidWord::from_signed(4, &[2])
    }

    pub fn b2() -> BraidWord {
        BraidWord::from_signed(4, &[3, 3, 2])
    }

    pub fn b3() -> BraidWord {
        BraidWord::from_signed(4, &[2, 1, 1])
    }

    pub fn b4() -> BraidWord {
        BraidWord::from_signed(4, &[2, 2, 2])
    }

    pub fn all() -> [BraidWord; 4] {
        [b1(), b2(), b3(), b4()]
    }
}
