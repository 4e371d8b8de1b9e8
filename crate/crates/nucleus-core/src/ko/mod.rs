//! Exact arithmetic in the homotopy ring of the real connective K-theory
//! spectrum at the prime 2.
//!
//! The ring is `Z_(2)[eta, alpha, beta] / (2 eta, eta^3, eta alpha,
//! alpha^2 - 4 beta)` with `|eta| = 1`, `|alpha| = 4`, `|beta| = 8`; each
//! degree carries at most one normal-form generator, so elements are a degree
//! plus an exact coefficient. On top of the ring sit the low stable stems,
//! Toda-bracket definedness and indeterminacy bookkeeping, and the
//! generator-coverage check for the bracket families that hit every positive
//! degree.

mod bracket;
mod coverage;
mod element;
mod stems;

pub use bracket::{
    bracket_defined, bracket_indeterminacy, family_brackets, BracketC, BracketFailure,
    BracketRecord, Indeterminacy,
};
pub use coverage::{generator_coverage_check, CoverageReport};
pub use element::{ko_group, ko_mul, KoElement, KoGroup, KoGroupKind};
pub use stems::{StableStemTable, StemSummand};

use alloc::string::String;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KoError {
    /// Unparseable element syntax.
    BadElement(String),
    /// A stem name outside the hardcoded table.
    UnknownStem(String),
    /// A degree outside the table's range.
    StemDegreeOutOfRange(u32),
}

impl fmt::Display for KoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KoError::BadElement(s) => write!(f, "cannot parse {s:?} as a ko element"),
            KoError::UnknownStem(s) => write!(f, "unknown stable stem element {s:?}"),
            KoError::StemDegreeOutOfRange(n) => {
                write!(f, "stable stems are tabulated through degree 8, got {n}")
            }
        }
    }
}

impl core::error::Error for KoError {}
