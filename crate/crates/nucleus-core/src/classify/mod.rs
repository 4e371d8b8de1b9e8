//! Spectrum models and the verdict engine.
//!
//! A [`SpectrumModel`] bundles the known invariants of a p-local spectrum —
//! homology, the cohomology module over the Steenrod algebra, Hurewicz-image
//! indices, skeletal homotopy data — and [`classify`](SpectrumModel::classify)
//! decides the detection criteria (cyclicity of cohomology, vanishing of the
//! zeroth Adams row, mod-p Hurewicz triviality, nuclearity) by running a
//! small confluent rule system to a fixpoint, recording the provenance of
//! every verdict.

mod hurewicz;
mod model;
mod mono;
mod nuclear;
mod presentation;
mod rules;
mod transform;

pub use hurewicz::{hurewicz_index, HurewiczIndex, IndexFamily};
pub use model::{HurewiczEntry, Property, SpectrumModel, Value, Verdict};
pub use mono::{mono_check, MonoCheckInput};
pub use nuclear::{
    hurewicz_zero_test, nuclear_construct, nuclear_test, AttachingData, ChainLevelOracle,
    HomotopyOracle, NuclearConstruction, SkeletalHomotopyData,
};
pub use presentation::{minimal_generating_set, ModulePresentation, PresentedMap};
pub use rules::{classify_with_order, Ruleset, DEFAULT_MAX_DEGREE};
pub use transform::ModelTransform;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassifyError {
    /// Relation matrix rows must match the generator count.
    PresentationShape {
        generators: usize,
        relation_rows: usize,
    },
    /// A map matrix with the wrong shape for its presentations.
    MapShape {
        expected: (usize, usize),
        found: (usize, usize),
    },
    /// A map that does not send relations to zero.
    NotWellDefined { relation: usize },
    /// Model fields over different primes.
    PrimeMismatch { left: u64, right: u64 },
    /// Homology does not start exactly at the declared Hurewicz dimension.
    BottomMismatch {
        hurewicz_dim: i32,
        homology_bottom: Option<i32>,
    },
    /// A Hurewicz entry on a degree with no homology, or an index entry on a
    /// degree that is not free of rank one.
    BadHurewiczEntry { degree: i32, reason: String },
    /// Two rules derived contradictory verdicts.
    Inconsistent {
        property: Property,
        first: (Value, Vec<String>),
        second: (Value, Vec<String>),
    },
    /// The homotopy oracle cannot serve the requested degree.
    OracleTruncation { requested: i32, available: i32 },
    /// The transform's parameter is outside the model's range.
    BadTransform(String),
}

impl fmt::Display for ClassifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassifyError::PresentationShape { generators, relation_rows } => write!(
                f,
                "presentation with {generators} generators has relation rows {relation_rows}"
            ),
            ClassifyError::MapShape { expected, found } => write!(
                f,
                "map matrix must be {}x{}, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            ClassifyError::NotWellDefined { relation } => {
                write!(f, "map does not kill source relation {relation}")
            }
            ClassifyError::PrimeMismatch { left, right } => {
                write!(f, "model fields over different primes: {left} vs {right}")
            }
            ClassifyError::BottomMismatch { hurewicz_dim, homology_bottom } => write!(
                f,
                "homology bottom {homology_bottom:?} does not match the Hurewicz dimension {hurewicz_dim}"
            ),
            ClassifyError::BadHurewiczEntry { degree, reason } => {
                write!(f, "hurewicz entry at degree {degree}: {reason}")
            }
            ClassifyError::Inconsistent { property, first, second } => write!(
                f,
                "model inconsistency: {property} derived as {} via {:?} but {} via {:?}",
                first.0, first.1, second.0, second.1
            ),
            ClassifyError::OracleTruncation { requested, available } => write!(
                f,
                "homotopy oracle truncated: degree {requested} requested, available through {available}"
            ),
            ClassifyError::BadTransform(s) => write!(f, "transform not applicable: {s}"),
        }
    }
}

impl core::error::Error for ClassifyError {}
