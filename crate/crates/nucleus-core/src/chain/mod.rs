//! Finite-type cellular chain complexes of free `Z_(p)`-modules.
//!
//! A [`CellComplex`] models the cellular chains of a p-local CW spectrum:
//! one basis label per cell, one differential matrix per degree, degrees
//! supported on a finite range above the Hurewicz dimension. Every complex
//! carries an explicit `truncated` flag; operations refuse to report homology
//! in the degrees a truncation makes unreliable.

mod complex;
mod homology;
mod minimal;

pub use crate::arith::Cyclic;
pub use complex::{CellComplex, ChainMap};
pub use homology::{DegreeHomology, GradedModule, SummandGenerator};
pub use minimal::mapping_cone;

use alloc::string::String;
use core::fmt;

/// Errors from building or combining chain-level data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainError {
    /// `d_n . d_{n+1} != 0`.
    DifferentialSquare { degree: i32 },
    /// A differential has the wrong shape for its adjacent cell counts.
    Shape {
        degree: i32,
        expected: (usize, usize),
        found: (usize, usize),
    },
    /// Cells found below the declared Hurewicz dimension or above the top.
    DegreeOutOfRange { degree: i32, bottom: i32, top: i32 },
    /// Two cells in one degree share a label.
    DuplicateLabel { degree: i32, label: String },
    /// A chain map that does not commute with the differentials.
    NotChainMap { degree: i32 },
    /// Mixed primes.
    PrimeMismatch { left: u64, right: u64 },
    /// A torsion summand with exponent zero is the zero module.
    TrivialSummand { degree: i32 },
    /// Requested data in a degree the truncation makes unreliable.
    Unreliable { degree: i32 },
    /// A vector that was expected to be a cycle is not one.
    NotCycle { degree: i32 },
}

impl fmt::Display for ChainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainError::DifferentialSquare { degree } => {
                write!(
                    f,
                    "d.d != 0 between degrees {} and {}",
                    degree + 1,
                    degree - 1
                )
            }
            ChainError::Shape {
                degree,
                expected,
                found,
            } => write!(
                f,
                "differential at degree {degree}: expected {}x{}, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            ChainError::DegreeOutOfRange {
                degree,
                bottom,
                top,
            } => {
                write!(f, "cells in degree {degree} outside [{bottom}, {top}]")
            }
            ChainError::DuplicateLabel { degree, label } => {
                write!(f, "duplicate cell label {label:?} in degree {degree}")
            }
            ChainError::NotChainMap { degree } => {
                write!(
                    f,
                    "map fails to commute with differentials at degree {degree}"
                )
            }
            ChainError::PrimeMismatch { left, right } => {
                write!(f, "mixed primes: {left} vs {right}")
            }
            ChainError::TrivialSummand { degree } => {
                write!(f, "torsion exponent 0 (trivial summand) in degree {degree}")
            }
            ChainError::Unreliable { degree } => {
                write!(
                    f,
                    "degree {degree} is unreliable under the declared truncation"
                )
            }
            ChainError::NotCycle { degree } => {
                write!(f, "chain in degree {degree} is not a cycle")
            }
        }
    }
}

impl core::error::Error for ChainError {}
