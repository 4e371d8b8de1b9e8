//! The truncated mod-`p` Steenrod algebra.
//!
//! Words in the generators (`Sq^i` at `p = 2`, the Bockstein `b` and powers
//! `P^i` at odd primes) are rewritten to the admissible basis with the Adem
//! relations. Finitely presented modules over the algebra are realized
//! degreewise up to a truncation bound as `F_p`-vector spaces with one action
//! matrix per generator, and the module-level criteria (minimal generators,
//! cyclicity, atomicity of the endomorphism ring) are decided in that range.

mod adem;
mod constructions;
mod module;
mod word;

pub use adem::{adem_reduce, admissible_basis, algebra_dimension, AdmissibleElement};
pub use constructions::{
    milnor_primitive, projective_module, quotient_by_subalgebra, subalgebra_quotient_spec,
    thom_module, ProjectiveKind, SubalgebraFamily,
};
pub use module::{
    AtomicVerdict, FpModuleSpec, GeneratorSpec, MinimalGenerators, Relation, TruncatedAModule,
};
pub use word::{Letter, SteenrodWord};

use alloc::string::String;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SteenrodError {
    /// `Sq` letters at an odd prime, or `b`/`P` letters at 2.
    WrongPrimeForLetter { prime: u64, letter: String },
    /// Exponents must be positive.
    ZeroExponent,
    /// Unparseable word syntax.
    BadWord(String),
    /// A relation whose terms do not share a single total degree.
    MixedDegreeRelation { relation: usize },
    /// Truncation bound below the top generator degree.
    BoundTooLow { bound: i32, needed: i32 },
    /// The requested construction needs `p = 2`.
    NeedsPrimeTwo { prime: u64 },
    /// A family parameter outside what the construction supports.
    BadFamily(String),
    /// An action matrix failed an Adem relation instance.
    AdemViolation { degree: i32, relation: String },
}

impl fmt::Display for SteenrodError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SteenrodError::WrongPrimeForLetter { prime, letter } => {
                write!(
                    f,
                    "letter {letter} is not a generator of the mod-{prime} algebra"
                )
            }
            SteenrodError::ZeroExponent => write!(f, "generator exponents must be positive"),
            SteenrodError::BadWord(s) => write!(f, "cannot parse {s:?} as a Steenrod word"),
            SteenrodError::MixedDegreeRelation { relation } => {
                write!(f, "relation {relation} mixes total degrees")
            }
            SteenrodError::BoundTooLow { bound, needed } => {
                write!(
                    f,
                    "truncation bound {bound} is below the top generator degree {needed}"
                )
            }
            SteenrodError::NeedsPrimeTwo { prime } => {
                write!(f, "construction is only defined at p = 2, got p = {prime}")
            }
            SteenrodError::BadFamily(s) => write!(f, "unsupported family parameter: {s}"),
            SteenrodError::AdemViolation { degree, relation } => {
                write!(
                    f,
                    "action matrices violate the Adem relation {relation} at degree {degree}"
                )
            }
        }
    }
}

impl core::error::Error for SteenrodError {}
