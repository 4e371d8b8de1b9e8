//! Exact arithmetic over the local PID `Z_(p)` and Smith normal form.
//!
//! Elements of `Z_(p)` are rationals whose denominator is coprime to `p`;
//! every nonzero element factors uniquely as `unit * p^v` with `v` its
//! valuation. Because the ring is local with principal maximal ideal `(p)`,
//! Smith normal form needs no gcd steps: an entry of minimal valuation
//! divides the whole matrix.

mod matrix;
mod scalar;
mod snf;

pub use matrix::LocalMatrix;
pub use scalar::{LocalScalar, Prime, Valuation};
pub use snf::{solve, Cyclic, SmithForm};

use alloc::string::String;
use core::fmt;

/// Errors from constructing or combining `Z_(p)`-values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArithError {
    /// The claimed prime is not a prime number at least 2.
    NotPrime(u64),
    /// Denominator divisible by `p`: the fraction is not `p`-local.
    DenominatorDivisibleByP { prime: u64, denominator: String },
    /// Zero denominator.
    ZeroDenominator,
    /// Unparseable scalar notation.
    BadScalar(String),
    /// Dimension mismatch in a matrix operation.
    Shape {
        expected: (usize, usize),
        found: (usize, usize),
    },
    /// Two values over different primes were combined.
    PrimeMismatch { left: u64, right: u64 },
}

impl fmt::Display for ArithError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArithError::NotPrime(p) => write!(f, "{p} is not a prime >= 2"),
            ArithError::DenominatorDivisibleByP { prime, denominator } => {
                write!(f, "denominator {denominator} is divisible by p = {prime}")
            }
            ArithError::ZeroDenominator => write!(f, "zero denominator"),
            ArithError::BadScalar(s) => write!(f, "cannot parse {s:?} as num/den"),
            ArithError::Shape { expected, found } => write!(
                f,
                "dimension mismatch: expected {}x{}, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            ArithError::PrimeMismatch { left, right } => {
                write!(f, "values over different primes: {left} vs {right}")
            }
        }
    }
}

impl core::error::Error for ArithError {}
