//! Exact homological algebra over the local ring `Z_(p)`.
//!
//! This crate is the computational engine behind the `nucleus` tool. It
//! provides, with no floating point anywhere:
//!
//! * [`arith`] — arbitrary-precision arithmetic in `Z_(p)` (rationals with
//!   `p`-free denominators), matrices, and Smith normal form over that ring;
//! * [`fp`] — dense linear algebra over the prime field `F_p`;
//! * [`chain`] — finite-type cellular chain complexes of free `Z_(p)`-modules,
//!   their homology, minimality tests, and the minimal-model construction;
//! * [`steenrod`] — the mod-`p` Steenrod algebra in admissible form, truncated
//!   realizations of finitely presented modules over it, and the module-level
//!   tests (minimal generators, cyclicity, atomicity);
//! * [`classify`] — spectrum models as plain data together with the verdict
//!   engine (monomorphism test, Hurewicz-image indices, nuclearity, the
//!   nuclear construction loop, suspension/Postnikov transforms);
//! * [`ko`] — exact arithmetic in `pi_*(ko)` at the prime 2, the low-degree
//!   stable stems, Toda-bracket definedness and indeterminacy bookkeeping.
//!
//! The crate is `no_std` (with `alloc`); all IO, file formats and the CLI live
//! in the companion crate `nucleus-cli`.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod arith;
pub mod chain;
pub mod classify;
pub mod fp;
pub mod ko;
pub mod steenrod;

pub use arith::{LocalMatrix, LocalScalar, Prime, SmithForm, Valuation};
pub use chain::{CellComplex, ChainMap, Cyclic, GradedModule};
pub use classify::{Property, SpectrumModel, Value, Verdict};
pub use ko::KoElement;
pub use steenrod::{AdmissibleElement, FpModuleSpec, SteenrodWord, TruncatedAModule};
