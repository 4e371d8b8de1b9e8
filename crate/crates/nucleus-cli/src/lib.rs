//! File formats, fixtures and reports for the `nucleus` command-line tool.
//!
//! The computational engine lives in `nucleus-core`; this crate adds the
//! JSON chain-complex format, the TOML module and spectrum-model schemas,
//! the shipped fixture library, and the text/JSON report renderers.

pub mod error;
pub mod fixtures;
pub mod format;
pub mod report;

pub use error::CliError;
