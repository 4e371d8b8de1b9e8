//! On-disk formats: the JSON chain-complex schema and the TOML schemas for
//! Steenrod module presentations and spectrum models.

mod chain_json;
mod model_toml;
mod module_toml;

pub use chain_json::{chain_from_json, chain_to_json, minimalize_output_to_json, ChainComplexFile};
pub use model_toml::{model_from_toml, model_from_toml_at, ModelFile};
pub use module_toml::{module_spec_from_toml, parse_relation, ModuleFile};
