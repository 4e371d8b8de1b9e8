use serde::Deserialize;

use nucleus_core::arith::Prime;
use nucleus_core::steenrod::{FpModuleSpec, GeneratorSpec, Relation, SteenrodWord};

use crate::error::CliError;

/// TOML schema for a finitely presented module over the Steenrod algebra:
///
/// ```toml
/// [module]
/// prime = 2
/// generators = [{ name = "x", degree = 0 }]
/// relations = ["Sq1 x", "Sq2 x"]
/// ```
///
/// A relation is a `+`-separated sum of terms; each term is an optional
/// integer coefficient, a whitespace-separated word in `Sq{i}` / `b` /
/// `P{i}`, and ends with a generator name.
#[derive(Debug, Deserialize)]
pub struct ModuleFile {
    pub module: ModuleSection,
}

#[derive(Debug, Deserialize)]
pub struct ModuleSection {
    pub prime: u64,
    pub generators: Vec<GeneratorEntry>,
    #[serde(default)]
    pub relations: Vec<String>,
}

#[derive(Debug, Deserialize)]
pub struct GeneratorEntry {
    pub name: String,
    pub degree: i32,
}

/// Parses one relation string against the generator list.
pub fn parse_relation(
    prime: Prime,
    generators: &[GeneratorSpec],
    text: &str,
) -> Result<Relation, CliError> {
    let mut terms = Vec::new();
    for term in text.split('+') {
        let tokens: Vec<&str> = term.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(CliError::parse(format!("empty term in relation {text:?}")));
        }
        let gen_name = tokens[tokens.len() - 1];
        let gen_index = generators
            .iter()
            .position(|g| g.name == gen_name)
            .ok_or_else(|| CliError::parse(format!("unknown generator {gen_name:?}")))?;
        let mut word_tokens = &tokens[..tokens.len() - 1];
        let mut coeff = 1u64;
        if let Some(first) = word_tokens.first() {
            if let Ok(c) = first.parse::<u64>() {
                coeff = c;
                word_tokens = &word_tokens[1..];
            }
        }
        let word = SteenrodWord::parse(prime, &word_tokens.join(" "))
            .map_err(|e| CliError::parse(e.to_string()))?;
        terms.push((coeff, word, gen_index));
    }
    Ok(Relation { terms })
}

pub fn module_spec_from_toml(text: &str) -> Result<FpModuleSpec, CliError> {
    let file: ModuleFile = toml::from_str(text)?;
    let prime = Prime::new(file.module.prime)?;
    let generators: Vec<GeneratorSpec> = file
        .module
        .generators
        .into_iter()
        .map(|g| GeneratorSpec {
            name: g.name,
            degree: g.degree,
        })
        .collect();
    let relations: Result<Vec<Relation>, CliError> = file
        .module
        .relations
        .iter()
        .map(|r| parse_relation(prime, &generators, r))
        .collect();
    FpModuleSpec::new(prime, generators, relations?).map_err(CliError::from)
}
