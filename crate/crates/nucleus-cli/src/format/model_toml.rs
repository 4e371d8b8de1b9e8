use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::Deserialize;

use nucleus_core::arith::{Cyclic, LocalMatrix, LocalScalar, Prime};
use nucleus_core::chain::GradedModule;
use nucleus_core::classify::{
    AttachingData, HurewiczEntry, ModulePresentation, SkeletalHomotopyData, SpectrumModel,
};
use nucleus_core::fp::FpMatrix;
use nucleus_core::steenrod::{
    projective_module, quotient_by_subalgebra, thom_module, ProjectiveKind, SubalgebraFamily,
};

use crate::error::CliError;
use crate::format::module_toml::{parse_relation, GeneratorEntry};

/// TOML schema for a spectrum model. Sections other than `[spectrum]` and
/// `[homology]` are optional; every verdict cites only what is present.
#[derive(Debug, Deserialize)]
pub struct ModelFile {
    pub spectrum: SpectrumSection,
    pub homology: HomologySection,
    #[serde(default)]
    pub cohomology: Option<CohomologySection>,
    #[serde(default)]
    pub hurewicz: Option<BTreeMap<String, HurewiczValue>>,
    #[serde(default)]
    pub homotopy: Option<HomotopySection>,
    #[serde(default)]
    pub skeletal: Option<SkeletalSection>,
}

#[derive(Debug, Deserialize)]
pub struct SpectrumSection {
    pub name: String,
    pub prime: u64,
    pub hurewicz_dim: i32,
    #[serde(default)]
    #[allow(dead_code)]
    pub note: Option<String>,
}

#[derive(Debug, Deserialize)]
pub struct HomologySection {
    #[serde(default)]
    pub known_through: Option<i32>,
    #[serde(flatten)]
    pub degrees: BTreeMap<String, Vec<String>>,
}

#[derive(Debug, Deserialize)]
pub struct CohomologySection {
    #[serde(default)]
    pub builtin: Option<String>,
    #[serde(default)]
    pub bound: Option<i32>,
    /// Degrees above this are not described by the builtin; the realization
    /// bound is capped here.
    #[serde(default)]
    pub max_valid: Option<i32>,
    #[serde(default)]
    pub spec: Option<InlineSpec>,
    /// Path to a module presentation file, resolved against the model
    /// file's directory.
    #[serde(default)]
    pub file: Option<String>,
}

#[derive(Debug, Deserialize)]
pub struct InlineSpec {
    pub generators: Vec<GeneratorEntry>,
    #[serde(default)]
    pub relations: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum HurewiczValue {
    Flag(String),
    Index { index: String },
}

#[derive(Debug, Deserialize)]
pub struct HomotopySection {
    pub vanishes_above: i32,
}

#[derive(Debug, Deserialize)]
pub struct SkeletalSection {
    #[serde(default)]
    pub attaching: Vec<AttachingEntry>,
    #[serde(default)]
    pub hurewicz: Vec<SkeletalHurewiczEntry>,
}

#[derive(Debug, Deserialize)]
pub struct AttachingEntry {
    pub degree: i32,
    pub pi_generators: usize,
    /// relation columns, one vector (over the generators) per relation
    #[serde(default)]
    pub pi_relations: Vec<Vec<String>>,
    /// attaching columns, one vector per attached cell
    #[serde(default)]
    pub cells: Vec<Vec<String>>,
}

#[derive(Debug, Deserialize)]
pub struct SkeletalHurewiczEntry {
    pub degree: i32,
    pub matrix: Vec<Vec<u64>>,
}

fn parse_summand(prime: Prime, s: &str) -> Result<Cyclic, CliError> {
    let s = s.trim();
    if s == "Z" {
        return Ok(Cyclic::Free);
    }
    let order = s
        .strip_prefix("Z/")
        .ok_or_else(|| CliError::parse(format!("bad summand {s:?} (use \"Z\" or \"Z/p^e\")")))?;
    let order: u64 = order
        .parse()
        .map_err(|_| CliError::parse(format!("bad torsion order {order:?}")))?;
    let p = prime.get();
    let mut e = 0u64;
    let mut n = order;
    while n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    if n != 1 || e == 0 {
        return Err(CliError::parse(format!(
            "torsion order {order} is not a positive power of the prime {p}"
        )));
    }
    Ok(Cyclic::Torsion(e))
}

fn columns_to_matrix(
    prime: Prime,
    rows: usize,
    cols: &[Vec<String>],
) -> Result<LocalMatrix, CliError> {
    let mut m = LocalMatrix::zero(prime, rows, cols.len());
    for (j, col) in cols.iter().enumerate() {
        if col.len() != rows {
            return Err(CliError::parse(format!(
                "column {j} has {} entries, expected {rows}",
                col.len()
            )));
        }
        for (i, s) in col.iter().enumerate() {
            m.set(i, j, LocalScalar::parse(prime, s)?);
        }
    }
    Ok(m)
}

fn build_cohomology(
    prime: Prime,
    section: &CohomologySection,
    default_bound: i32,
    base_dir: Option<&std::path::Path>,
) -> Result<nucleus_core::steenrod::TruncatedAModule, CliError> {
    let mut bound = section.bound.unwrap_or(default_bound);
    if let Some(cap) = section.max_valid {
        bound = bound.min(cap);
    }
    let sources = usize::from(section.builtin.is_some())
        + usize::from(section.spec.is_some())
        + usize::from(section.file.is_some());
    if sources > 1 {
        return Err(CliError::parse(
            "cohomology section takes exactly one of builtin, spec, file".to_string(),
        ));
    }
    if let Some(rel) = &section.file {
        let path = match base_dir {
            Some(dir) => dir.join(rel),
            None => std::path::PathBuf::from(rel),
        };
        let text = std::fs::read_to_string(&path)
            .map_err(|e| CliError::parse(format!("cohomology file {}: {e}", path.display())))?;
        let spec = crate::format::module_spec_from_toml(&text)?;
        if spec.prime() != prime {
            return Err(CliError::domain(format!(
                "cohomology file is over p = {}, model over p = {}",
                spec.prime(),
                prime
            )));
        }
        return Ok(spec.realize(bound)?);
    }
    match (&section.builtin, &section.spec) {
        (Some(name), None) => {
            let (kind, arg) = name
                .split_once(':')
                .ok_or_else(|| CliError::parse(format!("bad builtin {name:?}")))?;
            match kind {
                "quotient" => {
                    let family = SubalgebraFamily::parse(arg)?;
                    Ok(quotient_by_subalgebra(prime, family, bound)?)
                }
                "projective" | "thom" => {
                    let pk = match arg {
                        "RP" => ProjectiveKind::RP,
                        "CP" => ProjectiveKind::CP,
                        "HP" => ProjectiveKind::HP,
                        _ => return Err(CliError::parse(format!("bad projective kind {arg:?}"))),
                    };
                    if prime.get() != 2 {
                        return Err(CliError::domain(
                            "projective and Thom modules are mod-2 constructions".to_string(),
                        ));
                    }
                    Ok(if kind == "thom" {
                        thom_module(pk, bound)
                    } else {
                        projective_module(pk, bound)
                    })
                }
                _ => Err(CliError::parse(format!("unknown builtin family {kind:?}"))),
            }
        }
        (None, Some(inline)) => {
            let generators: Vec<nucleus_core::steenrod::GeneratorSpec> = inline
                .generators
                .iter()
                .map(|g| nucleus_core::steenrod::GeneratorSpec {
                    name: g.name.clone(),
                    degree: g.degree,
                })
                .collect();
            let relations: Result<Vec<_>, CliError> = inline
                .relations
                .iter()
                .map(|r| parse_relation(prime, &generators, r))
                .collect();
            let spec = nucleus_core::steenrod::FpModuleSpec::new(prime, generators, relations?)?;
            Ok(spec.realize(bound)?)
        }
        (Some(_), Some(_)) => Err(CliError::parse(
            "give either a builtin or an inline spec, not both".to_string(),
        )),
        (None, None) => Err(CliError::parse(
            "cohomology section needs a builtin or an inline spec".to_string(),
        )),
    }
}

/// Assembles a spectrum model from its TOML text. `default_bound` controls
/// the realization bound of cohomology data when the file does not pin one.
pub fn model_from_toml(text: &str, default_bound: i32) -> Result<SpectrumModel, CliError> {
    model_from_toml_at(text, default_bound, None)
}

/// Like [`model_from_toml`], resolving cohomology file references against
/// the given directory.
pub fn model_from_toml_at(
    text: &str,
    default_bound: i32,
    base_dir: Option<&std::path::Path>,
) -> Result<SpectrumModel, CliError> {
    let file: ModelFile = toml::from_str(text)?;
    let prime = Prime::new(file.spectrum.prime)?;

    let mut summands: BTreeMap<i32, Vec<Cyclic>> = BTreeMap::new();
    for (key, list) in &file.homology.degrees {
        let degree: i32 = key
            .parse()
            .map_err(|_| CliError::parse(format!("bad homology degree {key:?}")))?;
        let parsed: Result<Vec<Cyclic>, CliError> =
            list.iter().map(|s| parse_summand(prime, s)).collect();
        summands.insert(degree, parsed?);
    }
    let homology = GradedModule::new(prime, summands, file.homology.known_through)?;
    let mut model = SpectrumModel::new(
        file.spectrum.name.clone(),
        prime,
        file.spectrum.hurewicz_dim,
        homology,
    )?;

    if let Some(section) = &file.cohomology {
        model =
            model.with_cohomology(build_cohomology(prime, section, default_bound, base_dir)?)?;
    }

    if let Some(entries) = &file.hurewicz {
        let mut map = BTreeMap::new();
        for (key, value) in entries {
            let degree: i32 = key
                .parse()
                .map_err(|_| CliError::parse(format!("bad hurewicz degree {key:?}")))?;
            let entry = match value {
                HurewiczValue::Index { index } => {
                    let k: BigUint = index
                        .parse()
                        .map_err(|_| CliError::parse(format!("bad index {index:?}")))?;
                    HurewiczEntry::Index(k)
                }
                HurewiczValue::Flag(flag) => match flag.as_str() {
                    "zero" => HurewiczEntry::ZeroModP,
                    "nonzero" => HurewiczEntry::NonzeroModP,
                    "unknown" => HurewiczEntry::Unknown,
                    other => {
                        return Err(CliError::parse(format!(
                            "bad hurewicz flag {other:?} (zero | nonzero | unknown)"
                        )))
                    }
                },
            };
            map.insert(degree, entry);
        }
        model = model.with_hurewicz_images(map)?;
    }

    if let Some(skeletal) = &file.skeletal {
        let mut attaching = BTreeMap::new();
        for entry in &skeletal.attaching {
            let relations = columns_to_matrix(prime, entry.pi_generators, &entry.pi_relations)?;
            let pi = ModulePresentation::new(prime, entry.pi_generators, relations)?;
            let j_map = columns_to_matrix(prime, entry.pi_generators, &entry.cells)?;
            attaching.insert(entry.degree, AttachingData { pi, j_map });
        }
        let mut hurewicz = BTreeMap::new();
        for entry in &skeletal.hurewicz {
            hurewicz.insert(
                entry.degree,
                FpMatrix::from_rows(prime.get(), &entry.matrix),
            );
        }
        let data =
            SkeletalHomotopyData::new(prime, file.spectrum.hurewicz_dim, attaching, hurewicz);
        model = model.with_skeletal(data)?;
    }

    if let Some(homotopy) = &file.homotopy {
        model = model.with_homotopy_vanishing_above(homotopy.vanishes_above);
    }

    Ok(model)
}
