use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use nucleus_core::arith::{LocalMatrix, LocalScalar, Prime};
use nucleus_core::chain::{CellComplex, ChainMap};

use crate::error::CliError;

/// The chain-complex file schema:
/// degrees key maps of cell labels and of differential matrices whose
/// entries are exact `"num/den"` strings (plain integers allowed).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChainComplexFile {
    pub prime: u64,
    pub hurewicz_dim: i32,
    pub top_degree: i32,
    #[serde(default)]
    pub truncated: bool,
    #[serde(default)]
    pub cells: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub differentials: BTreeMap<String, Vec<Vec<String>>>,
}

fn parse_degree(s: &str) -> Result<i32, CliError> {
    s.parse()
        .map_err(|_| CliError::parse(format!("bad degree key {s:?}")))
}

pub fn chain_from_json(text: &str) -> Result<CellComplex, CliError> {
    let file: ChainComplexFile = serde_json::from_str(text)?;
    let prime = Prime::new(file.prime)?;
    let mut cells = BTreeMap::new();
    for (k, labels) in &file.cells {
        cells.insert(parse_degree(k)?, labels.clone());
    }
    let mut differentials = BTreeMap::new();
    for (k, rows) in &file.differentials {
        let n = parse_degree(k)?;
        let grid: Result<Vec<Vec<LocalScalar>>, CliError> = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| LocalScalar::parse(prime, s).map_err(CliError::from))
                    .collect()
            })
            .collect();
        differentials.insert(n, LocalMatrix::from_rows(prime, grid?)?);
    }
    CellComplex::new(
        prime,
        file.hurewicz_dim,
        file.top_degree,
        file.truncated,
        cells,
        differentials,
    )
    .map_err(CliError::from)
}

pub fn chain_to_json(c: &CellComplex) -> ChainComplexFile {
    let mut cells = BTreeMap::new();
    let mut differentials = BTreeMap::new();
    for n in c.cell_degrees() {
        cells.insert(n.to_string(), c.cells(n).to_vec());
    }
    for n in c.hurewicz_dim()..=c.top_degree() {
        let d = c.differential(n);
        if d.rows() == 0 || d.cols() == 0 || d.is_zero() {
            continue;
        }
        let rows: Vec<Vec<String>> = (0..d.rows())
            .map(|i| (0..d.cols()).map(|j| d.entry(i, j).to_string()).collect())
            .collect();
        differentials.insert(n.to_string(), rows);
    }
    ChainComplexFile {
        prime: c.prime().get(),
        hurewicz_dim: c.hurewicz_dim(),
        top_degree: c.top_degree(),
        truncated: c.is_truncated(),
        cells,
        differentials,
    }
}

/// Serialized output of the minimalization command: the minimal complex and
/// the chain-map witness into the input complex.
#[derive(Debug, Serialize, Deserialize)]
pub struct MinimalizeFile {
    pub complex: ChainComplexFile,
    /// degree -> matrix (target cells x source cells) of the witness map.
    pub chain_map: BTreeMap<String, Vec<Vec<String>>>,
}

pub fn minimalize_output_to_json(minimal: &CellComplex, map: &ChainMap) -> MinimalizeFile {
    let mut chain_map = BTreeMap::new();
    for n in minimal.cell_degrees() {
        let m = map.map(n);
        if m.rows() == 0 || m.cols() == 0 {
            continue;
        }
        let rows: Vec<Vec<String>> = (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| m.entry(i, j).to_string()).collect())
            .collect();
        chain_map.insert(n.to_string(), rows);
    }
    MinimalizeFile {
        complex: chain_to_json(minimal),
        chain_map,
    }
}
