use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::{LocalMatrix, Prime};
use crate::fp::FpMatrix;

use super::ChainError;

/// A finite-type chain complex of free `Z_(p)`-modules with named basis
/// elements ("cells").
///
/// `differential(n)` is the matrix of `d_n : C_n -> C_{n-1}` with respect to
/// the stored cell orders (one column per `n`-cell). Degrees are supported on
/// `[hurewicz_dim, top_degree]`; when `truncated` is set, the complex is the
/// degree-wise-known part of something bigger and the two top degrees of any
/// homological answer are withheld.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellComplex {
    prime: Prime,
    hurewicz_dim: i32,
    top_degree: i32,
    truncated: bool,
    cells: BTreeMap<i32, Vec<String>>,
    differentials: BTreeMap<i32, LocalMatrix>,
}

impl CellComplex {
    /// Validates shapes, degree support, label uniqueness and `d . d = 0`.
    pub fn new(
        prime: Prime,
        hurewicz_dim: i32,
        top_degree: i32,
        truncated: bool,
        cells: BTreeMap<i32, Vec<String>>,
        differentials: BTreeMap<i32, LocalMatrix>,
    ) -> Result<Self, ChainError> {
        let mut kept_cells: BTreeMap<i32, Vec<String>> = BTreeMap::new();
        for (&n, labels) in &cells {
            if labels.is_empty() {
                continue;
            }
            if n < hurewicz_dim || n > top_degree {
                return Err(ChainError::DegreeOutOfRange {
                    degree: n,
                    bottom: hurewicz_dim,
                    top: top_degree,
                });
            }
            for (i, l) in labels.iter().enumerate() {
                if labels[..i].contains(l) {
                    return Err(ChainError::DuplicateLabel {
                        degree: n,
                        label: l.clone(),
                    });
                }
            }
            kept_cells.insert(n, labels.clone());
        }

        let dim = |n: i32| kept_cells.get(&n).map_or(0, Vec::len);
        let mut kept_diff: BTreeMap<i32, LocalMatrix> = BTreeMap::new();
        for (&n, m) in &differentials {
            if m.prime() != prime {
                return Err(ChainError::PrimeMismatch {
                    left: prime.get(),
                    right: m.prime().get(),
                });
            }
            let expected = (dim(n - 1), dim(n));
            if (m.rows(), m.cols()) != expected {
                return Err(ChainError::Shape {
                    degree: n,
                    expected,
                    found: (m.rows(), m.cols()),
                });
            }
            if expected.0 > 0 && expected.1 > 0 && !m.is_zero() {
                kept_diff.insert(n, m.clone());
            }
        }

        let complex = CellComplex {
            prime,
            hurewicz_dim,
            top_degree,
            truncated,
            cells: kept_cells,
            differentials: kept_diff,
        };
        for n in complex.hurewicz_dim..=complex.top_degree {
            let dd = complex.differential(n).mul(&complex.differential(n + 1));
            if !dd.is_zero() {
                return Err(ChainError::DifferentialSquare { degree: n });
            }
        }
        Ok(complex)
    }

    /// The sphere complex: a single cell in degree `n`.
    pub fn sphere(prime: Prime, n: i32) -> Self {
        let mut cells = BTreeMap::new();
        cells.insert(n, alloc::vec![format!("j.{n}.0")]);
        CellComplex::new(prime, n, n, false, cells, BTreeMap::new()).expect("sphere is valid")
    }

    /// The mod-`p^q` Moore complex with bottom cell in degree `n`:
    /// cells `j`, `k` and `d(k) = p^q j`.
    pub fn moore(prime: Prime, q: u64, n: i32) -> Self {
        use crate::arith::LocalScalar;
        let mut cells = BTreeMap::new();
        cells.insert(n, alloc::vec![format!("j.{n}.0")]);
        cells.insert(n + 1, alloc::vec![format!("k.{n}.0")]);
        let mut diff = BTreeMap::new();
        let mut d = LocalMatrix::zero(prime, 1, 1);
        d.set(0, 0, LocalScalar::prime_power(prime, q));
        diff.insert(n + 1, d);
        CellComplex::new(prime, n, n + 1, false, cells, diff).expect("moore complex is valid")
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn hurewicz_dim(&self) -> i32 {
        self.hurewicz_dim
    }

    pub fn top_degree(&self) -> i32 {
        self.top_degree
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    /// Highest degree whose homology the truncation leaves trustworthy.
    pub fn reliable_top(&self) -> i32 {
        if self.truncated {
            self.top_degree - 2
        } else {
            self.top_degree
        }
    }

    pub fn cells(&self, n: i32) -> &[String] {
        self.cells.get(&n).map_or(&[], Vec::as_slice)
    }

    pub fn cell_count(&self, n: i32) -> usize {
        self.cells(n).len()
    }

    pub fn total_cells(&self) -> usize {
        self.cells.values().map(Vec::len).sum()
    }

    pub fn cell_degrees(&self) -> impl Iterator<Item = i32> + '_ {
        self.cells.keys().copied()
    }

    /// The matrix of `d_n`, materialized as zero when absent.
    pub fn differential(&self, n: i32) -> LocalMatrix {
        match self.differentials.get(&n) {
            Some(m) => m.clone(),
            None => LocalMatrix::zero(self.prime, self.cell_count(n - 1), self.cell_count(n)),
        }
    }

    /// The mod-`p` reduction of `d_n`.
    pub fn differential_mod_p(&self, n: i32) -> FpMatrix {
        let d = self.differential(n);
        let mut m = FpMatrix::zero(self.prime.get(), d.rows(), d.cols());
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                m[(i, j)] = d.entry(i, j).residue();
            }
        }
        m
    }

    /// One cell in the Hurewicz dimension.
    pub fn is_hurewicz(&self) -> bool {
        self.cell_count(self.hurewicz_dim) == 1
    }

    /// The `n`-skeleton: the subcomplex of cells in degrees `<= n`. This is a
    /// complete complex in its own right, so it is never marked truncated.
    pub fn skeleton(&self, n: i32) -> CellComplex {
        let top = n.min(self.top_degree);
        let cells: BTreeMap<i32, Vec<String>> = self
            .cells
            .range(..=top)
            .map(|(&d, l)| (d, l.clone()))
            .collect();
        let differentials: BTreeMap<i32, LocalMatrix> = self
            .differentials
            .range(..=top)
            .map(|(&d, m)| (d, m.clone()))
            .collect();
        CellComplex {
            prime: self.prime,
            hurewicz_dim: self.hurewicz_dim,
            top_degree: top,
            truncated: false,
            cells,
            differentials,
        }
    }

    /// Degree shift by `k` (the chain-level suspension isomorphism).
    pub fn suspend(&self, k: i32) -> CellComplex {
        CellComplex {
            prime: self.prime,
            hurewicz_dim: self.hurewicz_dim + k,
            top_degree: self.top_degree + k,
            truncated: self.truncated,
            cells: self
                .cells
                .iter()
                .map(|(&n, l)| (n + k, l.clone()))
                .collect(),
            differentials: self
                .differentials
                .iter()
                .map(|(&n, m)| (n + k, m.clone()))
                .collect(),
        }
    }
}

/// A degreewise map of chain complexes, checked to commute with the
/// differentials on construction.
#[derive(Clone, Debug)]
pub struct ChainMap {
    source: CellComplex,
    target: CellComplex,
    maps: BTreeMap<i32, LocalMatrix>,
}

impl ChainMap {
    pub fn new(
        source: CellComplex,
        target: CellComplex,
        maps: BTreeMap<i32, LocalMatrix>,
    ) -> Result<Self, ChainError> {
        if source.prime() != target.prime() {
            return Err(ChainError::PrimeMismatch {
                left: source.prime().get(),
                right: target.prime().get(),
            });
        }
        let f = |n: i32| -> LocalMatrix {
            match maps.get(&n) {
                Some(m) => m.clone(),
                None => {
                    LocalMatrix::zero(source.prime(), target.cell_count(n), source.cell_count(n))
                }
            }
        };
        let lo = source.hurewicz_dim().min(target.hurewicz_dim());
        let hi = source.top_degree().max(target.top_degree());
        for n in lo..=hi {
            let fm = f(n);
            if (fm.rows(), fm.cols()) != (target.cell_count(n), source.cell_count(n)) {
                return Err(ChainError::Shape {
                    degree: n,
                    expected: (target.cell_count(n), source.cell_count(n)),
                    found: (fm.rows(), fm.cols()),
                });
            }
            // d^T_n . f_n = f_{n-1} . d^S_n
            let lhs = target.differential(n).mul(&fm);
            let rhs = f(n - 1).mul(&source.differential(n));
            if lhs != rhs {
                return Err(ChainError::NotChainMap { degree: n });
            }
        }
        Ok(ChainMap {
            source,
            target,
            maps,
        })
    }

    pub fn source(&self) -> &CellComplex {
        &self.source
    }

    pub fn target(&self) -> &CellComplex {
        &self.target
    }

    pub fn map(&self, n: i32) -> LocalMatrix {
        match self.maps.get(&n) {
            Some(m) => m.clone(),
            None => LocalMatrix::zero(
                self.source.prime(),
                self.target.cell_count(n),
                self.source.cell_count(n),
            ),
        }
    }

    pub fn identity(c: &CellComplex) -> ChainMap {
        let maps = c
            .cell_degrees()
            .map(|n| (n, LocalMatrix::identity(c.prime(), c.cell_count(n))))
            .collect();
        ChainMap {
            source: c.clone(),
            target: c.clone(),
            maps,
        }
    }
}
