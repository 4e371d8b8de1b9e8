use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{solve, LocalMatrix, LocalScalar, Prime, Valuation};
use crate::chain::{CellComplex, ChainMap, Cyclic, GradedModule};
use crate::fp::FpMatrix;

use super::presentation::{minimal_generating_set, ModulePresentation, PresentedMap};
use super::ClassifyError;

/// Attaching data in one degree: a presentation of the skeleton's homotopy
/// and the matrix of the attaching wedge's map into it (one column per cell
/// attached one degree up).
#[derive(Clone, Debug)]
pub struct AttachingData {
    pub pi: ModulePresentation,
    pub j_map: LocalMatrix,
}

/// Per-degree homotopy data of a skeletal filtration: attaching
/// presentations for the economical-construction criterion, and/or skeletal
/// mod-p Hurewicz matrices for its homological reformulation.
#[derive(Clone, Debug)]
pub struct SkeletalHomotopyData {
    prime: Prime,
    hurewicz_dim: i32,
    attaching: BTreeMap<i32, AttachingData>,
    /// `h_n` as an `F_p` matrix with one column per generator of `pi_n(X_n)`.
    hurewicz: BTreeMap<i32, FpMatrix>,
}

impl SkeletalHomotopyData {
    pub fn new(
        prime: Prime,
        hurewicz_dim: i32,
        attaching: BTreeMap<i32, AttachingData>,
        hurewicz: BTreeMap<i32, FpMatrix>,
    ) -> Self {
        SkeletalHomotopyData {
            prime,
            hurewicz_dim,
            attaching,
            hurewicz,
        }
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn hurewicz_dim(&self) -> i32 {
        self.hurewicz_dim
    }

    pub fn attaching(&self) -> &BTreeMap<i32, AttachingData> {
        &self.attaching
    }

    pub fn hurewicz_maps(&self) -> &BTreeMap<i32, FpMatrix> {
        &self.hurewicz
    }

    pub fn suspend(&self, k: i32) -> SkeletalHomotopyData {
        SkeletalHomotopyData {
            prime: self.prime,
            hurewicz_dim: self.hurewicz_dim + k,
            attaching: self
                .attaching
                .iter()
                .map(|(&n, a)| (n + k, a.clone()))
                .collect(),
            hurewicz: self
                .hurewicz
                .iter()
                .map(|(&n, h)| (n + k, h.clone()))
                .collect(),
        }
    }

    /// Reads both forms off a cell complex, in the model where the homotopy
    /// of the `n`-skeleton is its degree-`n` cycle module: the attaching map
    /// is the differential written in a basis of the cycles, and the
    /// skeletal Hurewicz map is reduction of those cycles mod p.
    pub fn from_complex(c: &CellComplex) -> SkeletalHomotopyData {
        let prime = c.prime();
        let mut attaching = BTreeMap::new();
        let mut hurewicz = BTreeMap::new();
        for n in c.hurewicz_dim()..=c.top_degree() {
            let kernel = c.cycle_basis(n);
            let rank = kernel.cols();
            // attaching: d_{n+1} in cycle coordinates
            let d_up = c.differential(n + 1);
            let snf = c.differential(n).smith_normal_form();
            let mut j_map = LocalMatrix::zero(prime, rank, d_up.cols());
            for j in 0..d_up.cols() {
                let y = snf.v_inv_apply(&d_up.column(j));
                for (i, v) in y.iter().enumerate().skip(snf.rank()) {
                    j_map.set(i - snf.rank(), j, v.clone());
                }
            }
            attaching.insert(
                n,
                AttachingData {
                    pi: ModulePresentation::free(prime, rank),
                    j_map,
                },
            );

            // skeletal Hurewicz: reduce the integral cycle basis into the
            // mod-p cycle space
            let mod_p_cycles = c.differential_mod_p(n).nullspace();
            let mut h = FpMatrix::zero(prime.get(), mod_p_cycles.cols(), rank);
            for j in 0..rank {
                let v: Vec<u64> = kernel.column(j).iter().map(LocalScalar::residue).collect();
                let coords = mod_p_cycles
                    .solve(&v)
                    .expect("integral cycles reduce into the mod-p cycle space");
                for (i, c) in coords.into_iter().enumerate() {
                    h[(i, j)] = c;
                }
            }
            hurewicz.insert(n, h);
        }
        SkeletalHomotopyData {
            prime,
            hurewicz_dim: c.hurewicz_dim(),
            attaching,
            hurewicz,
        }
    }
}

/// The economical-construction criterion: in every recorded degree the kernel
/// of the attaching map must lie in `p` times the attaching wedge.
///
/// The kernel of `j : Z^r -> pi` is computed by Smith normal form on the
/// stacked matrix against the presentation's relations; the containment holds
/// exactly when every kernel generator has all coordinates of positive
/// valuation.
pub fn nuclear_test(data: &SkeletalHomotopyData) -> bool {
    for att in data.attaching.values() {
        let rank = att.j_map.cols();
        if rank == 0 {
            continue;
        }
        let map = PresentedMap::new(
            ModulePresentation::free(data.prime, rank),
            att.pi.clone(),
            att.j_map.clone(),
        )
        .expect("free source maps are well defined");
        for gen in map.kernel_generators() {
            if gen.iter().any(|c| c.valuation() == Valuation::Finite(0)) {
                return false;
            }
        }
    }
    true
}

/// The homological reformulation: nuclear exactly when every skeletal mod-p
/// Hurewicz map above the Hurewicz dimension vanishes.
pub fn hurewicz_zero_test(data: &SkeletalHomotopyData) -> bool {
    data.hurewicz
        .iter()
        .filter(|(&n, _)| n > data.hurewicz_dim)
        .all(|(_, h)| h.is_zero())
}

/// What the economical-construction driver needs to know about homotopy.
///
/// The shipped implementation is [`ChainLevelOracle`], the chain-complex
/// category in which the homotopy of a skeleton is its cycle module; any
/// richer source of homotopy groups can drive the same loop.
pub trait HomotopyOracle {
    fn prime(&self) -> Prime;
    /// Bottom degree of the target.
    fn bottom(&self) -> i32;
    /// Highest degree the oracle can answer for; the driver aborts with a
    /// truncation report beyond it.
    fn known_through(&self) -> i32;
    /// `pi_n` of the target.
    fn target_pi(&mut self, n: i32) -> ModulePresentation;
    /// Starts the construction with the single bottom cell.
    fn attach_bottom(&mut self);
    /// `pi_n` of the current skeleton and the matrix of the induced map to
    /// `target_pi(n)`.
    fn skeleton_stage(&mut self, n: i32) -> (ModulePresentation, LocalMatrix);
    /// Attaches one `(n+1)`-cell per kernel generator (coordinates in the
    /// stage presentation) and updates the internal reference map.
    fn attach_cells(&mut self, n: i32, kernel_generators: &[Vec<LocalScalar>]);
    /// The complex built so far.
    fn complex(&self) -> &CellComplex;
}

/// Result of the construction loop.
#[derive(Clone, Debug)]
pub struct NuclearConstruction {
    pub complex: CellComplex,
    pub skeletal: SkeletalHomotopyData,
    /// The reference map to the target, when the oracle is chain-level.
    pub chain_map: Option<ChainMap>,
}

/// The economical construction: starting from one bottom cell, attach at
/// each stage a minimal generating set of the kernel of
/// `pi_n(X_n) -> pi_n(target)`. Minimality of the generating set is exactly
/// what keeps every attaching kernel inside `p` times the wedge.
pub fn nuclear_construct<O: HomotopyOracle>(
    oracle: &mut O,
    max_degree: i32,
) -> Result<(), ClassifyError> {
    if max_degree > oracle.known_through() {
        return Err(ClassifyError::OracleTruncation {
            requested: max_degree,
            available: oracle.known_through(),
        });
    }
    oracle.attach_bottom();
    for n in oracle.bottom()..max_degree {
        let (pi, to_target) = oracle.skeleton_stage(n);
        let target = oracle.target_pi(n);
        let map = PresentedMap::new(pi.clone(), target, to_target)?;
        let raw = map.kernel_generators();
        let kill: Vec<Vec<LocalScalar>> =
            raw.into_iter().filter(|g| !pi.is_zero_element(g)).collect();
        let minimal = minimal_generating_set(&pi, &kill);
        if !minimal.is_empty() {
            oracle.attach_cells(n, &minimal);
        }
    }
    Ok(())
}

/// The chain-level homotopy oracle: the target is a cell complex, homotopy
/// groups are homology, and the reference map is maintained as an honest
/// chain map.
pub struct ChainLevelOracle {
    target: CellComplex,
    built: CellComplex,
    /// f_n: degree-n cells of the construction -> chains of the target.
    maps: BTreeMap<i32, LocalMatrix>,
    /// coordinates (in summand order) of the class the bottom cell hits
    bottom_choice: usize,
}

impl ChainLevelOracle {
    /// Target given as a complex. The bottom cell will map to a generator of
    /// the first summand of the bottom homology in canonical order (free
    /// summands first), the default choice of cyclic summand to capture.
    pub fn new(target: CellComplex) -> ChainLevelOracle {
        let prime = target.prime();
        let bottom = target.homology().bottom().unwrap_or(target.hurewicz_dim());
        ChainLevelOracle {
            built: CellComplex::sphere(prime, bottom),
            target,
            maps: BTreeMap::new(),
            bottom_choice: 0,
        }
    }

    /// Target given as a homology table; uses its minimal complex.
    pub fn for_homology(h: &GradedModule) -> ChainLevelOracle {
        ChainLevelOracle::new(h.minimal_complex())
    }

    pub fn target(&self) -> &CellComplex {
        &self.target
    }

    pub fn into_result(self) -> NuclearConstruction {
        let skeletal = SkeletalHomotopyData::from_complex(&self.built);
        let chain_map = ChainMap::new(self.built.clone(), self.target.clone(), self.maps.clone())
            .expect("construction maintains a chain map");
        NuclearConstruction {
            complex: self.built,
            skeletal,
            chain_map: Some(chain_map),
        }
    }

    fn summand_presentation(&self, n: i32) -> ModulePresentation {
        let summands: Vec<Cyclic> = if n < self.target.hurewicz_dim() {
            Vec::new()
        } else {
            self.target.homology_at_unchecked(n).summands()
        };
        ModulePresentation::from_summands(self.target.prime(), &summands)
    }
}

impl HomotopyOracle for ChainLevelOracle {
    fn prime(&self) -> Prime {
        self.target.prime()
    }

    fn bottom(&self) -> i32 {
        self.built.hurewicz_dim()
    }

    fn known_through(&self) -> i32 {
        if self.target.is_truncated() {
            self.target.reliable_top()
        } else {
            // a complete complex has zero homotopy above its top degree, so
            // every stage is answerable
            i32::MAX
        }
    }

    fn target_pi(&mut self, n: i32) -> ModulePresentation {
        self.summand_presentation(n)
    }

    fn attach_bottom(&mut self) {
        let n0 = self.built.hurewicz_dim();
        let h = self.target.homology_at_unchecked(n0);
        let cycle = h
            .generators
            .get(self.bottom_choice)
            .map(|g| g.cycle.clone())
            .unwrap_or_else(|| vec![LocalScalar::zero(self.prime()); self.target.cell_count(n0)]);
        let mut f = LocalMatrix::zero(self.prime(), self.target.cell_count(n0), 1);
        for (i, c) in cycle.iter().enumerate() {
            f.set(i, 0, c.clone());
        }
        self.maps.insert(n0, f);
    }

    fn skeleton_stage(&mut self, n: i32) -> (ModulePresentation, LocalMatrix) {
        let cycles = self.built.cycle_basis(n);
        let rank = cycles.cols();
        let pi = ModulePresentation::free(self.prime(), rank);
        let target_pres = self.summand_presentation(n);
        let f_n = self.maps.get(&n).cloned().unwrap_or_else(|| {
            LocalMatrix::zero(
                self.prime(),
                self.target.cell_count(n),
                self.built.cell_count(n),
            )
        });
        let mut to_target = LocalMatrix::zero(self.prime(), target_pres.generators(), rank);
        for j in 0..rank {
            let chain = f_n.apply(&cycles.column(j));
            let class = self
                .target
                .homology_class(n, &chain)
                .expect("images of cycles under a chain map are cycles");
            for (i, c) in class.iter().enumerate() {
                to_target.set(i, j, c.clone());
            }
        }
        (pi, to_target)
    }

    fn attach_cells(&mut self, n: i32, kernel_generators: &[Vec<LocalScalar>]) {
        let prime = self.prime();
        let cycles = self.built.cycle_basis(n);
        let existing = self.built.cell_count(n + 1);
        let mut cells: BTreeMap<i32, Vec<String>> = BTreeMap::new();
        for d in self.built.cell_degrees() {
            cells.insert(d, self.built.cells(d).to_vec());
        }
        let labels: Vec<String> = (0..kernel_generators.len())
            .map(|i| format!("k.{n}.{}", existing + i))
            .collect();
        cells.entry(n + 1).or_default().extend(labels);

        // boundaries of the new cells in the cell basis of degree n
        let mut diff: BTreeMap<i32, LocalMatrix> = BTreeMap::new();
        for d in self.built.hurewicz_dim()..=self.built.top_degree() {
            diff.insert(d, self.built.differential(d));
        }
        let old_d = diff
            .remove(&(n + 1))
            .unwrap_or_else(|| LocalMatrix::zero(prime, self.built.cell_count(n), existing));
        let mut new_d = LocalMatrix::zero(
            prime,
            self.built.cell_count(n),
            existing + kernel_generators.len(),
        );
        for i in 0..old_d.rows() {
            for j in 0..old_d.cols() {
                new_d.set(i, j, old_d.entry(i, j).clone());
            }
        }
        let mut f_new_cols: Vec<Vec<LocalScalar>> = Vec::new();
        let f_n = self.maps.get(&n).cloned().unwrap_or_else(|| {
            LocalMatrix::zero(prime, self.target.cell_count(n), self.built.cell_count(n))
        });
        for (jj, gen) in kernel_generators.iter().enumerate() {
            let boundary = cycles.apply(gen);
            for (i, c) in boundary.iter().enumerate() {
                new_d.set(i, existing + jj, c.clone());
            }
            // extend the chain map: solve d_T w = f(boundary)
            let image = f_n.apply(&boundary);
            let w = solve(&self.target.differential(n + 1), &image)
                .expect("killed classes bound in the target");
            f_new_cols.push(w);
        }
        diff.insert(n + 1, new_d);

        let top = self.built.top_degree().max(n + 1);
        self.built = CellComplex::new(
            prime,
            self.built.hurewicz_dim(),
            top,
            self.built.is_truncated(),
            cells,
            diff,
        )
        .expect("attaching cells along cycles preserves d.d = 0");

        let mut f_up =
            self.maps.get(&(n + 1)).cloned().unwrap_or_else(|| {
                LocalMatrix::zero(prime, self.target.cell_count(n + 1), existing)
            });
        let mut extended =
            LocalMatrix::zero(prime, f_up.rows(), existing + kernel_generators.len());
        for i in 0..f_up.rows() {
            for j in 0..existing {
                extended.set(i, j, f_up.entry(i, j).clone());
            }
        }
        for (jj, w) in f_new_cols.iter().enumerate() {
            for (i, c) in w.iter().enumerate() {
                extended.set(i, existing + jj, c.clone());
            }
        }
        f_up = extended;
        self.maps.insert(n + 1, f_up);
    }

    fn complex(&self) -> &CellComplex {
        &self.built
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Prime;
    use alloc::collections::BTreeMap;

    fn p2() -> Prime {
        Prime::new(2).unwrap()
    }

    #[test]
    fn moore_attaching_is_nuclear() {
        // J has rank 1, j = p^q on a free pi: zero kernel.
        let data = SkeletalHomotopyData::from_complex(&CellComplex::moore(p2(), 3, 0));
        assert!(nuclear_test(&data));
        assert!(hurewicz_zero_test(&data));
    }

    #[test]
    fn trivial_attaching_map_is_not_nuclear() {
        // j = 0 on a rank-1 wedge: the kernel is everything.
        let mut attaching = BTreeMap::new();
        attaching.insert(
            0,
            AttachingData {
                pi: ModulePresentation::free(p2(), 1),
                j_map: LocalMatrix::zero(p2(), 1, 1),
            },
        );
        let data = SkeletalHomotopyData::new(p2(), 0, attaching, BTreeMap::new());
        assert!(!nuclear_test(&data));
    }

    #[test]
    fn kernel_inside_p_passes() {
        // j : Z -> Z/p^2 sending 1 to the generator: kernel is exactly p^2 Z.
        let mut attaching = BTreeMap::new();
        attaching.insert(
            0,
            AttachingData {
                pi: ModulePresentation::from_summands(p2(), &[Cyclic::Torsion(2)]),
                j_map: LocalMatrix::from_ints(p2(), 1, 1, &[1]),
            },
        );
        let data = SkeletalHomotopyData::new(p2(), 0, attaching, BTreeMap::new());
        assert!(nuclear_test(&data));

        // but j : Z^2 -> Z/4 with columns 1, 2 has (2, -1) in the kernel.
        let mut attaching = BTreeMap::new();
        attaching.insert(
            0,
            AttachingData {
                pi: ModulePresentation::from_summands(p2(), &[Cyclic::Torsion(2)]),
                j_map: LocalMatrix::from_ints(p2(), 1, 2, &[1, 2]),
            },
        );
        let data = SkeletalHomotopyData::new(p2(), 0, attaching, BTreeMap::new());
        assert!(!nuclear_test(&data));
    }

    #[test]
    fn construct_sphere_for_free_target() {
        let mut summands = BTreeMap::new();
        summands.insert(0, alloc::vec![Cyclic::Free]);
        let h = GradedModule::new(p2(), summands, None).unwrap();
        let mut oracle = ChainLevelOracle::for_homology(&h);
        nuclear_construct(&mut oracle, 0).unwrap();
        let result = oracle.into_result();
        assert_eq!(result.complex.total_cells(), 1);
        assert!(nuclear_test(&result.skeletal));
    }

    #[test]
    fn construct_sphere_when_free_summand_present() {
        // target pi_0 = Z (+) Z/2: the core captures the free summand and
        // attaches nothing.
        let mut summands = BTreeMap::new();
        summands.insert(0, alloc::vec![Cyclic::Free, Cyclic::Torsion(1)]);
        let h = GradedModule::new(p2(), summands, None).unwrap();
        let mut oracle = ChainLevelOracle::for_homology(&h);
        nuclear_construct(&mut oracle, 4).unwrap();
        let result = oracle.into_result();
        assert_eq!(result.complex.total_cells(), 1, "{:?}", result.complex);
        assert!(nuclear_test(&result.skeletal));
    }

    #[test]
    fn construct_moore_for_torsion_target() {
        let mut summands = BTreeMap::new();
        summands.insert(3, alloc::vec![Cyclic::Torsion(2)]);
        let h = GradedModule::new(p2(), summands, None).unwrap();
        let mut oracle = ChainLevelOracle::for_homology(&h);
        nuclear_construct(&mut oracle, 6).unwrap();
        let result = oracle.into_result();
        // one bottom cell, one cell killing 4x
        assert_eq!(result.complex.cell_count(3), 1);
        assert_eq!(result.complex.cell_count(4), 1);
        let d = result.complex.differential(4);
        assert_eq!(*d.entry(0, 0), LocalScalar::from_int(p2(), 4));
        assert!(nuclear_test(&result.skeletal));
        assert_eq!(result.complex.homology(), h);
    }

    #[test]
    fn oracle_truncation_reported() {
        let mut summands = BTreeMap::new();
        summands.insert(0, alloc::vec![Cyclic::Free]);
        let h = GradedModule::new(p2(), summands, Some(3)).unwrap();
        let mut oracle = ChainLevelOracle::for_homology(&h);
        // the minimal complex of a module known through 3 is reliable
        // through 2; degree 9 is out of reach
        let err = nuclear_construct(&mut oracle, 9).unwrap_err();
        assert!(matches!(err, ClassifyError::OracleTruncation { .. }));
    }
}
