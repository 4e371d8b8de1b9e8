use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::{Cyclic, LocalMatrix, LocalScalar};

use super::complex::{CellComplex, ChainMap};
use super::homology::GradedModule;
use super::ChainError;

impl CellComplex {
    /// True iff the mod-`p` cellular differential vanishes, i.e. every
    /// differential entry has positive valuation.
    pub fn is_minimal(&self) -> bool {
        (self.hurewicz_dim()..=self.top_degree()).all(|n| self.differential(n).is_zero_mod_p())
    }

    /// Decides minimality through the skeleton filtration instead: for each
    /// `n`, the inclusion of skeleta must induce an isomorphism
    /// `H_n(X_n; F_p) -> H_n(X_{n+1}; F_p)`.
    ///
    /// This route goes through mod-`p` ranks and never inspects entry
    /// valuations, so it is an independent check of [`Self::is_minimal`].
    pub fn skeletal_inclusion_check(&self) -> bool {
        for n in self.hurewicz_dim()..self.top_degree() {
            let a = self.differential_mod_p(n);
            let b = self.differential_mod_p(n + 1);
            // X_n has no (n+1)-cells, so H_n(X_n; F_p) = ker(a).
            let dim_in_skeleton = self.cell_count(n) - a.rank();
            // H_n(X_{n+1}; F_p) = ker(a) / im(b).
            let dim_in_next = dim_in_skeleton - b.rank();
            // The induced map is the quotient projection, so it is an
            // isomorphism exactly when the dimensions agree.
            if dim_in_skeleton != dim_in_next {
                return false;
            }
        }
        true
    }

    /// Builds the minimal complex realizing this complex's homology together
    /// with a chain map into `self` that is an isomorphism on homology in
    /// every reliable degree.
    pub fn minimalize(&self) -> Result<(CellComplex, ChainMap), ChainError> {
        let mut homology = BTreeMap::new();
        let mut generators = BTreeMap::new();
        for n in self.hurewicz_dim()..=self.reliable_top() {
            let h = self.homology_at_unchecked(n);
            if !h.generators.is_empty() {
                homology.insert(n, h.summands());
                generators.insert(n, h.generators);
            }
        }
        let known_through = if self.is_truncated() {
            Some(self.reliable_top())
        } else {
            None
        };
        let graded = GradedModule::new(self.prime(), homology, known_through)?;
        let minimal = graded.minimal_complex();

        // j-cells map to representative cycles, k-cells to the chains whose
        // boundary is p^e times the matching cycle.
        let mut maps: BTreeMap<i32, LocalMatrix> = BTreeMap::new();
        for n in minimal.cell_degrees().collect::<Vec<_>>() {
            let mut cols: Vec<Vec<LocalScalar>> = Vec::new();
            if let Some(gens) = generators.get(&n) {
                for g in gens {
                    cols.push(g.cycle.clone());
                }
            }
            if let Some(gens) = generators.get(&(n - 1)) {
                for g in gens {
                    if let Some(w) = &g.bounding_chain {
                        cols.push(w.clone());
                    }
                }
            }
            let rows = self.cell_count(n);
            let mut m = LocalMatrix::zero(self.prime(), rows, cols.len());
            for (j, col) in cols.iter().enumerate() {
                debug_assert_eq!(col.len(), rows);
                for (i, v) in col.iter().enumerate() {
                    m.set(i, j, v.clone());
                }
            }
            maps.insert(n, m);
        }
        let map = ChainMap::new(minimal.clone(), self.clone(), maps)?;
        Ok((minimal, map))
    }
}

impl GradedModule {
    /// The minimal complex with this homology: one `j`-cell per summand, and
    /// for each `Z/p^e` summand in degree `n` one `k`-cell in degree `n + 1`
    /// with differential `p^e * j`.
    ///
    /// Cells are ordered free-first then torsion by increasing exponent
    /// (the canonical summand order), with `j`-cells of a degree preceding
    /// the `k`-cells that arrive from the degree below; labels are
    /// `j.{degree}.{index}` and `k.{degree}.{index}`.
    pub fn minimal_complex(&self) -> CellComplex {
        let prime = self.prime();
        let bottom = self.bottom().unwrap_or(0);
        let mut cells: BTreeMap<i32, Vec<String>> = BTreeMap::new();
        let mut diff: BTreeMap<i32, LocalMatrix> = BTreeMap::new();

        let mut top = bottom;
        for (n, list) in self.iter() {
            let labels: Vec<String> = (0..list.len()).map(|i| format!("j.{n}.{i}")).collect();
            cells.entry(n).or_default().extend(labels);
            top = top.max(n);
            let torsion: Vec<(usize, u64)> = list
                .iter()
                .enumerate()
                .filter_map(|(i, s)| match s {
                    Cyclic::Free => None,
                    Cyclic::Torsion(e) => Some((i, *e)),
                })
                .collect();
            if !torsion.is_empty() {
                cells
                    .entry(n + 1)
                    .or_default()
                    .extend(torsion.iter().map(|(i, _)| format!("k.{n}.{i}")));
                top = top.max(n + 1);
            }
        }

        let degree_cells: BTreeMap<i32, usize> = cells.iter().map(|(&n, l)| (n, l.len())).collect();
        for (&n, labels) in &cells {
            let below = self.summands_at(n - 1);
            let k_count = below.iter().filter(|s| !s.is_free()).count();
            if k_count == 0 {
                continue;
            }
            // Rows index all cells one degree down: the j-cells of that degree
            // first (one per summand), then its own k-cells, which take no
            // boundary. The p^e entries land in the j-cell rows.
            let rows = degree_cells.get(&(n - 1)).copied().unwrap_or(0);
            let mut d = LocalMatrix::zero(prime, rows, labels.len());
            let j_count = labels.len() - k_count;
            let mut col = j_count;
            for (i, s) in below.iter().enumerate() {
                if let Cyclic::Torsion(e) = s {
                    d.set(i, col, LocalScalar::prime_power(prime, *e));
                    col += 1;
                }
            }
            diff.insert(n, d);
        }

        let (top_degree, truncated) = match self.known_through() {
            Some(d) => (d + 1, true),
            None => (top, false),
        };
        CellComplex::new(prime, bottom, top_degree, truncated, cells, diff)
            .expect("minimal complex construction is always valid")
    }
}

/// The mapping cone of a chain map: `cone(f)_n = X_{n-1} (+) Y_n` with
/// differential `(x, y) -> (-dx, f x + dy)`. A chain map is a
/// quasi-isomorphism exactly when its cone has vanishing homology.
pub fn mapping_cone(f: &ChainMap) -> CellComplex {
    let x = f.source();
    let y = f.target();
    let prime = x.prime();
    let bottom = (x.hurewicz_dim() + 1).min(y.hurewicz_dim());
    let top = (x.top_degree() + 1).max(y.top_degree());
    let truncated = x.is_truncated() || y.is_truncated();

    let mut cells: BTreeMap<i32, Vec<String>> = BTreeMap::new();
    for n in bottom..=top {
        let mut labels: Vec<String> = x.cells(n - 1).iter().map(|l| format!("x:{l}")).collect();
        labels.extend(y.cells(n).iter().map(|l| format!("y:{l}")));
        if !labels.is_empty() {
            cells.insert(n, labels);
        }
    }

    let mut diff: BTreeMap<i32, LocalMatrix> = BTreeMap::new();
    for n in bottom..=top {
        let (ax, by) = (x.cell_count(n - 1), y.cell_count(n));
        let (ax2, by2) = (x.cell_count(n - 2), y.cell_count(n - 1));
        let rows = ax2 + by2;
        let cols = ax + by;
        if rows == 0 || cols == 0 {
            continue;
        }
        let dx = x.differential(n - 1);
        let dy = y.differential(n);
        let fm = f.map(n - 1);
        let mut d = LocalMatrix::zero(prime, rows, cols);
        for i in 0..ax2 {
            for j in 0..ax {
                d.set(i, j, -dx.entry(i, j));
            }
        }
        for i in 0..by2 {
            for j in 0..ax {
                d.set(ax2 + i, j, fm.entry(i, j).clone());
            }
            for j in 0..by {
                d.set(ax2 + i, ax + j, dy.entry(i, j).clone());
            }
        }
        diff.insert(n, d);
    }

    CellComplex::new(prime, bottom, top, truncated, cells, diff)
        .expect("cone of a chain map is a valid complex")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Prime;
    use alloc::string::ToString;
    use alloc::vec;

    fn p2() -> Prime {
        Prime::new(2).unwrap()
    }

    #[test]
    fn moore_is_minimal_unit_is_not() {
        assert!(CellComplex::moore(p2(), 1, 0).is_minimal());
        assert!(CellComplex::moore(p2(), 4, 2).is_minimal());

        let mut cells = BTreeMap::new();
        cells.insert(0, vec!["a".into()]);
        cells.insert(1, vec!["b".into()]);
        let mut diff = BTreeMap::new();
        diff.insert(1, LocalMatrix::from_ints(p2(), 1, 1, &[1]));
        let c = CellComplex::new(p2(), 0, 1, false, cells, diff).unwrap();
        assert!(!c.is_minimal());
        assert!(!c.skeletal_inclusion_check());
    }

    #[test]
    fn sphere_passes_skeletal_check() {
        assert!(CellComplex::sphere(p2(), 0).skeletal_inclusion_check());
        assert!(CellComplex::moore(p2(), 2, 1).skeletal_inclusion_check());
    }

    #[test]
    fn minimal_complex_of_z4_in_degree_3() {
        let mut s = BTreeMap::new();
        s.insert(3, vec![Cyclic::Torsion(2)]);
        let h = GradedModule::new(p2(), s, None).unwrap();
        let c = h.minimal_complex();
        assert_eq!(c.cells(3), &["j.3.0".to_string()]);
        assert_eq!(c.cells(4), &["k.3.0".to_string()]);
        assert_eq!(
            *c.differential(4).entry(0, 0),
            LocalScalar::from_int(p2(), 4)
        );
        assert!(c.is_minimal());
        assert_eq!(c.homology(), h);
    }

    #[test]
    fn minimal_complex_of_free_degree_zero_is_sphere() {
        let mut s = BTreeMap::new();
        s.insert(0, vec![Cyclic::Free]);
        let h = GradedModule::new(p2(), s, None).unwrap();
        let c = h.minimal_complex();
        assert_eq!(c, CellComplex::sphere(p2(), 0));
    }

    #[test]
    fn minimalize_already_minimal_is_identity_shape() {
        let m = CellComplex::moore(p2(), 2, 3);
        let (minimal, map) = m.minimalize().unwrap();
        assert!(minimal.is_minimal());
        assert_eq!(minimal.homology(), m.homology());
        // identity up to relabeling: same cell counts and unit map entries.
        assert_eq!(minimal.cell_count(3), 1);
        assert_eq!(minimal.cell_count(4), 1);
        assert!(map.map(3).entry(0, 0).is_unit());
    }

    #[test]
    fn minimalize_collapses_unit_differential() {
        // 0 -> Z -(1)-> Z -> 0 has zero homology; minimal model is empty.
        let mut cells = BTreeMap::new();
        cells.insert(0, vec!["a".into()]);
        cells.insert(1, vec!["b".into()]);
        let mut diff = BTreeMap::new();
        diff.insert(1, LocalMatrix::from_ints(p2(), 1, 1, &[1]));
        let c = CellComplex::new(p2(), 0, 1, false, cells, diff).unwrap();
        let (minimal, map) = c.minimalize().unwrap();
        assert_eq!(minimal.total_cells(), 0);
        let cone = mapping_cone(&map);
        assert!(cone.homology().is_zero());
    }

    #[test]
    fn cone_of_quasi_iso_is_acyclic() {
        let m = CellComplex::moore(p2(), 2, 0);
        let (_, map) = m.minimalize().unwrap();
        let cone = mapping_cone(&map);
        assert!(cone.homology().is_zero());
    }

    #[test]
    fn minimalize_idempotent_scheme() {
        let mut s = BTreeMap::new();
        s.insert(0, vec![Cyclic::Free, Cyclic::Torsion(2)]);
        s.insert(
            2,
            vec![Cyclic::Torsion(1), Cyclic::Torsion(3), Cyclic::Free],
        );
        let h = GradedModule::new(p2(), s, None).unwrap();
        let c = h.minimal_complex();
        assert_eq!(c.homology(), h);
        let again = c.homology().minimal_complex();
        assert_eq!(again, c);
    }
}
