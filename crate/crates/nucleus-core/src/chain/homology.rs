use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{Cyclic, LocalMatrix, LocalScalar, Prime, SmithForm};

use super::complex::CellComplex;
use super::ChainError;

/// A graded `Z_(p)`-module recorded degreewise as lists of cyclic summands.
///
/// Within each degree the summands are kept in canonical order: free summands
/// first, then torsion by increasing exponent. `known_through = Some(d)` means
/// degrees above `d` are unknown (the module came from a truncated
/// computation); `None` means the data is exact everywhere and the module
/// vanishes outside the recorded degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedModule {
    prime: Prime,
    summands: BTreeMap<i32, Vec<Cyclic>>,
    known_through: Option<i32>,
}

impl GradedModule {
    pub fn new(
        prime: Prime,
        summands: BTreeMap<i32, Vec<Cyclic>>,
        known_through: Option<i32>,
    ) -> Result<Self, ChainError> {
        let mut clean: BTreeMap<i32, Vec<Cyclic>> = BTreeMap::new();
        for (&n, list) in &summands {
            if list.contains(&Cyclic::Torsion(0)) {
                return Err(ChainError::TrivialSummand { degree: n });
            }
            if let Some(d) = known_through {
                if n > d {
                    return Err(ChainError::Unreliable { degree: n });
                }
            }
            if !list.is_empty() {
                let mut list = list.clone();
                list.sort_by_key(|s| s.sort_key());
                clean.insert(n, list);
            }
        }
        Ok(GradedModule {
            prime,
            summands: clean,
            known_through,
        })
    }

    pub fn zero(prime: Prime) -> Self {
        GradedModule {
            prime,
            summands: BTreeMap::new(),
            known_through: None,
        }
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn known_through(&self) -> Option<i32> {
        self.known_through
    }

    pub fn summands_at(&self, n: i32) -> &[Cyclic] {
        self.summands.get(&n).map_or(&[], Vec::as_slice)
    }

    pub fn degrees(&self) -> impl Iterator<Item = i32> + '_ {
        self.summands.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i32, &[Cyclic])> + '_ {
        self.summands.iter().map(|(&n, v)| (n, v.as_slice()))
    }

    /// Lowest nonzero degree.
    pub fn bottom(&self) -> Option<i32> {
        self.summands.keys().next().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    /// Exactly one cyclic summand in the given degree.
    pub fn is_cyclic_at(&self, n: i32) -> bool {
        self.summands_at(n).len() == 1
    }

    pub fn suspend(&self, k: i32) -> GradedModule {
        GradedModule {
            prime: self.prime,
            summands: self
                .summands
                .iter()
                .map(|(&n, v)| (n + k, v.clone()))
                .collect(),
            known_through: self.known_through.map(|d| d + k),
        }
    }

    /// Restricts knowledge to degrees `<= d`, dropping anything above.
    pub fn truncate_knowledge(&self, d: i32) -> GradedModule {
        GradedModule {
            prime: self.prime,
            summands: self
                .summands
                .range(..=d)
                .map(|(&n, v)| (n, v.clone()))
                .collect(),
            known_through: Some(match self.known_through {
                Some(k) => k.min(d),
                None => d,
            }),
        }
    }

    /// Dimension of the degree-`n` part of `H_n tensor F_p`.
    pub fn fp_rank_at(&self, n: i32) -> usize {
        self.summands_at(n).len()
    }

    /// Dimension of `H_n(-; F_p)` by universal coefficients:
    /// `H_n tensor F_p` plus `Tor(H_{n-1}, F_p)`.
    pub fn mod_p_homology_dim(&self, n: i32) -> usize {
        let tor = self
            .summands_at(n - 1)
            .iter()
            .filter(|s| !s.is_free())
            .count();
        self.summands_at(n).len() + tor
    }
}

impl fmt::Display for GradedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            write!(f, "0")?;
        }
        for (i, (n, list)) in self.summands.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "deg {n}: ")?;
            for (j, s) in list.iter().enumerate() {
                if j > 0 {
                    write!(f, " + ")?;
                }
                match s {
                    Cyclic::Free => write!(f, "Z_({})", self.prime)?,
                    Cyclic::Torsion(e) => write!(f, "Z/{}^{}", self.prime, e)?,
                }
            }
        }
        if let Some(d) = self.known_through {
            write!(f, " (known through degree {d})")?;
        }
        Ok(())
    }
}

/// One homology summand with an explicit cycle representative and, for
/// torsion, a chain one degree up whose boundary is `p^e` times the cycle.
#[derive(Clone, Debug)]
pub struct SummandGenerator {
    pub summand: Cyclic,
    /// Representative cycle, in the cell basis of `C_n`.
    pub cycle: Vec<LocalScalar>,
    /// For `Z/p^e` summands: `w` in `C_{n+1}` with `d w = p^e * cycle`.
    pub bounding_chain: Option<Vec<LocalScalar>>,
}

/// Homology in a single degree, with generators.
#[derive(Clone, Debug)]
pub struct DegreeHomology {
    pub degree: i32,
    pub generators: Vec<SummandGenerator>,
}

impl DegreeHomology {
    pub fn summands(&self) -> Vec<Cyclic> {
        self.generators.iter().map(|g| g.summand).collect()
    }
}

/// The full Smith-form data of one degree's homology computation.
pub(crate) struct DegreeData {
    pub snf_d: SmithForm,
    pub rank_d: usize,
    /// Basis of `ker d_n` as columns (`c_n x k`).
    pub kernel: LocalMatrix,
    /// Smith form of the boundary matrix expressed in kernel coordinates.
    pub m_snf: SmithForm,
    /// Canonical summand order: (cokernel coordinate index, summand).
    pub slots: Vec<(usize, Cyclic)>,
}

impl CellComplex {
    pub(crate) fn degree_data(&self, n: i32) -> DegreeData {
        let d_n = self.differential(n);
        let snf_d = d_n.smith_normal_form();
        let rank_d = snf_d.rank();
        let kernel = snf_d.kernel_basis();
        let k = kernel.cols();

        // Columns of d_{n+1} land in ker d_n; rewrite them in the kernel
        // basis. In V-coordinates a cycle has its first rank_d entries zero,
        // so the kernel coordinates are the remaining rows of V^{-1} d_{n+1}.
        let d_up = self.differential(n + 1);
        let mut m = LocalMatrix::zero(self.prime(), k, d_up.cols());
        for j in 0..d_up.cols() {
            let y = snf_d.v_inv_apply(&d_up.column(j));
            for (i, item) in y.iter().enumerate() {
                if i < rank_d {
                    debug_assert!(item.is_zero(), "boundary column is not a cycle");
                } else {
                    m.set(i - rank_d, j, item.clone());
                }
            }
        }
        let m_snf = m.smith_normal_form();

        let exps = m_snf.diagonal_exponents();
        let mut slots: Vec<(usize, Cyclic)> =
            (m_snf.rank()..k).map(|i| (i, Cyclic::Free)).collect();
        for (i, &e) in exps.iter().enumerate() {
            if e > 0 {
                slots.push((i, Cyclic::Torsion(e)));
            }
        }
        DegreeData {
            snf_d,
            rank_d,
            kernel,
            m_snf,
            slots,
        }
    }

    /// Homology in degree `n`, with summand generators. Errors if the degree
    /// is unreliable under the complex's truncation flag.
    pub fn homology_at(&self, n: i32) -> Result<DegreeHomology, ChainError> {
        if n > self.reliable_top() && n >= self.hurewicz_dim() {
            return Err(ChainError::Unreliable { degree: n });
        }
        Ok(self.homology_at_unchecked(n))
    }

    pub(crate) fn homology_at_unchecked(&self, n: i32) -> DegreeHomology {
        let data = self.degree_data(n);
        let generators = data
            .slots
            .iter()
            .map(|&(i, summand)| {
                let coords = data.m_snf.u_inv.column(i);
                let cycle = data.kernel.apply(&coords);
                let bounding_chain = match summand {
                    Cyclic::Free => None,
                    Cyclic::Torsion(_) => Some(data.m_snf.v.column(i)),
                };
                SummandGenerator {
                    summand,
                    cycle,
                    bounding_chain,
                }
            })
            .collect();
        DegreeHomology {
            degree: n,
            generators,
        }
    }

    /// Homology of the whole complex, restricted to reliable degrees.
    pub fn homology(&self) -> GradedModule {
        let mut summands = BTreeMap::new();
        for n in self.hurewicz_dim()..=self.reliable_top() {
            let h = self.homology_at_unchecked(n);
            if !h.generators.is_empty() {
                summands.insert(n, h.summands());
            }
        }
        let known_through = if self.is_truncated() {
            Some(self.reliable_top())
        } else {
            None
        };
        GradedModule {
            prime: self.prime(),
            summands,
            known_through,
        }
    }

    /// A column basis of the cycle module `ker d_n`.
    pub fn cycle_basis(&self, n: i32) -> LocalMatrix {
        self.differential(n).smith_normal_form().kernel_basis()
    }

    /// Coordinates of a cycle's homology class in the canonical summand order
    /// of [`CellComplex::homology_at`]. Torsion coordinates are returned as
    /// exact scalars, to be read modulo `p^e`.
    pub fn homology_class(
        &self,
        n: i32,
        cycle: &[LocalScalar],
    ) -> Result<Vec<LocalScalar>, ChainError> {
        let data = self.degree_data(n);
        let y_full = data.snf_d.v_inv_apply(cycle);
        if y_full.iter().take(data.rank_d).any(|c| !c.is_zero()) {
            return Err(ChainError::NotCycle { degree: n });
        }
        let y: Vec<LocalScalar> = y_full[data.rank_d..].to_vec();
        let w = data.m_snf.u.apply(&y);
        Ok(data.slots.iter().map(|&(i, _)| w[i].clone()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Prime;
    use alloc::vec;

    fn p2() -> Prime {
        Prime::new(2).unwrap()
    }

    #[test]
    fn sphere_homology() {
        let s = CellComplex::sphere(p2(), 5);
        let h = s.homology();
        assert_eq!(h.summands_at(5), &[Cyclic::Free]);
        assert!(h.summands_at(4).is_empty());
        assert!(h.summands_at(6).is_empty());
        assert_eq!(h.bottom(), Some(5));
    }

    #[test]
    fn moore_homology() {
        // d(k) = p^q j gives Z/p^q concentrated in the bottom degree.
        let m = CellComplex::moore(p2(), 3, 1);
        let h = m.homology();
        assert_eq!(h.summands_at(1), &[Cyclic::Torsion(3)]);
        assert!(h.summands_at(2).is_empty());
    }

    #[test]
    fn homology_generators_and_classes() {
        let m = CellComplex::moore(p2(), 2, 0);
        let h = m.homology_at(0).unwrap();
        assert_eq!(h.generators.len(), 1);
        let g = &h.generators[0];
        assert_eq!(g.summand, Cyclic::Torsion(2));
        // d(bounding) = 4 * cycle
        let w = g.bounding_chain.as_ref().unwrap();
        let dw = m.differential(1).apply(w);
        let four_z: Vec<_> = g
            .cycle
            .iter()
            .map(|c| c * &LocalScalar::from_int(p2(), 4))
            .collect();
        assert_eq!(dw, four_z);

        // the class of 2 * cycle is the scalar 2 against the generator
        let two_z: Vec<_> = g
            .cycle
            .iter()
            .map(|c| c * &LocalScalar::from_int(p2(), 2))
            .collect();
        let cls = m.homology_class(0, &two_z).unwrap();
        assert_eq!(cls, vec![LocalScalar::from_int(p2(), 2)]);
    }

    #[test]
    fn truncation_withholds_top_degrees() {
        use alloc::collections::BTreeMap;
        let mut cells = BTreeMap::new();
        cells.insert(0, vec!["a".into()]);
        cells.insert(3, vec!["b".into()]);
        let c = CellComplex::new(p2(), 0, 3, true, cells, BTreeMap::new()).unwrap();
        let h = c.homology();
        assert_eq!(h.known_through(), Some(1));
        assert_eq!(h.summands_at(0), &[Cyclic::Free]);
        // degree 3 exists but is unreliable: withheld.
        assert!(h.summands_at(3).is_empty());
        assert!(c.homology_at(3).is_err());
        assert!(c.homology_at(2).is_err());
        assert!(c.homology_at(1).is_ok());
    }

    #[test]
    fn canonical_summand_order() {
        let mut summands = BTreeMap::new();
        summands.insert(
            2,
            vec![Cyclic::Torsion(3), Cyclic::Free, Cyclic::Torsion(1)],
        );
        let h = GradedModule::new(p2(), summands, None).unwrap();
        assert_eq!(
            h.summands_at(2),
            &[Cyclic::Free, Cyclic::Torsion(1), Cyclic::Torsion(3)]
        );
        assert!(!h.is_cyclic_at(2));
    }

    #[test]
    fn mod_p_dimension_counts_tor() {
        let mut summands = BTreeMap::new();
        summands.insert(1, vec![Cyclic::Torsion(1)]);
        summands.insert(3, vec![Cyclic::Torsion(1)]);
        let h = GradedModule::new(p2(), summands, None).unwrap();
        // degree 2 has no integral homology but Tor from degree 1.
        assert_eq!(h.mod_p_homology_dim(2), 1);
        assert_eq!(h.mod_p_homology_dim(1), 1);
        assert_eq!(h.mod_p_homology_dim(3), 1);
        assert_eq!(h.mod_p_homology_dim(5), 0);
    }
}
