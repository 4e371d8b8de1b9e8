use alloc::vec::Vec;

use crate::arith::{solve, Cyclic, LocalMatrix, LocalScalar, Prime};
use crate::fp::{FpMatrix, RowSpace};

use super::ClassifyError;

/// A finitely generated `Z_(p)`-module presented as the cokernel of a
/// relation matrix on a finite generator set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulePresentation {
    prime: Prime,
    generators: usize,
    relations: LocalMatrix,
}

impl ModulePresentation {
    pub fn new(
        prime: Prime,
        generators: usize,
        relations: LocalMatrix,
    ) -> Result<Self, ClassifyError> {
        if relations.rows() != generators {
            return Err(ClassifyError::PresentationShape {
                generators,
                relation_rows: relations.rows(),
            });
        }
        Ok(ModulePresentation {
            prime,
            generators,
            relations,
        })
    }

    pub fn free(prime: Prime, rank: usize) -> Self {
        ModulePresentation {
            prime,
            generators: rank,
            relations: LocalMatrix::zero(prime, rank, 0),
        }
    }

    /// Direct sum of cyclic summands, one generator each.
    pub fn from_summands(prime: Prime, summands: &[Cyclic]) -> Self {
        let n = summands.len();
        let torsion: Vec<(usize, u64)> = summands
            .iter()
            .enumerate()
            .filter_map(|(i, s)| match s {
                Cyclic::Free => None,
                Cyclic::Torsion(e) => Some((i, *e)),
            })
            .collect();
        let mut relations = LocalMatrix::zero(prime, n, torsion.len());
        for (col, (row, e)) in torsion.iter().enumerate() {
            relations.set(*row, col, LocalScalar::prime_power(prime, *e));
        }
        ModulePresentation {
            prime,
            generators: n,
            relations,
        }
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relations(&self) -> &LocalMatrix {
        &self.relations
    }

    /// Cyclic summand decomposition of the presented module.
    pub fn summands(&self) -> Vec<Cyclic> {
        self.relations.cokernel_decomposition()
    }

    pub fn is_zero_module(&self) -> bool {
        self.summands().is_empty()
    }

    /// Is the element (given in generator coordinates) zero in the module?
    pub fn is_zero_element(&self, x: &[LocalScalar]) -> bool {
        solve(&self.relations, x).is_some()
    }
}

/// A homomorphism between presented modules, recorded on generators.
#[derive(Clone, Debug)]
pub struct PresentedMap {
    pub source: ModulePresentation,
    pub target: ModulePresentation,
    pub matrix: LocalMatrix,
}

impl PresentedMap {
    /// Checks shapes and well-definedness (relations map into relations).
    pub fn new(
        source: ModulePresentation,
        target: ModulePresentation,
        matrix: LocalMatrix,
    ) -> Result<Self, ClassifyError> {
        if (matrix.rows(), matrix.cols()) != (target.generators(), source.generators()) {
            return Err(ClassifyError::MapShape {
                expected: (target.generators(), source.generators()),
                found: (matrix.rows(), matrix.cols()),
            });
        }
        for j in 0..source.relations.cols() {
            let image = matrix.apply(&source.relations.column(j));
            if !target.is_zero_element(&image) {
                return Err(ClassifyError::NotWellDefined { relation: j });
            }
        }
        Ok(PresentedMap {
            source,
            target,
            matrix,
        })
    }

    /// Generators (in source generator coordinates) of the kernel of the
    /// induced map on presented modules: solutions of `M x = R_T y`,
    /// projected to `x`, together with the source relations themselves.
    pub fn kernel_generators(&self) -> Vec<Vec<LocalScalar>> {
        let rt = &self.target.relations;
        let stacked = self.matrix.hstack(&negate(rt));
        let snf = stacked.smith_normal_form();
        let basis = snf.kernel_basis();
        let mut gens: Vec<Vec<LocalScalar>> = (0..basis.cols())
            .map(|j| basis.column(j)[..self.source.generators()].to_vec())
            .collect();
        // elements of im(R_S) are zero in the source module; include them so
        // the generated submodule is the honest kernel of the induced map
        for j in 0..self.source.relations.cols() {
            gens.push(self.source.relations.column(j));
        }
        gens.retain(|g| g.iter().any(|c| !c.is_zero()));
        gens
    }

    /// Injectivity of the induced map over `Z_(p)`.
    pub fn injective_integral(&self) -> bool {
        self.kernel_generators()
            .iter()
            .all(|g| self.source.is_zero_element(g))
    }

    /// Injectivity after tensoring with `F_p`.
    pub fn injective_mod_p(&self) -> bool {
        let p = self.prime().get();
        let (src_q, src_basis) = quotient_space(&self.source);
        let (dst_q, _) = quotient_space(&self.target);
        let dim_src = src_basis.len();
        if dim_src == 0 {
            return true;
        }
        let dst_dim = dst_q.quotient_basis().len();
        let mut image = FpMatrix::zero(p, dst_dim, dim_src);
        for (col, &gen_idx) in src_basis.iter().enumerate() {
            // image of the basis vector e_{gen_idx}
            let v: Vec<u64> = (0..self.target.generators())
                .map(|r| self.matrix.entry(r, gen_idx).residue())
                .collect();
            for (row, c) in dst_q.quotient_coords(v).into_iter().enumerate() {
                image[(row, col)] = c;
            }
        }
        let _ = src_q;
        image.rank() == dim_src
    }

    fn prime(&self) -> Prime {
        self.source.prime()
    }
}

/// Mod-p quotient data of a presentation: the row space of the reduced
/// relation columns and the surviving generator coordinates.
fn quotient_space(m: &ModulePresentation) -> (RowSpace, Vec<usize>) {
    let p = m.prime().get();
    let mut space = RowSpace::new(p, m.generators());
    for j in 0..m.relations().cols() {
        space.insert(
            m.relations()
                .column(j)
                .iter()
                .map(LocalScalar::residue)
                .collect(),
        );
    }
    let basis = space.quotient_basis();
    (space, basis)
}

fn negate(m: &LocalMatrix) -> LocalMatrix {
    let mut out = m.clone();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out.set(i, j, -m.entry(i, j));
        }
    }
    out
}

/// A minimal generating set, chosen among the given generators, of the
/// submodule they span inside the presented module. By Nakayama this is any
/// subset whose images form a basis of `K / pK`; relations among the chosen
/// generators then all have coefficients in `pZ_(p)`.
pub fn minimal_generating_set(
    ambient: &ModulePresentation,
    generators: &[Vec<LocalScalar>],
) -> Vec<Vec<LocalScalar>> {
    if generators.is_empty() {
        return Vec::new();
    }
    let prime = ambient.prime();
    // relations among the generators: kernel of free^r -> ambient
    let mut gmat = LocalMatrix::zero(prime, ambient.generators(), generators.len());
    for (j, g) in generators.iter().enumerate() {
        for (i, c) in g.iter().enumerate() {
            gmat.set(i, j, c.clone());
        }
    }
    let map = PresentedMap::new(
        ModulePresentation::free(prime, generators.len()),
        ambient.clone(),
        gmat,
    )
    .expect("free source is always well-defined");
    let relation_gens = map.kernel_generators();
    let mut span = RowSpace::new(prime.get(), generators.len());
    for r in &relation_gens {
        span.insert(r.iter().map(LocalScalar::residue).collect());
    }
    span.quotient_basis()
        .into_iter()
        .map(|i| generators[i].clone())
        .collect()
}
