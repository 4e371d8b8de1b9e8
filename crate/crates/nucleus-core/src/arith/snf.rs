use alloc::vec::Vec;
use core::fmt;

use super::matrix::LocalMatrix;
use super::scalar::{LocalScalar, Valuation};

/// A cyclic summand of a finitely generated `Z_(p)`-module: either a free
/// summand `Z_(p)` or a torsion summand `Z/p^e` recorded by its exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cyclic {
    Free,
    Torsion(u64),
}

impl Cyclic {
    pub fn is_free(self) -> bool {
        matches!(self, Cyclic::Free)
    }

    /// Canonical ordering of summand lists: free summands first, then torsion
    /// by increasing exponent.
    pub fn sort_key(self) -> u64 {
        match self {
            Cyclic::Free => 0,
            Cyclic::Torsion(e) => e,
        }
    }
}

impl fmt::Display for Cyclic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cyclic::Free => write!(f, "Z"),
            Cyclic::Torsion(e) => write!(f, "Z/p^{e}"),
        }
    }
}

/// Smith normal form `U * M * V = D` over `Z_(p)`.
///
/// `D` is diagonal with entries exact powers `p^{e_1} | p^{e_2} | ...`
/// followed by zeros; `U` and `V` are invertible over `Z_(p)` (unit
/// determinant) and their inverses are carried along so that kernels and
/// cokernels can be read off without re-solving.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: LocalMatrix,
    pub u_inv: LocalMatrix,
    pub v: LocalMatrix,
    pub v_inv: LocalMatrix,
    pub d: LocalMatrix,
    rank: usize,
}

impl SmithForm {
    /// Computes the Smith normal form.
    ///
    /// Over the local ring an entry of minimal valuation divides every other
    /// entry, so a single sweep of eliminations suffices. The pivot rule is
    /// fixed for reproducibility: among entries of minimal valuation in the
    /// remaining block, pick the one with the lowest row index, then the
    /// lowest column index.
    pub fn compute(m: &LocalMatrix) -> SmithForm {
        let p = m.prime();
        let (rows, cols) = (m.rows(), m.cols());
        let mut d = m.clone();
        let mut u = LocalMatrix::identity(p, rows);
        let mut u_inv = LocalMatrix::identity(p, rows);
        let mut v = LocalMatrix::identity(p, cols);
        let mut v_inv = LocalMatrix::identity(p, cols);

        let mut t = 0usize;
        while t < rows && t < cols {
            // Locate the pivot in the block [t.., t..].
            let mut best: Option<(u64, usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if let Valuation::Finite(val) = d.entry(i, j).valuation() {
                        let better = match best {
                            None => true,
                            Some((bv, _, _)) => val < bv,
                        };
                        if better {
                            best = Some((val, i, j));
                        }
                    }
                }
            }
            let Some((_, pi, pj)) = best else { break };

            // Row swap is a left operation: track it in U and U^{-1}.
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            u_inv.swap_cols(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
            v_inv.swap_rows(t, pj);

            // Clear the rest of the pivot column and row; the quotients stay
            // in Z_(p) because the pivot has minimal valuation.
            let pivot = d.entry(t, t).clone();
            for i in (t + 1)..rows {
                if d.entry(i, t).is_zero() {
                    continue;
                }
                let c = -d.entry(i, t).div_exact(&pivot);
                d.add_multiple_of_row(i, t, &c);
                u.add_multiple_of_row(i, t, &c);
                u_inv.add_multiple_of_col(t, i, &-&c);
            }
            for j in (t + 1)..cols {
                if d.entry(t, j).is_zero() {
                    continue;
                }
                let c = -d.entry(t, j).div_exact(&pivot);
                d.add_multiple_of_col(j, t, &c);
                v.add_multiple_of_col(j, t, &c);
                v_inv.add_multiple_of_row(t, j, &-&c);
            }
            t += 1;
        }
        let rank = t;

        // Normalize each pivot u * p^e to exactly p^e by scaling the row.
        for i in 0..rank {
            let (unit, _) = d.entry(i, i).unit_and_exponent();
            if !unit.is_one() {
                let inv = unit.invert_unit();
                d.scale_row(i, &inv);
                u.scale_row(i, &inv);
                u_inv.scale_col_by(i, &unit);
            }
        }

        SmithForm {
            u,
            u_inv,
            v,
            v_inv,
            d,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The exponents `e_1 <= e_2 <= ...` of the diagonal entries `p^{e_i}`.
    pub fn diagonal_exponents(&self) -> Vec<u64> {
        (0..self.rank)
            .map(|i| match self.d.entry(i, i).valuation() {
                Valuation::Finite(v) => v,
                Valuation::Infinite => unreachable!("zero diagonal entry within the rank"),
            })
            .collect()
    }

    /// A basis of `ker M` as columns: the last `cols - rank` columns of `V`.
    pub fn kernel_basis(&self) -> LocalMatrix {
        let cols: Vec<usize> = (self.rank..self.v.cols()).collect();
        self.v.select_columns(&cols)
    }

    /// Coordinates of `x` in the column basis of `V`, i.e. `V^{-1} x`.
    pub fn v_inv_apply(&self, x: &[LocalScalar]) -> Vec<LocalScalar> {
        self.v_inv.apply(x)
    }
}

impl LocalMatrix {
    /// col_j *= c (used for inverse bookkeeping during normalization).
    fn scale_col_by(&mut self, j: usize, c: &LocalScalar) {
        for i in 0..self.rows() {
            let v = self.entry(i, j) * c;
            self.set(i, j, v);
        }
    }

    pub fn smith_normal_form(&self) -> SmithForm {
        SmithForm::compute(self)
    }

    /// Rank over the fraction field (equals the number of nonzero diagonal
    /// entries of the Smith form).
    pub fn rank(&self) -> usize {
        self.smith_normal_form().rank()
    }

    /// Decomposes `coker(M)` for `M : Z_(p)^cols -> Z_(p)^rows` into cyclic
    /// summands. Torsion summands `Z/p^e` come from diagonal entries `p^e`
    /// with `e >= 1` (entries `p^0` contribute nothing); uncovered target
    /// coordinates contribute free summands.
    pub fn cokernel_decomposition(&self) -> Vec<Cyclic> {
        let snf = self.smith_normal_form();
        let mut out = Vec::new();
        for _ in snf.rank()..self.rows() {
            out.push(Cyclic::Free);
        }
        let mut torsion: Vec<u64> = snf
            .diagonal_exponents()
            .into_iter()
            .filter(|&e| e > 0)
            .collect();
        torsion.sort_unstable();
        out.extend(torsion.into_iter().map(Cyclic::Torsion));
        out
    }
}

/// Solves `M x = b` exactly over `Z_(p)`, if a solution exists.
///
/// Writes `U M V = D`; then `M x = b` iff `D y = U b` with `x = V y`, which is
/// solvable iff each `(U b)_i` is divisible by `d_i` and vanishes beyond the
/// rank.
pub fn solve(m: &LocalMatrix, b: &[LocalScalar]) -> Option<Vec<LocalScalar>> {
    assert_eq!(b.len(), m.rows(), "rhs length mismatch");
    let snf = m.smith_normal_form();
    let ub = snf.u.apply(b);
    let mut y = Vec::with_capacity(m.cols());
    for (i, target) in ub.iter().enumerate().take(snf.rank()) {
        let d = snf.d.entry(i, i);
        if target.valuation() < d.valuation() {
            return None;
        }
        y.push(target.div_exact(d));
    }
    y.resize(m.cols(), LocalScalar::zero(m.prime()));
    for item in ub.iter().skip(snf.rank()) {
        if !item.is_zero() {
            return None;
        }
    }
    Some(snf.v.apply(&y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Prime;
    use alloc::vec;

    fn p2() -> Prime {
        Prime::new(2).unwrap()
    }

    fn check_factorization(m: &LocalMatrix) {
        let snf = m.smith_normal_form();
        // U M V = D, exactly.
        assert_eq!(snf.u.mul(m).mul(&snf.v), snf.d);
        // Inverses really invert.
        let idr = LocalMatrix::identity(m.prime(), m.rows());
        let idc = LocalMatrix::identity(m.prime(), m.cols());
        assert_eq!(snf.u.mul(&snf.u_inv), idr);
        assert_eq!(snf.u_inv.mul(&snf.u), idr);
        assert_eq!(snf.v.mul(&snf.v_inv), idc);
        assert_eq!(snf.v_inv.mul(&snf.v), idc);
        // Divisibility chain.
        let exps = snf.diagonal_exponents();
        assert!(exps.windows(2).all(|w| w[0] <= w[1]));
        // Diagonal entries are exact powers of p.
        for (i, e) in exps.iter().enumerate() {
            assert_eq!(*snf.d.entry(i, i), LocalScalar::prime_power(m.prime(), *e));
        }
    }

    #[test]
    fn snf_single_entry() {
        let m = LocalMatrix::from_ints(p2(), 1, 1, &[2]);
        let snf = m.smith_normal_form();
        assert_eq!(snf.d, LocalMatrix::from_ints(p2(), 1, 1, &[2]));
        check_factorization(&m);
    }

    #[test]
    fn snf_identity() {
        let m = LocalMatrix::identity(p2(), 3);
        let snf = m.smith_normal_form();
        assert_eq!(snf.d, LocalMatrix::identity(p2(), 3));
        assert_eq!(snf.rank(), 3);
    }

    #[test]
    fn snf_derived_example() {
        // Frozen from the minor-gcd oracle: elementary divisor exponents of
        // [[6,4],[4,8]] over Z_(2) are (1, 4), i.e. D = diag(2, 16); the
        // determinant valuation 5 = 1 + 4 cross-checks.
        let m = LocalMatrix::from_ints(p2(), 2, 2, &[6, 4, 4, 8]);
        let snf = m.smith_normal_form();
        assert_eq!(snf.diagonal_exponents(), vec![1, 4]);
        assert_eq!(snf.d, LocalMatrix::from_ints(p2(), 2, 2, &[2, 0, 0, 16]));
        check_factorization(&m);
    }

    #[test]
    fn snf_empty_and_zero() {
        let m = LocalMatrix::zero(p2(), 0, 3);
        let snf = m.smith_normal_form();
        assert_eq!(snf.rank(), 0);
        assert_eq!(snf.kernel_basis().cols(), 3);

        let z = LocalMatrix::zero(p2(), 2, 2);
        assert_eq!(z.smith_normal_form().rank(), 0);
        check_factorization(&z);
    }

    #[test]
    fn snf_rational_entries() {
        // 3/5 is a unit at p = 2; the form must normalize it to 1.
        let p = p2();
        let m = LocalMatrix::from_rows(
            p,
            vec![vec![
                LocalScalar::new(p, 3.into(), 5.into()).unwrap(),
                LocalScalar::from_int(p, 4),
            ]],
        )
        .unwrap();
        let snf = m.smith_normal_form();
        assert_eq!(snf.diagonal_exponents(), vec![0]);
        check_factorization(&m);
    }

    #[test]
    fn cokernel_examples() {
        // [2] : Z -> Z has cokernel Z/2.
        let m = LocalMatrix::from_ints(p2(), 1, 1, &[2]);
        assert_eq!(m.cokernel_decomposition(), vec![Cyclic::Torsion(1)]);
        // zero 2x2: two free summands.
        let z = LocalMatrix::zero(p2(), 2, 2);
        assert_eq!(z.cokernel_decomposition(), vec![Cyclic::Free, Cyclic::Free]);
        // derived example via SNF diag(2, 16).
        let m = LocalMatrix::from_ints(p2(), 2, 2, &[6, 4, 4, 8]);
        assert_eq!(
            m.cokernel_decomposition(),
            vec![Cyclic::Torsion(1), Cyclic::Torsion(4)]
        );
        // unit diagonal contributes nothing.
        let u = LocalMatrix::from_ints(p2(), 2, 2, &[1, 0, 0, 4]);
        assert_eq!(u.cokernel_decomposition(), vec![Cyclic::Torsion(2)]);
    }

    #[test]
    fn solve_examples() {
        let m = LocalMatrix::from_ints(p2(), 2, 2, &[6, 4, 4, 8]);
        // b = M * (1, 1) is certainly in the image.
        let b = vec![
            LocalScalar::from_int(p2(), 10),
            LocalScalar::from_int(p2(), 12),
        ];
        let x = solve(&m, &b).expect("solvable");
        assert_eq!(m.apply(&x), b);
        // (2, 4) needs x = (0, 1/2), which is not p-local at 2.
        let bad = vec![
            LocalScalar::from_int(p2(), 2),
            LocalScalar::from_int(p2(), 4),
        ];
        assert!(solve(&m, &bad).is_none());

        // 2x = 1 has no solution in Z_(2).
        let m = LocalMatrix::from_ints(p2(), 1, 1, &[2]);
        assert!(solve(&m, &[LocalScalar::one(p2())]).is_none());
        // but 2x = 6 does.
        let x = solve(&m, &[LocalScalar::from_int(p2(), 6)]).unwrap();
        assert_eq!(x[0], LocalScalar::from_int(p2(), 3));
    }
}
