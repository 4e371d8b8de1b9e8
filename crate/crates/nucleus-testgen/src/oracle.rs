//! Brute-force reference computations, independent of the elimination code.
//!
//! Elementary divisors are recovered from minors: over `Z_(p)` the gcd of the
//! `k x k` minors is `p` to the minimal valuation among them, and the `k`-th
//! divisor exponent is the difference of consecutive minima. Determinants are
//! expanded recursively (Laplace), so none of this shares a code path with
//! the Smith-form sweep it cross-checks.

use std::collections::BTreeMap;

use nucleus_core::arith::{Cyclic, LocalMatrix, LocalScalar, Valuation};
use nucleus_core::chain::{CellComplex, GradedModule};

/// Determinant by Laplace expansion along the first row.
pub fn det(m: &LocalMatrix) -> LocalScalar {
    assert_eq!(m.rows(), m.cols());
    let n = m.rows();
    if n == 0 {
        return LocalScalar::one(m.prime());
    }
    if n == 1 {
        return m.entry(0, 0).clone();
    }
    let mut acc = LocalScalar::zero(m.prime());
    for j in 0..n {
        if m.entry(0, j).is_zero() {
            continue;
        }
        let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
        let minor = m.rows_from(1).select_columns(&cols);
        let term = m.entry(0, j) * &det(&minor);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

fn select_rows(m: &LocalMatrix, rows: &[usize]) -> LocalMatrix {
    m.transpose().select_columns(rows).transpose()
}

/// Minimal valuation over all `k x k` minors; `None` if they all vanish.
fn minor_min_valuation(m: &LocalMatrix, k: usize) -> Option<u64> {
    let mut best: Option<u64> = None;
    for rows in combinations(m.rows(), k) {
        let rsel = select_rows(m, &rows);
        for cols in combinations(m.cols(), k) {
            let sub = rsel.select_columns(&cols);
            if let Valuation::Finite(v) = det(&sub).valuation() {
                best = Some(best.map_or(v, |b| b.min(v)));
            }
        }
    }
    best
}

/// Elementary divisor exponents `e_1 <= ... <= e_r` by the minor-gcd method.
pub fn divisor_exponents_by_minors(m: &LocalMatrix) -> Vec<u64> {
    let mut exps = Vec::new();
    let mut prev = 0u64;
    for k in 1..=m.rows().min(m.cols()) {
        match minor_min_valuation(m, k) {
            Some(v) => {
                exps.push(v - prev);
                prev = v;
            }
            None => break,
        }
    }
    exps
}

/// Rank as the largest `k` with a nonvanishing `k x k` minor.
pub fn rank_by_minors(m: &LocalMatrix) -> usize {
    divisor_exponents_by_minors(m).len()
}

/// Reference homology: in each degree, the free rank is
/// `cells - rank d_n - rank d_{n+1}` and the torsion exponents are the
/// positive divisor exponents of `d_{n+1}`, all obtained from minors.
pub fn homology_by_minors(c: &CellComplex) -> GradedModule {
    let mut summands: BTreeMap<i32, Vec<Cyclic>> = BTreeMap::new();
    for n in c.hurewicz_dim()..=c.reliable_top() {
        let d_n = c.differential(n);
        let d_up = c.differential(n + 1);
        let up_exps = divisor_exponents_by_minors(&d_up);
        let free = c.cell_count(n) - rank_by_minors(&d_n) - up_exps.len();
        let mut list: Vec<Cyclic> = (0..free).map(|_| Cyclic::Free).collect();
        list.extend(up_exps.into_iter().filter(|&e| e > 0).map(Cyclic::Torsion));
        if !list.is_empty() {
            summands.insert(n, list);
        }
    }
    let known_through = if c.is_truncated() {
        Some(c.reliable_top())
    } else {
        None
    };
    GradedModule::new(c.prime(), summands, known_through).expect("oracle summands valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use nucleus_core::arith::Prime;

    #[test]
    fn det_small() {
        let p = Prime::new(2).unwrap();
        let m = LocalMatrix::from_ints(p, 2, 2, &[6, 4, 4, 8]);
        assert_eq!(det(&m), LocalScalar::from_int(p, 32));
        let id = LocalMatrix::identity(p, 3);
        assert_eq!(det(&id), LocalScalar::one(p));
    }

    #[test]
    fn minor_divisors_match_hand_computation() {
        let p = Prime::new(2).unwrap();
        // frozen value used by the spec-level SNF test
        let m = LocalMatrix::from_ints(p, 2, 2, &[6, 4, 4, 8]);
        assert_eq!(divisor_exponents_by_minors(&m), vec![1, 4]);
        let z = LocalMatrix::zero(p, 3, 2);
        assert!(divisor_exponents_by_minors(&z).is_empty());
    }

    #[test]
    fn oracle_homology_of_moore() {
        let c = CellComplex::moore(Prime::new(2).unwrap(), 3, 1);
        let h = homology_by_minors(&c);
        assert_eq!(h.summands_at(1), &[Cyclic::Torsion(3)]);
        assert!(h.summands_at(2).is_empty());
    }
}
