//! Dense linear algebra over the prime field `F_p`.
//!
//! Entries are `u64` representatives in `0..p`. Everything here is plain
//! Gaussian elimination; the matrices that arise (chain complexes mod `p`,
//! degreewise pieces of Steenrod modules) are small.

use alloc::vec;
use alloc::vec::Vec;

/// Inverse mod a prime, by Fermat's little theorem.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p), "attempted to invert 0 mod {p}");
    pow_mod(a % p, p - 2, p)
}

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Binomial coefficient mod `p`, via Lucas' theorem. Zero whenever `k < 0`,
/// `n < 0` or `k > n`.
pub fn binom_mod(n: i64, k: i64, p: u64) -> u64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let (mut n, mut k) = (n as u64, k as u64);
    let mut acc = 1u64;
    while n > 0 || k > 0 {
        let (nd, kd) = (n % p, k % p);
        if kd > nd {
            return 0;
        }
        acc = acc * binom_small(nd, kd, p) % p;
        n /= p;
        k /= p;
    }
    acc
}

fn binom_small(n: u64, k: u64, p: u64) -> u64 {
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..k {
        num = num * ((n - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    num * inv_mod(den, p) % p
}

/// A dense matrix over `F_p`, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpMatrix {
    pub p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl FpMatrix {
    pub fn zero(p: u64, rows: usize, cols: usize) -> Self {
        FpMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zero(p, n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(p: u64, grid: &[Vec<u64>]) -> Self {
        let rows = grid.len();
        let cols = grid.first().map_or(0, Vec::len);
        let mut m = Self::zero(p, rows, cols);
        for (i, row) in grid.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m[(i, j)] = v % p;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn mul(&self, rhs: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimension mismatch");
        assert_eq!(self.p, rhs.p);
        let mut out = FpMatrix::zero(self.p, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] = (out[(i, j)] + a * rhs[(k, j)]) % self.p;
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a = (*a + *b) % self.p;
        }
        out
    }

    pub fn scale(&self, c: u64) -> FpMatrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = *a * (c % self.p) % self.p;
        }
        out
    }

    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = 0u64;
                for k in 0..self.cols {
                    acc = (acc + self[(i, k)] * v[k]) % self.p;
                }
                acc
            })
            .collect()
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.cols);
        let mut out = FpMatrix::zero(self.p, self.rows + other.rows, self.cols);
        out.data[..self.data.len()].copy_from_slice(&self.data);
        out.data[self.data.len()..].copy_from_slice(&other.data);
        out
    }

    pub fn rank(&self) -> usize {
        self.clone().row_reduce().len()
    }

    /// In-place reduction to reduced row echelon form; returns the pivot
    /// column of each nonzero row.
    pub fn row_reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            let Some(pr) = (r..self.rows).find(|&i| self[(i, c)] != 0) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = inv_mod(self[(r, c)], self.p);
            for j in c..self.cols {
                self[(r, j)] = self[(r, j)] * inv % self.p;
            }
            for i in 0..self.rows {
                if i != r && self[(i, c)] != 0 {
                    let f = self[(i, c)];
                    for j in c..self.cols {
                        self[(i, j)] = (self[(i, j)] + (self.p - f) * self[(r, j)]) % self.p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Solves `M x = b`, if possible.
    pub fn solve(&self, b: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = FpMatrix::zero(self.p, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, self.cols)] = b[i] % self.p;
        }
        let pivots = aug.row_reduce();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![0u64; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug[(r, self.cols)];
        }
        Some(x)
    }

    /// A basis of the null space, as columns of the returned matrix.
    pub fn nullspace(&self) -> FpMatrix {
        let mut rr = self.clone();
        let pivots = rr.row_reduce();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = FpMatrix::zero(self.p, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            basis[(fc, k)] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                let v = rr[(r, fc)];
                if v != 0 {
                    basis[(pc, k)] = (self.p - v) % self.p;
                }
            }
        }
        basis
    }
}

impl core::ops::Index<(usize, usize)> for FpMatrix {
    type Output = u64;
    fn index(&self, (i, j): (usize, usize)) -> &u64 {
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for FpMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u64 {
        &mut self.data[i * self.cols + j]
    }
}

/// A subspace of `F_p^n` kept in reduced row echelon form, supporting
/// membership tests and canonical coordinates on the quotient space.
///
/// The quotient `F_p^n / W` gets the basis of non-pivot coordinates, in
/// increasing order; `reduce` eliminates pivot coordinates of a vector, and
/// `quotient_coords` reads off the non-pivot ones.
#[derive(Clone, Debug)]
pub struct RowSpace {
    p: u64,
    n: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(p: u64, n: usize) -> Self {
        RowSpace {
            p,
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows(p: u64, n: usize, rows: impl IntoIterator<Item = Vec<u64>>) -> Self {
        let mut s = Self::new(p, n);
        for r in rows {
            s.insert(r);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the stored rows (eliminating pivot coordinates).
    pub fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        assert_eq!(v.len(), self.n);
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let f = v[c] % self.p;
            if f != 0 {
                for j in 0..self.n {
                    v[j] = (v[j] + (self.p - f) * row[j]) % self.p;
                }
            }
        }
        v
    }

    /// Inserts `v` into the span; returns true if it enlarged the space.
    pub fn insert(&mut self, v: Vec<u64>) -> bool {
        let mut v = self.reduce(v);
        let Some(c) = v.iter().position(|&x| x % self.p != 0) else {
            return false;
        };
        let inv = inv_mod(v[c], self.p);
        for x in v.iter_mut() {
            *x = *x * inv % self.p;
        }
        // Back-substitute into existing rows to keep the basis reduced.
        for (row, _) in self.rows.iter_mut().zip(&self.pivots) {
            let f = row[c];
            if f != 0 {
                for j in 0..self.n {
                    row[j] = (row[j] + (self.p - f) * v[j]) % self.p;
                }
            }
        }
        let at = self
            .pivots
            .iter()
            .position(|&pc| pc > c)
            .unwrap_or(self.pivots.len());
        self.pivots.insert(at, c);
        self.rows.insert(at, v);
        true
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v.to_vec()).iter().all(|&x| x % self.p == 0)
    }

    /// The stored reduced rows.
    pub fn rows_snapshot(&self) -> Vec<Vec<u64>> {
        self.rows.clone()
    }

    /// Indices not used as pivots: the canonical basis of the quotient.
    pub fn quotient_basis(&self) -> Vec<usize> {
        (0..self.n).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Coordinates of `v + W` in the quotient basis.
    pub fn quotient_coords(&self, v: Vec<u64>) -> Vec<u64> {
        let r = self.reduce(v);
        self.quotient_basis().into_iter().map(|c| r[c]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_binomials() {
        for p in [2u64, 3, 5, 7] {
            for a in 1..p {
                assert_eq!(a * inv_mod(a, p) % p, 1);
            }
        }
        // Pascal row 4 mod 2: 1 0 0 0 1
        assert_eq!(binom_mod(4, 0, 2), 1);
        assert_eq!(binom_mod(4, 1, 2), 0);
        assert_eq!(binom_mod(4, 4, 2), 1);
        assert_eq!(binom_mod(3, 1, 2), 1);
        assert_eq!(binom_mod(-1, 0, 2), 0);
        assert_eq!(binom_mod(2, 3, 5), 0);
        assert_eq!(binom_mod(6, 3, 3), binom_plain(6, 3) % 3);
    }

    fn binom_plain(n: u64, k: u64) -> u64 {
        let mut acc = 1u64;
        for i in 0..k {
            acc = acc * (n - i) / (i + 1);
        }
        acc
    }

    #[test]
    fn rank_and_nullspace() {
        let m = FpMatrix::from_rows(2, &[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.cols(), 1);
        let v: Vec<u64> = (0..3).map(|i| ns[(i, 0)]).collect();
        assert_eq!(m.apply(&v), vec![0, 0, 0]);
    }

    #[test]
    fn rowspace_quotient() {
        let mut w = RowSpace::new(3, 3);
        assert!(w.insert(vec![1, 2, 0]));
        assert!(!w.insert(vec![2, 4, 0]));
        assert!(w.insert(vec![0, 0, 2]));
        assert_eq!(w.dim(), 2);
        assert_eq!(w.quotient_basis(), vec![1]);
        // x + W where x = (1, 0, 1): reduce kills coords 0 and 2.
        let q = w.quotient_coords(vec![1, 0, 1]);
        assert_eq!(q.len(), 1);
        assert_eq!(q[0], 1); // (1,0,1) - (1,2,0) = (0,-2,1) ~ coord 1 = 1
    }
}
