use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::scalar::{LocalScalar, Prime, Valuation};
use super::ArithError;

/// A dense rectangular matrix with entries in `Z_(p)`.
///
/// Rows and columns may be zero; a `0 x n` or `n x 0` matrix is a legitimate
/// map to or from the zero module.
#[derive(Clone, PartialEq, Eq)]
pub struct LocalMatrix {
    prime: Prime,
    rows: usize,
    cols: usize,
    entries: Vec<LocalScalar>,
}

impl LocalMatrix {
    pub fn zero(prime: Prime, rows: usize, cols: usize) -> Self {
        LocalMatrix {
            prime,
            rows,
            cols,
            entries: vec![LocalScalar::zero(prime); rows * cols],
        }
    }

    pub fn identity(prime: Prime, n: usize) -> Self {
        let mut m = Self::zero(prime, n, n);
        for i in 0..n {
            m.set(i, i, LocalScalar::one(prime));
        }
        m
    }

    /// Builds a matrix from a row-major grid of scalars.
    pub fn from_rows(prime: Prime, grid: Vec<Vec<LocalScalar>>) -> Result<Self, ArithError> {
        let rows = grid.len();
        let cols = grid.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows * cols);
        for row in grid {
            if row.len() != cols {
                return Err(ArithError::Shape {
                    expected: (rows, cols),
                    found: (rows, row.len()),
                });
            }
            for e in row {
                if e.prime() != prime {
                    return Err(ArithError::PrimeMismatch {
                        left: prime.get(),
                        right: e.prime().get(),
                    });
                }
                entries.push(e);
            }
        }
        Ok(LocalMatrix {
            prime,
            rows,
            cols,
            entries,
        })
    }

    /// Convenience constructor from machine integers, row major.
    pub fn from_ints(prime: Prime, rows: usize, cols: usize, data: &[i64]) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count mismatch");
        let entries = data
            .iter()
            .map(|&n| LocalScalar::from_int(prime, n))
            .collect();
        LocalMatrix {
            prime,
            rows,
            cols,
            entries,
        }
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &LocalScalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LocalScalar) {
        assert_eq!(v.prime(), self.prime, "mixed primes in matrix entry");
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(LocalScalar::is_zero)
    }

    /// True iff every entry has positive valuation (lies in `p Z_(p)`).
    pub fn is_zero_mod_p(&self) -> bool {
        self.entries.iter().all(|e| e.valuation().is_positive())
    }

    pub fn column(&self, j: usize) -> Vec<LocalScalar> {
        (0..self.rows).map(|i| self.entry(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> LocalMatrix {
        let mut t = LocalMatrix::zero(self.prime, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.entry(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &LocalMatrix) -> LocalMatrix {
        assert_eq!(self.prime, rhs.prime, "mixed primes in matrix product");
        assert_eq!(self.cols, rhs.rows, "inner dimension mismatch");
        let mut out = LocalMatrix::zero(self.prime, self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = LocalScalar::zero(self.prime);
                for k in 0..self.cols {
                    if !self.entry(i, k).is_zero() && !rhs.entry(k, j).is_zero() {
                        acc = acc + self.entry(i, k) * rhs.entry(k, j);
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn apply(&self, v: &[LocalScalar]) -> Vec<LocalScalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = LocalScalar::zero(self.prime);
                for (k, vk) in v.iter().enumerate() {
                    if !self.entry(i, k).is_zero() && !vk.is_zero() {
                        acc = acc + self.entry(i, k) * vk;
                    }
                }
                acc
            })
            .collect()
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &LocalMatrix) -> LocalMatrix {
        assert_eq!(self.rows, rhs.rows, "row count mismatch in hstack");
        assert_eq!(self.prime, rhs.prime);
        let mut out = LocalMatrix::zero(self.prime, self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.entry(i, j).clone());
            }
            for j in 0..rhs.cols {
                out.set(i, self.cols + j, rhs.entry(i, j).clone());
            }
        }
        out
    }

    /// Keeps the given columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> LocalMatrix {
        let mut out = LocalMatrix::zero(self.prime, self.rows, cols.len());
        for (jj, &j) in cols.iter().enumerate() {
            for i in 0..self.rows {
                out.set(i, jj, self.entry(i, j).clone());
            }
        }
        out
    }

    /// Keeps rows `from..` (used to split stacked coordinates).
    pub fn rows_from(&self, from: usize) -> LocalMatrix {
        let mut out = LocalMatrix::zero(self.prime, self.rows - from, self.cols);
        for i in from..self.rows {
            for j in 0..self.cols {
                out.set(i - from, j, self.entry(i, j).clone());
            }
        }
        out
    }

    /// Scale row `i` by `c`.
    pub fn scale_row(&mut self, i: usize, c: &LocalScalar) {
        for j in 0..self.cols {
            let v = self.entry(i, j) * c;
            self.set(i, j, v);
        }
    }

    /// row_i += c * row_k
    pub fn add_multiple_of_row(&mut self, i: usize, k: usize, c: &LocalScalar) {
        for j in 0..self.cols {
            let v = self.entry(i, j) + &(self.entry(k, j) * c);
            self.set(i, j, v);
        }
    }

    /// col_j += c * col_k
    pub fn add_multiple_of_col(&mut self, j: usize, k: usize, c: &LocalScalar) {
        for i in 0..self.rows {
            let v = self.entry(i, j) + &(self.entry(i, k) * c);
            self.set(i, j, v);
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Minimal valuation over all entries, infinity for the zero matrix.
    pub fn min_valuation(&self) -> Valuation {
        self.entries
            .iter()
            .map(LocalScalar::valuation)
            .min()
            .unwrap_or(Valuation::Infinite)
    }

    /// Entry-wise reduction to `F_p`, row major.
    pub fn residues(&self) -> Vec<u64> {
        self.entries.iter().map(LocalScalar::residue).collect()
    }
}

impl fmt::Display for LocalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{} over Z_({})]", self.rows, self.cols, self.prime)?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LocalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
