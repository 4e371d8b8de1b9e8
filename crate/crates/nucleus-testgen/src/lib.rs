//! Seeded pseudo-random inputs for the nucleus test suites.
//!
//! Complexes are generated so that `d . d = 0` holds by construction: each
//! differential is drawn inside the cycle module of the one below it. The
//! generators are deterministic functions of the seed, so failures reproduce.

pub mod oracle;
pub mod steenrod_oracle;

use std::collections::BTreeMap;

use nucleus_core::arith::{LocalMatrix, LocalScalar, Prime};
use nucleus_core::chain::CellComplex;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Shape parameters for random complexes.
#[derive(Clone, Debug)]
pub struct ComplexGen {
    pub prime: u64,
    pub min_degree: i32,
    pub max_degree: i32,
    pub max_cells_per_degree: usize,
    pub max_exponent: u32,
    /// Chance that a coefficient in the differential sampling is zero.
    pub zero_bias: f64,
    /// Force a single cell in the bottom degree (a Hurewicz complex).
    pub hurewicz: bool,
}

impl Default for ComplexGen {
    fn default() -> Self {
        ComplexGen {
            prime: 2,
            min_degree: 0,
            max_degree: 12,
            max_cells_per_degree: 4,
            max_exponent: 3,
            zero_bias: 0.4,
            hurewicz: false,
        }
    }
}

impl ComplexGen {
    pub fn sample(&self, rng: &mut ChaCha8Rng) -> CellComplex {
        let prime = Prime::new(self.prime).expect("generator prime must be prime");
        let mut cells: BTreeMap<i32, Vec<String>> = BTreeMap::new();
        let mut counts: BTreeMap<i32, usize> = BTreeMap::new();
        for n in self.min_degree..=self.max_degree {
            let c = if self.hurewicz && n == self.min_degree {
                1
            } else {
                rng.gen_range(0..=self.max_cells_per_degree)
            };
            counts.insert(n, c);
            if c > 0 {
                cells.insert(n, (0..c).map(|i| format!("e.{n}.{i}")).collect());
            }
        }

        // Build differentials bottom-up: columns of d_{n+1} are random
        // Z_(p)-combinations of a basis of ker(d_n).
        let mut diffs: BTreeMap<i32, LocalMatrix> = BTreeMap::new();
        let mut below = LocalMatrix::zero(prime, 0, counts[&self.min_degree]);
        for n in (self.min_degree + 1)..=self.max_degree {
            let (rows, cols) = (counts[&(n - 1)], counts[&n]);
            let kernel = below.smith_normal_form().kernel_basis();
            let mut coeffs = LocalMatrix::zero(prime, kernel.cols(), cols);
            for i in 0..kernel.cols() {
                for j in 0..cols {
                    coeffs.set(i, j, self.scalar(prime, rng));
                }
            }
            let d = kernel.mul(&coeffs);
            debug_assert_eq!((d.rows(), d.cols()), (rows, cols));
            if !d.is_zero() {
                diffs.insert(n, d.clone());
            }
            below = d;
        }

        CellComplex::new(prime, self.min_degree, self.max_degree, false, cells, diffs)
            .expect("generated complex satisfies d.d = 0 by construction")
    }

    fn scalar(&self, prime: Prime, rng: &mut ChaCha8Rng) -> LocalScalar {
        if rng.gen_bool(self.zero_bias) {
            return LocalScalar::zero(prime);
        }
        let e = rng.gen_range(0..=self.max_exponent) as u64;
        let unit = loop {
            let u = rng.gen_range(-3i64..=3);
            if u != 0 && u.unsigned_abs() % prime.get() != 0 {
                break u;
            }
        };
        LocalScalar::from_int(prime, unit) * LocalScalar::prime_power(prime, e)
    }
}

/// A random invertible matrix over `Z_(p)`: a product of elementary row
/// operations, swaps, and unit row scalings applied to the identity.
pub fn random_unimodular(prime_val: u64, n: usize, rng: &mut ChaCha8Rng) -> LocalMatrix {
    let prime = Prime::new(prime_val).expect("prime");
    let mut m = LocalMatrix::identity(prime, n);
    if n == 0 {
        return m;
    }
    for _ in 0..(3 * n + 2) {
        match rng.gen_range(0..3) {
            0 => {
                let i = rng.gen_range(0..n);
                let j = rng.gen_range(0..n);
                m.swap_rows(i, j);
            }
            1 => {
                let i = rng.gen_range(0..n);
                let j = rng.gen_range(0..n);
                if i != j {
                    let c = LocalScalar::from_int(prime, rng.gen_range(-4i64..=4));
                    m.add_multiple_of_row(i, j, &c);
                }
            }
            _ => {
                let i = rng.gen_range(0..n);
                let u = if prime_val == 2 {
                    [1i64, -1, 3, -3, 5][rng.gen_range(0..5)]
                } else {
                    [1i64, -1, 2, -2][rng.gen_range(0..4)]
                };
                m.scale_row(i, &LocalScalar::from_int(prime, u));
            }
        }
    }
    m
}

/// A random word of Steenrod squares (p = 2) of total degree at most
/// `max_degree`.
pub fn random_sq_word(max_degree: u32, rng: &mut ChaCha8Rng) -> Vec<u32> {
    let mut left = max_degree;
    let mut word = Vec::new();
    while left > 0 && rng.gen_bool(0.8) {
        let i = rng.gen_range(1..=left);
        word.push(i);
        left -= i;
    }
    if word.is_empty() {
        word.push(rng.gen_range(1..=max_degree.max(1)));
    }
    word
}
