use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arith::Prime;

/// The spectra whose Hurewicz-image indices are tabulated by closed formula.
///
/// `Cp` and `Hp` are the suspension spectra of the infinite complex and
/// quaternionic projective spaces (indices `n!` and `(2n)!/a(n)` in degrees
/// `2n` and `4n`), `MXi3` the quaternionic quasi-projective Thom spectrum
/// (index `a(n)(2n-1)!` in degree `4n+3`), and `W { prime, r }` the `r`-th
/// stable wedge summand of the suspended complex projective space at an odd
/// prime, whose cell in degree `2(p-1)k + 2r + 1` carries the complex
/// projective index at `m = (p-1)k + r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexFamily {
    Cp,
    Hp,
    MXi3,
    W { prime: u64, r: u32 },
}

impl fmt::Display for IndexFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexFamily::Cp => write!(f, "CP"),
            IndexFamily::Hp => write!(f, "HP"),
            IndexFamily::MXi3 => write!(f, "Mxi3"),
            IndexFamily::W { prime, r } => write!(f, "W_{r}(p={prime})"),
        }
    }
}

/// An index together with its p-valuation and the degree it lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HurewiczIndex {
    pub family: IndexFamily,
    pub n: u32,
    pub degree: i32,
    pub index: BigUint,
    pub valuation: u64,
    pub zero_mod_p: bool,
}

fn factorial(n: u32) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=u64::from(n) {
        acc *= k;
    }
    acc
}

/// `a(n) = 1` for even `n`, `2` for odd `n`.
pub fn a(n: u32) -> u32 {
    if n.is_multiple_of(2) {
        1
    } else {
        2
    }
}

fn valuation_of(k: &BigUint, p: u64) -> u64 {
    assert!(!k.is_zero());
    let p = BigUint::from(p);
    let mut v = 0;
    let mut k = k.clone();
    while (&k % &p).is_zero() {
        k /= &p;
        v += 1;
    }
    v
}

/// The Hurewicz image index of the degree-`n` member of the family, with its
/// valuation at the family's prime.
pub fn hurewicz_index(family: IndexFamily, n: u32) -> HurewiczIndex {
    let (p, degree, index) = match family {
        IndexFamily::Cp => (2u64, 2 * n as i32, factorial(n)),
        IndexFamily::Hp => (2, 4 * n as i32, factorial(2 * n) / BigUint::from(a(n))),
        IndexFamily::MXi3 => (
            2,
            4 * n as i32 + 3,
            BigUint::from(a(n)) * factorial(2 * n - 1),
        ),
        IndexFamily::W { prime, r } => {
            let _ = Prime::new(prime).expect("family prime must be prime");
            let m = (prime as u32 - 1) * n + r;
            (
                prime,
                (2 * (prime as i32 - 1)) * n as i32 + 2 * r as i32 + 1,
                factorial(m),
            )
        }
    };
    let valuation = valuation_of(&index, p);
    HurewiczIndex {
        family,
        n,
        degree,
        index,
        valuation,
        zero_mod_p: valuation >= 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_projective_indices() {
        let h = hurewicz_index(IndexFamily::Cp, 2);
        assert_eq!(h.index, BigUint::from(2u32));
        assert_eq!(h.valuation, 1);
        assert!(h.zero_mod_p);
        assert_eq!(h.degree, 4);
        // bottom: index 1, not zero mod 2
        let h1 = hurewicz_index(IndexFamily::Cp, 1);
        assert_eq!(h1.index, BigUint::one());
        assert!(!h1.zero_mod_p);
    }

    #[test]
    fn quaternionic_indices() {
        // (2n)!/a(n): n = 1 gives 2/2 = 1, nonzero mod 2 at the bottom
        let h = hurewicz_index(IndexFamily::Hp, 1);
        assert_eq!(h.index, BigUint::one());
        assert_eq!(h.valuation, 0);
        assert!(!h.zero_mod_p);
        assert_eq!(h.degree, 4);
        // n = 2: 4!/1 = 24
        let h2 = hurewicz_index(IndexFamily::Hp, 2);
        assert_eq!(h2.index, BigUint::from(24u32));
        assert!(h2.zero_mod_p);
    }

    #[test]
    fn quasi_projective_indices() {
        // a(1) * 1! = 2: zero mod 2 already at n = 1
        let h = hurewicz_index(IndexFamily::MXi3, 1);
        assert_eq!(h.index, BigUint::from(2u32));
        assert!(h.zero_mod_p);
        assert_eq!(h.degree, 7);
    }

    #[test]
    fn wedge_summand_indices() {
        // p = 3, r = 1: degrees 4k + 3, index ((p-1)k + r)!
        let h0 = hurewicz_index(IndexFamily::W { prime: 3, r: 1 }, 0);
        assert_eq!(h0.degree, 3);
        assert_eq!(h0.index, BigUint::one());
        assert!(!h0.zero_mod_p);
        let h1 = hurewicz_index(IndexFamily::W { prime: 3, r: 1 }, 1);
        assert_eq!(h1.degree, 7);
        assert_eq!(h1.index, BigUint::from(6u32)); // 3!
        assert_eq!(h1.valuation, 1);
        assert!(h1.zero_mod_p);
    }
}
