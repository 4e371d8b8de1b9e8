use alloc::format;
use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::KoError;

/// Which abelian group a degree of the ring carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KoGroupKind {
    Free,
    OrderTwo,
    Zero,
}

/// One homotopy group of the ring with its normal-form generator name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoGroup {
    pub degree: u32,
    pub kind: KoGroupKind,
    pub generator: Option<String>,
}

impl fmt::Display for KoGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            KoGroupKind::Free => write!(f, "Z, generator {}", self.generator.as_ref().unwrap()),
            KoGroupKind::OrderTwo => {
                write!(f, "Z/2, generator {}", self.generator.as_ref().unwrap())
            }
            KoGroupKind::Zero => write!(f, "0"),
        }
    }
}

/// Normal-form generator name of a nonzero degree, if any.
fn generator_name(degree: u32) -> Option<String> {
    let k = degree / 8;
    let beta = |k: u32| -> String {
        match k {
            0 => String::new(),
            1 => "beta".into(),
            _ => format!("beta^{k}"),
        }
    };
    let join = |head: &str, tail: String| -> String {
        match (head.is_empty(), tail.is_empty()) {
            (true, true) => "e".into(),
            (true, false) => tail,
            (false, true) => head.into(),
            (false, false) => format!("{head}*{tail}"),
        }
    };
    match degree % 8 {
        0 => Some(join("", beta(k))),
        1 => Some(join("eta", beta(k))),
        2 => Some(join("eta2", beta(k))),
        4 => Some(join("alpha", beta(k))),
        _ => None,
    }
}

/// The familiar eight-fold periodic pattern `Z/2, Z/2, 0, Z, 0, 0, 0, Z`
/// (reading degrees `8k+1, 8k+2, ..., 8k+8`), with `Z` in degree 0.
pub fn ko_group(degree: u32) -> KoGroup {
    let kind = match degree % 8 {
        0 | 4 => KoGroupKind::Free,
        1 | 2 => KoGroupKind::OrderTwo,
        _ => KoGroupKind::Zero,
    };
    KoGroup {
        degree,
        kind,
        generator: generator_name(degree),
    }
}

/// An element in normal form: an exact coefficient against the canonical
/// generator of its degree. Degrees with zero group only carry zero; torsion
/// coefficients are kept reduced mod 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoElement {
    degree: u32,
    coeff: BigInt,
}

impl KoElement {
    pub fn new(degree: u32, coeff: impl Into<BigInt>) -> KoElement {
        let mut e = KoElement {
            degree,
            coeff: coeff.into(),
        };
        e.normalize();
        e
    }

    pub fn zero(degree: u32) -> KoElement {
        KoElement {
            degree,
            coeff: BigInt::zero(),
        }
    }

    pub fn unit() -> KoElement {
        KoElement::new(0, 1)
    }

    fn normalize(&mut self) {
        match ko_group(self.degree).kind {
            KoGroupKind::Zero => self.coeff = BigInt::zero(),
            KoGroupKind::OrderTwo => self.coeff = self.coeff.mod_floor(&BigInt::from(2)),
            KoGroupKind::Free => {}
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeff(&self) -> &BigInt {
        &self.coeff
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// Scalar multiple, renormalized.
    pub fn scale(&self, c: impl Into<BigInt>) -> KoElement {
        KoElement::new(self.degree, &self.coeff * c.into())
    }

    /// Membership in `2 pi_degree(ko)`: zero always qualifies; in torsion
    /// degrees `2 pi = 0`, in free degrees the coefficient must be even.
    pub fn lies_in_two_pi(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        match ko_group(self.degree).kind {
            KoGroupKind::Free => self.coeff.is_even(),
            KoGroupKind::OrderTwo => false,
            KoGroupKind::Zero => true,
        }
    }

    /// Parses a `*`-separated product of an optional integer coefficient and
    /// generator powers: `e`, `eta`, `eta2`, `alpha` (or `a`), `beta`/`b`
    /// with optional `^k`. The factors are multiplied out in the ring.
    pub fn parse(input: &str) -> Result<KoElement, KoError> {
        let input = input.trim();
        if input.is_empty() {
            return Err(KoError::BadElement(input.into()));
        }
        if input == "0" {
            return Ok(KoElement::zero(0));
        }
        let mut acc = KoElement::unit();
        for tok in input.split('*') {
            let tok = tok.trim();
            let factor = if let Ok(n) = tok.parse::<BigInt>() {
                KoElement::new(0, n)
            } else {
                let (base, power) = match tok.split_once('^') {
                    Some((b, p)) => (
                        b.trim(),
                        p.trim()
                            .parse::<u32>()
                            .map_err(|_| KoError::BadElement(tok.into()))?,
                    ),
                    None => (tok, 1),
                };
                let one_of = match base {
                    "e" => KoElement::unit(),
                    "eta" => KoElement::new(1, 1),
                    "eta2" => KoElement::new(2, 1),
                    "alpha" | "a" => KoElement::new(4, 1),
                    "beta" | "b" => KoElement::new(8, 1),
                    _ => return Err(KoError::BadElement(tok.into())),
                };
                let mut powed = KoElement::unit();
                for _ in 0..power {
                    powed = ko_mul(&powed, &one_of);
                }
                powed
            };
            acc = ko_mul(&acc, &factor);
        }
        Ok(acc)
    }
}

impl fmt::Display for KoElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 (degree {})", self.degree);
        }
        let name = generator_name(self.degree).expect("nonzero element in a nonzero group");
        if self.coeff.is_one() {
            write!(f, "{name}")
        } else if name == "e" {
            write!(f, "{}", self.coeff)
        } else {
            write!(f, "{}*{}", self.coeff, name)
        }
    }
}

/// Decomposition of a degree's generator into exponents of the three ring
/// generators: `(eta, alpha, beta)` powers.
fn exponents(degree: u32) -> (u32, u32, u32) {
    let k = degree / 8;
    match degree % 8 {
        0 => (0, 0, k),
        1 => (1, 0, k),
        2 => (2, 0, k),
        4 => (0, 1, k),
        _ => unreachable!("no generator in degree {degree}"),
    }
}

/// Product in normal form, applying the four relations
/// `2 eta = eta^3 = eta alpha = 0` and `alpha^2 = 4 beta`.
pub fn ko_mul(x: &KoElement, y: &KoElement) -> KoElement {
    let degree = x.degree + y.degree;
    if x.is_zero() || y.is_zero() {
        return KoElement::zero(degree);
    }
    let (ex, ax, bx) = exponents(x.degree);
    let (ey, ay, by) = exponents(y.degree);
    let (eta, alpha, mut beta) = (ex + ey, ax + ay, bx + by);
    let mut coeff = &x.coeff * &y.coeff;
    if eta >= 3 || (eta >= 1 && alpha >= 1) {
        return KoElement::zero(degree);
    }
    let mut alpha = alpha;
    if alpha == 2 {
        // alpha^2 = 4 beta
        alpha = 0;
        beta += 1;
        coeff *= 4;
    }
    debug_assert_eq!(eta + 4 * alpha + 8 * beta, degree);
    KoElement::new(degree, coeff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn group_pattern_through_32() {
        let expected = |n: u32| match n % 8 {
            0 | 4 => KoGroupKind::Free,
            1 | 2 => KoGroupKind::OrderTwo,
            _ => KoGroupKind::Zero,
        };
        for n in 0..=32 {
            assert_eq!(ko_group(n).kind, expected(n), "degree {n}");
        }
        assert_eq!(ko_group(1).generator.as_deref(), Some("eta"));
        assert_eq!(ko_group(4).generator.as_deref(), Some("alpha"));
        assert_eq!(ko_group(12).generator.as_deref(), Some("alpha*beta"));
        assert_eq!(ko_group(16).generator.as_deref(), Some("beta^2"));
        assert_eq!(ko_group(9).generator.as_deref(), Some("eta*beta"));
    }

    #[test]
    fn defining_relations() {
        let eta = KoElement::new(1, 1);
        let alpha = KoElement::new(4, 1);
        let beta = KoElement::new(8, 1);
        // alpha^2 = 4 beta
        assert_eq!(ko_mul(&alpha, &alpha), beta.scale(4));
        // eta * alpha = 0
        assert!(ko_mul(&eta, &alpha).is_zero());
        // eta^3 = 0 via eta * eta2
        let eta2 = ko_mul(&eta, &eta);
        assert_eq!(eta2, KoElement::new(2, 1));
        assert!(ko_mul(&eta, &eta2).is_zero());
        // 2 eta = 0
        assert!(eta.scale(2).is_zero());
        assert!(KoElement::new(9, 2).is_zero());
    }

    #[test]
    fn periodicity_by_beta() {
        let beta = KoElement::new(8, 1);
        for n in 1..=24u32 {
            let g = ko_group(n);
            let gs = ko_group(n + 8);
            assert_eq!(g.kind, gs.kind);
            if let Some(gen) = g.generator {
                let shifted = ko_mul(&KoElement::parse(&gen).unwrap(), &beta);
                assert_eq!(
                    shifted,
                    KoElement::parse(gs.generator.as_ref().unwrap()).unwrap()
                );
            }
        }
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(KoElement::parse("a*a").unwrap().to_string(), "4*beta");
        assert_eq!(
            KoElement::parse("eta*beta").unwrap().to_string(),
            "eta*beta"
        );
        assert_eq!(
            KoElement::parse("2*beta^2").unwrap().to_string(),
            "2*beta^2"
        );
        assert_eq!(KoElement::parse("e").unwrap(), KoElement::unit());
        assert_eq!(KoElement::parse("3").unwrap().to_string(), "3");
        // 2*eta collapses to zero
        assert!(KoElement::parse("2*eta").unwrap().is_zero());
        assert!(KoElement::parse("eta^3").unwrap().is_zero());
        assert!(KoElement::parse("nonsense").is_err());
    }

    #[test]
    fn associative_and_commutative_through_64() {
        // all normal-form generators with unit coefficient, exhaustive
        let basis: alloc::vec::Vec<KoElement> = (0..=64u32)
            .filter_map(|n| ko_group(n).generator.map(|_| KoElement::new(n, 1)))
            .collect();
        for x in &basis {
            for y in &basis {
                if x.degree + y.degree > 64 {
                    continue;
                }
                assert_eq!(ko_mul(x, y), ko_mul(y, x));
                for z in &basis {
                    if x.degree + y.degree + z.degree > 64 {
                        continue;
                    }
                    assert_eq!(
                        ko_mul(&ko_mul(x, y), z),
                        ko_mul(x, &ko_mul(y, z)),
                        "associativity at {x}, {y}, {z}"
                    );
                }
            }
        }
    }
}
