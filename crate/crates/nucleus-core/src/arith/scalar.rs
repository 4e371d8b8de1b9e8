use alloc::string::ToString;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ArithError;

/// A prime number `p >= 2`, the localization prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    /// Checks primality by trial division; the primes used here are tiny.
    pub fn new(p: u64) -> Result<Self, ArithError> {
        if p < 2 {
            return Err(ArithError::NotPrime(p));
        }
        let mut d = 2u64;
        while d * d <= p {
            if p.is_multiple_of(d) {
                return Err(ArithError::NotPrime(p));
            }
            d += 1;
        }
        Ok(Prime(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn to_bigint(self) -> BigInt {
        BigInt::from(self.0)
    }

    pub fn is_two(self) -> bool {
        self.0 == 2
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The `p`-adic valuation of an element of `Z_(p)`; zero has valuation infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Valuation {
    Finite(u64),
    Infinite,
}

impl Valuation {
    pub fn is_positive(self) -> bool {
        !matches!(self, Valuation::Finite(0))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
            (Valuation::Finite(_), Valuation::Infinite) => Ordering::Less,
            (Valuation::Infinite, Valuation::Finite(_)) => Ordering::Greater,
            (Valuation::Infinite, Valuation::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// An element of `Z_(p)`: a rational in lowest terms whose denominator is
/// coprime to `p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LocalScalar {
    prime: Prime,
    value: BigRational,
}

impl LocalScalar {
    /// Builds `num/den`, reducing to lowest terms and rejecting denominators
    /// divisible by `p`.
    pub fn new(prime: Prime, num: BigInt, den: BigInt) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        let value = BigRational::new(num, den);
        if value.denom().mod_floor(&prime.to_bigint()).is_zero() {
            return Err(ArithError::DenominatorDivisibleByP {
                prime: prime.get(),
                denominator: value.denom().to_string(),
            });
        }
        Ok(LocalScalar { prime, value })
    }

    pub fn from_int(prime: Prime, n: impl Into<BigInt>) -> Self {
        LocalScalar {
            prime,
            value: BigRational::from_integer(n.into()),
        }
    }

    /// Parses `"num/den"` or `"num"` notation.
    pub fn parse(prime: Prime, s: &str) -> Result<Self, ArithError> {
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num: BigInt = n
            .trim()
            .parse()
            .map_err(|_| ArithError::BadScalar(s.to_string()))?;
        let den: BigInt = d
            .trim()
            .parse()
            .map_err(|_| ArithError::BadScalar(s.to_string()))?;
        LocalScalar::new(prime, num, den)
    }

    pub fn zero(prime: Prime) -> Self {
        Self::from_int(prime, 0)
    }

    pub fn one(prime: Prime) -> Self {
        Self::from_int(prime, 1)
    }

    /// `p^e` as a scalar.
    pub fn prime_power(prime: Prime, e: u64) -> Self {
        LocalScalar {
            prime,
            value: BigRational::from_integer(prime.to_bigint().pow(e as u32)),
        }
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn numer(&self) -> &BigInt {
        self.value.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.value.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.value.is_one()
    }

    /// The exponent `v` in the unique factorization `unit * p^v`.
    ///
    /// Since the denominator is coprime to `p` this is the valuation of the
    /// numerator. Zero gets [`Valuation::Infinite`].
    pub fn valuation(&self) -> Valuation {
        if self.is_zero() {
            return Valuation::Infinite;
        }
        let p = self.prime.to_bigint();
        let mut n = self.value.numer().abs();
        let mut v = 0u64;
        loop {
            let (q, r) = n.div_rem(&p);
            if r.is_zero() {
                v += 1;
                n = q;
            } else {
                return Valuation::Finite(v);
            }
        }
    }

    /// True iff the element is invertible in `Z_(p)`, i.e. has valuation 0.
    pub fn is_unit(&self) -> bool {
        matches!(self.valuation(), Valuation::Finite(0))
    }

    /// Splits `self = unit * p^v`, returning `(unit, v)`. Panics on zero.
    pub fn unit_and_exponent(&self) -> (LocalScalar, u64) {
        let v = match self.valuation() {
            Valuation::Finite(v) => v,
            Valuation::Infinite => panic!("zero has no unit factorization"),
        };
        let pe = BigRational::from_integer(self.prime.to_bigint().pow(v as u32));
        (
            LocalScalar {
                prime: self.prime,
                value: &self.value / pe,
            },
            v,
        )
    }

    /// Multiplicative inverse, defined only for units of `Z_(p)`.
    pub fn invert_unit(&self) -> LocalScalar {
        assert!(self.is_unit(), "attempted to invert a non-unit of Z_(p)");
        LocalScalar {
            prime: self.prime,
            value: self.value.recip(),
        }
    }

    /// Exact division; the quotient must again lie in `Z_(p)`
    /// (i.e. `valuation(self) >= valuation(rhs)`).
    pub fn div_exact(&self, rhs: &LocalScalar) -> LocalScalar {
        self.assert_same_prime(rhs);
        assert!(!rhs.is_zero(), "division by zero in Z_(p)");
        let q = LocalScalar {
            prime: self.prime,
            value: &self.value / &rhs.value,
        };
        debug_assert!(
            !q.value.denom().mod_floor(&self.prime.to_bigint()).is_zero(),
            "inexact division in Z_(p)"
        );
        q
    }

    /// Image in the residue field `F_p`, as a representative in `0..p`.
    pub fn residue(&self) -> u64 {
        use num_traits::ToPrimitive;
        let p = self.prime.to_bigint();
        let n = self
            .value
            .numer()
            .mod_floor(&p)
            .to_u64()
            .expect("residue fits");
        let d = self
            .value
            .denom()
            .mod_floor(&p)
            .to_u64()
            .expect("residue fits");
        debug_assert!(d != 0);
        (n * crate::fp::inv_mod(d, self.prime.get())) % self.prime.get()
    }

    fn assert_same_prime(&self, rhs: &LocalScalar) {
        assert_eq!(
            self.prime, rhs.prime,
            "mixed localization primes: {} vs {}",
            self.prime, rhs.prime
        );
    }
}

impl fmt::Display for LocalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.value.denom().is_one() {
            write!(f, "{}", self.value.numer())
        } else {
            write!(f, "{}/{}", self.value.numer(), self.value.denom())
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for &LocalScalar {
            type Output = LocalScalar;
            fn $method(self, rhs: &LocalScalar) -> LocalScalar {
                self.assert_same_prime(rhs);
                LocalScalar { prime: self.prime, value: &self.value $op &rhs.value }
            }
        }
        impl $trait for LocalScalar {
            type Output = LocalScalar;
            fn $method(self, rhs: LocalScalar) -> LocalScalar {
                (&self).$method(&rhs)
            }
        }
    };
}

scalar_binop!(Add, add, +);
scalar_binop!(Sub, sub, -);
scalar_binop!(Mul, mul, *);

impl Neg for &LocalScalar {
    type Output = LocalScalar;
    fn neg(self) -> LocalScalar {
        LocalScalar {
            prime: self.prime,
            value: -&self.value,
        }
    }
}

impl Neg for LocalScalar {
    type Output = LocalScalar;
    fn neg(self) -> LocalScalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn primality() {
        assert!(Prime::new(2).is_ok());
        assert!(Prime::new(3).is_ok());
        assert!(Prime::new(97).is_ok());
        assert!(Prime::new(1).is_err());
        assert!(Prime::new(0).is_err());
        assert!(Prime::new(91).is_err()); // 7 * 13
    }

    #[test]
    fn valuation_examples() {
        // 12 = 4 * 3 at p = 2
        let x = LocalScalar::from_int(p(2), 12);
        assert_eq!(x.valuation(), Valuation::Finite(2));
        // zero at any prime
        assert_eq!(LocalScalar::zero(p(5)).valuation(), Valuation::Infinite);
        // 5/2 is a unit in Z_(3)
        let u = LocalScalar::new(p(3), 5.into(), 2.into()).unwrap();
        assert_eq!(u.valuation(), Valuation::Finite(0));
        assert!(u.is_unit());
    }

    #[test]
    fn rejects_p_in_denominator() {
        assert!(LocalScalar::new(p(2), 1.into(), 2.into()).is_err());
        assert!(LocalScalar::new(p(3), 7.into(), 12.into()).is_err());
        // 1/2 is fine at p = 3
        assert!(LocalScalar::new(p(3), 1.into(), 2.into()).is_ok());
    }

    #[test]
    fn unit_factorization() {
        let x = LocalScalar::new(p(2), 24.into(), 5.into()).unwrap();
        let (u, v) = x.unit_and_exponent();
        assert_eq!(v, 3);
        assert!(u.is_unit());
        let back = u * LocalScalar::prime_power(p(2), v);
        assert_eq!(back, LocalScalar::new(p(2), 24.into(), 5.into()).unwrap());
    }

    #[test]
    fn residue_field() {
        assert_eq!(LocalScalar::from_int(p(2), 7).residue(), 1);
        assert_eq!(LocalScalar::from_int(p(2), -4).residue(), 0);
        // 1/2 = 2^{-1} = 2 mod 3
        let h = LocalScalar::new(p(3), 1.into(), 2.into()).unwrap();
        assert_eq!(h.residue(), 2);
    }

    #[test]
    fn display_shortest_form() {
        use alloc::string::ToString;
        assert_eq!(LocalScalar::from_int(p(2), 6).to_string(), "6");
        assert_eq!(
            LocalScalar::new(p(2), 3.into(), 5.into())
                .unwrap()
                .to_string(),
            "3/5"
        );
        assert_eq!(
            LocalScalar::new(p(2), (-3).into(), 5.into())
                .unwrap()
                .to_string(),
            "-3/5"
        );
    }
}
