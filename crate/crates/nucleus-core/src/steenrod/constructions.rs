use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::Prime;
use crate::fp::{binom_mod, FpMatrix};

use super::adem::AdmissibleElement;
use super::module::{FpModuleSpec, GeneratorSpec, Relation, TruncatedAModule};
use super::word::{Letter, SteenrodWord};
use super::SteenrodError;

/// The three infinite projective spaces with polynomial mod-2 cohomology
/// `F_2[x]`, distinguished by `|x| = d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProjectiveKind {
    /// real: d = 1
    RP,
    /// complex: d = 2
    CP,
    /// quaternionic: d = 4
    HP,
}

impl ProjectiveKind {
    pub fn class_degree(self) -> i32 {
        match self {
            ProjectiveKind::RP => 1,
            ProjectiveKind::CP => 2,
            ProjectiveKind::HP => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ProjectiveKind::RP => "RP",
            ProjectiveKind::CP => "CP",
            ProjectiveKind::HP => "HP",
        }
    }
}

/// Reduced cohomology of the infinite projective space as a module over the
/// mod-2 algebra: basis `x^n` (n >= 1) in degree `n d`, with
/// `Sq^{di} x^n = C(n, i) x^{n+i}` and squares outside multiples of `d`
/// acting by zero.
pub fn projective_module(kind: ProjectiveKind, bound: i32) -> TruncatedAModule {
    let prime = Prime::new(2).unwrap();
    let d = kind.class_degree();
    let powers: Vec<i32> = (1..).take_while(|&n| n * d <= bound).collect();
    build_monomial_module(prime, bound, d, &powers, 0, false, |n, i| {
        binom_mod(n as i64, i as i64, 2)
    })
}

/// Mod-2 cohomology of the Thom spectrum of the negated line bundle: a free
/// rank-one module over the projective space's cohomology on a class in
/// degree `-d`, with `Sq^{nd} u = x^n u`. Basis `x^n u` in degree `(n-1) d`;
/// by the Cartan formula `Sq^{dm}(x^n u)` carries coefficient
/// `sum_{a <= m} C(n, a)`.
pub fn thom_module(kind: ProjectiveKind, bound: i32) -> TruncatedAModule {
    let prime = Prime::new(2).unwrap();
    let d = kind.class_degree();
    let powers: Vec<i32> = (0..).take_while(|&n| (n - 1) * d <= bound).collect();
    build_monomial_module(prime, bound, d, &powers, 1, true, |n, m| {
        let mut acc = 0u64;
        for a in 0..=m {
            acc = (acc + binom_mod(n as i64, a as i64, 2)) % 2;
        }
        acc
    })
}

/// Common shape of the two families above: one basis monomial per listed
/// power, degree `(n - shift) d`, and `Sq^{dm}` acting with a binomial-type
/// coefficient into the monomial `m` steps up.
fn build_monomial_module(
    prime: Prime,
    bound: i32,
    d: i32,
    powers: &[i32],
    shift: i32,
    thom: bool,
    coefficient: impl Fn(i32, i32) -> u64,
) -> TruncatedAModule {
    let degree_of = |n: i32| (n - shift) * d;
    let label = |n: i32| -> String {
        match (thom, n) {
            (false, _) => format!("x^{n}"),
            (true, 0) => "u".into(),
            (true, _) => format!("x^{n} u"),
        }
    };
    let mut basis: BTreeMap<i32, Vec<String>> = BTreeMap::new();
    for &n in powers {
        basis.insert(degree_of(n), vec![label(n)]);
    }
    let mut actions: BTreeMap<Letter, BTreeMap<i32, FpMatrix>> = BTreeMap::new();
    for &n in powers {
        let src = degree_of(n);
        for m in 1.. {
            let dst = degree_of(n + m);
            if dst > bound {
                break;
            }
            if !powers.contains(&(n + m)) {
                continue;
            }
            let c = coefficient(n, m);
            if c == 0 {
                continue;
            }
            let mut mat = FpMatrix::zero(prime.get(), 1, 1);
            mat[(0, 0)] = c;
            actions
                .entry(Letter::Sq((m * d) as u32))
                .or_default()
                .insert(src, mat);
        }
    }
    TruncatedAModule::from_parts(prime, bound, basis, actions)
}

/// The Milnor primitive `Q_i` in admissible form. `Q_0` is `Sq^1` (p = 2) or
/// the Bockstein; the rest follow the commutator recursion
/// `Q_{i+1} = Sq^{2^{i+1}} Q_i + Q_i Sq^{2^{i+1}}` (resp. with `P^{p^i}`).
pub fn milnor_primitive(prime: Prime, i: u32) -> AdmissibleElement {
    let p = prime.get();
    let mut q = {
        let letter = if p == 2 { Letter::Sq(1) } else { Letter::Beta };
        let mut e = AdmissibleElement::zero(prime);
        e.add_term(1, vec![letter]);
        e
    };
    for k in 0..i {
        let letter = if p == 2 {
            Letter::Sq(1 << (k + 1))
        } else {
            Letter::P((p as u32).pow(k))
        };
        let mut gen = AdmissibleElement::zero(prime);
        gen.add_term(1, vec![letter]);
        // commutator; the sign collapses mod 2
        q = gen.mul(&q).add(&q.mul(&gen).scale(p - 1));
    }
    q
}

/// Finite subalgebra families whose quotients `A//B` the fixture library
/// uses: `A(n)` generated by `Sq^1 ... Sq^{2^n}` at p = 2, and the exterior
/// algebras `E(n)` on the Milnor primitives `Q_0 ... Q_n` at any prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubalgebraFamily {
    A(u32),
    E(u32),
}

impl SubalgebraFamily {
    pub fn parse(s: &str) -> Result<Self, SteenrodError> {
        let body = s.trim();
        let (kind, arg) = body
            .split_once('(')
            .and_then(|(k, rest)| rest.strip_suffix(')').map(|a| (k.trim(), a.trim())))
            .ok_or_else(|| SteenrodError::BadFamily(body.into()))?;
        let n: u32 = arg
            .parse()
            .map_err(|_| SteenrodError::BadFamily(body.into()))?;
        match kind {
            "A" => Ok(SubalgebraFamily::A(n)),
            "E" => Ok(SubalgebraFamily::E(n)),
            _ => Err(SteenrodError::BadFamily(body.into())),
        }
    }
}

impl core::fmt::Display for SubalgebraFamily {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SubalgebraFamily::A(n) => write!(f, "A({n})"),
            SubalgebraFamily::E(n) => write!(f, "E({n})"),
        }
    }
}

/// Presentation of the cyclic module `A//B`: one degree-0 generator killed by
/// the algebra generators of `B`. (Since `B+ = sum_g B g` as a right module
/// over `B`, the left ideal `A B+` is generated by the `g` alone.)
pub fn subalgebra_quotient_spec(
    prime: Prime,
    family: SubalgebraFamily,
) -> Result<FpModuleSpec, SteenrodError> {
    let p = prime.get();
    let generator = GeneratorSpec {
        name: "x".into(),
        degree: 0,
    };
    let relations: Vec<Relation> = match family {
        SubalgebraFamily::A(n) => {
            if p != 2 {
                return Err(SteenrodError::NeedsPrimeTwo { prime: p });
            }
            (0..=n)
                .map(|i| Relation {
                    terms: vec![(1, SteenrodWord::squares(&[1 << i]), 0)],
                })
                .collect()
        }
        SubalgebraFamily::E(n) => (0..=n)
            .map(|i| {
                let q = milnor_primitive(prime, i);
                Relation {
                    terms: q.terms().map(|(w, c)| (c, w, 0)).collect(),
                }
            })
            .collect(),
    };
    FpModuleSpec::new(prime, vec![generator], relations)
}

/// Realizes `A//B` up to the bound.
pub fn quotient_by_subalgebra(
    prime: Prime,
    family: SubalgebraFamily,
    bound: i32,
) -> Result<TruncatedAModule, SteenrodError> {
    subalgebra_quotient_spec(prime, family)?.realize(bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p2() -> Prime {
        Prime::new(2).unwrap()
    }

    #[test]
    fn projective_low_squares() {
        let rp = projective_module(ProjectiveKind::RP, 8);
        // Sq1 x = x^2 (squaring in the class degree)
        assert_eq!(rp.action(Letter::Sq(1), 1)[(0, 0)], 1);
        // Sq1 x^2 = C(2,1) x^3 = 0
        assert_eq!(rp.action(Letter::Sq(1), 2), FpMatrix::zero(2, 1, 1));

        let cp = projective_module(ProjectiveKind::CP, 12);
        // Sq2 x = x^2, Sq2 x^2 = C(2,1) x^3 = 0
        assert_eq!(cp.action(Letter::Sq(2), 2)[(0, 0)], 1);
        assert!(cp.action(Letter::Sq(2), 4).is_zero());
        // odd squares act by zero
        assert!(cp.action(Letter::Sq(3), 2).is_zero());

        let hp = projective_module(ProjectiveKind::HP, 16);
        assert_eq!(hp.action(Letter::Sq(4), 4)[(0, 0)], 1);
    }

    #[test]
    fn thom_class_formula() {
        for kind in [ProjectiveKind::RP, ProjectiveKind::CP, ProjectiveKind::HP] {
            let d = kind.class_degree();
            let x = thom_module(kind, 18);
            assert_eq!(x.bottom(), Some(-d));
            // Sq^{nd} u = x^n u for all n in range
            for n in 1..=((18 + d) / d) {
                let dst = (n - 1) * d;
                if dst > 18 {
                    continue;
                }
                let m = x.action(Letter::Sq((n * d) as u32), -d);
                assert_eq!(m[(0, 0)], 1, "{} Sq^{} u", kind.name(), n * d);
            }
        }
    }

    #[test]
    fn milnor_primitives_at_two() {
        assert_eq!(milnor_primitive(p2(), 0).to_string(), "Sq1");
        // Q1 = Sq2 Sq1 + Sq1 Sq2 = Sq2 Sq1 + Sq3
        assert_eq!(milnor_primitive(p2(), 1).to_string(), "Sq2 Sq1 + Sq3");
        // degree check: |Q_i| = 2^{i+1} - 1
        for i in 0..4 {
            for (w, _) in milnor_primitive(p2(), i).terms() {
                assert_eq!(w.degree(), (1 << (i + 1)) - 1);
            }
        }
    }

    #[test]
    fn milnor_primitives_at_three() {
        let p3 = Prime::new(3).unwrap();
        assert_eq!(milnor_primitive(p3, 0).to_string(), "b");
        // |Q_i| = 2 p^i - 1
        for i in 0..3 {
            let q = milnor_primitive(p3, i);
            assert!(!q.is_zero());
            for (w, _) in q.terms() {
                assert_eq!(w.degree(), 2 * 3u32.pow(i) - 1);
            }
        }
    }

    #[test]
    fn quotient_by_a0_dimensions() {
        // A//A(0): kill Sq1. Degrees 0..3 have dimensions 1, 0, 1, 1.
        let m = quotient_by_subalgebra(p2(), SubalgebraFamily::A(0), 6).unwrap();
        assert_eq!(m.dim(0), 1);
        assert_eq!(m.dim(1), 0);
        assert_eq!(m.dim(2), 1);
        assert_eq!(m.dim(3), 1);
        // E(0) = A(0) at p = 2
        let e = quotient_by_subalgebra(p2(), SubalgebraFamily::E(0), 6).unwrap();
        for n in 0..=6 {
            assert_eq!(m.dim(n), e.dim(n), "degree {n}");
        }
    }

    #[test]
    fn quotient_modules_are_monogenic() {
        for family in [SubalgebraFamily::A(1), SubalgebraFamily::E(1)] {
            let m = quotient_by_subalgebra(p2(), family, 12).unwrap();
            assert!(m.is_monogenic(), "{family} quotient should be cyclic");
        }
        let p3 = Prime::new(3).unwrap();
        let m = quotient_by_subalgebra(p3, SubalgebraFamily::E(1), 12).unwrap();
        assert!(m.is_monogenic());
    }

    #[test]
    fn family_parsing() {
        assert_eq!(
            SubalgebraFamily::parse("A(1)").unwrap(),
            SubalgebraFamily::A(1)
        );
        assert_eq!(
            SubalgebraFamily::parse("E(2)").unwrap(),
            SubalgebraFamily::E(2)
        );
        assert!(SubalgebraFamily::parse("B(1)").is_err());
        assert!(SubalgebraFamily::parse("A1").is_err());
    }
}
