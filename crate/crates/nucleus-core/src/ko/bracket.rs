use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::element::{ko_group, ko_mul, KoElement, KoGroup, KoGroupKind};
use super::stems::StableStemTable;
use super::KoError;

/// The third slot of a bracket: a concrete ring element, or a formal
/// even-degree class of an abstract spectrum mapping to the ring (for which
/// products with `nu` and `sigma` vanish by hypothesis).
#[derive(Clone, Debug)]
pub enum BracketC {
    Ko(KoElement),
    FormalEvenSlot { degree: u32 },
}

impl BracketC {
    pub fn degree(&self) -> u32 {
        match self {
            BracketC::Ko(x) => x.degree(),
            BracketC::FormalEvenSlot { degree } => *degree,
        }
    }
}

impl core::fmt::Display for BracketC {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            BracketC::Ko(x) => write!(f, "{x}"),
            BracketC::FormalEvenSlot { degree } => write!(f, "<even slot, degree {degree}>"),
        }
    }
}

/// Why a bracket fails to be defined.
#[derive(Clone, Debug)]
pub enum BracketFailure {
    /// `a b != 0` in the stems.
    AbNonzero {
        multiple: BigInt,
        name: &'static str,
        order: u64,
    },
    /// `b c != 0`; carries the offending product.
    BcNonzero {
        product: KoElement,
    },
    /// `b c = 0` cannot be certified for a formal slot.
    FormalSlotUncertified {
        name: &'static str,
    },
    Table(KoError),
}

impl core::fmt::Display for BracketFailure {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            BracketFailure::AbNonzero {
                multiple,
                name,
                order,
            } => {
                write!(
                    f,
                    "a.b != 0: {multiple} * {name} has order {order} in the stems"
                )
            }
            BracketFailure::BcNonzero { product } => write!(f, "b.c != 0: product {product}"),
            BracketFailure::FormalSlotUncertified { name } => {
                write!(
                    f,
                    "b.c = 0 not certified: no vanishing hypothesis for {name} on the slot"
                )
            }
            BracketFailure::Table(e) => write!(f, "{e}"),
        }
    }
}

/// The indeterminacy subgroup `a pi_{|b|+|c|+1} + (pi_{|a|+|b|+1} S) c` of a
/// defined bracket, with its containment in `2 pi` decided.
#[derive(Clone, Debug)]
pub struct Indeterminacy {
    pub degree: u32,
    /// The `a . pi_degree` part: the integer multiple and the group.
    pub scalar_multiple: BigInt,
    pub group: KoGroup,
    /// Generators of the stem-action part `(pi_{|a|+|b|+1} S) . c`.
    pub stem_part: Vec<KoElement>,
    /// Every member lies in `2 pi_degree`.
    pub contained_in_two_pi: bool,
}

impl core::fmt::Display for Indeterminacy {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{} * pi_{}", self.scalar_multiple, self.degree)?;
        let nonzero: Vec<String> = self
            .stem_part
            .iter()
            .filter(|x| !x.is_zero())
            .map(|x| format!("{x}"))
            .collect();
        if !nonzero.is_empty() {
            write!(f, " + <{}>", nonzero.join(", "))?;
        }
        write!(
            f,
            " ({} 2*pi_{})",
            if self.contained_in_two_pi {
                "inside"
            } else {
                "escapes"
            },
            self.degree
        )
    }
}

/// A recorded bracket `<a, b, c>` with `a` an integer, `b` a named stem
/// element and `c` a ring element or formal slot. The record never claims a
/// value, only definedness and indeterminacy.
#[derive(Clone, Debug)]
pub struct BracketRecord {
    pub label: String,
    pub a: BigInt,
    pub b: &'static str,
    pub c: BracketC,
    pub degree: u32,
    pub indeterminacy: Indeterminacy,
}

/// Checks `a b = 0` in the stems and `b c = 0` in the ring (or by the
/// even-degree hypothesis for formal slots).
pub fn bracket_defined(
    table: &StableStemTable,
    a: impl Into<BigInt>,
    b: &str,
    c: &BracketC,
) -> Result<(), BracketFailure> {
    let a: BigInt = a.into();
    let b = table.find(b).map_err(BracketFailure::Table)?;

    let ab_zero = match b.order {
        0 => a.is_zero(),
        d => (&a % BigInt::from(d)).is_zero(),
    };
    if !ab_zero {
        return Err(BracketFailure::AbNonzero {
            multiple: a,
            name: b.name,
            order: b.order,
        });
    }

    match c {
        BracketC::Ko(x) => {
            let product = ko_mul(&b.ko_image, x);
            if product.is_zero() {
                Ok(())
            } else {
                Err(BracketFailure::BcNonzero { product })
            }
        }
        BracketC::FormalEvenSlot { degree } => {
            // the hypothesis kills nu and sigma on even-degree classes
            if degree % 2 == 0 && (b.name == "nu" || b.name == "sigma") {
                Ok(())
            } else {
                Err(BracketFailure::FormalSlotUncertified { name: b.name })
            }
        }
    }
}

/// Computes the indeterminacy of a defined bracket on the ring side:
/// `a . pi_{|b|+|c|+1}` plus the images of the stems in degree `|b|+1`
/// multiplied into `c`.
pub fn bracket_indeterminacy(
    table: &StableStemTable,
    a: impl Into<BigInt>,
    b: &str,
    c: &BracketC,
) -> Result<Indeterminacy, BracketFailure> {
    let a: BigInt = a.into();
    bracket_defined(table, a.clone(), b, c)?;
    let b = table.find(b).map_err(BracketFailure::Table)?;
    let degree = b.degree + c.degree() + 1;
    let group = ko_group(degree);

    let stem_degree = b.degree + 1;
    let mut stem_part = Vec::new();
    if stem_degree <= table.max_degree() {
        if let BracketC::Ko(x) = c {
            for s in table.group(stem_degree).map_err(BracketFailure::Table)? {
                stem_part.push(ko_mul(&s.ko_image, x));
            }
        }
    }

    let scalar_contained = match group.kind {
        KoGroupKind::Zero => true,
        KoGroupKind::Free => a.is_even(),
        // 2 pi = 0 in torsion degrees, so only the zero multiple is inside
        KoGroupKind::OrderTwo => a.is_even(),
    };
    let stems_contained = stem_part.iter().all(KoElement::lies_in_two_pi);

    Ok(Indeterminacy {
        degree,
        scalar_multiple: a,
        group,
        stem_part,
        contained_in_two_pi: scalar_contained && stems_contained,
    })
}

/// The three bracket families that reach every free positive degree:
/// `a_1 = <8, nu, e>`, then `b_k = <16, sigma, beta^{k-1}>` and
/// `a_{k+1} = <16, sigma, alpha beta^{k-1}>` for `k = 1..max_k`.
pub fn family_brackets(max_k: u32) -> Result<Vec<BracketRecord>, BracketFailure> {
    let table = StableStemTable::new();
    let mut out = Vec::new();
    let push = |out: &mut Vec<BracketRecord>,
                label: String,
                a: i64,
                b: &'static str,
                c: KoElement|
     -> Result<(), BracketFailure> {
        let c = BracketC::Ko(c);
        let indeterminacy = bracket_indeterminacy(&table, a, b, &c)?;
        let b_deg = table.find(b).map_err(BracketFailure::Table)?.degree;
        out.push(BracketRecord {
            label,
            a: BigInt::from(a),
            b,
            degree: b_deg + c.degree() + 1,
            c,
            indeterminacy,
        });
        Ok(())
    };

    push(&mut out, "a_1".into(), 8, "nu", KoElement::unit())?;
    for k in 1..=max_k {
        push(
            &mut out,
            format!("b_{k}"),
            16,
            "sigma",
            KoElement::new(8 * (k - 1), 1),
        )?;
        push(
            &mut out,
            format!("a_{}", k + 1),
            16,
            "sigma",
            KoElement::new(8 * (k - 1) + 4, 1),
        )?;
    }
    Ok(out)
}
