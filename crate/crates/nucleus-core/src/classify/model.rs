use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::arith::Prime;
use crate::chain::GradedModule;
use crate::steenrod::TruncatedAModule;

use super::nuclear::SkeletalHomotopyData;
use super::ClassifyError;

/// What is known about the Hurewicz image in one degree.
///
/// On a degree where the integral homology is free of rank one the image is
/// a subgroup `k Z_(p)` recorded by its index `k`; the mod-p Hurewicz map
/// factors through reduction, so the image is zero mod p exactly when
/// `p | k`. Elsewhere only explicit flags are accepted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HurewiczEntry {
    Index(BigUint),
    ZeroModP,
    NonzeroModP,
    Unknown,
}

impl HurewiczEntry {
    /// Does this entry certify a vanishing mod-p image?
    pub fn certifies_zero(&self, p: u64) -> bool {
        match self {
            HurewiczEntry::ZeroModP => true,
            HurewiczEntry::Index(k) => (k % p).is_zero(),
            _ => false,
        }
    }

    /// Does this entry certify a nonvanishing mod-p image?
    pub fn certifies_nonzero(&self, p: u64) -> bool {
        match self {
            HurewiczEntry::NonzeroModP => true,
            HurewiczEntry::Index(k) => !k.is_zero() && !(k % p).is_zero(),
            _ => false,
        }
    }
}

/// The decidable properties of the classification vocabulary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    Monogenic,
    NoModPDetectableHomotopy,
    MinimalAtomic,
    Irreducible,
    Atomic,
    Nuclear,
    Minimal,
    Indecomposable,
}

impl Property {
    pub const ALL: [Property; 8] = [
        Property::Monogenic,
        Property::NoModPDetectableHomotopy,
        Property::MinimalAtomic,
        Property::Irreducible,
        Property::Atomic,
        Property::Nuclear,
        Property::Minimal,
        Property::Indecomposable,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Monogenic => "monogenic",
            Property::NoModPDetectableHomotopy => "noModPDetectableHomotopy",
            Property::MinimalAtomic => "minimalAtomic",
            Property::Irreducible => "irreducible",
            Property::Atomic => "atomic",
            Property::Nuclear => "nuclear",
            Property::Minimal => "minimal",
            Property::Indecomposable => "indecomposable",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Value {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Yes => write!(f, "yes"),
            Value::No => write!(f, "no"),
            Value::Unknown => write!(f, "unknown"),
        }
    }
}

/// One classified property with the degree range the evidence covers and the
/// ordered provenance chain of rule citations that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub property: Property,
    pub value: Value,
    pub range: Option<(i32, i32)>,
    pub provenance: Vec<String>,
}

impl Verdict {
    pub fn unknown(property: Property) -> Self {
        Verdict {
            property,
            value: Value::Unknown,
            range: None,
            provenance: Vec::new(),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.property, self.value)?;
        if let Some((lo, hi)) = self.range {
            write!(f, " [degrees {lo}..{hi}]")?;
        }
        if !self.provenance.is_empty() {
            write!(f, " [{}]", self.provenance.join("; "))?;
        }
        Ok(())
    }
}

/// A named bundle of known invariants of a p-local spectrum, the input to
/// classification. All fields except the homology table are optional; every
/// verdict cites exactly the fields it used.
#[derive(Clone, Debug)]
pub struct SpectrumModel {
    name: String,
    prime: Prime,
    hurewicz_dim: i32,
    homology: GradedModule,
    cohomology: Option<TruncatedAModule>,
    hurewicz_images: BTreeMap<i32, HurewiczEntry>,
    skeletal: Option<SkeletalHomotopyData>,
    /// All homotopy groups vanish above this degree (Postnikov sections,
    /// Eilenberg-Mac Lane models).
    homotopy_vanishes_above: Option<i32>,
}

impl SpectrumModel {
    pub fn new(
        name: String,
        prime: Prime,
        hurewicz_dim: i32,
        homology: GradedModule,
    ) -> Result<Self, ClassifyError> {
        if homology.prime() != prime {
            return Err(ClassifyError::PrimeMismatch {
                left: prime.get(),
                right: homology.prime().get(),
            });
        }
        if homology.bottom() != Some(hurewicz_dim) {
            return Err(ClassifyError::BottomMismatch {
                hurewicz_dim,
                homology_bottom: homology.bottom(),
            });
        }
        Ok(SpectrumModel {
            name,
            prime,
            hurewicz_dim,
            homology,
            cohomology: None,
            hurewicz_images: BTreeMap::new(),
            skeletal: None,
            homotopy_vanishes_above: None,
        })
    }

    pub fn with_cohomology(mut self, m: TruncatedAModule) -> Result<Self, ClassifyError> {
        if m.prime() != self.prime {
            return Err(ClassifyError::PrimeMismatch {
                left: self.prime.get(),
                right: m.prime().get(),
            });
        }
        self.cohomology = Some(m);
        Ok(self)
    }

    pub fn with_hurewicz_images(
        mut self,
        entries: BTreeMap<i32, HurewiczEntry>,
    ) -> Result<Self, ClassifyError> {
        for (&n, entry) in &entries {
            let summands = self.homology.summands_at(n);
            if summands.is_empty() {
                return Err(ClassifyError::BadHurewiczEntry {
                    degree: n,
                    reason: "no homology in this degree".into(),
                });
            }
            if matches!(entry, HurewiczEntry::Index(_)) {
                let free_rank_one =
                    summands.len() == 1 && summands[0] == crate::arith::Cyclic::Free;
                if !free_rank_one {
                    return Err(ClassifyError::BadHurewiczEntry {
                        degree: n,
                        reason: "index entries need homology free of rank one".into(),
                    });
                }
            }
        }
        self.hurewicz_images = entries;
        Ok(self)
    }

    pub fn with_skeletal(mut self, data: SkeletalHomotopyData) -> Result<Self, ClassifyError> {
        if data.prime() != self.prime {
            return Err(ClassifyError::PrimeMismatch {
                left: self.prime.get(),
                right: data.prime().get(),
            });
        }
        self.skeletal = Some(data);
        Ok(self)
    }

    pub fn with_homotopy_vanishing_above(mut self, degree: i32) -> Self {
        self.homotopy_vanishes_above = Some(degree);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn hurewicz_dim(&self) -> i32 {
        self.hurewicz_dim
    }

    pub fn homology(&self) -> &GradedModule {
        &self.homology
    }

    pub fn cohomology(&self) -> Option<&TruncatedAModule> {
        self.cohomology.as_ref()
    }

    pub fn hurewicz_images(&self) -> &BTreeMap<i32, HurewiczEntry> {
        &self.hurewicz_images
    }

    pub fn skeletal(&self) -> Option<&SkeletalHomotopyData> {
        self.skeletal.as_ref()
    }

    pub fn homotopy_vanishes_above(&self) -> Option<i32> {
        self.homotopy_vanishes_above
    }

    /// A Hurewicz complex has one bottom cell; at the model level this is
    /// cyclic bottom homology.
    pub fn is_hurewicz(&self) -> bool {
        self.homology.is_cyclic_at(self.hurewicz_dim)
    }
}
