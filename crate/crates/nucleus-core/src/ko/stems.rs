use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::element::KoElement;
use super::KoError;

/// One cyclic summand of a 2-local stable stem: the order of its generator
/// (0 for infinite), the generator's name, and the image of the generator in
/// the homotopy of the real connective K-theory spectrum.
#[derive(Clone, Debug)]
pub struct StemSummand {
    pub degree: u32,
    /// 0 means infinite order.
    pub order: u64,
    pub name: &'static str,
    pub ko_image: KoElement,
    /// Marked for entries whose precise shape comes from the standard stem
    /// tables rather than facts restated alongside the bracket bookkeeping
    /// (the bookkeeping itself only needs that degree 8 is all 2-torsion).
    pub from_standard_tables: bool,
}

/// The 2-local stable stems through degree 8.
#[derive(Clone, Debug)]
pub struct StableStemTable {
    groups: Vec<Vec<StemSummand>>,
}

impl Default for StableStemTable {
    fn default() -> Self {
        Self::new()
    }
}

impl StableStemTable {
    pub fn new() -> StableStemTable {
        let s = |degree: u32, order: u64, name: &'static str, image: KoElement, derived: bool| {
            StemSummand {
                degree,
                order,
                name,
                ko_image: image,
                from_standard_tables: derived,
            }
        };
        let groups = vec![
            // degree 0: Z on the identity
            vec![s(0, 0, "iota", KoElement::unit(), false)],
            // eta and eta^2 map to their namesakes
            vec![s(1, 2, "eta", KoElement::new(1, 1), false)],
            vec![s(2, 2, "eta2", KoElement::new(2, 1), false)],
            // 8 nu = 0; nu dies (degree 3 of the target is zero)
            vec![s(3, 8, "nu", KoElement::zero(3), false)],
            vec![],
            vec![],
            vec![s(6, 2, "nu2", KoElement::zero(6), true)],
            // 16 sigma = 0; sigma dies (degree 7 of the target is zero)
            vec![s(7, 16, "sigma", KoElement::zero(7), false)],
            // all 2-torsion; both classes die in the torsion-free degree 8
            vec![
                s(8, 2, "eta_sigma", KoElement::zero(8), true),
                s(8, 2, "epsilon", KoElement::zero(8), true),
            ],
        ];
        StableStemTable { groups }
    }

    pub fn max_degree(&self) -> u32 {
        self.groups.len() as u32 - 1
    }

    pub fn group(&self, degree: u32) -> Result<&[StemSummand], KoError> {
        self.groups
            .get(degree as usize)
            .map(Vec::as_slice)
            .ok_or(KoError::StemDegreeOutOfRange(degree))
    }

    pub fn find(&self, name: &str) -> Result<&StemSummand, KoError> {
        self.groups
            .iter()
            .flatten()
            .find(|s| s.name == name)
            .ok_or_else(|| KoError::UnknownStem(String::from(name)))
    }

    pub fn is_all_torsion(&self, degree: u32) -> Result<bool, KoError> {
        Ok(self.group(degree)?.iter().all(|s| s.order != 0))
    }

    /// Image of `mu_{8k+1}` applied to the unit: `eta beta^k`.
    pub fn mu_8k1_image(k: u32) -> KoElement {
        KoElement::new(8 * k + 1, 1)
    }

    /// Image of `mu_{8k+2}` applied to the unit: `eta^2 beta^k`.
    pub fn mu_8k2_image(k: u32) -> KoElement {
        KoElement::new(8 * k + 2, 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn internal_consistency() {
        let t = StableStemTable::new();
        // 8 nu = 0 and 16 sigma = 0
        assert_eq!(t.find("nu").unwrap().order, 8);
        assert_eq!(t.find("sigma").unwrap().order, 16);
        // degrees 4 and 5 vanish
        assert!(t.group(4).unwrap().is_empty());
        assert!(t.group(5).unwrap().is_empty());
        // degree 8 is all 2-torsion
        assert!(t.is_all_torsion(8).unwrap());
        assert!(!t.group(8).unwrap().is_empty());
        // degree 0 is not torsion
        assert!(!t.is_all_torsion(0).unwrap());
        assert!(t.group(9).is_err());
    }

    #[test]
    fn images_in_the_target_ring() {
        let t = StableStemTable::new();
        assert_eq!(t.find("eta").unwrap().ko_image, KoElement::new(1, 1));
        assert!(t.find("nu").unwrap().ko_image.is_zero());
        assert!(t.find("sigma").unwrap().ko_image.is_zero());
        assert_eq!(StableStemTable::mu_8k1_image(2), KoElement::new(17, 1));
        assert_eq!(StableStemTable::mu_8k2_image(0), KoElement::new(2, 1));
    }
}
