use alloc::collections::BTreeMap;

use crate::arith::Prime;

use super::presentation::PresentedMap;

/// Degreewise data of a map on homotopy groups, against chosen presentations.
#[derive(Clone, Debug)]
pub struct MonoCheckInput {
    pub prime: Prime,
    pub hurewicz_dim: i32,
    pub degrees: BTreeMap<i32, PresentedMap>,
}

/// Decides whether the recorded map is a monomorphism of complexes: injective
/// on every recorded homotopy group, and injective on the bottom group after
/// tensoring with `F_p`.
pub fn mono_check(input: &MonoCheckInput) -> bool {
    for (&n, map) in &input.degrees {
        if !map.injective_integral() {
            return false;
        }
        if n == input.hurewicz_dim && !map.injective_mod_p() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Cyclic, LocalMatrix};
    use crate::classify::presentation::ModulePresentation;

    fn p2() -> Prime {
        Prime::new(2).unwrap()
    }

    fn single_degree(map: PresentedMap, n0: i32) -> MonoCheckInput {
        let mut degrees = BTreeMap::new();
        degrees.insert(n0, map);
        MonoCheckInput {
            prime: p2(),
            hurewicz_dim: n0,
            degrees,
        }
    }

    #[test]
    fn identity_is_mono() {
        let m = ModulePresentation::free(p2(), 1);
        let map = PresentedMap::new(m.clone(), m, LocalMatrix::identity(p2(), 1)).unwrap();
        assert!(mono_check(&single_degree(map, 0)));
    }

    #[test]
    fn multiplication_by_p_fails_at_bottom() {
        // injective integrally but zero after tensoring with F_p in the
        // Hurewicz dimension, so not a monomorphism of complexes
        let m = ModulePresentation::free(p2(), 1);
        let map = PresentedMap::new(
            m.clone(),
            m.clone(),
            LocalMatrix::from_ints(p2(), 1, 1, &[2]),
        )
        .unwrap();
        assert!(!mono_check(&single_degree(map.clone(), 0)));
        // the same map in a degree above the bottom is fine
        let mut degrees = BTreeMap::new();
        degrees.insert(3, map);
        assert!(mono_check(&MonoCheckInput {
            prime: p2(),
            hurewicz_dim: 0,
            degrees
        }));
    }

    #[test]
    fn torsion_inclusion_rejected() {
        // Z/2 into Z/4 in the bottom degree
        let src = ModulePresentation::from_summands(p2(), &[Cyclic::Torsion(1)]);
        let dst = ModulePresentation::from_summands(p2(), &[Cyclic::Torsion(2)]);
        let map = PresentedMap::new(src, dst, LocalMatrix::from_ints(p2(), 1, 1, &[2])).unwrap();
        assert!(map.injective_integral());
        assert!(!mono_check(&single_degree(map, 0)));
    }
}
