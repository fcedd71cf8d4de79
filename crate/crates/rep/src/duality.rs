use monoidrep_core::involution;

use crate::representation::Representation;
use crate::RepError;

/// D(V): transposed matrices acting on the other side.
pub fn dual(v: &Representation) -> Representation {
    let mats = v.matrices().iter().map(|a| a.transpose()).collect();
    Representation::new_unchecked(v.monoid_arc().clone(), v.side().flip(), mats).expect("square")
}

/// D(V)∘*: m ↦ ρ(m*)ᵀ, on the same side as V. Needs an inverse monoid.
pub fn contragredient_inverse(v: &Representation) -> Result<Representation, RepError> {
    let star = involution(v.monoid()).ok_or(RepError::NotInverse)?;
    let mats = star.iter().map(|&s| v.matrix(s).transpose()).collect();
    Representation::new(v.monoid_arc().clone(), v.side(), mats)
}

/// D(V) read through * as a representation on the original side (same matrices as
/// `contragredient_inverse`, assembled from `dual`).
pub fn dual_composed_with_star(v: &Representation) -> Result<Representation, RepError> {
    let star = involution(v.monoid()).ok_or(RepError::NotInverse)?;
    let d = dual(v);
    let mats = star.iter().map(|&s| d.matrix(s).clone()).collect();
    Representation::new(v.monoid_arc().clone(), d.side().flip(), mats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::representation::Side;
    use crate::catalog::{BasicProvider, IrrProvider};
    use crate::hom::multiplicity;
    use monoidrep_core::builtin::*;
    use monoidrep_linalg::CycNum;
    use std::sync::Arc;

    #[test]
    fn character_goes_to_conjugate() {
        let c3 = Arc::new(cyclic(3));
        let chi = Representation::character(c3.clone(), (0..3).map(|j| CycNum::zeta(3, j)).collect()).unwrap();
        let c = contragredient_inverse(&chi).unwrap();
        for x in c3.elements() {
            assert_eq!(c.matrix(x).get(0, 0), &chi.matrix(x).get(0, 0).conj());
        }
    }

    #[test]
    fn dual_is_right_representation() {
        let s3 = Arc::new(symmetric_group(3));
        let cat = BasicProvider.irreducibles(&s3).unwrap();
        let d = dual(&cat[2]);
        assert_eq!(d.side(), Side::Right);
        d.validate().unwrap();
        let c = contragredient_inverse(&cat[2]).unwrap();
        assert_eq!(multiplicity(&c, &cat[2]).unwrap(), 1);
    }

    #[test]
    fn non_inverse_rejected() {
        let t2 = Arc::new(full_transformation_monoid(2));
        assert_eq!(contragredient_inverse(&Representation::trivial(t2)).unwrap_err(), RepError::NotInverse);
    }
}
