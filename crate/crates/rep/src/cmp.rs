//! Irreducibles of a monoid from those of its maximal subgroups, apexes, and the
//! semisimplicity certificate built from sandwich matrices.

use std::sync::Arc;

use monoidrep_core::green::two_sided_set;
use monoidrep_core::{FiniteMonoid, GreenData};
use serde::Serialize;

use crate::catalog::{check_catalog, IrrProvider};
use crate::hom::multiplicity;
use crate::representation::Representation;
use crate::schutz::{induce, maximal_subgroup, radical_subspace, sandwich_at, substitute};
use crate::RepError;

/// An irreducible of M together with the data it was built from.
#[derive(Clone, Debug)]
pub struct CmpIrreducible {
    pub rep: Representation,
    /// Idempotent of the apex class.
    pub apex: usize,
    /// Index of the apex among the absolute J-classes.
    pub class: usize,
    /// Position of σ in the catalog of G_e.
    pub sigma_index: usize,
    pub sigma: Representation,
}

/// Annihilator of a representation and its apex, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ApexInfo {
    pub annihilator: Vec<usize>,
    /// Index of the apex J-class.
    pub apex_class: Option<usize>,
    pub apex_idempotent: Option<usize>,
}

pub fn apex_info(v: &Representation) -> ApexInfo {
    let m = v.monoid();
    let annihilator: Vec<usize> = m.elements().filter(|&x| v.matrix(x).is_zero()).collect();
    let green = GreenData::absolute(m);
    // I_J: elements whose two-sided ideal misses J
    let ideal_below = |rep: usize| -> Vec<usize> {
        m.elements().filter(|&x| !two_sided_set(m, green.n(), green.k(), x).contains(&rep)).collect()
    };
    for (ci, c) in green.classes().iter().enumerate() {
        if !c.is_regular(m) || annihilator.contains(&c.rep) {
            continue;
        }
        if ideal_below(c.rep) == annihilator {
            return ApexInfo {
                annihilator,
                apex_class: Some(ci),
                apex_idempotent: c.idempotents(m).first().copied(),
            };
        }
    }
    ApexInfo { annihilator, apex_class: None, apex_idempotent: None }
}

/// One irreducible Ind(σ)/N_e per regular J-class e and σ ∈ Irr(G_e), in class order.
pub fn cmp_irreducibles(m: &Arc<FiniteMonoid>, provider: &dyn IrrProvider) -> Result<Vec<CmpIrreducible>, RepError> {
    let green = GreenData::absolute(m);
    let mut out = Vec::new();
    for (ci, c) in green.classes().iter().enumerate() {
        let Some(&e) = c.idempotents(m).first() else { continue };
        let (g, _) = maximal_subgroup(m, e);
        let catalog = provider.irreducibles(&g).ok_or(RepError::MissingProvider(g.size()))?;
        let total: usize = catalog.iter().map(|s| s.dim() * s.dim()).sum();
        if total != g.size() {
            return Err(RepError::IncompleteCatalog(format!("Σ dim² = {total}, |G_e| = {}", g.size())));
        }
        for (si, sigma) in catalog.into_iter().enumerate() {
            let ind = induce(m, e, &sigma)?;
            let rad = radical_subspace(&ind, e);
            let rep = ind.quotient(&rad);
            debug_assert!(rep.is_irreducible());
            out.push(CmpIrreducible { rep, apex: e, class: ci, sigma_index: si, sigma });
        }
    }
    Ok(out)
}

/// The irreducibles as plain representations.
pub fn irreducible_catalog(m: &Arc<FiniteMonoid>, provider: &dyn IrrProvider) -> Result<Vec<Representation>, RepError> {
    Ok(cmp_irreducibles(m, provider)?.into_iter().map(|c| c.rep).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassCertificate {
    pub rep: usize,
    pub size: usize,
    pub regular: bool,
    /// (rows, cols) of P(e): (β, α).
    pub sandwich_shape: Option<(usize, usize)>,
    pub group_order: Option<usize>,
    /// λ(P(e)) square and nonsingular.
    pub nonsingular: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemisimpleCertificate {
    pub semisimple: bool,
    pub classes: Vec<ClassCertificate>,
    /// Σ dim² over the irreducibles, when a provider was available.
    pub dimension_sum: Option<usize>,
    pub order: usize,
}

impl SemisimpleCertificate {
    /// Whether the dimension count agrees with the verdict (None without a provider).
    pub fn cross_check(&self) -> Option<bool> {
        self.dimension_sum.map(|s| (s == self.order) == self.semisimple)
    }
}

fn class_certificates(m: &FiniteMonoid) -> Vec<ClassCertificate> {
    let green = GreenData::absolute(m);
    green
        .classes()
        .iter()
        .map(|c| {
            let Some(&e) = c.idempotents(m).first() else {
                return ClassCertificate {
                    rep: c.rep,
                    size: c.members.len(),
                    regular: false,
                    sandwich_shape: None,
                    group_order: None,
                    nonsingular: None,
                };
            };
            let p = sandwich_at(m, e);
            let (g, _) = maximal_subgroup(m, e);
            let shape = (p.ys.len(), p.xs.len());
            let nonsingular = shape.0 == shape.1 && {
                let lam = Representation::regular_left(g.clone());
                substitute(&p, &lam).is_invertible()
            };
            ClassCertificate {
                rep: c.rep,
                size: c.members.len(),
                regular: true,
                sandwich_shape: Some(shape),
                group_order: Some(g.size()),
                nonsingular: Some(nonsingular),
            }
        })
        .collect()
}

/// Every J-class regular and every λ(P(e)) square and nonsingular.
pub fn is_semisimple(m: &FiniteMonoid) -> SemisimpleCertificate {
    let classes = class_certificates(m);
    let semisimple = classes.iter().all(|c| c.regular && c.nonsingular == Some(true));
    SemisimpleCertificate { semisimple, classes, dimension_sum: None, order: m.size() }
}

/// The certificate plus the Σ dim² cross-check against the irreducible catalog.
pub fn is_semisimple_with(m: &Arc<FiniteMonoid>, provider: &dyn IrrProvider) -> Result<SemisimpleCertificate, RepError> {
    let mut cert = is_semisimple(m);
    let irr = cmp_irreducibles(m, provider)?;
    cert.dimension_sum = Some(irr.iter().map(|c| c.rep.dim() * c.rep.dim()).sum());
    Ok(cert)
}

/// e·V as a representation of G_e, compared with σ.
pub fn corner_matches_sigma(m: &Arc<FiniteMonoid>, irr: &CmpIrreducible) -> Result<bool, RepError> {
    use crate::subspace::Subspace;
    let v = &irr.rep;
    let e = irr.apex;
    let (g, members) = maximal_subgroup(m, e);
    let ev = Subspace::column_space(v.matrix(e));
    if ev.dim() != irr.sigma.dim() {
        return Ok(false);
    }
    let mats = members
        .iter()
        .map(|&x| {
            let a = v.matrix(x);
            let cols: Vec<_> = ev.basis().iter().map(|b| ev.coords(&a.mul_vec(b))).collect();
            monoidrep_linalg::ExactMatrix::from_columns(&cols, ev.dim())
        })
        .collect();
    let corner = Representation::new(g.clone(), v.side(), mats)?;
    let sigma = irr.sigma.rebase(g);
    Ok(multiplicity(&corner, &sigma)? > 0)
}

/// Validates a provider's catalog for one group.
pub fn check_provider(provider: &dyn IrrProvider, group: &Arc<FiniteMonoid>) -> Result<(), RepError> {
    let cat = provider.irreducibles(group).ok_or(RepError::MissingProvider(group.size()))?;
    check_catalog(group, &cat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::BasicProvider;
    use monoidrep_core::builtin::*;

    fn dims(m: FiniteMonoid) -> Vec<usize> {
        let m = Arc::new(m);
        cmp_irreducibles(&m, &BasicProvider).unwrap().iter().map(|c| c.rep.dim()).collect()
    }

    #[test]
    fn is3_dims() {
        let d = dims(symmetric_inverse_monoid(3));
        let mut sorted = d.clone();
        sorted.sort();
        assert_eq!(sorted, vec![1, 1, 1, 2, 3, 3, 3]);
        assert_eq!(d.iter().map(|x| x * x).sum::<usize>(), 34);
    }

    #[test]
    fn t2_has_three() {
        assert_eq!(dims(full_transformation_monoid(2)).len(), 3);
    }

    #[test]
    fn certificates() {
        assert!(is_semisimple(&symmetric_inverse_monoid(3)).semisimple);
        assert!(is_semisimple(&symmetric_group(3)).semisimple);
        let nil = is_semisimple(&nilpotent3());
        assert!(!nil.semisimple);
        assert!(nil.classes.iter().any(|c| !c.regular));
        assert!(!is_semisimple(&full_transformation_monoid(2)).semisimple);
        let m = Arc::new(nilpotent3());
        let c = is_semisimple_with(&m, &BasicProvider).unwrap();
        assert_eq!(c.cross_check(), Some(true));
    }

    #[test]
    fn apexes_and_corners() {
        let m = Arc::new(symmetric_inverse_monoid(2));
        for irr in cmp_irreducibles(&m, &BasicProvider).unwrap() {
            let info = apex_info(&irr.rep);
            assert_eq!(info.apex_idempotent, Some(irr.apex));
            assert!(corner_matches_sigma(&m, &irr).unwrap());
        }
    }
}
