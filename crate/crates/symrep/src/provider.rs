use std::sync::Arc;

use monoidrep_core::builtin::symmetric_group;
use monoidrep_core::FiniteMonoid;
use monoidrep_rep::catalog::{linear_characters, monomial_irreducibles, sort_catalog, transport, IrrProvider};
use monoidrep_rep::Representation;

use crate::partition::partitions;
use crate::specht::specht_over;

/// Irr(S_k) as Specht modules in catalog order.
pub fn symmetric_catalog(k: usize) -> Vec<Representation> {
    let g = Arc::new(symmetric_group(k));
    sort_catalog(partitions(k).iter().map(|p| specht_over(g.clone(), p)).collect())
}

/// Trivial, abelian, symmetric (up to isomorphism, k ≤ 6) and then monomial groups.
#[derive(Clone, Copy, Debug, Default)]
pub struct SymProvider;

impl IrrProvider for SymProvider {
    fn irreducibles(&self, group: &Arc<FiniteMonoid>) -> Option<Vec<Representation>> {
        if !group.is_group() {
            return None;
        }
        if group.size() == 1 {
            return Some(vec![Representation::trivial(group.clone())]);
        }
        if group.is_commutative() {
            return Some(sort_catalog(linear_characters(group)));
        }
        let mut fact = 1;
        for k in 2..=6 {
            fact *= k;
            if fact == group.size() {
                let s = symmetric_group(k);
                if let Some(cat) = transport(&symmetric_catalog(k), &s, group) {
                    return Some(sort_catalog(cat));
                }
            }
        }
        monomial_irreducibles(group).map(sort_catalog)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use monoidrep_core::builtin::alternating_group;
    use monoidrep_rep::catalog::check_catalog;

    #[test]
    fn symmetric_and_alternating() {
        for k in 1..=4 {
            let g = Arc::new(symmetric_group(k));
            let cat = SymProvider.irreducibles(&g).unwrap();
            check_catalog(&g, &cat).unwrap();
        }
        let a4 = Arc::new(alternating_group(4));
        let cat = SymProvider.irreducibles(&a4).unwrap();
        assert_eq!(cat.iter().map(|r| r.dim()).collect::<Vec<_>>(), vec![1, 1, 1, 3]);
    }
}
