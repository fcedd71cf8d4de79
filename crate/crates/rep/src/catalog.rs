//! Irreducible catalogs for groups: the provider trait, characters of abelian groups,
//! a monomial fallback and the deterministic catalog order.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::Arc;

use monoidrep_core::builtin::cyclic;
use monoidrep_core::FiniteMonoid;
use monoidrep_linalg::{CycNum, ExactMatrix};

use crate::hom::multiplicity;
use crate::representation::{Representation, Side};
use crate::RepError;

/// Supplies the full list of irreducibles of a finite group.
pub trait IrrProvider {
    /// None when the group is outside what the provider can handle.
    fn irreducibles(&self, group: &Arc<FiniteMonoid>) -> Option<Vec<Representation>>;
}

impl<F> IrrProvider for F
where
    F: Fn(&Arc<FiniteMonoid>) -> Option<Vec<Representation>>,
{
    fn irreducibles(&self, group: &Arc<FiniteMonoid>) -> Option<Vec<Representation>> {
        self(group)
    }
}

/// Trivial and abelian groups exactly, everything else through induced characters.
#[derive(Clone, Copy, Debug, Default)]
pub struct BasicProvider;

impl IrrProvider for BasicProvider {
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
        monomial_irreducibles(group).map(sort_catalog)
    }
}

/// Tries each provider in turn.
pub struct ChainProvider<'a>(pub Vec<&'a dyn IrrProvider>);

impl IrrProvider for ChainProvider<'_> {
    fn irreducibles(&self, group: &Arc<FiniteMonoid>) -> Option<Vec<Representation>> {
        self.0.iter().find_map(|p| p.irreducibles(group))
    }
}

/// A fixed catalog for one group, transported to any isomorphic copy.
pub struct FixedProvider {
    pub group: Arc<FiniteMonoid>,
    pub catalog: Vec<Representation>,
}

impl IrrProvider for FixedProvider {
    fn irreducibles(&self, group: &Arc<FiniteMonoid>) -> Option<Vec<Representation>> {
        transport(&self.catalog, &self.group, group)
    }
}

/// Moves a catalog of `from` onto an isomorphic group `to`.
pub fn transport(
    catalog: &[Representation],
    from: &FiniteMonoid,
    to: &Arc<FiniteMonoid>,
) -> Option<Vec<Representation>> {
    if **to == *from {
        return Some(catalog.iter().map(|r| r.rebase(to.clone())).collect());
    }
    let f = to.find_isomorphism(from)?;
    Some(catalog.iter().map(|r| r.pullback(to.clone(), &f)).collect())
}

/// All homomorphisms G → ℂ^×, with values in the exponent-th roots of unity.
pub fn linear_characters(group: &Arc<FiniteMonoid>) -> Vec<Representation> {
    let n = group.exponent().max(1);
    let target = cyclic(n);
    let gens = group.generators().to_vec();
    let mut out = Vec::new();
    let mut imgs = vec![0usize; gens.len()];
    loop {
        if let Some(f) = group.extend_map(&target, &gens, &imgs) {
            let vals = f.iter().map(|&k| CycNum::zeta(n as u32, k as i64)).collect();
            out.push(Representation::character(group.clone(), vals).expect("homomorphism"));
        }
        // odometer over images of the generators
        let mut i = 0;
        loop {
            if i == imgs.len() {
                return out;
            }
            imgs[i] += 1;
            if imgs[i] < n {
                break;
            }
            imgs[i] = 0;
            i += 1;
        }
    }
}

/// Representation of G induced from a linear character λ of a subgroup H (given by members).
pub fn induce_from_subgroup(
    group: &Arc<FiniteMonoid>,
    members: &[usize],
    lambda: &Representation,
) -> Representation {
    let inv = |x: usize| group.unit_inverse(x).expect("group element");
    let pos = |x: usize| members.iter().position(|&h| h == x);
    let mut covered = vec![false; group.size()];
    let mut reps = Vec::new();
    for t in group.elements() {
        if covered[t] {
            continue;
        }
        reps.push(t);
        for &h in members {
            covered[group.mul(t, h)] = true;
        }
    }
    let (r, d) = (reps.len(), lambda.dim());
    let mats = group
        .elements()
        .map(|g| {
            let mut a = ExactMatrix::zeros(r * d, r * d);
            for (j, &tj) in reps.iter().enumerate() {
                let gt = group.mul(g, tj);
                let (i, h) = reps
                    .iter()
                    .enumerate()
                    .find_map(|(i, &ti)| pos(group.mul(inv(ti), gt)).map(|h| (i, h)))
                    .expect("coset");
                let l = lambda.matrix(h);
                for p in 0..d {
                    for q in 0..d {
                        a.set(i * d + p, j * d + q, l.get(p, q).clone());
                    }
                }
            }
            a
        })
        .collect();
    Representation::new_unchecked(group.clone(), Side::Left, mats).expect("square blocks")
}

/// Irreducibles obtained by inducing linear characters from subgroups generated by at most two
/// elements. Complete for monomial groups; None when the dimension sum falls short.
pub fn monomial_irreducibles(group: &Arc<FiniteMonoid>) -> Option<Vec<Representation>> {
    let order = group.size();
    let mut subgroups: BTreeSet<Vec<usize>> = BTreeSet::new();
    for a in group.elements() {
        for b in a..order {
            subgroups.insert(group.closure(&[a, b]));
        }
    }
    let mut subgroups: Vec<Vec<usize>> = subgroups.into_iter().collect();
    subgroups.sort_by_key(|h| std::cmp::Reverse(h.len()));

    let mut found: Vec<Representation> = Vec::new();
    let mut total = 0;
    for members in subgroups {
        let h = Arc::new(group.restrict(&members));
        for lambda in linear_characters(&h) {
            let v = induce_from_subgroup(group, &members, &lambda);
            if total + v.dim() * v.dim() > order || !v.is_irreducible() {
                continue;
            }
            let known = found.iter().any(|w| w.dim() == v.dim() && multiplicity(w, &v).unwrap_or(0) > 0);
            if !known {
                total += v.dim() * v.dim();
                found.push(v);
            }
            if total == order {
                return Some(found);
            }
        }
    }
    None
}

/// Character values compared entrywise, descending in the canonical order, so the
/// trivial character leads.
pub fn cmp_fingerprint(a: &Representation, b: &Representation) -> Ordering {
    let (ca, cb) = (a.character_values(), b.character_values());
    for (x, y) in ca.iter().zip(&cb) {
        match y.cmp_canonical(x) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    ca.len().cmp(&cb.len())
}

/// Order by dimension, then by character fingerprint.
pub fn sort_catalog(mut reps: Vec<Representation>) -> Vec<Representation> {
    reps.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| cmp_fingerprint(a, b)));
    reps
}

/// Checks Σ dim² = |G|, irreducibility and pairwise non-isomorphism.
pub fn check_catalog(group: &FiniteMonoid, reps: &[Representation]) -> Result<(), RepError> {
    let total: usize = reps.iter().map(|r| r.dim() * r.dim()).sum();
    if total != group.size() {
        return Err(RepError::IncompleteCatalog(format!("Σ dim² = {total}, |G| = {}", group.size())));
    }
    for (i, r) in reps.iter().enumerate() {
        if !r.is_irreducible() {
            return Err(RepError::IncompleteCatalog(format!("entry {i} is reducible")));
        }
        for s in &reps[..i] {
            if s.dim() == r.dim() && multiplicity(s, r)? > 0 {
                return Err(RepError::IncompleteCatalog(format!("entry {i} repeats an earlier entry")));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use monoidrep_core::builtin::*;

    #[test]
    fn abelian_counts() {
        for n in 1..=6 {
            let c = Arc::new(cyclic(n));
            let chars = BasicProvider.irreducibles(&c).unwrap();
            assert_eq!(chars.len(), n);
            check_catalog(&c, &chars).unwrap();
        }
        let k4 = Arc::new(cyclic(2).direct_product(&cyclic(2)));
        assert_eq!(linear_characters(&k4).len(), 4);
    }

    #[test]
    fn s3_and_s4_are_monomial() {
        let s3 = Arc::new(symmetric_group(3));
        let cat = BasicProvider.irreducibles(&s3).unwrap();
        assert_eq!(cat.iter().map(|r| r.dim()).collect::<Vec<_>>(), vec![1, 1, 2]);
        check_catalog(&s3, &cat).unwrap();
        let s4 = Arc::new(symmetric_group(4));
        let cat = BasicProvider.irreducibles(&s4).unwrap();
        assert_eq!(cat.iter().map(|r| r.dim()).collect::<Vec<_>>(), vec![1, 1, 2, 3, 3]);
    }

    #[test]
    fn order_is_deterministic() {
        let c3 = Arc::new(cyclic(3));
        let a = BasicProvider.irreducibles(&c3).unwrap();
        let mut rev = a.clone();
        rev.reverse();
        let b = sort_catalog(rev);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.character_values(), y.character_values());
        }
        assert!(a[0].character_values().iter().all(|v| v.is_one()));
    }

    #[test]
    fn transport_to_isomorphic_copy() {
        let c2 = Arc::new(cyclic(2));
        let s2 = Arc::new(symmetric_group(2));
        let fixed = FixedProvider { group: c2.clone(), catalog: BasicProvider.irreducibles(&c2).unwrap() };
        let cat = fixed.irreducibles(&s2).unwrap();
        check_catalog(&s2, &cat).unwrap();
    }
}
