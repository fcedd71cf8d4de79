//! Induction from a submonoid in the tensor model ℂ[X] ⊗_N W and in the
//! function model {f : f(nx) = σ(n)f(x)}, with Frobenius reciprocity checks.

use std::collections::BTreeMap;
use std::sync::Arc;

use monoidrep_core::{FiniteMonoid, Submonoid};
use monoidrep_linalg::{CycNum, ExactMatrix, RowReducer};
use monoidrep_rep::catalog::IrrProvider;
use monoidrep_rep::{cmp_irreducibles, is_isomorphic, is_semisimple, multiplicity, Representation, Side, Subspace};
use serde::Serialize;

use crate::{CliffordError, Result};

/// ℂ[X] ⊗_N W modulo xn ⊗ w − x ⊗ nw, with the right N-action and the left action
/// truncated to X (products leaving X are zero).
#[derive(Clone, Debug)]
pub struct BalancedTensor {
    pub rep: Representation,
    pub support: Vec<usize>,
    pub d: usize,
    /// Relations inside ℂ[X] ⊗ W, coordinate i·d + k for support[i] ⊗ w_k.
    pub relations: Subspace,
}

impl BalancedTensor {
    pub fn ambient(&self) -> usize {
        self.support.len() * self.d
    }

    fn pos(&self, x: usize) -> Option<usize> {
        self.support.binary_search(&x).ok()
    }

    /// Class of x ⊗ w in the quotient coordinates of `rep`.
    pub fn vector(&self, x: usize, w: &[CycNum]) -> Vec<CycNum> {
        let mut v = vec![CycNum::zero(); self.ambient()];
        if let Some(i) = self.pos(x) {
            for (k, c) in w.iter().enumerate() {
                v[i * self.d + k] = c.clone();
            }
        }
        self.relations.quotient_coords(&v)
    }

    /// The map x ⊗ w ↦ f(x) ⊗ Aw on the quotient; None when it does not preserve the relations.
    pub fn induced_map(&self, f: impl Fn(usize) -> Option<usize>, a: &ExactMatrix) -> Option<ExactMatrix> {
        let d = self.d;
        let n = self.ambient();
        let mut full = ExactMatrix::zeros(n, n);
        for (i, &x) in self.support.iter().enumerate() {
            let Some(j) = f(x).and_then(|y| self.pos(y)) else { continue };
            for k in 0..d {
                for l in 0..d {
                    full.set(j * d + l, i * d + k, a.get(l, k).clone());
                }
            }
        }
        if !self.relations.basis().iter().all(|r| self.relations.contains(&full.mul_vec(r))) {
            return None;
        }
        let free = self.relations.free_columns();
        let cols: Vec<Vec<CycNum>> = free.iter().map(|&j| self.relations.quotient_coords(&full.col(j))).collect();
        Some(ExactMatrix::from_columns(&cols, free.len()))
    }
}

/// ℂ[X] ⊗_{sub} W as a left module over `acting` (given by its parent elements).
pub fn balanced_tensor(
    m: &FiniteMonoid,
    support: &[usize],
    sub: &Submonoid,
    sub_rep: &Representation,
    acting: Arc<FiniteMonoid>,
    acting_members: &[usize],
) -> Result<BalancedTensor> {
    if sub_rep.side() != Side::Left || sub_rep.monoid().size() != sub.len() {
        return Err(CliffordError::Precondition("W must be a left representation of the submonoid".into()));
    }
    let mut support = support.to_vec();
    support.sort_unstable();
    support.dedup();
    let d = sub_rep.dim();
    let pos = |x: usize| support.binary_search(&x).ok();
    let n = support.len() * d;
    let mut rels = Subspace::zero(n);
    for (i, &x) in support.iter().enumerate() {
        for (si, &s) in sub.members().iter().enumerate() {
            let sm = sub_rep.matrix(si);
            let target = pos(m.mul(x, s));
            for k in 0..d {
                let mut v = vec![CycNum::zero(); n];
                if let Some(j) = target {
                    v[j * d + k] += &CycNum::one();
                }
                for l in 0..d {
                    v[i * d + l] -= sm.get(l, k);
                }
                rels.insert(&v);
            }
        }
    }
    let mats: Vec<ExactMatrix> = acting_members
        .iter()
        .map(|&a| {
            let mut t = ExactMatrix::zeros(n, n);
            for (i, &x) in support.iter().enumerate() {
                if let Some(j) = pos(m.mul(a, x)) {
                    for k in 0..d {
                        t.set(j * d + k, i * d + k, CycNum::one());
                    }
                }
            }
            t
        })
        .collect();
    let full = Representation::new_unchecked(acting, Side::Left, mats)?;
    if !full.is_invariant(&rels) {
        return Err(CliffordError::Invariant("left action does not preserve the balancing relations".into()));
    }
    let q = full.quotient(&rels);
    q.validate()?;
    Ok(BalancedTensor { rep: q, support, d, relations: rels })
}

/// ind_N^M W = ℂ[M] ⊗_N W.
pub fn induced_tensor(m: &Arc<FiniteMonoid>, n: &Submonoid, sigma: &Representation) -> Result<Representation> {
    let all: Vec<usize> = m.elements().collect();
    Ok(balanced_tensor(m, &all, n, sigma, m.clone(), &all)?.rep)
}

/// Ind_N^M W = {f : M → W | f(nx) = σ(n)f(x)} with (m·f)(x) = f(xm).
pub fn induced_functions(m: &Arc<FiniteMonoid>, n: &Submonoid, sigma: &Representation) -> Result<Representation> {
    let d = sigma.dim();
    let size = m.size() * d;
    let mut rr = RowReducer::new(size);
    for (si, &s) in n.members().iter().enumerate() {
        let sm = sigma.matrix(si);
        for x in m.elements() {
            let sx = m.mul(s, x);
            for k in 0..d {
                let mut row: BTreeMap<usize, CycNum> = BTreeMap::new();
                *row.entry(sx * d + k).or_insert_with(CycNum::zero) += &CycNum::one();
                for l in 0..d {
                    let c = sm.get(k, l);
                    if !c.is_zero() {
                        *row.entry(x * d + l).or_insert_with(CycNum::zero) -= c;
                    }
                }
                row.retain(|_, c| !c.is_zero());
                if !row.is_empty() {
                    rr.add_row(row);
                }
            }
        }
    }
    let kernel = Subspace::span(size, &rr.nullspace());
    let mats: Vec<ExactMatrix> = m
        .elements()
        .map(|a| {
            let mut t = ExactMatrix::zeros(size, size);
            for x in m.elements() {
                let xa = m.mul(x, a);
                for k in 0..d {
                    t.set(x * d + k, xa * d + k, CycNum::one());
                }
            }
            t
        })
        .collect();
    let full = Representation::new_unchecked(m.clone(), Side::Left, mats)?;
    if !full.is_invariant(&kernel) {
        return Err(CliffordError::Invariant("function space is not M-stable".into()));
    }
    let r = full.subrepresentation(&kernel);
    r.validate()?;
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrobeniusRow {
    pub irreducible: usize,
    pub dim: usize,
    /// dim Hom_M(ind W, V) and dim Hom_N(W, V)
    pub hom_ind_v: usize,
    pub hom_w_res: usize,
    /// dim Hom_M(V, Ind W) and dim Hom_N(V, W)
    pub hom_v_ind: usize,
    pub hom_res_w: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedFunctorReport {
    pub tensor_dim: usize,
    pub function_dim: usize,
    pub isomorphic: bool,
    pub rows: Vec<FrobeniusRow>,
    pub holds: bool,
}

pub fn induced_functor_check(
    m: &Arc<FiniteMonoid>,
    n: &Submonoid,
    sigma: &Representation,
    provider: &dyn IrrProvider,
) -> Result<InducedFunctorReport> {
    let nm = Arc::new(n.as_monoid(m));
    if *sigma.monoid() != *nm {
        return Err(CliffordError::Precondition("σ is not a representation of N".into()));
    }
    if !is_semisimple(m).semisimple || !is_semisimple(&nm).semisimple {
        return Err(CliffordError::NotSemisimple("induced_functor_check needs M and N semisimple".into()));
    }
    let sigma = sigma.rebase(nm.clone());
    let tensor = induced_tensor(m, n, &sigma)?;
    let functions = induced_functions(m, n, &sigma)?;
    let isomorphic = is_isomorphic(&tensor, &functions)?;
    let mut rows = Vec::new();
    for (i, c) in cmp_irreducibles(m, provider)?.iter().enumerate() {
        let res = c.rep.restrict(n, nm.clone());
        rows.push(FrobeniusRow {
            irreducible: i,
            dim: c.rep.dim(),
            hom_ind_v: multiplicity(&tensor, &c.rep)?,
            hom_w_res: multiplicity(&sigma, &res)?,
            hom_v_ind: multiplicity(&c.rep, &functions)?,
            hom_res_w: multiplicity(&res, &sigma)?,
        });
    }
    let holds = isomorphic && rows.iter().all(|r| r.hom_ind_v == r.hom_w_res && r.hom_v_ind == r.hom_res_w);
    Ok(InducedFunctorReport { tensor_dim: tensor.dim(), function_dim: functions.dim(), isomorphic, rows, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use monoidrep_core::builtin::*;
    use monoidrep_rep::catalog::BasicProvider;

    #[test]
    fn whole_monoid_is_identity_functor() {
        let m = Arc::new(symmetric_inverse_monoid(2));
        let w = Submonoid::whole(&m);
        for c in cmp_irreducibles(&m, &BasicProvider).unwrap() {
            let s = c.rep.rebase(Arc::new(w.as_monoid(&m)));
            let r = induced_functor_check(&m, &w, &s, &BasicProvider).unwrap();
            assert!(r.holds);
            assert_eq!(r.tensor_dim, c.rep.dim());
        }
    }
}
