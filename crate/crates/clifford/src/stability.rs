//! Stability submonoids of an irreducible σ of a centric submonoid N, computed on the
//! regular representation of M, and the stability monoid I^V of σ inside an irreducible V.

use std::collections::BTreeSet;
use std::sync::Arc;

use monoidrep_core::centric::is_centric;
use monoidrep_core::green::left_set;
use monoidrep_core::inverse::is_inverse_monoid;
use monoidrep_core::{local_group, FiniteMonoid, GreenData, Submonoid};
use monoidrep_linalg::{CycNum, ExactMatrix};
use monoidrep_rep::cmp::apex_info;
use monoidrep_rep::duality::dual;
use monoidrep_rep::hom::isotypic_component;
use monoidrep_rep::{is_isomorphic, is_semisimple, isotypic_quotient, multiplicity, Representation, Subspace};
use serde::Serialize;

use crate::induced::balanced_tensor;
use crate::{CliffordError, Result};

/// Product in ℂ[M] of two coefficient vectors.
pub fn algebra_mul(m: &FiniteMonoid, a: &[CycNum], b: &[CycNum]) -> Vec<CycNum> {
    let mut out = vec![CycNum::zero(); m.size()];
    for (x, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (y, cb) in b.iter().enumerate() {
            if !cb.is_zero() {
                out[m.mul(x, y)] += &(ca * cb);
            }
        }
    }
    out
}

fn delta(n: usize, x: usize) -> Vec<CycNum> {
    let mut v = vec![CycNum::zero(); n];
    v[x] = CycNum::one();
    v
}

fn preserves(a: &ExactMatrix, s: &Subspace) -> bool {
    s.basis().iter().all(|v| s.contains(&a.mul_vec(v)))
}

fn invariant(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(CliffordError::Invariant(what.into()))
    }
}

fn products(m: &FiniteMonoid, a: &[usize], b: &[usize]) -> Vec<usize> {
    let s: BTreeSet<usize> = a.iter().flat_map(|&x| b.iter().map(move |&y| m.mul(x, y))).collect();
    s.into_iter().collect()
}

fn subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

fn check_axioms(m: &FiniteMonoid, nm: &FiniteMonoid, sigma: &Representation) -> Result<()> {
    if !is_semisimple(m).semisimple {
        return Err(CliffordError::NotSemisimple("M".into()));
    }
    if !is_semisimple(nm).semisimple {
        return Err(CliffordError::NotSemisimple("N".into()));
    }
    if *sigma.monoid() != *nm {
        return Err(CliffordError::Precondition("σ is not a representation of N".into()));
    }
    if !sigma.is_irreducible() {
        return Err(CliffordError::Precondition("σ is not irreducible".into()));
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct StabilityMonoids {
    pub monoid: Arc<FiniteMonoid>,
    pub n: Submonoid,
    pub n_monoid: Arc<FiniteMonoid>,
    pub sigma: Representation,
    /// Apex idempotent of σ, as an element of M.
    pub apex: usize,
    /// The central idempotent e^W of ℂ[N] for σ, in the basis M of ℂ[M].
    pub idempotent: Vec<CycNum>,
    /// e^W·ℂ[M] and ℂ[M]·e^W.
    pub w_left: Subspace,
    pub w_right: Subspace,
    pub i_l: Vec<usize>,
    pub i_r: Vec<usize>,
    pub i_lr: Vec<usize>,
    pub j0: Vec<usize>,
    pub j1: Vec<usize>,
    pub i0: Vec<usize>,
    pub i1: Vec<usize>,
    pub i_m: Vec<usize>,
    pub j_m: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    pub apex: usize,
    pub i_l: Vec<bool>,
    pub i_r: Vec<bool>,
    pub i_lr: Vec<bool>,
    pub j0: Vec<bool>,
    pub j1: Vec<bool>,
    pub i0: Vec<bool>,
    pub i1: Vec<bool>,
    pub i_m: Vec<bool>,
    pub j_m: Vec<bool>,
}

impl StabilityMonoids {
    pub fn report(&self) -> StabilityReport {
        let n = self.monoid.size();
        let bits = |s: &[usize]| (0..n).map(|x| s.contains(&x)).collect();
        StabilityReport {
            apex: self.apex,
            i_l: bits(&self.i_l),
            i_r: bits(&self.i_r),
            i_lr: bits(&self.i_lr),
            j0: bits(&self.j0),
            j1: bits(&self.j1),
            i0: bits(&self.i0),
            i1: bits(&self.i1),
            i_m: bits(&self.i_m),
            j_m: bits(&self.j_m),
        }
    }

    /// p₁(x) = e^W x e^W.
    pub fn p1(&self, x: usize) -> Vec<CycNum> {
        let m = &self.monoid;
        algebra_mul(m, &algebra_mul(m, &self.idempotent, &delta(m.size(), x)), &self.idempotent)
    }
}

/// Whether ℂ[G_x^N] ⊗_N W is 0 (Some(false)) or ≅ W (Some(true)); None otherwise.
fn classify(
    m: &FiniteMonoid,
    n: &Submonoid,
    nm: &Arc<FiniteMonoid>,
    sigma: &Representation,
    left_sets: &[Vec<usize>],
    x: usize,
) -> Result<Option<bool>> {
    let g: Vec<usize> = m.elements().filter(|&y| left_sets[y] == left_sets[x]).collect();
    let t = balanced_tensor(m, &g, n, sigma, nm.clone(), n.members())?;
    if t.rep.dim() == 0 {
        return Ok(Some(false));
    }
    if is_isomorphic(&t.rep, sigma)? {
        return Ok(Some(true));
    }
    Ok(None)
}

pub fn stability_submonoids(m: &Arc<FiniteMonoid>, n: &Submonoid, sigma: &Representation) -> Result<StabilityMonoids> {
    let nm = Arc::new(n.as_monoid(m));
    if !is_centric(m, n) {
        let bad = m.elements().find(|&x| {
            let mut l: Vec<usize> = n.members().iter().map(|&a| m.mul(a, x)).collect();
            let mut r: Vec<usize> = n.members().iter().map(|&a| m.mul(x, a)).collect();
            l.sort_unstable();
            l.dedup();
            r.sort_unstable();
            r.dedup();
            l != r
        });
        return Err(CliffordError::NotCentric(bad.unwrap_or(0)));
    }
    check_axioms(m, &nm, sigma)?;
    let sigma = sigma.rebase(nm.clone());
    let size = m.size();
    let apex = apex_info(&sigma)
        .apex_idempotent
        .map(|i| n.members()[i])
        .ok_or_else(|| CliffordError::Precondition("σ has no apex".into()))?;

    // isotypic parts of ℂ[M] as a left and as a right N-module
    let reg_l = Representation::regular_left(m.clone());
    let res_l = reg_l.restrict(n, nm.clone());
    let w_l = isotypic_component(&res_l, &sigma)?;
    let complement = isotypic_quotient(&res_l, &sigma)?.kernel;
    if w_l.dim() + complement.dim() != size || w_l.intersect(&complement).dim() != 0 {
        return Err(CliffordError::NotSemisimple("ℂ[M] is not a direct sum of its N-isotypic parts".into()));
    }
    let mut cols = w_l.basis();
    cols.extend(complement.basis());
    let coeffs = ExactMatrix::from_columns(&cols, size)
        .solve_linear(&delta(size, m.identity()))
        .ok_or_else(|| CliffordError::Invariant("identity outside ℂ[M]".into()))?;
    let mut e_w = vec![CycNum::zero(); size];
    for (c, v) in coeffs.iter().zip(&cols).take(w_l.dim()) {
        for (t, x) in e_w.iter_mut().zip(v) {
            *t += &(c * x);
        }
    }
    let reg_r = Representation::regular_right(m.clone());
    let res_r = reg_r.restrict(n, nm.clone());
    let w_r = isotypic_component(&res_r, &dual(&sigma))?;

    let left_ideal: Vec<Vec<CycNum>> = m.elements().map(|x| algebra_mul(m, &e_w, &delta(size, x))).collect();
    let right_ideal: Vec<Vec<CycNum>> = m.elements().map(|x| algebra_mul(m, &delta(size, x), &e_w)).collect();
    invariant(w_l.equals(&Subspace::span(size, &left_ideal)), "W̃_l = e^W·ℂ[M]")?;
    invariant(w_r.equals(&Subspace::span(size, &right_ideal)), "W̃_r = ℂ[M]·e^W")?;

    let i_l: Vec<usize> = m.elements().filter(|&x| preserves(reg_l.matrix(x), &w_l)).collect();
    let i_r: Vec<usize> = m.elements().filter(|&x| preserves(reg_r.matrix(x), &w_r)).collect();
    let i_lr: Vec<usize> = i_l.iter().copied().filter(|x| i_r.contains(x)).collect();

    // e^W x (1 − e^W) = 0 = (1 − e^W) x e^W
    let mut f_w: Vec<CycNum> = e_w.iter().map(|c| -c).collect();
    f_w[m.identity()] += &CycNum::one();
    let zero = |v: &[CycNum]| v.iter().all(|c| c.is_zero());
    let i_lr_corner: Vec<usize> = m
        .elements()
        .filter(|&x| {
            let d = delta(size, x);
            zero(&algebra_mul(m, &algebra_mul(m, &e_w, &d), &f_w))
                && zero(&algebra_mul(m, &algebra_mul(m, &f_w, &d), &e_w))
        })
        .collect();
    invariant(i_lr == i_lr_corner, "I^l ∩ I^r = {x ∈ e^W A e^W + (1−e^W)A(1−e^W)}")?;

    let left_sets: Vec<Vec<usize>> = m.elements().map(|x| left_set(m, n, x)).collect();
    let mut j0 = Vec::new();
    let mut j1 = Vec::new();
    for &x in &i_lr {
        match classify(m, n, &nm, &sigma, &left_sets, x)? {
            Some(true) => j1.push(x),
            Some(false) => j0.push(x),
            None => return Err(CliffordError::Invariant(format!("ℂ[G_x^N] ⊗_N W is neither 0 nor W at x={x}"))),
        }
    }
    let i1: Vec<usize> = i_lr.iter().copied().filter(|&x| j1.iter().any(|&j| j1.contains(&m.mul(x, j)))).collect();
    let i0: Vec<usize> = i_lr
        .iter()
        .copied()
        .filter(|&x| j1.iter().all(|&j| j0.contains(&m.mul(x, j))))
        .collect();
    let mut stab = StabilityMonoids {
        monoid: m.clone(),
        n: n.clone(),
        n_monoid: nm,
        sigma,
        apex,
        idempotent: e_w,
        w_left: w_l,
        w_right: w_r,
        i_l,
        i_r,
        i_lr,
        j0,
        j1,
        i0,
        i1,
        i_m: Vec::new(),
        j_m: Vec::new(),
    };
    let i1_p1: Vec<usize> = stab.i_lr.iter().copied().filter(|&x| !zero(&stab.p1(x))).collect();
    invariant(stab.i1 == i1_p1, "I^1 by products agrees with p₁(x) ≠ 0")?;
    stab.i_m = products(m, &stab.i1, n.members());
    stab.j_m = products(m, &stab.j1, n.members());
    check_invariants(&stab)?;
    Ok(stab)
}

fn check_invariants(s: &StabilityMonoids) -> Result<()> {
    let m = &s.monoid;
    let mut union = s.i0.clone();
    union.extend(&s.i1);
    union.sort_unstable();
    invariant(union == s.i_lr && s.i0.iter().all(|x| !s.i1.contains(x)), "I^lr = I^0 ⊔ I^1")?;
    invariant(subset(&s.j_m, &s.i_m), "J_M(σ) ⊆ I_M(σ)")?;
    invariant(subset(&s.i_m, &s.i_lr), "I_M(σ) ⊆ I^lr")?;
    invariant(s.j1.contains(&s.apex), "e ∈ J^1")?;
    invariant(subset(&products(m, &s.j1, &s.j1), &s.j1), "J^1·J^1 ⊆ J^1")?;
    invariant(s.i1.contains(&m.identity()) && subset(&products(m, &s.i1, &s.i1), &s.i1), "I^1 is a monoid")?;
    invariant(
        subset(&products(m, &s.i_lr, &s.i0), &s.i0) && subset(&products(m, &s.i0, &s.i_lr), &s.i0),
        "I^0 is an ideal of I^lr",
    )?;
    invariant(subset(&m.idempotents(), &s.i_lr), "E(M) ⊆ I^lr")?;
    invariant(s.i1.iter().all(|&x| s.j1.contains(&m.mul(x, s.apex))), "x ∈ I^1 ⟹ xe ∈ J^1")?;
    Ok(())
}

/// m ∈ I^1 ⟺ m* ∈ I^1 for each of I^0, I^1 (inverse monoids only).
pub fn star_closed(s: &StabilityMonoids) -> Option<bool> {
    let star = monoidrep_core::involution(&s.monoid)?;
    let closed = |set: &[usize]| set.iter().all(|&x| set.contains(&star[x]));
    Some(closed(&s.i0) && closed(&s.i1))
}

/// σ-isotypic part W̃^V of Res_N V and its stability monoid I^V.
#[derive(Clone, Debug)]
pub struct VStability {
    pub w_tilde: Subspace,
    pub i_v: Vec<usize>,
    /// {m ∈ I^V : m·W̃^V ≠ 0}
    pub i1_v: Vec<usize>,
    pub multiplicity: usize,
    pub irreducible_over_i_v: bool,
    /// V ≅ ind_{I^V}^M W̃^V
    pub induction_isomorphic: bool,
    pub idempotents_inside: bool,
}

pub fn stability_of_v(v: &Representation, n: &Submonoid, sigma: &Representation) -> Result<VStability> {
    let m = v.monoid_arc().clone();
    let nm = Arc::new(n.as_monoid(&m));
    if !is_centric(&m, n) {
        return Err(CliffordError::Precondition("N is not centric".into()));
    }
    if *sigma.monoid() != *nm {
        return Err(CliffordError::Precondition("σ is not a representation of N".into()));
    }
    let sigma = sigma.rebase(nm.clone());
    let res = v.restrict(n, nm.clone());
    let w = isotypic_component(&res, &sigma)?;
    if w.dim() == 0 {
        return Err(CliffordError::Precondition("σ does not occur in V".into()));
    }
    let i_v: Vec<usize> = m.elements().filter(|&x| preserves(v.matrix(x), &w)).collect();
    let i1_v: Vec<usize> =
        i_v.iter().copied().filter(|&x| w.basis().iter().any(|b| v.matrix(x).mul_vec(b).iter().any(|c| !c.is_zero()))).collect();
    let sub = Submonoid::new(&m, &i_v)?;
    let sub_m = Arc::new(sub.as_monoid(&m));
    let w_rep = v.restrict(&sub, sub_m.clone()).subrepresentation(&w);
    let all: Vec<usize> = m.elements().collect();
    let ind = balanced_tensor(&m, &all, &sub, &w_rep, m.clone(), &all)?.rep;
    let induction_isomorphic = ind.dim() == v.dim() && is_isomorphic(&ind, v)?;
    Ok(VStability {
        multiplicity: multiplicity(&sigma, &res)?,
        irreducible_over_i_v: w_rep.is_irreducible(),
        idempotents_inside: subset(&m.idempotents(), &i_v),
        w_tilde: w,
        i_v,
        i1_v,
        induction_isomorphic,
    })
}

/// Comparison for inverse monoids whose L-classes are groups: I_{G_f}(σ)·f^{[-1]}
/// against I^1 and the V-relative I^1_V, and m_N(W,V) against m_{T_f}(σ∘τ⁻¹, π).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Example2Report {
    pub e: usize,
    pub f: usize,
    pub formula: Vec<usize>,
    pub i1_v: Vec<usize>,
    pub i1: Vec<usize>,
    pub m_n: usize,
    pub m_t: usize,
}

impl Example2Report {
    pub fn matches_v_relative(&self) -> bool {
        self.formula == self.i1_v
    }

    pub fn matches_global(&self) -> bool {
        self.formula == self.i1
    }
}

pub fn example2_check(
    m: &Arc<FiniteMonoid>,
    n: &Submonoid,
    sigma: &Representation,
    v: &Representation,
) -> Result<Example2Report> {
    if !is_inverse_monoid(m) {
        return Err(CliffordError::Precondition("M is not inverse".into()));
    }
    let green = GreenData::absolute(m);
    if m.elements().any(|x| m.elements().any(|y| green.same_l(x, y) && !green.same_h(x, y))) {
        return Err(CliffordError::Precondition("some L-class is not a group".into()));
    }
    let stab = stability_submonoids(m, n, sigma)?;
    let sigma = &stab.sigma;
    let vs = stability_of_v(v, n, sigma)?;
    let e = stab.apex;
    let f = apex_info(v).apex_idempotent.ok_or_else(|| CliffordError::Precondition("V has no apex".into()))?;
    let (gf, gf_members) = local_group(m, &Submonoid::whole(m), f);
    let gpos = |x: usize| gf_members.iter().position(|&y| y == x);
    let ge: Vec<usize> = n.members().iter().copied().filter(|&y| left_set(m, n, y) == left_set(m, n, e)).collect();

    // T_f = G_e^N f, Stab = {g : gf = f}, σ∘τ⁻¹ on T_f
    let mut t_idx: Vec<usize> = Vec::new();
    let mut lift: Vec<(usize, usize)> = Vec::new();
    let mut applicable = m.mul(e, f) == f;
    for &g in &ge {
        match gpos(m.mul(g, f)) {
            Some(i) => {
                if !t_idx.contains(&i) {
                    t_idx.push(i);
                    lift.push((i, g));
                }
            }
            None => applicable = false,
        }
    }
    let sidx = |g: usize| n.index_of(g).expect("element of N");
    if applicable {
        for &g in &ge {
            if m.mul(g, f) == f && !sigma.matrix(sidx(g)).is_identity() {
                applicable = false;
            }
        }
    }
    let corner = Subspace::column_space(v.matrix(f));
    let pi_mats: Vec<ExactMatrix> = gf_members
        .iter()
        .map(|&x| {
            let cols: Vec<Vec<CycNum>> = corner.basis().iter().map(|b| corner.coords(&v.matrix(x).mul_vec(b))).collect();
            ExactMatrix::from_columns(&cols, corner.dim())
        })
        .collect();
    let gf = Arc::new(gf);
    let pi = Representation::new(gf.clone(), v.side(), pi_mats)?;
    let mut formula = Vec::new();
    let mut m_t = 0;
    if applicable {
        t_idx.sort_unstable();
        let tm = Arc::new(gf.restrict(&t_idx));
        let sig_t = |i: usize| {
            let g = lift.iter().find(|(t, _)| *t == i).expect("lifted").1;
            sigma.matrix(sidx(g)).clone()
        };
        let s_rep = Representation::new(tm.clone(), v.side(), t_idx.iter().map(|&i| sig_t(i)).collect())?;
        let pi_t = Representation::new(tm.clone(), v.side(), t_idx.iter().map(|&i| pi.matrix(i).clone()).collect())?;
        m_t = multiplicity(&s_rep, &pi_t)?;
        let mut stable = Vec::new();
        for h in gf.elements() {
            let hi = gf.unit_inverse(h).expect("group");
            let conj: Option<Vec<ExactMatrix>> = t_idx
                .iter()
                .map(|&t| t_idx.contains(&gf.mul(gf.mul(hi, t), h)).then(|| sig_t(gf.mul(gf.mul(hi, t), h))))
                .collect();
            if let Some(mats) = conj {
                let c = Representation::new(tm.clone(), v.side(), mats)?;
                if is_isomorphic(&c, &s_rep)? {
                    stable.push(gf_members[h]);
                }
            }
        }
        formula = m.elements().filter(|&x| stable.contains(&m.mul(x, f))).collect();
    }
    let res = v.restrict(n, stab.n_monoid.clone());
    Ok(Example2Report {
        e,
        f,
        formula,
        i1_v: vs.i1_v,
        i1: stab.i1.clone(),
        m_n: multiplicity(sigma, &res)?,
        m_t,
    })
}
