//! Γ = p⁻¹(graph ι) ⊆ M₁×M₂ for an isomorphism ι: M₁/N₁ → M₂/N₂, and the comparison of
//! Res_{N₁×N₂} ρ with Ind_Γ^{M₁×M₂} ρ on apex-diagonal irreducibles.

use std::sync::Arc;

use monoidrep_clifford::induced::balanced_tensor;
use monoidrep_core::builtin::{adjoin_zero, cyclic, symmetric_group};
use monoidrep_core::centric::{is_centric, quotient_centric};
use monoidrep_core::{FiniteMonoid, GreenData, Submonoid};
use monoidrep_rep::catalog::IrrProvider;
use monoidrep_rep::cmp::apex_info;
use monoidrep_rep::{cmp_irreducibles, is_semisimple, multiplicity, Representation, Side};
use serde::Serialize;

use crate::bimodule::{is_theta, is_theta_on, product_monoid, BimoduleRep, ThetaReport};
use crate::{Result, ThetaError};

/// M₁, N₁, M₂, N₂ and ι as a map on the elements of the quotients.
#[derive(Clone, Debug)]
pub struct GammaData {
    pub m1: Arc<FiniteMonoid>,
    pub n1: Submonoid,
    pub m2: Arc<FiniteMonoid>,
    pub n2: Submonoid,
    pub iota: Vec<usize>,
}

/// Γ inside M₁×M₂, with the product and the two projections to the quotients.
#[derive(Clone, Debug)]
pub struct Graph {
    pub product: Arc<FiniteMonoid>,
    pub gamma: Submonoid,
    pub gamma_monoid: Arc<FiniteMonoid>,
    pub q1: FiniteMonoid,
    pub q2: FiniteMonoid,
    pub p1: Vec<usize>,
    pub p2: Vec<usize>,
}

fn check_assumption(d: &GammaData) -> Vec<String> {
    let mut issues = Vec::new();
    for (k, m, n) in [(1, &d.m1, &d.n1), (2, &d.m2, &d.n2)] {
        if !is_semisimple(m).semisimple {
            issues.push(format!("M{k} is not semisimple"));
        }
        if !is_centric(m, n) {
            issues.push(format!("N{k} is not centric in M{k}"));
        }
        if !is_centric(m, &Submonoid::whole(m)) {
            issues.push(format!("M{k} is not centric in itself"));
        }
        if !n.as_monoid(m).is_group() {
            issues.push(format!("N{k} is not a subgroup"));
        }
    }
    issues
}

pub fn graph_submonoid(d: &GammaData) -> Result<Graph> {
    let issues = check_assumption(d);
    if !issues.is_empty() {
        return Err(ThetaError::Assumption(issues));
    }
    let (q1, p1) = quotient_centric(&d.m1, &d.n1)?;
    let (q2, p2) = quotient_centric(&d.m2, &d.n2)?;
    let bijective = d.iota.len() == q1.size() && {
        let mut seen = vec![false; q2.size()];
        d.iota.iter().all(|&y| y < q2.size() && !std::mem::replace(&mut seen[y], true))
    };
    if !bijective || !q1.is_homomorphism(&q2, &d.iota) {
        return Err(ThetaError::Assumption(vec!["ι is not an isomorphism M₁/N₁ → M₂/N₂".into()]));
    }
    let product = Arc::new(product_monoid(&d.m1, &d.m2));
    let n2s = d.m2.size();
    let members: Vec<usize> = product.elements().filter(|&p| d.iota[p1[p / n2s]] == p2[p % n2s]).collect();
    let gamma = Submonoid::new(&product, &members)?;
    let gamma_monoid = Arc::new(gamma.as_monoid(&product));
    Ok(Graph { product, gamma, gamma_monoid, q1, q2, p1, p2 })
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaReport {
    pub gamma: Vec<usize>,
    /// apex idempotent (f₁, f₂) of ρ in M₁×M₂
    pub apex: (usize, usize),
    pub restricted: ThetaReport,
    pub induced: ThetaReport,
    pub induced_dim: usize,
    /// constituents (i, j) of the induced representation outside Irr^E
    pub excluded: Vec<(usize, usize)>,
    pub holds: bool,
}

pub fn gamma_transfer(d: &GammaData, rho: &Representation, provider: &dyn IrrProvider) -> Result<GammaReport> {
    let g = graph_submonoid(d)?;
    if *rho.monoid() != *g.gamma_monoid {
        return Err(ThetaError::Assumption(vec!["ρ is not a representation of Γ".into()]));
    }
    let rho = rho.rebase(g.gamma_monoid.clone());
    let n2s = d.m2.size();

    // all irreducible components of ρ share one apex
    let mut apexes = Vec::new();
    for c in cmp_irreducibles(&g.gamma_monoid, provider)? {
        if multiplicity(&c.rep, &rho)? > 0 {
            apexes.push(c.apex);
        }
    }
    let gg = GreenData::absolute(&g.gamma_monoid);
    let Some(&f) = apexes.first() else {
        return Err(ThetaError::Assumption(vec!["ρ is zero".into()]));
    };
    if apexes.iter().any(|&x| !gg.same_j(x, f)) {
        return Err(ThetaError::Assumption(vec!["the components of ρ have different apexes".into()]));
    }
    let fp = g.gamma.members()[f];
    let apex = (fp / n2s, fp % n2s);

    // Res to N₁×N₂
    let n1m = Arc::new(d.n1.as_monoid(&d.m1));
    let n2m = Arc::new(d.n2.as_monoid(&d.m2));
    let small = Arc::new(product_monoid(&n1m, &n2m));
    let k2 = d.n2.len();
    let mats = small
        .elements()
        .map(|p| {
            let whole = d.n1.members()[p / k2] * n2s + d.n2.members()[p % k2];
            rho.matrix(g.gamma.index_of(whole).expect("N₁×N₂ ⊆ Γ")).clone()
        })
        .collect();
    let res = Representation::new(small, Side::Left, mats)?;
    let restricted = is_theta(&BimoduleRep::new(n1m, n2m, res, provider)?)?;

    // Ind_Γ^{M₁×M₂} ρ on Irr^E
    let all: Vec<usize> = g.product.elements().collect();
    let ind = balanced_tensor(&g.product, &all, &g.gamma, &rho, g.product.clone(), &all)?.rep;
    let c1 = cmp_irreducibles(&d.m1, provider)?;
    let c2 = cmp_irreducibles(&d.m2, provider)?;
    let pi = BimoduleRep::with_catalogs(
        d.m1.clone(),
        d.m2.clone(),
        ind.rebase(g.product.clone()),
        c1.iter().map(|c| c.rep.clone()).collect(),
        c2.iter().map(|c| c.rep.clone()).collect(),
    )?;
    let gq2 = GreenData::absolute(&g.q2);
    let allowed = |i: usize, j: usize| gq2.same_j(d.iota[g.p1[c1[i].apex]], g.p2[c2[j].apex]);
    let induced = is_theta_on(&pi, allowed)?;
    let mut excluded = Vec::new();
    for (i, row) in induced.multiplicities.iter().enumerate() {
        for (j, &m) in row.iter().enumerate() {
            if m > 0 && !allowed(i, j) {
                excluded.push((i, j));
            }
        }
    }
    let holds = restricted.verdict.is_some() && restricted.verdict == induced.verdict;
    Ok(GammaReport {
        gamma: g.gamma.members().to_vec(),
        apex,
        restricted,
        induced,
        induced_dim: ind.dim(),
        excluded,
        holds,
    })
}

fn quotient_iso(m1: &Arc<FiniteMonoid>, n1: &Submonoid, m2: &Arc<FiniteMonoid>, n2: &Submonoid) -> Vec<usize> {
    let (q1, _) = quotient_centric(m1, n1).expect("centric");
    let (q2, _) = quotient_centric(m2, n2).expect("centric");
    q1.find_isomorphism(&q2).expect("isomorphic quotients")
}

/// Groups: M₁ = N₁ = S₃, M₂ = N₂ = C₂, so Γ = M₁×M₂ and both quotients are trivial.
pub fn desk_group_case() -> GammaData {
    let m1 = Arc::new(symmetric_group(3));
    let m2 = Arc::new(cyclic(2));
    let (n1, n2) = (Submonoid::whole(&m1), Submonoid::whole(&m2));
    let iota = quotient_iso(&m1, &n1, &m2, &n2);
    GammaData { m1, n1, m2, n2, iota }
}

/// Inverse monoids: M₁ = C₂×{1,0} and M₂ = C₂⁰ with N_i their unit groups C₂; both quotients
/// are {1,0}.
pub fn desk_inverse_case() -> GammaData {
    let m1 = Arc::new(cyclic(2).direct_product(&monoidrep_clifford::multiplier::z2_semilattice()));
    let m2 = Arc::new(adjoin_zero(&cyclic(2)));
    let n1 = Submonoid::units(&m1);
    let n2 = Submonoid::units(&m2);
    let iota = quotient_iso(&m1, &n1, &m2, &n2);
    GammaData { m1, n1, m2, n2, iota }
}

/// Every ρ = ⊕ cₖ ρₖ over Γ-irreducibles ρₖ of one apex with 0 ≤ cₖ ≤ `max_mult`.
pub fn single_apex_representations(d: &GammaData, max_mult: usize, provider: &dyn IrrProvider) -> Result<Vec<Representation>> {
    let g = graph_submonoid(d)?;
    let irr = cmp_irreducibles(&g.gamma_monoid, provider)?;
    let mut out = Vec::new();
    let mut classes: Vec<usize> = irr.iter().map(|c| c.class).collect();
    classes.sort_unstable();
    classes.dedup();
    for cl in classes {
        let group: Vec<&Representation> = irr.iter().filter(|c| c.class == cl).map(|c| &c.rep).collect();
        let mut counts = vec![0usize; group.len()];
        loop {
            let mut k = 0;
            while k < counts.len() {
                counts[k] += 1;
                if counts[k] <= max_mult {
                    break;
                }
                counts[k] = 0;
                k += 1;
            }
            if k == counts.len() {
                break;
            }
            let parts: Vec<Representation> =
                group.iter().zip(&counts).flat_map(|(r, &c)| std::iter::repeat((*r).clone()).take(c)).collect();
            let rho = Representation::direct_sum_all(&parts)?;
            debug_assert!(apex_info(&rho).apex_class.is_some());
            out.push(rho);
        }
    }
    Ok(out)
}
