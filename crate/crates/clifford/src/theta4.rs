//! Semisimplicity of M against that of a centric N and of M/N, plus the structural
//! facts about the projection M → M/N.

use monoidrep_core::centric::{is_centric, quotient_centric};
use monoidrep_core::inverse::is_inverse_monoid;
use monoidrep_core::{FiniteMonoid, GreenData, Submonoid};
use monoidrep_rep::is_semisimple;
use serde::Serialize;

use crate::{CliffordError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theta4Report {
    pub ss_m: bool,
    pub ss_n: bool,
    pub ss_quotient: bool,
    pub quotient_size: usize,
    /// ss(M) ⟺ ss(N) ∧ ss(M/N)
    pub holds: bool,
}

pub fn theorem_theta4_check(m: &FiniteMonoid, n: &Submonoid) -> Result<Theta4Report> {
    let (q, _) = quotient_centric(m, n).map_err(|e| match e {
        monoidrep_core::MonoidError::NotCentric(x) => CliffordError::NotCentric(x),
        other => other.into(),
    })?;
    let ss_m = is_semisimple(m).semisimple;
    let ss_n = is_semisimple(&n.as_monoid(m)).semisimple;
    let ss_quotient = is_semisimple(&q).semisimple;
    Ok(Theta4Report { ss_m, ss_n, ss_quotient, quotient_size: q.size(), holds: ss_m == (ss_n && ss_quotient) })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    /// p⁻¹(L_[e]) = L_e for every idempotent e
    pub l_preimages: bool,
    /// p⁻¹(G_[e]) = G_e for every idempotent e
    pub g_preimages: bool,
    /// E(M) → E(M/N) is onto
    pub idempotents_onto: bool,
    pub idempotents_bijective: bool,
    pub inverse: bool,
}

pub fn quotient_structure_check(m: &FiniteMonoid, n: &Submonoid) -> Result<StructureReport> {
    if !is_centric(m, n) {
        return Err(CliffordError::Precondition("N is not centric".into()));
    }
    let (q, proj) = quotient_centric(m, n)?;
    let gm = GreenData::absolute(m);
    let gq = GreenData::absolute(&q);
    let preimage = |cls: &dyn Fn(usize) -> bool| -> Vec<usize> { m.elements().filter(|&x| cls(proj[x])).collect() };
    let mut l_pre = true;
    let mut g_pre = true;
    for e in m.idempotents() {
        let pe = proj[e];
        let l_m: Vec<usize> = m.elements().filter(|&x| gm.same_l(x, e)).collect();
        let h_m: Vec<usize> = m.elements().filter(|&x| gm.same_h(x, e)).collect();
        l_pre &= preimage(&|y| gq.same_l(y, pe)) == l_m;
        g_pre &= preimage(&|y| gq.same_h(y, pe)) == h_m;
    }
    let images: std::collections::BTreeSet<usize> = m.idempotents().iter().map(|&e| proj[e]).collect();
    let target: std::collections::BTreeSet<usize> = q.idempotents().into_iter().collect();
    let idempotents_onto = target.is_subset(&images);
    let idempotents_bijective = idempotents_onto && images.len() == m.idempotents().len();
    Ok(StructureReport {
        l_preimages: l_pre,
        g_preimages: g_pre,
        idempotents_onto,
        idempotents_bijective,
        inverse: is_inverse_monoid(m),
    })
}
