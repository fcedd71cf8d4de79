//! ℂ[N] is a normal subring of ℂ[M]: the N-constituents of any two M-irreducibles
//! either coincide or are disjoint.

use std::collections::BTreeSet;
use std::sync::Arc;

use monoidrep_core::centric::is_centric;
use monoidrep_core::{FiniteMonoid, Submonoid};
use monoidrep_rep::catalog::IrrProvider;
use monoidrep_rep::{cmp_irreducibles, is_semisimple, multiplicity};
use serde::Serialize;

use crate::{CliffordError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalSubringReport {
    /// constituents[i]: the N-irreducibles occurring in Res_N of the i-th M-irreducible
    pub constituents: Vec<Vec<usize>>,
    /// distinct constituent sets
    pub blocks: Vec<Vec<usize>>,
    /// a pair of M-irreducibles whose constituent sets overlap without being equal
    pub witness: Option<(usize, usize)>,
    pub holds: bool,
}

pub fn normal_subring_check(m: &Arc<FiniteMonoid>, n: &Submonoid, provider: &dyn IrrProvider) -> Result<NormalSubringReport> {
    let nm = Arc::new(n.as_monoid(m));
    if !is_semisimple(m).semisimple || !is_semisimple(&nm).semisimple {
        return Err(CliffordError::NotSemisimple("normal_subring_check needs M and N semisimple".into()));
    }
    let irr_n = cmp_irreducibles(&nm, provider)?;
    let mut constituents = Vec::new();
    for c in cmp_irreducibles(m, provider)? {
        let res = c.rep.restrict(n, nm.clone());
        let mut set = Vec::new();
        for (j, s) in irr_n.iter().enumerate() {
            if multiplicity(&s.rep, &res)? > 0 {
                set.push(j);
            }
        }
        constituents.push(set);
    }
    let mut witness = None;
    'outer: for i in 0..constituents.len() {
        for j in i + 1..constituents.len() {
            let (a, b) = (&constituents[i], &constituents[j]);
            if a != b && a.iter().any(|x| b.contains(x)) {
                witness = Some((i, j));
                break 'outer;
            }
        }
    }
    let blocks: BTreeSet<Vec<usize>> = constituents.iter().cloned().collect();
    Ok(NormalSubringReport { constituents, blocks: blocks.into_iter().collect(), witness, holds: witness.is_none() })
}

/// Centric submonoids generated by at most two elements.
pub fn centric_submonoids(m: &FiniteMonoid) -> Vec<Submonoid> {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut out = Vec::new();
    let mut consider = |gens: &[usize]| {
        let s = Submonoid::generated(m, gens);
        if seen.insert(s.members().to_vec()) && is_centric(m, &s) {
            out.push(s);
        }
    };
    consider(&[]);
    for a in m.elements() {
        consider(&[a]);
        for b in a + 1..m.size() {
            consider(&[a, b]);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use monoidrep_core::builtin::*;
    use monoidrep_rep::catalog::BasicProvider;

    #[test]
    fn trivial_and_whole_are_normal() {
        let m = Arc::new(symmetric_inverse_monoid(2));
        for n in [Submonoid::trivial(&m), Submonoid::whole(&m)] {
            assert!(normal_subring_check(&m, &n, &BasicProvider).unwrap().holds);
        }
        let cs = centric_submonoids(&m);
        assert!(!cs.iter().any(|s| s.is_whole()));
        // {1}, {1, 0} and E(M); the unit group does not commute past rank-one maps
        assert_eq!(cs.iter().map(|s| s.len()).collect::<Vec<_>>(), vec![1, 2, 4]);
        assert!(cs.iter().any(|s| s.len() == 1));
        let s3 = symmetric_group(3);
        assert_eq!(centric_submonoids(&s3).len(), 3);
    }
}
