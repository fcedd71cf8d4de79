//! Schützenberger representations over the local group, induction, coinduction,
//! the sandwich intertwiner σ(P) and the radical N_e.

use std::sync::Arc;

use monoidrep_core::green::sandwich_matrix_with;
use monoidrep_core::{local_group, FiniteMonoid, GreenClass, GreenData, SandwichMatrix, Submonoid};
use monoidrep_linalg::ExactMatrix;

use crate::representation::{Representation, Side};
use crate::subspace::Subspace;
use crate::RepError;

/// π_l or π_r of N at a base element, as block-monomial matrices over G_m^N ∪ {0}.
#[derive(Clone, Debug)]
pub struct SchutzRep {
    pub base: usize,
    pub side: Side,
    /// G_m^N as a standalone group (product ∘_m).
    pub group: Arc<FiniteMonoid>,
    /// Parent element of each group index.
    pub group_members: Vec<usize>,
    pub class: GreenClass,
    /// Members of N; `blocks[k]` belongs to `n_members[k]`.
    pub n_members: Vec<usize>,
    /// blocks[k][i][j]: group index or zero.
    pub blocks: Vec<Vec<Vec<Option<usize>>>>,
}

impl SchutzRep {
    pub fn size(&self) -> usize {
        match self.side {
            Side::Left => self.class.alpha(),
            Side::Right => self.class.beta(),
        }
    }

    /// Honest matrices obtained by substituting a representation of G into the blocks
    /// (the left regular representation when `sigma` is None). The result is a left
    /// representation of N in either case.
    pub fn to_representation(
        &self,
        n_monoid: Arc<FiniteMonoid>,
        sigma: Option<&Representation>,
    ) -> Result<Representation, RepError> {
        let reg;
        let sigma = match sigma {
            Some(s) => {
                if *s.monoid() != *self.group {
                    return Err(RepError::MonoidMismatch);
                }
                s
            }
            None => {
                reg = Representation::regular_left(self.group.clone());
                &reg
            }
        };
        let d = sigma.dim();
        let s = self.size();
        let mats = self
            .blocks
            .iter()
            .map(|blk| {
                let mut a = ExactMatrix::zeros(s * d, s * d);
                for (i, row) in blk.iter().enumerate() {
                    for (j, e) in row.iter().enumerate() {
                        if let Some(g) = e {
                            let sg = sigma.matrix(*g);
                            for p in 0..d {
                                for q in 0..d {
                                    a.set(i * d + p, j * d + q, sg.get(p, q).clone());
                                }
                            }
                        }
                    }
                }
                a
            })
            .collect();
        Representation::new_unchecked(n_monoid, Side::Left, mats)
    }
}

pub fn schutzenberger(m: &FiniteMonoid, n: &Submonoid, elem: usize, side: Side) -> SchutzRep {
    let green = GreenData::new(m, n, n);
    let class = green.record_at(m, elem);
    let (group, group_members) = local_group(m, n, elem);
    let group = Arc::new(group);
    let gidx = |x: usize| group_members.iter().position(|&g| g == x);
    let blocks = n
        .members()
        .iter()
        .map(|&a| match side {
            Side::Left => {
                let s = class.alpha();
                let mut blk = vec![vec![None; s]; s];
                for j in 0..s {
                    let z = m.mul(a, class.xs[j]);
                    if !class.l_class.contains(&z) {
                        continue;
                    }
                    let i = (0..s).find(|&i| green.same_r(z, class.xs[i])).expect("orbit representative");
                    let g = group_members
                        .iter()
                        .copied()
                        .find(|&g| m.mul(class.x_left[i], g) == z)
                        .expect("free orbit");
                    blk[i][j] = gidx(g);
                }
                blk
            }
            Side::Right => {
                let t = class.beta();
                let mut blk = vec![vec![None; t]; t];
                for i in 0..t {
                    let z = m.mul(class.ys[i], a);
                    if !class.r_class.contains(&z) {
                        continue;
                    }
                    let j = (0..t).find(|&j| green.same_l(z, class.ys[j])).expect("orbit representative");
                    let h = group_members
                        .iter()
                        .copied()
                        .find(|&h| m.mul(h, class.y_right[j]) == z)
                        .expect("free orbit");
                    blk[i][j] = gidx(h);
                }
                blk
            }
        })
        .collect();
    SchutzRep { base: elem, side, group, group_members, class, n_members: n.members().to_vec(), blocks }
}

/// Local group G_e (standalone) and its parent elements, for N = M.
pub fn maximal_subgroup(m: &FiniteMonoid, e: usize) -> (Arc<FiniteMonoid>, Vec<usize>) {
    let (g, members) = local_group(m, &Submonoid::whole(m), e);
    (Arc::new(g), members)
}

fn check_sigma(m: &FiniteMonoid, e: usize, sigma: &Representation) -> Result<(), RepError> {
    let (g, _) = maximal_subgroup(m, e);
    if *sigma.monoid() != *g {
        return Err(RepError::Precondition("σ is not a representation of the local group".into()));
    }
    Ok(())
}

/// Ind_{G_e}(σ): dimension α·dim σ, block (i,j) = σ(π_l(m)_{ij}).
pub fn induce(m: &Arc<FiniteMonoid>, e: usize, sigma: &Representation) -> Result<Representation, RepError> {
    check_sigma(m, e, sigma)?;
    let sr = schutzenberger(m, &Submonoid::whole(m), e, Side::Left);
    let sigma = sigma.rebase(sr.group.clone());
    let r = sr.to_representation(m.clone(), Some(&sigma))?;
    debug_assert!(r.validate().is_ok());
    Ok(r)
}

/// Coind_{G_e}(σ): dimension β·dim σ, block (i,j) = σ(π_r(m)_{ij}).
pub fn coinduce(m: &Arc<FiniteMonoid>, e: usize, sigma: &Representation) -> Result<Representation, RepError> {
    check_sigma(m, e, sigma)?;
    let sr = schutzenberger(m, &Submonoid::whole(m), e, Side::Right);
    let sigma = sigma.rebase(sr.group.clone());
    let r = sr.to_representation(m.clone(), Some(&sigma))?;
    debug_assert!(r.validate().is_ok());
    Ok(r)
}

/// Default sandwich matrix at e, using the transversals of the Schützenberger construction.
pub fn sandwich_at(m: &FiniteMonoid, e: usize) -> SandwichMatrix {
    let rec = GreenData::absolute(m).record_at(m, e);
    sandwich_matrix_with(m, e, &rec.xs, &rec.ys)
}

/// σ(P(e)): the matrix of Ind(σ) → Coind(σ), x⊗w ↦ (y ↦ (y·x)w).
pub fn phi_map(m: &FiniteMonoid, e: usize, sigma: &Representation) -> Result<ExactMatrix, RepError> {
    check_sigma(m, e, sigma)?;
    let p = sandwich_at(m, e);
    Ok(substitute(&p, sigma))
}

/// Block matrix with σ(P_{ji}) in block (j,i).
pub fn substitute(p: &SandwichMatrix, sigma: &Representation) -> ExactMatrix {
    let d = sigma.dim();
    let (t, s) = (p.ys.len(), p.xs.len());
    let mut a = ExactMatrix::zeros(t * d, s * d);
    for j in 0..t {
        for i in 0..s {
            if let Some(g) = p.entries[j][i] {
                let gi = p.group.iter().position(|&x| x == g).unwrap();
                let sg = sigma.matrix(gi);
                for r in 0..d {
                    for c in 0..d {
                        a.set(j * d + r, i * d + c, sg.get(r, c).clone());
                    }
                }
            }
        }
    }
    a
}

/// N_e = {x : e·m·x = 0 for all m}.
pub fn radical_subspace(v: &Representation, e: usize) -> Subspace {
    let m = v.monoid();
    let mats: Vec<ExactMatrix> = m.elements().map(|x| v.matrix(m.mul(e, x)).clone()).collect();
    Subspace::common_kernel(v.dim(), &mats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use monoidrep_core::builtin::*;
    use monoidrep_linalg::CycNum;

    #[test]
    fn group_case_is_regular() {
        let s3 = symmetric_group(3);
        let w = Submonoid::whole(&s3);
        let sr = schutzenberger(&s3, &w, 0, Side::Left);
        assert_eq!(sr.size(), 1);
        let r = sr.to_representation(Arc::new(s3.clone()), None).unwrap();
        assert_eq!(r.dim(), 6);
        r.validate().unwrap();
    }

    #[test]
    fn is2_rank_one() {
        let m = symmetric_inverse_monoid(2);
        let e = m.elements().find(|&x| m.label(x) == "[1,-]").unwrap();
        let w = Submonoid::whole(&m);
        for side in [Side::Left, Side::Right] {
            let sr = schutzenberger(&m, &w, e, side);
            assert_eq!(sr.size(), 2);
            assert_eq!(sr.group.size(), 1);
            for blk in &sr.blocks {
                for j in 0..2 {
                    assert!((0..2).filter(|&i| blk[i][j].is_some()).count() <= 1);
                }
            }
            sr.to_representation(Arc::new(m.clone()), None).unwrap().validate().unwrap();
        }
        let ma = Arc::new(m);
        let (g, _) = maximal_subgroup(&ma, e);
        let triv = Representation::trivial(g);
        let ind = induce(&ma, e, &triv).unwrap();
        assert_eq!(ind.dim(), 2);
    }

    #[test]
    fn nilpotent_radical() {
        let m = Arc::new(nilpotent3());
        let (g, _) = maximal_subgroup(&m, 0);
        let ind = induce(&m, 0, &Representation::trivial(g.clone())).unwrap();
        assert_eq!(radical_subspace(&ind, 0).dim(), 0);
        // apex at the zero: Ind is 1-dim with everything acting by 1, so N_0 = 0 as well
        let ind0 = induce(&m, 2, &Representation::trivial(maximal_subgroup(&m, 2).0)).unwrap();
        assert_eq!(ind0.dim(), 1);
        // the regular representation has a nonzero radical with respect to the identity
        let reg = Representation::regular_left(m.clone());
        let rad = radical_subspace(&reg, 1);
        assert!(rad.dim() > 0);
        let _ = CycNum::one();
    }
}
