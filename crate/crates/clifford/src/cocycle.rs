//! Intertwiner systems on π_[σ] = ind_N^{I_M(σ)} σ, the cocycle they define, and the
//! projective factors ρ₁ on W and ρ₂ on End(π_[σ]).

use std::sync::Arc;

use monoidrep_core::green::left_set;
use monoidrep_core::{local_group, FiniteMonoid, Submonoid};
use monoidrep_linalg::{CycNum, ExactMatrix};
use monoidrep_rep::{hom_space, is_isomorphic, Representation, Side, Subspace};
use num_integer::Integer;
use serde::Serialize;

use crate::induced::{balanced_tensor, BalancedTensor};
use crate::multiplier::{Multiplier, Target};
use crate::roots::{exponent_in, nth_root};
use crate::stability::StabilityMonoids;
use crate::{CliffordError, Result};

#[derive(Clone, Debug)]
pub struct IntertwinerSystem {
    /// I_M(σ) as a standalone monoid; element i is `members[i]`.
    pub i_monoid: Arc<FiniteMonoid>,
    pub members: Vec<usize>,
    /// π_[σ] as a representation of I_M(σ).
    pub induced: BalancedTensor,
    /// Representatives of I^1/N: e first, then the rest of J^1, then I^1 ∖ J^1.
    pub reps: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
    /// Number of representatives lying in J^1.
    pub alpha: usize,
    /// 𝔢_{m_i} on W, with 𝔢^{κ₁} = id.
    pub e_maps: Vec<ExactMatrix>,
    /// 𝔈_{m_i} on π_[σ].
    pub operators: Vec<ExactMatrix>,
    pub kappa0: u32,
    pub kappa1: u32,
    pub kappa: u32,
    /// table[i][j]: exponent of α(m_i, m_j) in μ_κ.
    pub table: Vec<Vec<u32>>,
    /// class index of each parent element of I^1
    pub class_of: Vec<Option<usize>>,
    pub multiplier: Multiplier,
    pub apex: usize,
    pub d: usize,
    pub sigma: Representation,
    pub n_members: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CocycleEntry {
    pub i: usize,
    pub j: usize,
    pub exponent: u32,
}

/// |Aut(G)| by extending every assignment on the generators.
pub fn automorphism_count(g: &FiniteMonoid) -> usize {
    let gens = g.generators().to_vec();
    let n = g.size();
    let mut count = 0;
    let mut imgs = vec![0usize; gens.len()];
    loop {
        if let Some(f) = g.extend_map(g, &gens, &imgs) {
            let mut seen = vec![false; n];
            if f.iter().all(|&y| !std::mem::replace(&mut seen[y], true)) {
                count += 1;
            }
        }
        let mut k = 0;
        while k < imgs.len() {
            imgs[k] += 1;
            if imgs[k] < n {
                break;
            }
            imgs[k] = 0;
            k += 1;
        }
        if k == imgs.len() {
            break;
        }
    }
    count
}

fn proportional(a: &ExactMatrix, b: &ExactMatrix) -> Option<CycNum> {
    let (ea, eb) = (a.entries(), b.entries());
    let k = eb.iter().position(|x| !x.is_zero())?;
    let c = ea[k].checked_div(&eb[k]).ok()?;
    (*a == b.scale(&c)).then_some(c)
}

pub fn intertwiner_cocycle(stab: &StabilityMonoids) -> Result<IntertwinerSystem> {
    let m = &stab.monoid;
    let n = &stab.n;
    let sigma = &stab.sigma;
    let d = sigma.dim();
    let e = stab.apex;
    let one = m.identity();
    let sub = Submonoid::new(m, &stab.i_m)?;
    let i_monoid = Arc::new(sub.as_monoid(m));
    let members = sub.members().to_vec();
    let induced = balanced_tensor(m, &members, n, sigma, i_monoid.clone(), &members)?;

    // classes Nx of I^1, representatives by minimal index with e (and 1) forced
    let key = |x: usize| left_set(m, n, x);
    let mut classes: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for &x in &stab.i1 {
        let k = key(x);
        match classes.iter_mut().find(|(kk, _)| *kk == k) {
            Some((_, c)) => c.push(x),
            None => classes.push((k, vec![x])),
        }
    }
    let rep_of = |c: &[usize]| {
        if c.contains(&e) {
            e
        } else if c.contains(&one) {
            one
        } else {
            c[0]
        }
    };
    classes.sort_by_key(|(_, c)| {
        let r = rep_of(c);
        (r != e, !stab.j1.contains(&r), r)
    });
    let reps: Vec<usize> = classes.iter().map(|(_, c)| rep_of(c)).collect();
    let alpha = reps.iter().filter(|r| stab.j1.contains(r)).count();
    let mut class_of = vec![None; m.size()];
    for (ci, (_, c)) in classes.iter().enumerate() {
        for &x in c {
            class_of[x] = Some(ci);
        }
    }

    // G_e^N as elements of N, and its action through σ
    let sidx = |g: usize| n.index_of(g).expect("element of N");
    let ge: Vec<usize> = n.members().iter().copied().filter(|&y| key(y) == key(e)).collect();

    let kappa0 = d as u32;
    let mut kappa1 = 1u32;
    for &r in &reps {
        let (g, _) = local_group(m, n, m.mul(r, e));
        kappa1 = kappa1.lcm(&(automorphism_count(&g) as u32));
    }
    let kappa = kappa1 * kappa0;

    let mut e_maps = Vec::new();
    for &r in &reps {
        if r == e || r == one {
            e_maps.push(ExactMatrix::identity(d));
            continue;
        }
        let re = m.mul(r, e);
        // 𝔢 σ(g) = σ(h) 𝔢 where g·re = re·h
        let mut rows: Vec<Vec<CycNum>> = Vec::new();
        for &g in &ge {
            let target = m.mul(g, re);
            let h = ge
                .iter()
                .copied()
                .find(|&h| m.mul(re, h) == target)
                .ok_or_else(|| CliffordError::Invariant(format!("no g^m for g={g}, m={r}")))?;
            let (sg, sh) = (sigma.matrix(sidx(g)), sigma.matrix(sidx(h)));
            for p in 0..d {
                for q in 0..d {
                    let mut row = vec![CycNum::zero(); d * d];
                    for k in 0..d {
                        row[p * d + k] += sg.get(k, q);
                        row[k * d + q] -= sh.get(p, k);
                    }
                    rows.push(row);
                }
            }
        }
        let sol = if rows.is_empty() {
            ExactMatrix::identity(d * d).nullspace()
        } else {
            ExactMatrix::from_rows(rows).nullspace()
        };
        if sol.len() != 1 {
            return Err(CliffordError::Invariant(format!("twisted intertwiners at m={r} span {} dimensions", sol.len())));
        }
        let e0 = ExactMatrix::new(d, d, sol[0].clone());
        let power = e0.pow(kappa1 as u64);
        let lambda = power.get(0, 0).clone();
        if power != ExactMatrix::scalar(d, &lambda) || lambda.is_zero() {
            return Err(CliffordError::NormalizationImpossible(format!("𝔢^κ₁ is not a nonzero scalar at m={r}")));
        }
        let inv = lambda.inv().map_err(|_| CliffordError::NormalizationImpossible("λ = 0".into()))?;
        let c = nth_root(&inv, kappa1)
            .ok_or_else(|| CliffordError::NormalizationImpossible(format!("no exact κ₁-th root at m={r}")))?;
        let em = e0.scale(&c);
        debug_assert!(em.pow(kappa1 as u64).is_identity());
        e_maps.push(em);
    }

    let mut operators = Vec::new();
    for (&r, em) in reps.iter().zip(&e_maps) {
        let re = m.mul(r, e);
        let t = induced
            .induced_map(|x| Some(m.mul(x, re)), em)
            .ok_or_else(|| CliffordError::Invariant(format!("𝔈 is not well defined at m={r}")))?;
        operators.push(t);
    }
    for t in &operators {
        for x in 0..members.len() {
            let a = induced.rep.matrix(x);
            if t.mul(a) != a.mul(t) {
                return Err(CliffordError::Invariant("𝔈 does not commute with π_[σ]".into()));
            }
        }
    }

    // T_j T_i = α(m_i, m_j) T_t with t the class of m_i m_j
    let k = reps.len();
    let mut table = vec![vec![0u32; k]; k];
    for i in 0..k {
        for j in 0..k {
            let prod = m.mul(reps[i], reps[j]);
            let t = class_of[prod].ok_or_else(|| CliffordError::Invariant("I^1 is not closed".into()))?;
            let lhs = operators[j].mul(&operators[i]);
            let a = proportional(&lhs, &operators[t])
                .ok_or_else(|| CliffordError::Invariant(format!("𝔈_j𝔈_i not proportional to 𝔈_t at ({i}, {j})")))?;
            table[i][j] = exponent_in(&a, kappa)
                .ok_or_else(|| CliffordError::Invariant(format!("α({i}, {j}) is not a κ-th root of unity")))?;
        }
    }

    // lift to I_M(σ): zero off I^1, 1 whenever an argument is the identity
    let in_i1 = |x: usize| class_of[x].is_some();
    let target = if members.iter().all(|&x| in_i1(x)) { Target::Units } else { Target::WithZero };
    let multiplier = Multiplier::from_fn(i_monoid.clone(), kappa, target, |a, b| {
        let (x, y) = (members[a], members[b]);
        if x == one || y == one {
            return Some(0);
        }
        match (class_of[x], class_of[y]) {
            (Some(i), Some(j)) => Some(table[i][j]),
            _ => None,
        }
    });
    multiplier.validate()?;

    Ok(IntertwinerSystem {
        i_monoid,
        members,
        induced,
        reps,
        classes: classes.into_iter().map(|(_, c)| c).collect(),
        alpha,
        e_maps,
        operators,
        kappa0,
        kappa1,
        kappa,
        table,
        class_of,
        multiplier,
        apex: e,
        d,
        sigma: sigma.clone(),
        n_members: n.members().to_vec(),
    })
}

#[derive(Clone, Debug)]
pub struct ProjectiveFactors {
    /// ρ₁(m) on 𝒲 = e⊗W, indexed like I_M(σ).
    pub rho1: Vec<ExactMatrix>,
    /// ρ₂(m) on End(π_[σ]) in the basis of `endomorphisms`.
    pub rho2: Vec<ExactMatrix>,
    pub endomorphisms: Vec<ExactMatrix>,
    /// ρ₁ ⊗ ρ₂ as an honest representation.
    pub tensor: Representation,
    /// ρ₁(m)ρ₁(m′) = α(m,m′)⁻¹ρ₁(mm′) and ρ₂(m)ρ₂(m′) = α(m,m′)ρ₂(mm′) wherever α ≠ 0
    pub projective_laws: bool,
    /// ρ₁ ⊗ ρ₂ ≅ π_[σ]
    pub factorization: bool,
    /// ρ₁ on N is a representation isomorphic to σ
    pub restricts_to_sigma: bool,
}

impl IntertwinerSystem {
    pub fn entries(&self) -> Vec<CocycleEntry> {
        let mut out = Vec::new();
        for (i, row) in self.table.iter().enumerate() {
            for (j, &exponent) in row.iter().enumerate() {
                out.push(CocycleEntry { i, j, exponent });
            }
        }
        out
    }

    pub fn is_trivial(&self) -> bool {
        self.table.iter().flatten().all(|&x| x == 0)
    }

    pub fn projective_factors(&self) -> Result<ProjectiveFactors> {
        let ind = &self.induced;
        let d = self.d;
        let dim = ind.rep.dim();
        let basis_w: Vec<Vec<CycNum>> = (0..d)
            .map(|k| {
                let mut w = vec![CycNum::zero(); d];
                w[k] = CycNum::one();
                ind.vector(self.apex, &w)
            })
            .collect();
        let b = ExactMatrix::from_columns(&basis_w, dim);
        if b.rank() != d {
            return Err(CliffordError::Invariant("e⊗W is not a copy of W".into()));
        }
        let ends = hom_space(&ind.rep, &ind.rep)?;
        let n_end = ends.len();
        let end_rows: Vec<Vec<CycNum>> = ends.iter().map(|a| a.entries().to_vec()).collect();
        let end_basis = ExactMatrix::from_columns(&end_rows, dim * dim);

        let mut rho1 = Vec::new();
        let mut rho2 = Vec::new();
        for (xi, &x) in self.members.iter().enumerate() {
            match self.class_of[x] {
                None => {
                    rho1.push(ExactMatrix::zeros(d, d));
                    rho2.push(ExactMatrix::zeros(n_end, n_end));
                }
                Some(c) => {
                    let t = &self.operators[c];
                    let lhs = t.mul(&b);
                    let rhs = ind.rep.matrix(xi).mul(&b);
                    let r1 = lhs
                        .solve_matrix(&rhs)
                        .ok_or_else(|| CliffordError::Invariant(format!("π(m)𝒲 ⊄ 𝔈(𝒲) at m={x}")))?;
                    rho1.push(r1);
                    let cols: Vec<Vec<CycNum>> = ends
                        .iter()
                        .map(|phi| {
                            let img = phi.mul(t);
                            end_basis
                                .solve_linear(img.entries())
                                .ok_or_else(|| CliffordError::Invariant("φ∘𝔈 leaves End(π)".into()))
                        })
                        .collect::<Result<_>>()?;
                    rho2.push(ExactMatrix::from_columns(&cols, n_end));
                }
            }
        }

        let im = &self.i_monoid;
        let mut projective_laws = true;
        for a in im.elements() {
            for b2 in im.elements() {
                let ab = im.mul(a, b2);
                let alpha = self.multiplier.value(a, b2);
                if alpha.is_zero() {
                    continue;
                }
                let ainv = alpha.inv().expect("nonzero");
                projective_laws &= rho1[a].mul(&rho1[b2]) == rho1[ab].scale(&ainv);
                projective_laws &= rho2[a].mul(&rho2[b2]) == rho2[ab].scale(&alpha);
            }
        }
        let mats: Vec<ExactMatrix> = rho1.iter().zip(&rho2).map(|(x, y)| x.kron(y)).collect();
        let tensor = Representation::new(im.clone(), Side::Left, mats)?;
        let factorization = tensor.dim() == dim && is_isomorphic(&tensor, &ind.rep)?;

        let nm = Arc::new(im.restrict(
            &self.n_members.iter().map(|&x| self.members.binary_search(&x).expect("N ⊆ I")).collect::<Vec<_>>(),
        ));
        let restricts_to_sigma = match Representation::new(
            nm.clone(),
            Side::Left,
            self.n_members.iter().map(|&x| rho1[self.members.binary_search(&x).unwrap()].clone()).collect(),
        ) {
            Ok(r) => is_isomorphic(&r, &self.sigma.rebase(nm))?,
            Err(_) => false,
        };
        Ok(ProjectiveFactors {
            rho1,
            rho2,
            endomorphisms: ends,
            tensor,
            projective_laws,
            factorization,
            restricts_to_sigma,
        })
    }
}

/// The span of 𝔈_{m_1}, …, 𝔈_{m_α} inside End(π_[σ]).
pub fn operator_span(sys: &IntertwinerSystem) -> Subspace {
    let dim = sys.induced.rep.dim();
    Subspace::span(dim * dim, &sys.operators[..sys.alpha].iter().map(|t| t.entries().to_vec()).collect::<Vec<_>>())
}
