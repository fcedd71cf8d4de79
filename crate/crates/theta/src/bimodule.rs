//! Representations of M₁×M₂ viewed as bimodules, big thetas Θ_π, and the theta verdict.

use std::sync::Arc;

use monoidrep_core::{involution, local_group, FiniteMonoid, GreenData, Submonoid};
use monoidrep_linalg::{CycNum, ExactMatrix};
use monoidrep_rep::catalog::IrrProvider;
use monoidrep_rep::hom::isotypic_component;
use monoidrep_rep::representation::PermutationLike;
use monoidrep_rep::{cmp_irreducibles, hom_space, is_semisimple, multiplicity, Representation, Side, Subspace};
use serde::Serialize;
use serde_json::json;

use crate::{Result, ThetaError};

/// M₁×M₂ with (a,b) at index a·|M₂|+b.
pub fn product_monoid(m1: &FiniteMonoid, m2: &FiniteMonoid) -> FiniteMonoid {
    m1.direct_product(m2)
}

/// v₁⊗v₂ on M₁×M₂ given as `product` (built by `product_monoid`).
pub fn external_tensor(v1: &Representation, v2: &Representation, product: Arc<FiniteMonoid>) -> Result<Representation> {
    let (n1, n2) = (v1.monoid().size(), v2.monoid().size());
    if product.size() != n1 * n2 {
        return Err(ThetaError::NotBimodule("product monoid has the wrong size".into()));
    }
    if v1.side() != Side::Left || v2.side() != Side::Left {
        return Err(ThetaError::NotBimodule("external tensor of left representations only".into()));
    }
    let mats = (0..n1 * n2).map(|p| v1.matrix(p / n2).kron(v2.matrix(p % n2))).collect();
    Ok(Representation::new(product, Side::Left, mats)?)
}

/// Which factor of M₁×M₂.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Factor {
    First,
    Second,
}

impl Factor {
    pub fn other(self) -> Factor {
        match self {
            Factor::First => Factor::Second,
            Factor::Second => Factor::First,
        }
    }
}

/// Π as a left representation of M₁×M₂ with catalogs of Irr(M₁) and Irr(M₂).
#[derive(Clone, Debug)]
pub struct BimoduleRep {
    pub m1: Arc<FiniteMonoid>,
    pub m2: Arc<FiniteMonoid>,
    pub rep: Representation,
    pub irr1: Vec<Representation>,
    pub irr2: Vec<Representation>,
    pub semisimple: bool,
}

impl BimoduleRep {
    pub fn new(m1: Arc<FiniteMonoid>, m2: Arc<FiniteMonoid>, rep: Representation, provider: &dyn IrrProvider) -> Result<Self> {
        let irr1 = cmp_irreducibles(&m1, provider)?.into_iter().map(|c| c.rep).collect();
        let irr2 = cmp_irreducibles(&m2, provider)?.into_iter().map(|c| c.rep).collect();
        Self::with_catalogs(m1, m2, rep, irr1, irr2)
    }

    pub fn with_catalogs(
        m1: Arc<FiniteMonoid>,
        m2: Arc<FiniteMonoid>,
        rep: Representation,
        irr1: Vec<Representation>,
        irr2: Vec<Representation>,
    ) -> Result<Self> {
        let n2 = m2.size();
        let p = rep.monoid();
        if p.size() != m1.size() * n2 {
            return Err(ThetaError::NotBimodule("representation is not over M₁×M₂".into()));
        }
        for a in 0..p.size() {
            for b in 0..p.size() {
                let want = m1.mul(a / n2, b / n2) * n2 + m2.mul(a % n2, b % n2);
                if p.mul(a, b) != want {
                    return Err(ThetaError::NotBimodule("monoid is not the product M₁×M₂".into()));
                }
            }
        }
        if irr1.iter().any(|r| *r.monoid() != *m1) || irr2.iter().any(|r| *r.monoid() != *m2) {
            return Err(ThetaError::NotBimodule("catalog over the wrong monoid".into()));
        }
        let semisimple = is_semisimple(&m1).semisimple && is_semisimple(&m2).semisimple;
        let irr1 = irr1.into_iter().map(|r| r.rebase(m1.clone())).collect();
        let irr2 = irr2.into_iter().map(|r| r.rebase(m2.clone())).collect();
        Ok(BimoduleRep { m1, m2, rep, irr1, irr2, semisimple })
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    pub fn monoid(&self, f: Factor) -> &Arc<FiniteMonoid> {
        match f {
            Factor::First => &self.m1,
            Factor::Second => &self.m2,
        }
    }

    pub fn catalog(&self, f: Factor) -> &[Representation] {
        match f {
            Factor::First => &self.irr1,
            Factor::Second => &self.irr2,
        }
    }

    /// Π(a,1) or Π(1,a).
    pub fn action(&self, f: Factor, a: usize) -> &ExactMatrix {
        let n2 = self.m2.size();
        match f {
            Factor::First => self.rep.matrix(a * n2 + self.m2.identity()),
            Factor::Second => self.rep.matrix(self.m1.identity() * n2 + a),
        }
    }

    /// Res Π to one factor.
    pub fn restrict(&self, f: Factor) -> Representation {
        let m = self.monoid(f).clone();
        let mats = m.elements().map(|a| self.action(f, a).clone()).collect();
        Representation::new_unchecked(m, Side::Left, mats).expect("square matrices")
    }

    /// The two actions commute, as they must for a representation of the product.
    pub fn commuting(&self) -> bool {
        self.m1.elements().all(|a| {
            self.m2.elements().all(|b| {
                let (x, y) = (self.action(Factor::First, a), self.action(Factor::Second, b));
                x.mul(y) == y.mul(x)
            })
        })
    }
}

/// Θ_π on the other factor, realised on Hom(π, Res Π) with the residual action.
#[derive(Clone, Debug)]
pub struct BigTheta {
    pub rep: Representation,
    pub multiplicities: Vec<usize>,
}

pub fn big_theta(pi: &BimoduleRep, f: Factor, index: usize) -> Result<BigTheta> {
    let sigma = &pi.catalog(f)[index];
    let res = pi.restrict(f);
    let homs = hom_space(sigma, &res)?;
    let other = f.other();
    let om = pi.monoid(other).clone();
    let k = homs.len();
    let cols: Vec<Vec<CycNum>> = homs.iter().map(|h| h.entries().to_vec()).collect();
    let basis = ExactMatrix::from_columns(&cols, res.dim() * sigma.dim());
    let mut mats = Vec::with_capacity(om.size());
    for b in om.elements() {
        let act = pi.action(other, b);
        let img: Vec<Vec<CycNum>> = homs
            .iter()
            .map(|h| {
                basis
                    .solve_linear(act.mul(h).entries())
                    .ok_or_else(|| ThetaError::Invariant("residual action leaves Hom(π, Π)".into()))
            })
            .collect::<Result<_>>()?;
        mats.push(ExactMatrix::from_columns(&img, k));
    }
    let rep = if k == 0 { Representation::zero(om.clone(), Side::Left) } else { Representation::new(om, Side::Left, mats)? };
    let multiplicities = pi.catalog(other).iter().map(|d| multiplicity(d, &rep)).collect::<std::result::Result<_, _>>()?;
    if pi.semisimple {
        let iso = isotypic_component(&res, sigma)?;
        if iso.dim() != sigma.dim() * k {
            return Err(ThetaError::Invariant(format!("dim V_π = {} but dim π · dim Θ = {}", iso.dim(), sigma.dim() * k)));
        }
    }
    Ok(BigTheta { rep, multiplicities })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaEntry {
    pub index: usize,
    pub present: bool,
    pub big_theta: Vec<usize>,
    pub big_theta_dim: usize,
    /// number of irreducible summands of Θ (its irreducible quotients, counted with multiplicity)
    pub quotients: usize,
    pub small_theta: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaReport {
    /// None when a factor is not semisimple.
    pub verdict: Option<bool>,
    /// multiplicities[i][j] = m(Π, π₁ᵢ⊗π₂ⱼ)
    pub multiplicities: Vec<Vec<usize>>,
    pub first: Vec<ThetaEntry>,
    pub second: Vec<ThetaEntry>,
    pub pairs: Vec<(usize, usize)>,
}

impl ThetaReport {
    pub fn to_json(&self) -> serde_json::Value {
        let mut sparse = Vec::new();
        for (i, row) in self.multiplicities.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                if m > 0 {
                    sparse.push(json!({"left": i, "right": j, "m": m}));
                }
            }
        }
        json!({
            "verdict": self.verdict,
            "pairs": self.pairs.iter().map(|&(l, r)| json!({"left": l, "right": r})).collect::<Vec<_>>(),
            "multiplicities": sparse,
        })
    }

    pub fn is_true(&self) -> bool {
        self.verdict == Some(true)
    }
}

fn entries(table: &[Vec<usize>], dims: &[usize], transpose: bool) -> Vec<ThetaEntry> {
    let (rows, cols) = if transpose { (table.first().map_or(0, |r| r.len()), table.len()) } else { (table.len(), table.first().map_or(0, |r| r.len())) };
    let at = |i: usize, j: usize| if transpose { table[j][i] } else { table[i][j] };
    (0..rows)
        .map(|i| {
            let big_theta: Vec<usize> = (0..cols).map(|j| at(i, j)).collect();
            let quotients = big_theta.iter().sum();
            let small_theta = if quotients == 1 { big_theta.iter().position(|&m| m == 1) } else { None };
            ThetaEntry {
                index: i,
                present: quotients > 0,
                big_theta_dim: big_theta.iter().zip(dims).map(|(m, d)| m * d).sum(),
                big_theta,
                quotients,
                small_theta,
            }
        })
        .collect()
}

/// Theta verdict on all of Irr(M₁×M₂).
pub fn is_theta(pi: &BimoduleRep) -> Result<ThetaReport> {
    is_theta_on(pi, |_, _| true)
}

/// Theta verdict counting only the constituents π₁ᵢ⊗π₂ⱼ with allowed(i, j).
pub fn is_theta_on(pi: &BimoduleRep, allowed: impl Fn(usize, usize) -> bool) -> Result<ThetaReport> {
    let mut table = Vec::new();
    for i in 0..pi.irr1.len() {
        table.push(big_theta(pi, Factor::First, i)?.multiplicities);
    }
    if pi.semisimple {
        for j in 0..pi.irr2.len() {
            let col = big_theta(pi, Factor::Second, j)?.multiplicities;
            if col.iter().enumerate().any(|(i, &m)| table[i][j] != m) {
                return Err(ThetaError::Invariant("the two big thetas disagree on m(Π, π₁⊗π₂)".into()));
            }
        }
        let total: usize = table
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, &m)| (i, j, m)))
            .map(|(i, j, m)| m * pi.irr1[i].dim() * pi.irr2[j].dim())
            .sum();
        if total != pi.dim() {
            return Err(ThetaError::Invariant(format!("Σ m·dim π₁·dim π₂ = {total} ≠ dim Π = {}", pi.dim())));
        }
    }
    let restricted: Vec<Vec<usize>> = table
        .iter()
        .enumerate()
        .map(|(i, row)| row.iter().enumerate().map(|(j, &m)| if allowed(i, j) { m } else { 0 }).collect())
        .collect();
    let d1: Vec<usize> = pi.irr1.iter().map(|r| r.dim()).collect();
    let d2: Vec<usize> = pi.irr2.iter().map(|r| r.dim()).collect();
    let first = entries(&restricted, &d2, false);
    let second = entries(&restricted, &d1, true);
    let ok = |es: &[ThetaEntry]| es.iter().all(|e| !e.present || e.quotients == 1);
    let verdict = pi.semisimple.then(|| ok(&first) && ok(&second));
    let pairs: Vec<(usize, usize)> =
        if verdict == Some(true) { first.iter().filter_map(|e| e.small_theta.map(|j| (e.index, j))).collect() } else { Vec::new() };
    if verdict == Some(true) {
        let back: Vec<(usize, usize)> = second.iter().filter_map(|e| e.small_theta.map(|i| (i, e.index))).collect();
        let mut sorted = back.clone();
        sorted.sort_unstable();
        if sorted != pairs {
            return Err(ThetaError::Invariant("Howe pairing is not a bijection".into()));
        }
    }
    Ok(ThetaReport { verdict, multiplicities: table, first, second, pairs })
}

/// ℂ[L_e] as a representation of M × G_e: (m, g)·x = m x g⁻¹, zero when mx leaves L_e.
pub fn left_class_bimodule(m: &Arc<FiniteMonoid>, e: usize, provider: &dyn IrrProvider) -> Result<BimoduleRep> {
    if !m.is_idempotent(e) {
        return Err(ThetaError::NotBimodule(format!("{e} is not idempotent")));
    }
    let green = GreenData::absolute(m);
    let l: Vec<usize> = m.elements().filter(|&x| green.same_l(x, e)).collect();
    let (g, members) = local_group(m, &Submonoid::whole(m), e);
    let g = Arc::new(g);
    let product = Arc::new(product_monoid(m, &g));
    let pos = |x: usize| l.iter().position(|&y| y == x);
    let n2 = g.size();
    let mats = product
        .elements()
        .map(|p| {
            let (a, gi) = (p / n2, p % n2);
            let ginv = members[g.unit_inverse(gi).expect("group element")];
            let mut t = ExactMatrix::zeros(l.len(), l.len());
            for (i, &x) in l.iter().enumerate() {
                if let Some(j) = pos(m.mul(m.mul(a, x), ginv)) {
                    t.set(j, i, CycNum::one());
                }
            }
            t
        })
        .collect();
    let rep = Representation::new(product, Side::Left, mats)?;
    BimoduleRep::new(m.clone(), g, rep, provider)
}

/// ℂ[M] over M×M for an inverse monoid: (a, b)·x = a x b*.
pub fn regular_bimodule(m: &Arc<FiniteMonoid>, provider: &dyn IrrProvider) -> Result<BimoduleRep> {
    let star = involution(m).ok_or_else(|| ThetaError::NotBimodule("M is not an inverse monoid".into()))?;
    let n = m.size();
    let product = Arc::new(product_monoid(m, m));
    let mats = product
        .elements()
        .map(|p| {
            let (a, b) = (p / n, p % n);
            ExactMatrix::permutation_like(n, |x| Some(m.mul(m.mul(a, x), star[b])))
        })
        .collect();
    let rep = Representation::new(product, Side::Left, mats)?;
    BimoduleRep::new(m.clone(), m.clone(), rep, provider)
}

/// For an M₁×M₂-invariant S ⊆ V₁⊗V₂ with V₁ irreducible: the V₂′ with S = V₁⊗V₂′,
/// or None when S does not factor.
pub fn waldspurger_factor(d1: usize, d2: usize, s: &Subspace) -> Option<Subspace> {
    let ann = s.annihilator();
    let mut rows = Vec::new();
    for y in ann.basis() {
        for k in 0..d1 {
            rows.push(y[k * d2..(k + 1) * d2].to_vec());
        }
    }
    let factor = if rows.is_empty() { Subspace::full(d2) } else { Subspace::kernel(&ExactMatrix::from_rows(rows)) };
    (factor.dim() * d1 == s.dim()).then_some(factor)
}
