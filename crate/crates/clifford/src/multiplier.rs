//! Normalized multipliers α: M×M → F with F^× = μ_κ, and the extension monoids M^α.

use std::sync::Arc;

use monoidrep_core::centric::{is_centric, quotient_centric};
use monoidrep_core::random::rng;
use monoidrep_core::{FiniteMonoid, Submonoid};
use monoidrep_linalg::CycNum;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::{CliffordError, Result};

/// Which scalars α may take: μ_κ only, or μ_κ ∪ {0}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Units,
    WithZero,
}

#[derive(Clone, Debug)]
pub struct Multiplier {
    pub monoid: Arc<FiniteMonoid>,
    pub kappa: u32,
    pub target: Target,
    /// α(a,b) = ζ_κ^k stored as Some(k); None is 0.
    pub exps: Vec<Vec<Option<u32>>>,
}

impl PartialEq for Multiplier {
    fn eq(&self, other: &Self) -> bool {
        *self.monoid == *other.monoid
            && self.kappa == other.kappa
            && self.target == other.target
            && self.exps == other.exps
    }
}

/// Product of two scalars in exponent form.
pub fn mul_exp(x: Option<u32>, y: Option<u32>, kappa: u32) -> Option<u32> {
    Some((x? + y?) % kappa)
}

impl Multiplier {
    pub fn trivial(monoid: Arc<FiniteMonoid>, kappa: u32) -> Self {
        let n = monoid.size();
        Multiplier { monoid, kappa, target: Target::Units, exps: vec![vec![Some(0); n]; n] }
    }

    pub fn from_fn(
        monoid: Arc<FiniteMonoid>,
        kappa: u32,
        target: Target,
        f: impl Fn(usize, usize) -> Option<u32>,
    ) -> Self {
        let n = monoid.size();
        let exps = (0..n).map(|a| (0..n).map(|b| f(a, b).map(|k| k % kappa)).collect()).collect();
        Multiplier { monoid, kappa, target, exps }
    }

    pub fn exp(&self, a: usize, b: usize) -> Option<u32> {
        self.exps[a][b]
    }

    pub fn value(&self, a: usize, b: usize) -> CycNum {
        match self.exps[a][b] {
            Some(k) => CycNum::zeta(self.kappa, k as i64),
            None => CycNum::zero(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.iter().flatten().all(|&x| x == Some(0))
    }

    /// Shape, normalization α(m,1) = α(1,m) = 1, then the cocycle identity on all triples.
    pub fn validate(&self) -> Result<()> {
        let m = &self.monoid;
        let n = m.size();
        if self.kappa == 0 {
            return Err(CliffordError::Malformed("κ = 0".into()));
        }
        if self.exps.len() != n || self.exps.iter().any(|r| r.len() != n) {
            return Err(CliffordError::Malformed("table shape".into()));
        }
        for (a, row) in self.exps.iter().enumerate() {
            for (b, x) in row.iter().enumerate() {
                match x {
                    None if self.target == Target::Units => {
                        return Err(CliffordError::Malformed(format!("zero value at ({a}, {b}) for target F^×")))
                    }
                    Some(k) if *k >= self.kappa => {
                        return Err(CliffordError::Malformed(format!("exponent {k} at ({a}, {b})")))
                    }
                    _ => {}
                }
            }
        }
        let one = m.identity();
        for a in m.elements() {
            if self.exps[a][one] != Some(0) {
                return Err(CliffordError::NotNormalized(a, one));
            }
            if self.exps[one][a] != Some(0) {
                return Err(CliffordError::NotNormalized(one, a));
            }
        }
        let k = self.kappa;
        for a in m.elements() {
            for b in m.elements() {
                let ab = m.mul(a, b);
                for c in m.elements() {
                    let lhs = mul_exp(self.exps[a][b], self.exps[ab][c], k);
                    let rhs = mul_exp(self.exps[b][c], self.exps[a][m.mul(b, c)], k);
                    if lhs != rhs {
                        return Err(CliffordError::CocycleViolation(a, b, c));
                    }
                }
            }
        }
        Ok(())
    }

    /// α′(a,b) = α(a,b)·f(ab)/(f(a)f(b)), so that [m,t] ↦ [m, f(m)t] maps M^α onto M^α′.
    pub fn twist(&self, f: &[u32]) -> Multiplier {
        let m = &self.monoid;
        let k = self.kappa as i64;
        let exps = m
            .elements()
            .map(|a| {
                m.elements()
                    .map(|b| {
                        self.exps[a][b].map(|x| {
                            let e = x as i64 + f[m.mul(a, b)] as i64 - f[a] as i64 - f[b] as i64;
                            e.rem_euclid(k) as u32
                        })
                    })
                    .collect()
            })
            .collect();
        Multiplier { monoid: m.clone(), kappa: self.kappa, target: self.target, exps }
    }

    /// Pointwise product of two multipliers on the same monoid and κ.
    pub fn product(&self, other: &Multiplier) -> Result<Multiplier> {
        if *self.monoid != *other.monoid || self.kappa != other.kappa {
            return Err(CliffordError::Malformed("product of multipliers over different data".into()));
        }
        let target = if self.target == Target::Units && other.target == Target::Units {
            Target::Units
        } else {
            Target::WithZero
        };
        let n = self.monoid.size();
        let exps = (0..n)
            .map(|a| (0..n).map(|b| mul_exp(self.exps[a][b], other.exps[a][b], self.kappa)).collect())
            .collect();
        Ok(Multiplier { monoid: self.monoid.clone(), kappa: self.kappa, target, exps })
    }

    /// (i, j, exponent) triples; zero values are omitted.
    pub fn entries(&self) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        for (a, row) in self.exps.iter().enumerate() {
            for (b, x) in row.iter().enumerate() {
                if let Some(k) = x {
                    out.push((a, b, *k));
                }
            }
        }
        out
    }
}

pub fn validate_multiplier(alpha: &Multiplier) -> bool {
    alpha.validate().is_ok()
}

/// δf(a,b) = f(a)f(b)/f(ab) for a normalized f: M → μ_κ.
pub fn coboundary(monoid: Arc<FiniteMonoid>, kappa: u32, f: &[u32]) -> Multiplier {
    Multiplier::trivial(monoid, kappa).twist(&f.iter().map(|&x| (kappa - x % kappa) % kappa).collect::<Vec<_>>())
}

/// f: M → μ_κ with f(1) = 1, as exponents.
pub fn random_normalized_function(r: &mut impl Rng, m: &FiniteMonoid, kappa: u32) -> Vec<u32> {
    m.elements().map(|x| if x == m.identity() { 0 } else { r.gen_range(0..kappa) }).collect()
}

/// The carry cocycle on a cyclic group ⟨g⟩ of order n: α(g^a, g^b) = ζ_κ^{c·⌊(a+b)/n⌋}.
pub fn carry_cocycle(m: Arc<FiniteMonoid>, g: usize, kappa: u32, c: u32) -> Result<Multiplier> {
    let n = m.size();
    let mut log = vec![usize::MAX; n];
    let mut x = m.identity();
    for a in 0..n {
        if log[x] != usize::MAX {
            return Err(CliffordError::Precondition("generator does not have full order".into()));
        }
        log[x] = a;
        x = m.mul(x, g);
    }
    if x != m.identity() {
        return Err(CliffordError::Precondition("not a cyclic group".into()));
    }
    Ok(Multiplier::from_fn(m, kappa, Target::Units, |a, b| {
        Some(c * ((log[a] + log[b]) / n) as u32)
    }))
}

/// `count` multipliers base·δf with f drawn from a seeded generator.
pub fn seeded_multipliers(base: &Multiplier, count: usize, seed: u64) -> Vec<Multiplier> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let f = random_normalized_function(&mut r, &base.monoid, base.kappa);
            base.product(&coboundary(base.monoid.clone(), base.kappa, &f)).expect("same data")
        })
        .collect()
}

/// M^α with its projection p and the injection ι of the scalars.
#[derive(Clone, Debug)]
pub struct Extension {
    pub monoid: Arc<FiniteMonoid>,
    pub multiplier: Multiplier,
    /// p[[m,t]] = m
    pub projection: Vec<usize>,
    /// ι(ζ^k) at position k; ι(0) last when the target contains 0.
    pub injection: Vec<usize>,
    pub pairs: Vec<(usize, Option<u32>)>,
}

impl Extension {
    fn scalar_count(&self) -> usize {
        self.injection.len()
    }

    pub fn index(&self, m: usize, t: Option<u32>) -> usize {
        let s = self.scalar_count();
        m * s + t.map_or(s - 1, |k| k as usize)
    }

    /// ι(F^×).
    pub fn units_image(&self) -> Submonoid {
        let k = self.multiplier.kappa as usize;
        Submonoid::new(&self.monoid, &self.injection[..k]).expect("ι(F^×) is a submonoid")
    }

    /// ι(F), equal to ι(F^×) for the target F^×.
    pub fn scalars_image(&self) -> Submonoid {
        Submonoid::new(&self.monoid, &self.injection).expect("ι(F) is a submonoid")
    }
}

/// Pairs [m,t] with [m₁,t₁][m₂,t₂] = [m₁m₂, t₁t₂α(m₁,m₂)].
pub fn monoid_extension(alpha: &Multiplier) -> Result<Extension> {
    alpha.validate()?;
    let m = &alpha.monoid;
    let k = alpha.kappa;
    let mut scalars: Vec<Option<u32>> = (0..k).map(Some).collect();
    if alpha.target == Target::WithZero {
        scalars.push(None);
    }
    let s = scalars.len();
    let pairs: Vec<(usize, Option<u32>)> =
        m.elements().flat_map(|x| scalars.iter().map(move |&t| (x, t))).collect();
    let idx = |x: usize, t: Option<u32>| x * s + t.map_or(s - 1, |v| v as usize);
    let table: Vec<Vec<usize>> = pairs
        .iter()
        .map(|&(a, ta)| {
            pairs
                .iter()
                .map(|&(b, tb)| {
                    let t = mul_exp(mul_exp(ta, tb, k), alpha.exps[a][b], k);
                    idx(m.mul(a, b), t)
                })
                .collect()
        })
        .collect();
    let labels = pairs
        .iter()
        .map(|&(x, t)| match t {
            Some(v) => format!("[{},z^{v}]", m.label(x)),
            None => format!("[{},0]", m.label(x)),
        })
        .collect();
    let id = idx(m.identity(), Some(0));
    let monoid = FiniteMonoid::build(table, id, Some(labels), false)?;
    let projection = pairs.iter().map(|&(x, _)| x).collect();
    let injection = scalars.iter().map(|&t| idx(m.identity(), t)).collect();
    Ok(Extension { monoid: Arc::new(monoid), multiplier: alpha.clone(), projection, injection, pairs })
}

/// The two-element monoid {1, 0}.
pub fn z2_semilattice() -> FiniteMonoid {
    FiniteMonoid::build(vec![vec![0, 1], vec![1, 1]], 0, Some(vec!["1".into(), "0".into()]), false)
        .expect("{1,0}")
}

/// Centricity of the scalars in M^α and the shape of the quotients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiceReport {
    pub units_centric: bool,
    pub scalars_centric: bool,
    /// M^α/F^× ≅ M
    pub units_quotient_is_m: bool,
    /// M^α/F ≅ M × {1,0}; None for the target F^×.
    pub scalars_quotient_is_m_times_z2: Option<bool>,
}

pub fn fice_check(ext: &Extension) -> Result<FiceReport> {
    let em = &ext.monoid;
    let base = &ext.multiplier.monoid;
    let units = ext.units_image();
    let scalars = ext.scalars_image();
    let units_centric = is_centric(em, &units);
    let scalars_centric = is_centric(em, &scalars);
    let units_quotient_is_m = units_centric && {
        let (q, _) = quotient_centric(em, &units)?;
        q.find_isomorphism(base).is_some()
    };
    let scalars_quotient_is_m_times_z2 = match ext.multiplier.target {
        Target::Units => None,
        Target::WithZero => Some(scalars_centric && {
            let (q, _) = quotient_centric(em, &scalars)?;
            q.find_isomorphism(&base.direct_product(&z2_semilattice())).is_some()
        }),
    };
    Ok(FiceReport { units_centric, scalars_centric, units_quotient_is_m, scalars_quotient_is_m_times_z2 })
}

/// f̃[m,t] = [m, f(m)t] from M^α to M^α′ where α′ = α.twist(f); checked to be an
/// isomorphism commuting with p and ι.
pub fn similarity_isomorphism(from: &Extension, to: &Extension, f: &[u32]) -> Result<Vec<usize>> {
    if from.multiplier.twist(f) != to.multiplier {
        return Err(CliffordError::Precondition("target multiplier is not the twist by f".into()));
    }
    let k = from.multiplier.kappa;
    let map: Vec<usize> = from
        .pairs
        .iter()
        .map(|&(x, t)| to.index(x, t.map(|v| (v + f[x]) % k)))
        .collect();
    let ok = from.monoid.is_homomorphism(&to.monoid, &map)
        && {
            let mut seen = vec![false; to.monoid.size()];
            map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
        }
        && from.projection.iter().enumerate().all(|(i, &p)| to.projection[map[i]] == p)
        && from.injection.iter().zip(&to.injection).all(|(&a, &b)| map[a] == b);
    if !ok {
        return Err(CliffordError::Invariant("f̃ is not an isomorphism over M".into()));
    }
    Ok(map)
}
