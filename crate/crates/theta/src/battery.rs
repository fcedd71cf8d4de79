//! The equivalent conditions of Proposition "theta", each computed on its own, and the
//! seeded random bimodules they are compared on.

use std::sync::Arc;

use monoidrep_core::monoid::transformation_closure;
use monoidrep_core::{builtin, FiniteMonoid, PartialMap};
use monoidrep_linalg::{CycNum, ExactMatrix};
use monoidrep_rep::catalog::IrrProvider;
use monoidrep_rep::{hom_space, Representation, Subspace};
use rand::seq::SliceRandom;
use num_traits::{Signed, ToPrimitive};
use rand::Rng;
use serde::Serialize;

use crate::bimodule::{external_tensor, is_theta, product_monoid, BimoduleRep, Factor};
use crate::{Result, ThetaError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropositionRecord {
    /// (1) Π is a theta representation
    pub theta: bool,
    /// (2) B = Z_A(C)
    pub b_is_commutant_of_a: bool,
    /// (3) A = Z_B(C)
    pub a_is_commutant_of_b: bool,
    /// (4) End_{M_α}(Π) has only constituents of the form δ⊗D(δ)
    pub diagonal_constituents: bool,
    /// (5) End_{M_α}(Π) is a multiplicity-free M_β–M_β bimodule, both ways
    pub endomorphisms_multiplicity_free: bool,
    /// (6) m(Π⊗_{M₂}D(Π), σ⊗D(σ)) ≤ 1 and m(D(Π)⊗_{M₁}Π, δ⊗D(δ)) ≤ 1
    pub contraction_bounds: bool,
    /// (1), (2), (3), (5), (6) agree
    pub unanimous: bool,
}

fn span_dim(mats: &[ExactMatrix]) -> usize {
    let n = mats.first().map_or(0, |a| a.nrows() * a.ncols());
    Subspace::span(n, &mats.iter().map(|a| a.entries().to_vec()).collect::<Vec<_>>()).dim()
}

/// Coordinates on the span of linearly independent matrices, through an invertible
/// square block of pivot rows.
struct Coordinates {
    rows: Vec<usize>,
    inv: ExactMatrix,
}

impl Coordinates {
    fn new(basis: &[ExactMatrix]) -> Self {
        let cols: Vec<Vec<CycNum>> = basis.iter().map(|b| b.entries().to_vec()).collect();
        let n = cols.first().map_or(0, |c| c.len());
        let bm = ExactMatrix::from_columns(&cols, n);
        let (_, rows) = bm.transpose().rref();
        let inv = bm.select_rows(&rows).inverse().expect("pivot block is invertible");
        Coordinates { rows, inv }
    }

    fn of(&self, x: &ExactMatrix) -> Vec<CycNum> {
        let e = x.entries();
        let v: Vec<CycNum> = self.rows.iter().map(|&r| e[r].clone()).collect();
        self.inv.mul_vec(&v)
    }

    /// Matrix of a linear map preserving the span.
    fn matrix(&self, basis: &[ExactMatrix], f: impl Fn(&ExactMatrix) -> ExactMatrix) -> ExactMatrix {
        let cols: Vec<Vec<CycNum>> = basis.iter().map(|b| self.of(&f(b))).collect();
        ExactMatrix::from_columns(&cols, basis.len())
    }
}

fn trace_of_product(a: &ExactMatrix, b: &ExactMatrix) -> CycNum {
    let n = a.nrows();
    let mut t = CycNum::zero();
    for i in 0..n {
        for j in 0..n {
            t += &(a.get(i, j) * b.get(j, i));
        }
    }
    t
}

/// Multiplicities c[i][k] of χᵢ⊗χₖ in a bimodule whose character at (a, b) is
/// tr(L_a R_b), for commuting families L and R on the same space.
fn bimodule_multiplicities(left: &[ExactMatrix], right: &[ExactMatrix], irr: &[Representation]) -> Result<Vec<Vec<usize>>> {
    let chars: Vec<Vec<CycNum>> = irr.iter().map(|r| r.character_values()).collect();
    let r = irr.len();
    let n = left.len();
    let mut rows = Vec::with_capacity(n * n);
    let mut rhs = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let mut row = Vec::with_capacity(r * r);
            for ci in &chars {
                for ck in &chars {
                    row.push(&ci[a] * &ck[b]);
                }
            }
            rows.push(row);
            rhs.push(trace_of_product(&left[a], &right[b]));
        }
    }
    let sol = ExactMatrix::from_rows(rows)
        .solve_linear(&rhs)
        .ok_or_else(|| ThetaError::Invariant("bimodule character is not a combination of irreducible characters".into()))?;
    let mut out = vec![vec![0usize; r]; r];
    for i in 0..r {
        for k in 0..r {
            let c = sol[i * r + k]
                .as_rational()
                .filter(|q| q.is_integer() && !q.is_negative())
                .ok_or_else(|| ThetaError::Invariant("bimodule multiplicity is not a natural number".into()))?;
            out[i][k] = c.to_integer().to_usize().expect("small multiplicity");
        }
    }
    Ok(out)
}

/// End_{M_α}(Π) as an M_β–M_β bimodule: X ↦ Π(h)XΠ(h′).
fn endomorphism_bimodule(pi: &BimoduleRep, alpha: Factor) -> Result<Vec<Vec<usize>>> {
    let beta = alpha.other();
    let res = pi.restrict(alpha);
    let basis = hom_space(&res, &res)?;
    let coords = Coordinates::new(&basis);
    let mb = pi.monoid(beta);
    let left: Vec<ExactMatrix> = mb.elements().map(|h| coords.matrix(&basis, |x| pi.action(beta, h).mul(x))).collect();
    let right: Vec<ExactMatrix> = mb.elements().map(|h| coords.matrix(&basis, |x| x.mul(pi.action(beta, h)))).collect();
    bimodule_multiplicities(&left, &right, pi.catalog(beta))
}

/// Π ⊗_{M_β} D(Π) as an M_α–M_α bimodule. It is End(V)/[B, End(V)], the dual of End_{M_β}(Π)
/// under tr(XY), so its character at (a, b) is the trace of Y ↦ Π(b)YΠ(a) on End_{M_β}(Π).
fn contraction_bimodule(pi: &BimoduleRep, alpha: Factor) -> Result<Vec<Vec<usize>>> {
    let beta = alpha.other();
    let res = pi.restrict(beta);
    let basis = hom_space(&res, &res)?;
    let coords = Coordinates::new(&basis);
    let ma = pi.monoid(alpha);
    // tr(Y ↦ Π(b)YΠ(a)) = tr(L_b R_a)
    let left: Vec<ExactMatrix> = ma.elements().map(|a| coords.matrix(&basis, |y| y.mul(pi.action(alpha, a)))).collect();
    let right: Vec<ExactMatrix> = ma.elements().map(|b| coords.matrix(&basis, |y| pi.action(alpha, b).mul(y))).collect();
    bimodule_multiplicities(&left, &right, pi.catalog(alpha))
}

pub fn proposition_theta_battery(pi: &BimoduleRep) -> Result<PropositionRecord> {
    if !pi.semisimple {
        return Err(ThetaError::NotSemisimple("the battery needs both factors semisimple".into()));
    }
    if !pi.commuting() {
        return Err(ThetaError::NotBimodule("the two actions do not commute".into()));
    }
    let theta = is_theta(pi)?.is_true();
    let a: Vec<ExactMatrix> = pi.m1.elements().map(|x| pi.action(Factor::First, x).clone()).collect();
    let b: Vec<ExactMatrix> = pi.m2.elements().map(|x| pi.action(Factor::Second, x).clone()).collect();
    let (res1, res2) = (pi.restrict(Factor::First), pi.restrict(Factor::Second));
    // B ⊆ Z_A(C) and A ⊆ Z_B(C) hold since the actions commute; compare dimensions
    let b_is_commutant_of_a = span_dim(&b) == hom_space(&res1, &res1)?.len();
    let a_is_commutant_of_b = span_dim(&a) == hom_space(&res2, &res2)?.len();

    let e1 = endomorphism_bimodule(pi, Factor::First)?;
    let e2 = endomorphism_bimodule(pi, Factor::Second)?;
    let free = |c: &[Vec<usize>]| c.iter().flatten().all(|&m| m <= 1);
    let diagonal = |c: &[Vec<usize>]| c.iter().enumerate().all(|(i, row)| row.iter().enumerate().all(|(k, &m)| m == 0 || i == k));
    let endomorphisms_multiplicity_free = free(&e1) && free(&e2);
    let diagonal_constituents = diagonal(&e1) && diagonal(&e2);

    let t1 = contraction_bimodule(pi, Factor::First)?;
    let t2 = contraction_bimodule(pi, Factor::Second)?;
    let bound = |c: &[Vec<usize>]| (0..c.len()).all(|i| c[i][i] <= 1);
    let contraction_bounds = bound(&t1) && bound(&t2);

    let unanimous = [b_is_commutant_of_a, a_is_commutant_of_b, endomorphisms_multiplicity_free, contraction_bounds]
        .iter()
        .all(|&c| c == theta);
    Ok(PropositionRecord {
        theta,
        b_is_commutant_of_a,
        a_is_commutant_of_b,
        diagonal_constituents,
        endomorphisms_multiplicity_free,
        contraction_bounds,
        unanimous,
    })
}

fn random_partial_injection(r: &mut impl Rng, points: usize) -> PartialMap {
    let mut img: Vec<usize> = (0..points).collect();
    img.shuffle(r);
    img.into_iter().map(|y| (!r.gen_bool(0.3)).then_some(y)).collect()
}

/// A group or an inverse monoid of partial injections, with at most `max_size` elements.
pub fn random_semisimple_monoid(r: &mut impl Rng, max_size: usize) -> FiniteMonoid {
    loop {
        let m = match r.gen_range(0..4) {
            0 => builtin::cyclic(r.gen_range(1..=6)),
            1 => builtin::symmetric_group(if r.gen_bool(0.5) { 2 } else { 3 }),
            _ => {
                let points = r.gen_range(1..=3);
                let mut gens: Vec<PartialMap> = (0..r.gen_range(1..=2)).map(|_| random_partial_injection(r, points)).collect();
                // closing under inverses keeps the monoid inverse
                let inverses: Vec<PartialMap> = gens
                    .iter()
                    .map(|g| {
                        let mut inv = vec![None; points];
                        for (x, y) in g.iter().enumerate() {
                            if let Some(y) = y {
                                inv[*y] = Some(x);
                            }
                        }
                        inv
                    })
                    .collect();
                gens.extend(inverses);
                transformation_closure(points, &gens).0
            }
        };
        if m.size() <= max_size {
            return m;
        }
    }
}

/// ⊕ m_ij π₁ᵢ⊗π₂ⱼ conjugated by a random unitriangular matrix; about half of the tables are
/// partial matchings, the rest have arbitrary entries in {0, 1, 2}.
pub fn random_bimodule(r: &mut impl Rng, max_size: usize, max_dim: usize, provider: &dyn IrrProvider) -> Result<BimoduleRep> {
    let m1 = Arc::new(random_semisimple_monoid(r, max_size));
    let m2 = Arc::new(random_semisimple_monoid(r, max_size));
    let shell = BimoduleRep::new(
        m1.clone(),
        m2.clone(),
        Representation::zero(Arc::new(product_monoid(&m1, &m2)), monoidrep_rep::Side::Left),
        provider,
    )?;
    let (r1, r2) = (shell.irr1.len(), shell.irr2.len());
    let product = shell.rep.monoid_arc().clone();
    loop {
        let mut table = vec![vec![0usize; r2]; r1];
        if r.gen_bool(0.5) {
            let mut cols: Vec<usize> = (0..r2).collect();
            cols.shuffle(r);
            for (i, &j) in (0..r1).zip(&cols) {
                if r.gen_bool(0.6) {
                    table[i][j] = 1;
                }
            }
        } else {
            for row in table.iter_mut() {
                for m in row.iter_mut() {
                    *m = if r.gen_bool(0.7) { 0 } else { r.gen_range(1..=2) };
                }
            }
        }
        let dim: usize = (0..r1).flat_map(|i| (0..r2).map(move |j| (i, j))).map(|(i, j)| table[i][j] * shell.irr1[i].dim() * shell.irr2[j].dim()).sum();
        if dim == 0 || dim > max_dim {
            continue;
        }
        let mut parts = Vec::new();
        for (i, row) in table.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                for _ in 0..m {
                    parts.push(external_tensor(&shell.irr1[i], &shell.irr2[j], product.clone())?);
                }
            }
        }
        let sum = Representation::direct_sum_all(&parts)?;
        let mut t = ExactMatrix::identity(dim);
        for i in 0..dim {
            for j in i + 1..dim {
                t.set(i, j, CycNum::from_int(r.gen_range(-1..=1)));
            }
        }
        let rep = sum.conjugate_by(&t)?;
        return BimoduleRep::with_catalogs(m1, m2, rep, shell.irr1, shell.irr2);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use monoidrep_core::inverse::is_inverse_monoid;
    use monoidrep_core::random::rng;

    #[test]
    fn random_monoids_are_groups_or_inverse() {
        let mut r = rng(5);
        for _ in 0..20 {
            let m = random_semisimple_monoid(&mut r, 8);
            assert!(m.size() <= 8);
            assert!(m.is_group() || is_inverse_monoid(&m));
        }
    }
}
