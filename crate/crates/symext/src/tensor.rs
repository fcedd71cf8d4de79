use std::collections::HashMap;
use std::sync::Arc;

use monoidrep_core::builtin::{symmetric_group, symmetric_group_perms};
use monoidrep_core::FiniteMonoid;
use monoidrep_linalg::{CycNum, ExactMatrix, Rational};
use monoidrep_rep::{Representation, Side};
use num_bigint::BigInt;
use num_traits::One;

use crate::element::{arrangements, Key};
use crate::extension::{multisets, SymExtension};
use crate::{Result, SymExtError};

fn tuple_index(t: &[usize], m: usize) -> usize {
    t.iter().fold(0, |acc, &i| acc * m + i)
}

fn tuple_of(mut idx: usize, m: usize, n: usize) -> Vec<usize> {
    let mut t = vec![0; n];
    for k in (0..n).rev() {
        t[k] = idx % m;
        idx /= m;
    }
    t
}

/// π^{⊗n} on the symmetrization (1/n!) Σ_q ⊗ᵢ π(k_{q(i)}).
pub fn pure_matrix(pi: &Representation, key: &[usize]) -> ExactMatrix {
    let arr = arrangements(key);
    let w = Rational::new(BigInt::one(), BigInt::from(arr.len()));
    let d = pi.dim().pow(key.len() as u32);
    let mut acc = ExactMatrix::zeros(d, d);
    for q in arr {
        let mut t = ExactMatrix::identity(1);
        for &g in &q {
            t = t.kron(pi.matrix(g));
        }
        acc = acc.add(&t);
    }
    acc.scale_rational(&w)
}

fn check_input(ext: &SymExtension, pi: &Representation) -> Result<()> {
    if *pi.monoid() != *ext.group || pi.side() != Side::Left {
        return Err(SymExtError::Precondition("π is not a left representation of the base group".into()));
    }
    Ok(())
}

/// π^{⊗n} of G^⊙n on V^{⊗n}, with the first tensor factor most significant.
pub fn rep_on_tensor_power(ext: &SymExtension, pi: &Representation) -> Result<Representation> {
    check_input(ext, pi)?;
    let mut cache: HashMap<Key, ExactMatrix> = HashMap::new();
    let d = pi.dim().pow(ext.n as u32);
    let mats = ext
        .elements
        .iter()
        .map(|x| {
            let mut acc = ExactMatrix::zeros(d, d);
            for (k, c) in x.terms() {
                let m = cache.entry(k.clone()).or_insert_with(|| pure_matrix(pi, k));
                acc.add_assign_scaled(m, &CycNum::from_rational(c.clone()));
            }
            acc
        })
        .collect();
    Ok(Representation::new(ext.monoid.clone(), Side::Left, mats)?)
}

/// Matrix of `a` on an invariant subspace with basis vectors b_β whose coordinate is read off
/// at the tuple β.
pub fn restrict_matrix(a: &ExactMatrix, m: usize, basis: &[(Vec<usize>, Vec<CycNum>)]) -> ExactMatrix {
    let k = basis.len();
    let mut out = ExactMatrix::zeros(k, k);
    for (j, (_, v)) in basis.iter().enumerate() {
        let img = a.mul_vec(v);
        for (i, (t, _)) in basis.iter().enumerate() {
            out.set(i, j, img[tuple_index(t, m)].clone());
        }
    }
    out
}

fn restrict_to(full: &Representation, m: usize, basis: &[(Vec<usize>, Vec<CycNum>)]) -> Result<Representation> {
    let mats = full.matrices().iter().map(|a| restrict_matrix(a, m, basis)).collect();
    Ok(Representation::new(full.monoid_arc().clone(), Side::Left, mats)?)
}

/// Σ over distinct arrangements of e_α, for sorted α.
pub fn symmetric_basis(m: usize, n: usize) -> Vec<(Vec<usize>, Vec<CycNum>)> {
    multisets(m, n)
        .into_iter()
        .map(|a| {
            let mut v = vec![CycNum::zero(); m.pow(n as u32)];
            for q in arrangements(&a) {
                v[tuple_index(&q, m)] = CycNum::one();
            }
            (a, v)
        })
        .collect()
}

/// Σ_q sgn(q) e_{β∘q}, for strictly increasing β.
pub fn alternating_basis(m: usize, n: usize) -> Vec<(Vec<usize>, Vec<CycNum>)> {
    multisets(m, n)
        .into_iter()
        .filter(|b| b.windows(2).all(|w| w[0] < w[1]))
        .map(|b| {
            let mut v = vec![CycNum::zero(); m.pow(n as u32)];
            for q in arrangements(&b) {
                let sign = monoidrep_core::builtin::perm_sign(&q.iter().map(|x| b.iter().position(|y| y == x).unwrap()).collect::<Vec<_>>());
                v[tuple_index(&q, m)] = CycNum::from_int(sign);
            }
            (b, v)
        })
        .collect()
}

pub fn rep_sym(ext: &SymExtension, pi: &Representation) -> Result<Representation> {
    let full = rep_on_tensor_power(ext, pi)?;
    restrict_to(&full, pi.dim(), &symmetric_basis(pi.dim(), ext.n))
}

pub fn rep_alt(ext: &SymExtension, pi: &Representation) -> Result<Representation> {
    let full = rep_on_tensor_power(ext, pi)?;
    restrict_to(&full, pi.dim(), &alternating_basis(pi.dim(), ext.n))
}

/// S_n permuting the tensor slots of V^{⊗n}, twisted by the values of a linear character χ.
pub fn slot_permutations(m: usize, n: usize, chi: &[CycNum]) -> Result<Representation> {
    let sn = Arc::new(symmetric_group(n));
    let d = m.pow(n as u32);
    let mats = symmetric_group_perms(n)
        .iter()
        .zip(chi)
        .map(|(s, c)| {
            let p: Vec<usize> = (0..d)
                .map(|idx| {
                    let t = tuple_of(idx, m, n);
                    let mut u = vec![0; n];
                    for k in 0..n {
                        u[s[k]] = t[k];
                    }
                    tuple_index(&u, m)
                })
                .collect();
            ExactMatrix::permutation(&p).scale(c)
        })
        .collect();
    Ok(Representation::new(sn, Side::Left, mats)?)
}

/// Values of the trivial or sign character of S_n in element order.
pub fn sn_character(n: usize, sign: bool) -> Vec<CycNum> {
    symmetric_group_perms(n)
        .iter()
        .map(|p| CycNum::from_int(if sign { monoidrep_core::builtin::perm_sign(p) } else { 1 }))
        .collect()
}

pub fn sn(n: usize) -> Arc<FiniteMonoid> {
    Arc::new(symmetric_group(n))
}
