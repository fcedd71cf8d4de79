use std::collections::BTreeMap;

use monoidrep_linalg::{CycNum, ExactMatrix, RowReducer};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::representation::Representation;
use crate::subspace::Subspace;
use crate::RepError;

/// Basis of {T : T ρ_v(m) = ρ_w(m) T for all m}; each T is dim(w) × dim(v).
///
/// Only the generators of the monoid contribute equations.
pub fn hom_space(v: &Representation, w: &Representation) -> Result<Vec<ExactMatrix>, RepError> {
    if !v.same_monoid(w) {
        return Err(RepError::MonoidMismatch);
    }
    if v.side() != w.side() {
        return Err(RepError::SideMismatch);
    }
    let (dv, dw) = (v.dim(), w.dim());
    let unknowns = dv * dw;
    if unknowns == 0 {
        return Ok(Vec::new());
    }
    let idx = |i: usize, j: usize| i * dv + j;
    let mut rr = RowReducer::new(unknowns);
    for &g in v.monoid().generators() {
        let a = v.matrix(g);
        let b = w.matrix(g);
        for i in 0..dw {
            for j in 0..dv {
                let mut row: BTreeMap<usize, CycNum> = BTreeMap::new();
                for k in 0..dv {
                    let x = a.get(k, j);
                    if !x.is_zero() {
                        *row.entry(idx(i, k)).or_insert_with(CycNum::zero) += x;
                    }
                }
                for k in 0..dw {
                    let x = b.get(i, k);
                    if !x.is_zero() {
                        *row.entry(idx(k, j)).or_insert_with(CycNum::zero) -= x;
                    }
                }
                row.retain(|_, x| !x.is_zero());
                if !row.is_empty() {
                    rr.add_row(row);
                }
                if rr.rank() == unknowns {
                    return Ok(Vec::new());
                }
            }
        }
    }
    Ok(rr
        .nullspace()
        .into_iter()
        .map(|vec| ExactMatrix::new(dw, dv, vec))
        .collect())
}

/// dim Hom_M(v, w).
pub fn multiplicity(v: &Representation, w: &Representation) -> Result<usize, RepError> {
    Ok(hom_space(v, w)?.len())
}

/// An invertible intertwiner v → w, searching combinations of a Hom basis with a fixed seed.
pub fn find_isomorphism(v: &Representation, w: &Representation) -> Result<Option<ExactMatrix>, RepError> {
    if v.dim() != w.dim() {
        return Ok(None);
    }
    if v.dim() == 0 {
        return Ok(Some(ExactMatrix::zeros(0, 0)));
    }
    let basis = hom_space(v, w)?;
    Ok(invertible_combination(&basis))
}

pub fn invertible_combination(basis: &[ExactMatrix]) -> Option<ExactMatrix> {
    if basis.is_empty() {
        return None;
    }
    for t in basis {
        if t.is_invertible() {
            return Some(t.clone());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..64 {
        let mut t = ExactMatrix::zeros(basis[0].nrows(), basis[0].ncols());
        for b in basis {
            let c = CycNum::from_int(rng.gen_range(-7..=7));
            t.add_assign_scaled(b, &c);
        }
        if t.is_invertible() {
            return Some(t);
        }
    }
    None
}

pub fn is_isomorphic(v: &Representation, w: &Representation) -> Result<bool, RepError> {
    Ok(find_isomorphism(v, w)?.is_some())
}

/// V[π'] (common kernel of all V → W) and the quotient V/V[π'] ≅ n·W.
#[derive(Clone, Debug)]
pub struct IsotypicQuotient {
    pub kernel: Subspace,
    pub quotient: Representation,
    pub multiplicity: usize,
}

pub fn isotypic_quotient(v: &Representation, w: &Representation) -> Result<IsotypicQuotient, RepError> {
    if !w.is_irreducible() {
        return Err(RepError::Reducible);
    }
    let homs = hom_space(v, w)?;
    let kernel = Subspace::common_kernel(v.dim(), &homs);
    let quotient = v.quotient(&kernel);
    let multiplicity = quotient.dim() / w.dim();
    Ok(IsotypicQuotient { kernel, quotient, multiplicity })
}

/// The W-isotypic subspace of V: the sum of the images of all W → V.
pub fn isotypic_component(v: &Representation, w: &Representation) -> Result<Subspace, RepError> {
    let homs = hom_space(w, v)?;
    let mut s = Subspace::zero(v.dim());
    for t in homs {
        for j in 0..t.ncols() {
            s.insert(&t.col(j));
        }
    }
    Ok(s)
}

/// Multiplicity vector of a semisimple representation against a catalog of irreducibles.
pub fn multiplicity_vector(v: &Representation, catalog: &[Representation]) -> Result<Vec<usize>, RepError> {
    catalog.iter().map(|w| multiplicity(w, v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use monoidrep_core::builtin::*;
    use std::sync::Arc;

    #[test]
    fn trivial_vs_sign() {
        let s2 = Arc::new(symmetric_group(2));
        let triv = Representation::trivial(s2.clone());
        let sign = Representation::character(s2, vec![CycNum::one(), CycNum::from_int(-1)]).unwrap();
        assert_eq!(multiplicity(&triv, &sign).unwrap(), 0);
        assert_eq!(multiplicity(&sign, &sign).unwrap(), 1);
    }

    #[test]
    fn regular_c3_contains_each_character_once() {
        let c3 = Arc::new(cyclic(3));
        let reg = Representation::regular_left(c3.clone());
        for k in 0..3 {
            let chi = Representation::character(c3.clone(), (0..3).map(|j| CycNum::zeta(3, k * j)).collect()).unwrap();
            assert_eq!(multiplicity(&chi, &reg).unwrap(), 1);
            assert_eq!(multiplicity(&reg, &chi).unwrap(), 1);
        }
    }

    #[test]
    fn isotypic_of_block_rep() {
        let s2 = Arc::new(symmetric_group(2));
        let triv = Representation::trivial(s2.clone());
        let sign = Representation::character(s2, vec![CycNum::one(), CycNum::from_int(-1)]).unwrap();
        let v = Representation::direct_sum_all(&[sign.clone(), triv.clone(), sign.clone()]).unwrap();
        let q = isotypic_quotient(&v, &sign).unwrap();
        assert_eq!(q.multiplicity, 2);
        assert_eq!(q.kernel.dim(), 1);
        assert!(is_isomorphic(&q.quotient, &sign.direct_sum(&sign).unwrap()).unwrap());
        assert_eq!(isotypic_quotient(&triv, &sign).unwrap().multiplicity, 0);
        assert_eq!(isotypic_component(&v, &sign).unwrap().dim(), 2);
    }
}
