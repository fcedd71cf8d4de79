use std::collections::VecDeque;
use std::sync::Arc;

use monoidrep_core::{FiniteMonoid, Submonoid};
use monoidrep_linalg::{CycNum, ExactMatrix, RowReducer};
use serde::{Deserialize, Serialize};

use crate::subspace::Subspace;
use crate::RepError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// ρ(ab) = ρ(a)ρ(b)
    Left,
    /// ρ(ab) = ρ(b)ρ(a): v·m is stored as ρ(m)v
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// A monoid together with one exact matrix per element.
#[derive(Clone)]
pub struct Representation {
    monoid: Arc<FiniteMonoid>,
    dim: usize,
    mats: Vec<ExactMatrix>,
    side: Side,
}

impl std::fmt::Debug for Representation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Representation(dim={}, side={:?}, |M|={})", self.dim, self.side, self.monoid.size())
    }
}

impl Representation {
    /// Validated constructor: ρ(1) = I and multiplicativity checked on the generators.
    pub fn new(monoid: Arc<FiniteMonoid>, side: Side, mats: Vec<ExactMatrix>) -> Result<Self, RepError> {
        let r = Self::new_unchecked(monoid, side, mats)?;
        r.validate()?;
        Ok(r)
    }

    pub fn new_unchecked(monoid: Arc<FiniteMonoid>, side: Side, mats: Vec<ExactMatrix>) -> Result<Self, RepError> {
        if mats.len() != monoid.size() {
            return Err(RepError::Dimension(format!("{} matrices for {} elements", mats.len(), monoid.size())));
        }
        let dim = mats.first().map_or(0, |a| a.nrows());
        if mats.iter().any(|a| a.nrows() != dim || a.ncols() != dim) {
            return Err(RepError::Dimension("matrices are not all square of one size".into()));
        }
        Ok(Representation { monoid, dim, mats, side })
    }

    pub fn validate(&self) -> Result<(), RepError> {
        let m = &self.monoid;
        if !self.mats[m.identity()].is_identity() {
            return Err(RepError::NotHomomorphism("identity does not act as I".into()));
        }
        for &g in m.generators() {
            for x in m.elements() {
                let lhs = &self.mats[m.mul(x, g)];
                let rhs = match self.side {
                    Side::Left => self.mats[x].mul(&self.mats[g]),
                    Side::Right => self.mats[g].mul(&self.mats[x]),
                };
                if *lhs != rhs {
                    return Err(RepError::NotHomomorphism(format!("fails at ({x}, {g})")));
                }
            }
        }
        Ok(())
    }

    /// Extends matrices given on `gens` along words; errors if the images are inconsistent.
    pub fn from_generators(
        monoid: Arc<FiniteMonoid>,
        side: Side,
        gens: &[usize],
        images: &[ExactMatrix],
    ) -> Result<Self, RepError> {
        let dim = images.first().map_or(0, |a| a.nrows());
        let n = monoid.size();
        let mut mats: Vec<Option<ExactMatrix>> = vec![None; n];
        mats[monoid.identity()] = Some(ExactMatrix::identity(dim));
        let mut queue = VecDeque::from([monoid.identity()]);
        while let Some(x) = queue.pop_front() {
            for (&g, img) in gens.iter().zip(images) {
                let y = monoid.mul(x, g);
                let cur = mats[x].as_ref().unwrap();
                let val = match side {
                    Side::Left => cur.mul(img),
                    Side::Right => img.mul(cur),
                };
                match &mats[y] {
                    None => {
                        mats[y] = Some(val);
                        queue.push_back(y);
                    }
                    Some(old) if *old != val => {
                        return Err(RepError::NotHomomorphism(format!("inconsistent image at element {y}")))
                    }
                    _ => {}
                }
            }
        }
        if mats.iter().any(|m| m.is_none()) {
            return Err(RepError::NotHomomorphism("generators do not generate the monoid".into()));
        }
        Representation::new(monoid, side, mats.into_iter().map(|m| m.unwrap()).collect())
    }

    pub fn trivial(monoid: Arc<FiniteMonoid>) -> Self {
        let mats = vec![ExactMatrix::identity(1); monoid.size()];
        Representation { monoid, dim: 1, mats, side: Side::Left }
    }

    /// One-dimensional representation from scalar values.
    pub fn character(monoid: Arc<FiniteMonoid>, values: Vec<CycNum>) -> Result<Self, RepError> {
        let mats = values.into_iter().map(|v| ExactMatrix::new(1, 1, vec![v])).collect();
        Representation::new(monoid, Side::Left, mats)
    }

    pub fn zero(monoid: Arc<FiniteMonoid>, side: Side) -> Self {
        let mats = vec![ExactMatrix::zeros(0, 0); monoid.size()];
        Representation { monoid, dim: 0, mats, side }
    }

    /// Left regular representation: ρ(m)e_x = e_{mx}.
    pub fn regular_left(monoid: Arc<FiniteMonoid>) -> Self {
        let n = monoid.size();
        let mats = (0..n)
            .map(|a| ExactMatrix::permutation_like(n, |x| Some(monoid.mul(a, x))))
            .collect();
        Representation { monoid, dim: n, mats, side: Side::Left }
    }

    /// Right regular representation: e_x·m = e_{xm}.
    pub fn regular_right(monoid: Arc<FiniteMonoid>) -> Self {
        let n = monoid.size();
        let mats = (0..n)
            .map(|a| ExactMatrix::permutation_like(n, |x| Some(monoid.mul(x, a))))
            .collect();
        Representation { monoid, dim: n, mats, side: Side::Right }
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    pub fn monoid_arc(&self) -> &Arc<FiniteMonoid> {
        &self.monoid
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn matrix(&self, x: usize) -> &ExactMatrix {
        &self.mats[x]
    }

    pub fn matrices(&self) -> &[ExactMatrix] {
        &self.mats
    }

    pub fn same_monoid(&self, other: &Representation) -> bool {
        Arc::ptr_eq(&self.monoid, &other.monoid) || *self.monoid == *other.monoid
    }

    pub fn character_values(&self) -> Vec<CycNum> {
        self.mats.iter().map(|a| a.trace()).collect()
    }

    /// Least common conductor of all matrix entries.
    pub fn conductor(&self) -> u32 {
        self.mats.iter().fold(1u32, |acc, a| lcm32(acc, a.conductor()))
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation, RepError> {
        self.compatible(other)?;
        let mats = self.mats.iter().zip(&other.mats).map(|(a, b)| a.direct_sum(b)).collect();
        Ok(Representation { monoid: self.monoid.clone(), dim: self.dim + other.dim, mats, side: self.side })
    }

    pub fn direct_sum_all(reps: &[Representation]) -> Result<Representation, RepError> {
        let mut it = reps.iter();
        let first = it.next().ok_or_else(|| RepError::Dimension("empty direct sum".into()))?.clone();
        it.try_fold(first, |acc, r| acc.direct_sum(r))
    }

    /// Inner tensor product (Kronecker), same monoid and side.
    pub fn tensor(&self, other: &Representation) -> Result<Representation, RepError> {
        self.compatible(other)?;
        let mats = self.mats.iter().zip(&other.mats).map(|(a, b)| a.kron(b)).collect();
        Ok(Representation { monoid: self.monoid.clone(), dim: self.dim * other.dim, mats, side: self.side })
    }

    pub fn scalar_multiple(&self, k: usize) -> Representation {
        let mut out = Representation::zero(self.monoid.clone(), self.side);
        for _ in 0..k {
            out = out.direct_sum(self).unwrap();
        }
        out
    }

    fn compatible(&self, other: &Representation) -> Result<(), RepError> {
        if !self.same_monoid(other) {
            return Err(RepError::MonoidMismatch);
        }
        if self.side != other.side {
            return Err(RepError::SideMismatch);
        }
        Ok(())
    }

    /// Restriction to a submonoid, as a representation of `sub.as_monoid(..)`.
    pub fn restrict(&self, sub: &Submonoid, sub_monoid: Arc<FiniteMonoid>) -> Representation {
        let mats = sub.members().iter().map(|&x| self.mats[x].clone()).collect();
        Representation { monoid: sub_monoid, dim: self.dim, mats, side: self.side }
    }

    /// Pullback along a homomorphism f: target → self.monoid given as an index map.
    pub fn pullback(&self, target: Arc<FiniteMonoid>, f: &[usize]) -> Representation {
        let mats = f.iter().map(|&y| self.mats[y].clone()).collect();
        Representation { monoid: target, dim: self.dim, mats, side: self.side }
    }

    /// Conjugate every matrix by an invertible T: x ↦ T ρ(x) T⁻¹.
    pub fn conjugate_by(&self, t: &ExactMatrix) -> Result<Representation, RepError> {
        let ti = t.inverse().map_err(|_| RepError::Dimension("singular change of basis".into()))?;
        let mats = self.mats.iter().map(|a| t.mul(a).mul(&ti)).collect();
        Ok(Representation { monoid: self.monoid.clone(), dim: self.dim, mats, side: self.side })
    }

    /// Replaces the monoid handle (must be equal as a table).
    pub fn rebase(&self, monoid: Arc<FiniteMonoid>) -> Representation {
        assert_eq!(*monoid, *self.monoid);
        Representation { monoid, dim: self.dim, mats: self.mats.clone(), side: self.side }
    }

    /// Same matrices read as the other side over the opposite monoid.
    pub fn with_side_unchecked(&self, side: Side) -> Representation {
        Representation { monoid: self.monoid.clone(), dim: self.dim, mats: self.mats.clone(), side }
    }

    /// Dimension of span{ρ(m)}, stopping early at dim².
    pub fn burnside_image_dim(&self) -> usize {
        let target = self.dim * self.dim;
        let mut rr = RowReducer::new(target);
        for a in &self.mats {
            rr.add_dense(a.entries());
            if rr.rank() == target {
                break;
            }
        }
        rr.rank()
    }

    pub fn is_irreducible(&self) -> bool {
        self.dim > 0 && self.burnside_image_dim() == self.dim * self.dim
    }

    pub fn is_invariant(&self, s: &Subspace) -> bool {
        self.mats.iter().all(|a| s.basis().iter().all(|v| s.contains(&a.mul_vec(v))))
    }

    /// Action on an invariant subspace in the coordinates of its echelon basis.
    pub fn subrepresentation(&self, s: &Subspace) -> Representation {
        let mats = self
            .mats
            .iter()
            .map(|a| {
                let cols: Vec<Vec<CycNum>> = s.basis().iter().map(|v| s.coords(&a.mul_vec(v))).collect();
                ExactMatrix::from_columns(&cols, s.dim())
            })
            .collect();
        Representation { monoid: self.monoid.clone(), dim: s.dim(), mats, side: self.side }
    }

    /// Action on V/S for an invariant subspace S, in the basis of the non-pivot unit vectors.
    pub fn quotient(&self, s: &Subspace) -> Representation {
        let free = s.free_columns();
        let mats = self
            .mats
            .iter()
            .map(|a| {
                let cols: Vec<Vec<CycNum>> = free.iter().map(|&j| s.quotient_coords(&a.col(j))).collect();
                ExactMatrix::from_columns(&cols, free.len())
            })
            .collect();
        Representation { monoid: self.monoid.clone(), dim: free.len(), mats, side: self.side }
    }

    /// Smallest invariant subspace containing the given vectors.
    pub fn invariant_closure(&self, vectors: &[Vec<CycNum>]) -> Subspace {
        let mut s = Subspace::zero(self.dim);
        let mut frontier: Vec<Vec<CycNum>> = Vec::new();
        for v in vectors {
            if s.insert(v) {
                frontier.push(v.clone());
            }
        }
        let gens: Vec<usize> = self.monoid.generators().to_vec();
        while let Some(v) = frontier.pop() {
            for &g in &gens {
                let w = self.mats[g].mul_vec(&v);
                if s.insert(&w) {
                    frontier.push(w);
                }
            }
        }
        s
    }
}

fn lcm32(a: u32, b: u32) -> u32 {
    fn gcd(a: u32, b: u32) -> u32 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// Matrices of partial functions on a basis.
pub trait PermutationLike {
    fn permutation_like(n: usize, f: impl Fn(usize) -> Option<usize>) -> ExactMatrix;
}

impl PermutationLike for ExactMatrix {
    fn permutation_like(n: usize, f: impl Fn(usize) -> Option<usize>) -> ExactMatrix {
        let mut a = ExactMatrix::zeros(n, n);
        for x in 0..n {
            if let Some(y) = f(x) {
                a.set(y, x, CycNum::one());
            }
        }
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use monoidrep_core::builtin::*;

    #[test]
    fn regular_reps_validate() {
        let m = Arc::new(symmetric_inverse_monoid(2));
        Representation::regular_left(m.clone()).validate().unwrap();
        Representation::regular_right(m.clone()).validate().unwrap();
        assert!(Representation::new(m.clone(), Side::Left, Representation::regular_right(m).matrices().to_vec()).is_err());
    }

    #[test]
    fn burnside_examples() {
        let c2 = Arc::new(cyclic(2));
        let reg = Representation::regular_left(c2.clone());
        assert_eq!(reg.burnside_image_dim(), 2);
        assert!(!reg.is_irreducible());
        assert!(Representation::trivial(c2).is_irreducible());
    }

    #[test]
    fn generator_extension() {
        let c3 = Arc::new(cyclic(3));
        let w = CycNum::zeta(3, 1);
        let r = Representation::from_generators(c3, Side::Left, &[1], &[ExactMatrix::new(1, 1, vec![w.clone()])]).unwrap();
        assert_eq!(*r.matrix(2).get(0, 0), &w * &w);
    }

    #[test]
    fn quotient_of_regular_c2() {
        let c2 = Arc::new(cyclic(2));
        let reg = Representation::regular_left(c2);
        let ones = vec![CycNum::one(), CycNum::one()];
        let s = reg.invariant_closure(&[ones]);
        assert_eq!(s.dim(), 1);
        let q = reg.quotient(&s);
        assert_eq!(q.dim(), 1);
        assert_eq!(*q.matrix(1).get(0, 0), CycNum::from_int(-1));
        let sub = reg.subrepresentation(&s);
        assert!(sub.matrix(1).is_identity());
    }
}
