use monoidrep_linalg::{CycNum, ExactMatrix, RowReducer};

/// A subspace of F^n kept as a reduced echelon basis.
///
/// The basis vector with pivot p has a 1 at p and zeros at every other pivot, so the
/// coordinates of a member are its entries at the pivot columns.
#[derive(Clone, Debug)]
pub struct Subspace {
    n: usize,
    rr: RowReducer,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace { n, rr: RowReducer::new(n) }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::zero(n);
        for i in 0..n {
            let mut v = vec![CycNum::zero(); n];
            v[i] = CycNum::one();
            s.insert(&v);
        }
        s
    }

    pub fn span(n: usize, vectors: &[Vec<CycNum>]) -> Self {
        let mut s = Self::zero(n);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    /// Column space of a matrix.
    pub fn column_space(a: &ExactMatrix) -> Self {
        let cols: Vec<Vec<CycNum>> = (0..a.ncols()).map(|j| a.col(j)).collect();
        Self::span(a.nrows(), &cols)
    }

    /// Kernel of a matrix acting on column vectors.
    pub fn kernel(a: &ExactMatrix) -> Self {
        Self::span(a.ncols(), &a.nullspace())
    }

    /// Common kernel of several matrices with `n` columns.
    pub fn common_kernel(n: usize, mats: &[ExactMatrix]) -> Self {
        let mut rr = RowReducer::new(n);
        for a in mats {
            for i in 0..a.nrows() {
                rr.add_dense(a.row(i));
                if rr.rank() == n {
                    return Self::zero(n);
                }
            }
        }
        Self::span(n, &rr.nullspace())
    }

    pub fn insert(&mut self, v: &[CycNum]) -> bool {
        self.rr.add_dense(v)
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rr.rank()
    }

    pub fn basis(&self) -> Vec<Vec<CycNum>> {
        self.rr.basis()
    }

    pub fn basis_matrix(&self) -> ExactMatrix {
        ExactMatrix::from_columns(&self.basis(), self.n)
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rr.pivots()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let p = self.pivots();
        (0..self.n).filter(|j| !p.contains(j)).collect()
    }

    pub fn contains(&self, v: &[CycNum]) -> bool {
        self.rr.in_span(v)
    }

    /// Coordinates of a member in the echelon basis.
    pub fn coords(&self, v: &[CycNum]) -> Vec<CycNum> {
        debug_assert!(self.contains(v));
        self.pivots().iter().map(|&p| v[p].clone()).collect()
    }

    /// Coordinates of v + S in V/S, indexed by the free columns.
    pub fn quotient_coords(&self, v: &[CycNum]) -> Vec<CycNum> {
        let mut w = v.to_vec();
        for (b, &p) in self.basis().iter().zip(self.pivots().iter()) {
            let c = v[p].clone();
            if c.is_zero() {
                continue;
            }
            for (x, y) in w.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= &(&c * y);
                }
            }
        }
        self.free_columns().into_iter().map(|j| w[j].clone()).collect()
    }

    /// {u : ⟨u, s⟩ = 0 for all s}, for the plain bilinear pairing.
    pub fn annihilator(&self) -> Subspace {
        Subspace::span(self.n, &self.rr.nullspace())
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        let mut perp = self.annihilator();
        for v in other.annihilator().basis() {
            perp.insert(&v);
        }
        perp.annihilator()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in other.basis() {
            s.insert(&v);
        }
        s
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis().iter().all(|v| other.contains(v))
    }

    pub fn equals(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.is_subspace_of(other)
    }

    /// Image of the subspace under a matrix.
    pub fn image(&self, a: &ExactMatrix) -> Subspace {
        let vs: Vec<Vec<CycNum>> = self.basis().iter().map(|v| a.mul_vec(v)).collect();
        Subspace::span(a.nrows(), &vs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<CycNum> {
        v.iter().map(|&x| CycNum::from_int(x)).collect()
    }

    #[test]
    fn intersection_and_coords() {
        let a = Subspace::span(3, &[ints(&[1, 0, 0]), ints(&[0, 1, 0])]);
        let b = Subspace::span(3, &[ints(&[1, 1, 1]), ints(&[0, 1, 1])]);
        let c = a.intersect(&b);
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&ints(&[1, 0, 0])));
        let s = Subspace::span(3, &[ints(&[1, 2, 3])]);
        assert_eq!(s.coords(&ints(&[2, 4, 6])), ints(&[2]));
        assert_eq!(s.quotient_coords(&ints(&[1, 2, 3])), ints(&[0, 0]));
        assert_eq!(a.sum(&b).dim(), 3);
    }
}
