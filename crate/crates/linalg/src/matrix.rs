use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cyclo::CycNum;
use crate::rational::Rational;
use crate::sparse::RowReducer;
use crate::LinalgError;

/// Dense row-major matrix over the cyclotomic numbers.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<CycNum>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<CycNum>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length does not match shape");
        ExactMatrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![CycNum::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = CycNum::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &CycNum) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> CycNum) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<CycNum>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        ExactMatrix { rows: r, cols: c, data }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| CycNum::from_int(x)).collect()).collect())
    }

    pub fn from_columns(cols: &[Vec<CycNum>], nrows: usize) -> Self {
        Self::from_fn(nrows, cols.len(), |i, j| cols[j][i].clone())
    }

    /// Permutation matrix with e_j ↦ e_{p(j)}.
    pub fn permutation(p: &[usize]) -> Self {
        let n = p.len();
        let mut m = Self::zeros(n, n);
        for (j, &i) in p.iter().enumerate() {
            m.data[i * n + j] = CycNum::one();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &CycNum {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycNum) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[CycNum] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[CycNum] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<CycNum> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn try_mul(&self, other: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = ExactMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let orow = other.row(k);
                let base = i * other.cols;
                for (j, b) in orow.iter().enumerate() {
                    if b.is_zero() {
                        continue;
                    }
                    let p = a * b;
                    out.data[base + j] += &p;
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        self.try_mul(other).expect("matrix shapes")
    }

    pub fn mul_vec(&self, v: &[CycNum]) -> Vec<CycNum> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = CycNum::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[CycNum]) -> Vec<CycNum> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![CycNum::zero(); self.cols];
        for (i, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in self.row(i).iter().enumerate() {
                if !b.is_zero() {
                    out[j] += &(a * b);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sub");
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn add_assign_scaled(&mut self, other: &ExactMatrix, c: &CycNum) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += &(b * c);
            }
        }
    }

    pub fn scale(&self, c: &CycNum) -> ExactMatrix {
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn scale_rational(&self, r: &Rational) -> ExactMatrix {
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.scale(r)).collect() }
    }

    pub fn neg(&self) -> ExactMatrix {
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }

    pub fn transpose(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn conj(&self) -> ExactMatrix {
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.conj()).collect() }
    }

    pub fn kron(&self, other: &ExactMatrix) -> ExactMatrix {
        let (r2, c2) = (other.rows, other.cols);
        let mut out = ExactMatrix::zeros(self.rows * r2, self.cols * c2);
        let oc = self.cols * c2;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.data[(i * r2 + k) * oc + j * c2 + l] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> CycNum {
        let mut t = CycNum::zero();
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    pub fn direct_sum(&self, other: &ExactMatrix) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    pub fn hstack(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.rows, other.rows);
        ExactMatrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        ExactMatrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn select_rows(&self, idx: &[usize]) -> ExactMatrix {
        ExactMatrix::from_fn(idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    pub fn select_cols(&self, idx: &[usize]) -> ExactMatrix {
        ExactMatrix::from_fn(self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> ExactMatrix {
        ExactMatrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn pow(&self, mut e: u64) -> ExactMatrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = ExactMatrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            let inv = a.get(r, c).inv().expect("nonzero pivot");
            for j in c..self.cols {
                let v = a.get(r, j) * &inv;
                a.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = a.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let t = a.get(r, j);
                    if t.is_zero() {
                        continue;
                    }
                    let v = a.get(i, j) - &(&f * t);
                    a.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        let mut rr = RowReducer::new(self.cols);
        for i in 0..self.rows {
            rr.add_dense(self.row(i));
        }
        rr.rank()
    }

    /// Basis of {x : Ax = 0}; one vector per free column with a 1 there and zeros at the other free columns.
    pub fn nullspace(&self) -> Vec<Vec<CycNum>> {
        let mut rr = RowReducer::new(self.cols);
        for i in 0..self.rows {
            rr.add_dense(self.row(i));
        }
        rr.nullspace()
    }

    /// Nullspace vectors as the columns of a matrix.
    pub fn nullspace_matrix(&self) -> ExactMatrix {
        let ns = self.nullspace();
        ExactMatrix::from_columns(&ns, self.cols)
    }

    /// Some x with Ax = b, or None if inconsistent.
    pub fn solve_linear(&self, b: &[CycNum]) -> Option<Vec<CycNum>> {
        assert_eq!(b.len(), self.rows);
        let aug = self.hstack(&ExactMatrix::from_columns(&[b.to_vec()], self.rows));
        let (r, piv) = aug.rref();
        if piv.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![CycNum::zero(); self.cols];
        for (i, &c) in piv.iter().enumerate() {
            x[c] = r.get(i, self.cols).clone();
        }
        Some(x)
    }

    /// Some X with AX = B.
    pub fn solve_matrix(&self, b: &ExactMatrix) -> Option<ExactMatrix> {
        assert_eq!(b.rows, self.rows);
        let aug = self.hstack(b);
        let (r, piv) = aug.rref();
        if piv.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = ExactMatrix::zeros(self.cols, b.cols);
        for (i, &c) in piv.iter().enumerate() {
            for j in 0..b.cols {
                x.set(c, j, r.get(i, self.cols + j).clone());
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Result<ExactMatrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::Dimension("inverse of non-square matrix".into()));
        }
        self.solve_matrix(&ExactMatrix::identity(self.rows)).ok_or(LinalgError::Singular)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> CycNum {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return CycNum::one();
        }
        let mut a = self.clone();
        let mut sign = false;
        let mut prev = CycNum::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(p) => {
                        a.swap_rows(k, p);
                        sign = !sign;
                    }
                    None => return CycNum::zero(),
                }
            }
            let akk = a.get(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&akk * a.get(i, j)) - &(a.get(i, k) * a.get(k, j));
                    let v = num.checked_div(&prev).expect("Bareiss divisor is nonzero");
                    a.set(i, j, v);
                }
                a.set(i, k, CycNum::zero());
            }
            prev = akk;
        }
        let d = a.get(n - 1, n - 1).clone();
        if sign {
            -d
        } else {
            d
        }
    }

    /// Least common conductor of the entries.
    pub fn conductor(&self) -> u32 {
        use num_integer::Integer;
        self.data.iter().fold(1u32, |acc, x| acc.lcm(&x.conductor()))
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiply_and_inverse() {
        let a = ExactMatrix::from_ints(&[&[2, 1], &[1, 1]]);
        let b = a.inverse().unwrap();
        assert!(a.mul(&b).is_identity());
        assert_eq!(a.det(), CycNum::from_int(1));
    }

    #[test]
    fn singular() {
        let a = ExactMatrix::from_ints(&[&[1, 2], &[2, 4]]);
        assert_eq!(a.rank(), 1);
        assert_eq!(a.inverse(), Err(LinalgError::Singular));
        assert!(a.det().is_zero());
        let ns = a.nullspace();
        assert_eq!(ns, vec![vec![CycNum::from_int(-2), CycNum::one()]]);
    }

    #[test]
    fn solve() {
        let a = ExactMatrix::from_ints(&[&[1, 1], &[1, -1]]);
        let x = a.solve_linear(&[CycNum::from_int(3), CycNum::from_int(1)]).unwrap();
        assert_eq!(x, vec![CycNum::from_int(2), CycNum::from_int(1)]);
        let s = ExactMatrix::from_ints(&[&[1, 1], &[1, 1]]);
        assert!(s.solve_linear(&[CycNum::from_int(1), CycNum::from_int(2)]).is_none());
    }

    #[test]
    fn det_with_roots() {
        let w = CycNum::zeta(3, 1);
        let a = ExactMatrix::from_rows(vec![vec![w.clone(), CycNum::zero()], vec![CycNum::one(), w.conj()]]);
        assert!(a.det().is_one());
        let p = ExactMatrix::permutation(&[1, 2, 0]);
        assert!(p.det().is_one());
        assert_eq!(ExactMatrix::permutation(&[1, 0]).det(), CycNum::from_int(-1));
    }

    #[test]
    fn kron_shape_and_trace() {
        let a = ExactMatrix::from_ints(&[&[1, 2], &[3, 4]]);
        let i = ExactMatrix::identity(3);
        let k = a.kron(&i);
        assert_eq!((k.nrows(), k.ncols()), (6, 6));
        assert_eq!(k.trace(), CycNum::from_int(15));
    }
}
