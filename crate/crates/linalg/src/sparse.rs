use std::collections::BTreeMap;

use crate::cyclo::CycNum;

/// Incrementally maintained reduced row echelon form of sparse rows.
///
/// Every stored row has a leading 1 at its pivot column and zeros at all other pivot columns.
#[derive(Clone, Debug)]
pub struct RowReducer {
    ncols: usize,
    rows: Vec<BTreeMap<usize, CycNum>>,
    pivot_of: BTreeMap<usize, usize>,
}

impl RowReducer {
    pub fn new(ncols: usize) -> Self {
        RowReducer { ncols, rows: Vec::new(), pivot_of: BTreeMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.pivot_of.keys().copied().collect()
    }

    /// Residue of `row` after eliminating all pivot columns.
    pub fn reduce(&self, row: BTreeMap<usize, CycNum>) -> BTreeMap<usize, CycNum> {
        let mut work = row;
        let hits: Vec<(usize, CycNum)> = work
            .iter()
            .filter(|(c, _)| self.pivot_of.contains_key(c))
            .map(|(c, v)| (*c, v.clone()))
            .collect();
        for (c, f) in hits {
            let r = &self.rows[self.pivot_of[&c]];
            for (j, v) in r {
                let e = work.entry(*j).or_insert_with(CycNum::zero);
                *e -= &(&f * v);
            }
        }
        work.retain(|_, v| !v.is_zero());
        work
    }

    pub fn in_span(&self, row: &[CycNum]) -> bool {
        self.reduce(to_sparse(row)).is_empty()
    }

    /// Adds a row; returns true if it increased the rank.
    pub fn add_row(&mut self, row: BTreeMap<usize, CycNum>) -> bool {
        let mut work = self.reduce(row);
        let Some((&p, lead)) = work.iter().next() else {
            return false;
        };
        let inv = lead.inv().expect("nonzero leading entry");
        for v in work.values_mut() {
            *v = &*v * &inv;
        }
        for r in self.rows.iter_mut() {
            if let Some(f) = r.get(&p).cloned() {
                for (j, v) in &work {
                    let e = r.entry(*j).or_insert_with(CycNum::zero);
                    *e -= &(&f * v);
                }
                r.retain(|_, v| !v.is_zero());
            }
        }
        self.pivot_of.insert(p, self.rows.len());
        self.rows.push(work);
        true
    }

    pub fn add_sparse(&mut self, row: &[(usize, CycNum)]) -> bool {
        let mut m = BTreeMap::new();
        for (c, v) in row {
            if v.is_zero() {
                continue;
            }
            let e = m.entry(*c).or_insert_with(CycNum::zero);
            *e += v;
        }
        m.retain(|_, v: &mut CycNum| !v.is_zero());
        self.add_row(m)
    }

    pub fn add_dense(&mut self, row: &[CycNum]) -> bool {
        assert_eq!(row.len(), self.ncols);
        self.add_row(to_sparse(row))
    }

    /// Reduced rows ordered by pivot column, as dense vectors.
    pub fn basis(&self) -> Vec<Vec<CycNum>> {
        self.pivot_of
            .values()
            .map(|&i| {
                let mut v = vec![CycNum::zero(); self.ncols];
                for (j, x) in &self.rows[i] {
                    v[*j] = x.clone();
                }
                v
            })
            .collect()
    }

    /// Basis of the solutions of the stored homogeneous system, one per free column.
    pub fn nullspace(&self) -> Vec<Vec<CycNum>> {
        let mut out = Vec::new();
        for f in 0..self.ncols {
            if self.pivot_of.contains_key(&f) {
                continue;
            }
            let mut v = vec![CycNum::zero(); self.ncols];
            v[f] = CycNum::one();
            for (&p, &ri) in &self.pivot_of {
                if let Some(x) = self.rows[ri].get(&f) {
                    v[p] = -x;
                }
            }
            out.push(v);
        }
        out
    }
}

fn to_sparse(row: &[CycNum]) -> BTreeMap<usize, CycNum> {
    row.iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| (i, v.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<CycNum> {
        v.iter().map(|&x| CycNum::from_int(x)).collect()
    }

    #[test]
    fn incremental_rank() {
        let mut rr = RowReducer::new(3);
        assert!(rr.add_dense(&ints(&[1, 2, 3])));
        assert!(!rr.add_dense(&ints(&[2, 4, 6])));
        assert!(rr.add_dense(&ints(&[0, 1, 1])));
        assert_eq!(rr.rank(), 2);
        let ns = rr.nullspace();
        assert_eq!(ns, vec![ints(&[-1, -1, 1])]);
        assert!(rr.in_span(&ints(&[1, 3, 4])));
        assert!(!rr.in_span(&ints(&[0, 0, 1])));
    }

    #[test]
    fn later_pivot_back_eliminates() {
        let mut rr = RowReducer::new(3);
        rr.add_dense(&ints(&[0, 1, 5]));
        rr.add_dense(&ints(&[1, 1, 0]));
        rr.add_dense(&ints(&[0, 0, 2]));
        assert_eq!(rr.basis(), vec![ints(&[1, 0, 0]), ints(&[0, 1, 0]), ints(&[0, 0, 1])]);
    }
}
