use std::fmt;

use serde::{Deserialize, Serialize};

use crate::SymError;

/// λ ⊢ n as a weakly decreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A tableau as rows of 0-based entries.
pub type Tableau = Vec<Vec<usize>>;

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, SymError> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SymError::BadPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (0..width).map(|c| self.parts.iter().filter(|&&p| p > c).count()).collect();
        Partition { parts }
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn dimension(&self) -> usize {
        let conj = self.conjugate();
        let mut hooks: u128 = 1;
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 0..len {
                hooks *= (len - c - 1 + conj.parts[c] - r - 1 + 1) as u128;
            }
        }
        let fact: u128 = (1..=self.n() as u128).product();
        (fact / hooks) as usize
    }

    /// Standard tableaux in lexicographic order of their reading word.
    pub fn standard_tableaux(&self) -> Vec<Tableau> {
        let n = self.n();
        let mut out = Vec::new();
        let mut rows: Tableau = vec![Vec::new(); self.parts.len()];
        fn rec(k: usize, n: usize, parts: &[usize], rows: &mut Tableau, out: &mut Vec<Tableau>) {
            if k == n {
                out.push(rows.clone());
                return;
            }
            for r in 0..parts.len() {
                let c = rows[r].len();
                if c < parts[r] && (r == 0 || rows[r - 1].len() > c) {
                    rows[r].push(k);
                    rec(k + 1, n, parts, rows, out);
                    rows[r].pop();
                }
            }
        }
        rec(0, n, &self.parts, &mut rows, &mut out);
        out
    }

    /// The tableau filled row by row with 0..n.
    pub fn row_tableau(&self) -> Tableau {
        let mut k = 0;
        self.parts
            .iter()
            .map(|&len| {
                let row = (k..k + len).collect();
                k += len;
                row
            })
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All partitions of n in reverse lexicographic order: (n) first, (1ⁿ) last.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Compositions of n into k nonnegative parts, lexicographically descending.
pub fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=n).rev() {
        for mut rest in compositions(n - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}
