//! Bruhat length on S_n and the named elements w_[n], w_[n/2], w_0 (1-based one-line notation).

use crate::SymError;

/// l(w) = #{i < j : w(i) > w(j)}.
pub fn bruhat_length(w: &[usize]) -> usize {
    let mut inv = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                inv += 1;
            }
        }
    }
    inv
}

/// One-line notation of the cycle (c_1 c_2 … c_k) in S_n.
pub fn cycle_to_one_line(cycle: &[usize], n: usize) -> Vec<usize> {
    let mut w: Vec<usize> = (1..=n).collect();
    for (k, &c) in cycle.iter().enumerate() {
        w[c - 1] = cycle[(k + 1) % cycle.len()];
    }
    w
}

/// w_[n] = (1 2 … n).
pub fn w_cycle(n: usize) -> Vec<usize> {
    cycle_to_one_line(&(1..=n).collect::<Vec<_>>(), n)
}

/// w_[n/2] = (1 n 2 n−1 … ), ending with m+1 when n = 2m+1.
pub fn w_half(n: usize) -> Vec<usize> {
    let m = n / 2;
    let mut cycle = Vec::with_capacity(n);
    for i in 1..=m {
        cycle.push(i);
        cycle.push(n + 1 - i);
    }
    if n % 2 == 1 {
        cycle.push(m + 1);
    }
    cycle_to_one_line(&cycle, n)
}

/// The longest element i ↦ n+1−i.
pub fn w0(n: usize) -> Vec<usize> {
    (1..=n).rev().collect()
}

/// Parses cycle notation such as "1234", "(1234)" or "(12)(34)"; n defaults to the largest point.
pub fn parse_cycles(s: &str, n: Option<usize>) -> Result<Vec<usize>, SymError> {
    let s = s.trim();
    let groups: Vec<&str> = if s.contains('(') {
        s.split(|c| c == '(' || c == ')').map(str::trim).filter(|g| !g.is_empty()).collect()
    } else {
        vec![s]
    };
    let mut cycles = Vec::new();
    for g in groups {
        let pts: Vec<usize> = if g.contains(|c: char| c == ',' || c.is_whitespace()) {
            g.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|e| SymError::Parse(format!("{t:?}: {e}"))))
                .collect::<Result<_, _>>()?
        } else {
            g.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| SymError::Parse(format!("bad point {c:?}"))))
                .collect::<Result<_, _>>()?
        };
        cycles.push(pts);
    }
    let max = cycles.iter().flatten().copied().max().unwrap_or(0);
    let n = n.unwrap_or(max);
    let mut seen = vec![false; n + 1];
    for &x in cycles.iter().flatten() {
        if x == 0 || x > n || seen[x] {
            return Err(SymError::Parse(format!("point {x} repeated or out of range 1..={n}")));
        }
        seen[x] = true;
    }
    let mut w: Vec<usize> = (1..=n).collect();
    for c in cycles.iter().rev() {
        let step = cycle_to_one_line(c, n);
        w = w.iter().map(|&x| step[x - 1]).collect();
    }
    Ok(w)
}

/// Bruhat order u ≤ w by the sorted-prefix criterion.
pub fn bruhat_le(u: &[usize], w: &[usize]) -> bool {
    if u.len() != w.len() {
        return false;
    }
    for k in 1..u.len() {
        let mut a = u[..k].to_vec();
        let mut b = w[..k].to_vec();
        a.sort_unstable();
        b.sort_unstable();
        if a.iter().zip(&b).any(|(x, y)| x > y) {
            return false;
        }
    }
    true
}
