//! Standard small monoids addressed by name.

use std::collections::HashMap;

use crate::monoid::{compose, map_label, FiniteMonoid, PartialMap};

/// All permutations of 0..k in lexicographic order of one-line notation.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(k, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(k, &mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

pub fn perm_sign(p: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Monoid of the given maps, which must be closed under composition and contain the identity.
pub fn monoid_of_maps(maps: Vec<PartialMap>, labels: Vec<String>) -> FiniteMonoid {
    let index: HashMap<PartialMap, usize> = maps.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
    let k = maps.first().map_or(0, |f| f.len());
    let id: PartialMap = (0..k).map(Some).collect();
    let table = maps
        .iter()
        .map(|a| maps.iter().map(|b| index[&compose(a, b)]).collect())
        .collect();
    FiniteMonoid::build(table, index[&id], Some(labels), false).expect("maps form a monoid")
}

pub fn cyclic(n: usize) -> FiniteMonoid {
    assert!(n >= 1);
    let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    let labels = (0..n).map(|a| if a == 0 { "1".to_string() } else { format!("g^{a}") }).collect();
    FiniteMonoid::build(table, 0, Some(labels), false).unwrap()
}

/// S_k acting on {1..k}; index 0 is the identity and the product is composition (right factor first).
pub fn symmetric_group(k: usize) -> FiniteMonoid {
    let perms = permutations(k);
    let labels = perms.iter().map(|p| perm_label(p)).collect();
    monoid_of_maps(perms.into_iter().map(|p| p.into_iter().map(Some).collect()).collect(), labels)
}

pub fn perm_label(p: &[usize]) -> String {
    p.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join("")
}

/// Permutation realized by each element of `symmetric_group(k)`.
pub fn symmetric_group_perms(k: usize) -> Vec<Vec<usize>> {
    permutations(k)
}

pub fn alternating_group(k: usize) -> FiniteMonoid {
    let perms: Vec<Vec<usize>> = permutations(k).into_iter().filter(|p| perm_sign(p) == 1).collect();
    let labels = perms.iter().map(|p| perm_label(p)).collect();
    monoid_of_maps(perms.into_iter().map(|p| p.into_iter().map(Some).collect()).collect(), labels)
}

/// All partial injections of {1..k}; index 0 is the identity.
pub fn partial_injections(k: usize) -> Vec<PartialMap> {
    fn rec(k: usize, cur: &mut PartialMap, used: &mut Vec<bool>, out: &mut Vec<PartialMap>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let pos = cur.len();
        // prefer the identity image so the identity map is enumerated first
        let mut order: Vec<usize> = vec![pos];
        order.extend((0..k).filter(|&j| j != pos));
        for j in order {
            if !used[j] {
                used[j] = true;
                cur.push(Some(j));
                rec(k, cur, used, out);
                cur.pop();
                used[j] = false;
            }
        }
        cur.push(None);
        rec(k, cur, used, out);
        cur.pop();
    }
    let mut out = Vec::new();
    rec(k, &mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

pub fn symmetric_inverse_monoid(k: usize) -> FiniteMonoid {
    let maps = partial_injections(k);
    let labels = maps.iter().map(map_label).collect();
    monoid_of_maps(maps, labels)
}

/// All maps {1..k} → {1..k}; index 0 is the identity.
pub fn full_transformation_monoid(k: usize) -> FiniteMonoid {
    let mut maps: Vec<PartialMap> = Vec::new();
    let total = k.pow(k as u32);
    for mut code in 0..total {
        let mut f = Vec::with_capacity(k);
        for _ in 0..k {
            f.push(Some(code % k));
            code /= k;
        }
        maps.push(f);
    }
    let id: PartialMap = (0..k).map(Some).collect();
    let pos = maps.iter().position(|f| *f == id).unwrap();
    maps.swap(0, pos);
    let labels = maps.iter().map(map_label).collect();
    monoid_of_maps(maps, labels)
}

/// {1, a, 0} with a² = 0.
pub fn nilpotent3() -> FiniteMonoid {
    let table = vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 2]];
    FiniteMonoid::build(table, 0, Some(vec!["1".into(), "a".into(), "0".into()]), true).unwrap()
}

/// M⁰ = M ⊔ {0}, with 0 last.
pub fn adjoin_zero(m: &FiniteMonoid) -> FiniteMonoid {
    let n = m.size();
    let mut table = m.table();
    for row in table.iter_mut() {
        row.push(n);
    }
    table.push(vec![n; n + 1]);
    let labels = m.elements().map(|x| m.label(x)).chain(std::iter::once("0".to_string())).collect();
    FiniteMonoid::build(table, m.identity(), Some(labels), false).unwrap()
}

/// Built-in monoids: c1..c12, s1..s5, a3..a5, is1..is4, t1..t3, nil3, trivial.
pub fn by_name(name: &str) -> Option<FiniteMonoid> {
    let name = name.trim().to_ascii_lowercase();
    let num = |prefix: &str| -> Option<usize> { name.strip_prefix(prefix)?.parse().ok() };
    if name == "trivial" {
        return Some(FiniteMonoid::trivial());
    }
    if name == "nil3" {
        return Some(nilpotent3());
    }
    if let Some(k) = num("is") {
        return (1..=4).contains(&k).then(|| symmetric_inverse_monoid(k));
    }
    if let Some(k) = num("c") {
        return (1..=12).contains(&k).then(|| cyclic(k));
    }
    if let Some(k) = num("s") {
        return (1..=5).contains(&k).then(|| symmetric_group(k));
    }
    if let Some(k) = num("a") {
        return (3..=5).contains(&k).then(|| alternating_group(k));
    }
    if let Some(k) = num("t") {
        return (1..=3).contains(&k).then(|| full_transformation_monoid(k));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(symmetric_group(3).size(), 6);
        assert_eq!(symmetric_group(3).identity(), 0);
        assert_eq!(alternating_group(4).size(), 12);
        assert_eq!(symmetric_inverse_monoid(2).size(), 7);
        assert_eq!(symmetric_inverse_monoid(3).size(), 34);
        assert_eq!(symmetric_inverse_monoid(3).identity(), 0);
        assert_eq!(full_transformation_monoid(2).size(), 4);
        assert_eq!(full_transformation_monoid(3).size(), 27);
        assert_eq!(full_transformation_monoid(3).identity(), 0);
    }

    #[test]
    fn idempotent_counts() {
        assert_eq!(symmetric_inverse_monoid(2).idempotents().len(), 4);
        assert_eq!(symmetric_inverse_monoid(3).idempotents().len(), 8);
        assert_eq!(full_transformation_monoid(2).idempotents().len(), 3);
        assert_eq!(symmetric_group(4).idempotents(), vec![0]);
    }

    #[test]
    fn names() {
        assert_eq!(by_name("S4").unwrap().size(), 24);
        assert_eq!(by_name("c5").unwrap().size(), 5);
        assert!(by_name("x9").is_none());
        assert!(by_name("s9").is_none());
    }
}
