use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use crate::MonoidError;

/// A partial map on points 0..k; `None` means undefined.
pub type PartialMap = Vec<Option<usize>>;

/// Finite monoid stored as a dense multiplication table over indices 0..size.
#[derive(Clone)]
pub struct FiniteMonoid {
    n: usize,
    table: Vec<usize>,
    identity: usize,
    labels: Option<Vec<String>>,
    gens: OnceLock<Vec<usize>>,
}

impl PartialEq for FiniteMonoid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.identity == other.identity && self.table == other.table
    }
}

impl Eq for FiniteMonoid {}

impl fmt::Debug for FiniteMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteMonoid(size={}, identity={})", self.n, self.identity)
    }
}

pub fn monoid_from_table(table: Vec<Vec<usize>>, identity: usize) -> Result<FiniteMonoid, MonoidError> {
    FiniteMonoid::from_table(table, identity)
}

impl FiniteMonoid {
    pub fn from_table(table: Vec<Vec<usize>>, identity: usize) -> Result<Self, MonoidError> {
        Self::build(table, identity, None, true)
    }

    /// Builds without the O(n³) associativity check; for tables produced by trusted constructions.
    pub fn from_table_unchecked(table: Vec<Vec<usize>>, identity: usize) -> Result<Self, MonoidError> {
        Self::build(table, identity, None, false)
    }

    pub fn build(
        table: Vec<Vec<usize>>,
        identity: usize,
        labels: Option<Vec<String>>,
        check_assoc: bool,
    ) -> Result<Self, MonoidError> {
        let n = table.len();
        if n == 0 || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(MonoidError::Shape);
        }
        if identity >= n {
            return Err(MonoidError::Identity(identity));
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(MonoidError::Shape);
            }
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        let m = FiniteMonoid { n, table: flat, identity, labels, gens: OnceLock::new() };
        for x in 0..n {
            if m.mul(identity, x) != x || m.mul(x, identity) != x {
                return Err(MonoidError::Identity(identity));
            }
        }
        if check_assoc {
            m.check_associative()?;
        }
        Ok(m)
    }

    pub fn check_associative(&self) -> Result<(), MonoidError> {
        for a in 0..self.n {
            for b in 0..self.n {
                let ab = self.mul(a, b);
                for c in 0..self.n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(MonoidError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn trivial() -> Self {
        FiniteMonoid::from_table(vec![vec![0]], 0).unwrap()
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn mul_all(&self, xs: &[usize]) -> usize {
        xs.iter().fold(self.identity, |acc, &x| self.mul(acc, x))
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn pow(&self, x: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, x))
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.mul(x, x) == x
    }

    pub fn idempotents(&self) -> Vec<usize> {
        self.elements().filter(|&x| self.is_idempotent(x)).collect()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Group of units.
    pub fn units(&self) -> Vec<usize> {
        self.elements()
            .filter(|&x| {
                self.elements()
                    .any(|y| self.mul(x, y) == self.identity && self.mul(y, x) == self.identity)
            })
            .collect()
    }

    pub fn is_group(&self) -> bool {
        self.units().len() == self.n
    }

    /// Inverse of a unit.
    pub fn unit_inverse(&self, x: usize) -> Option<usize> {
        self.elements()
            .find(|&y| self.mul(x, y) == self.identity && self.mul(y, x) == self.identity)
    }

    /// Order of a unit in the group of units.
    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
            assert!(k <= self.n + 1, "element {x} is not a unit");
        }
        k
    }

    /// Least common multiple of the element orders (for groups).
    pub fn exponent(&self) -> usize {
        self.elements().map(|x| self.element_order(x)).fold(1, lcm)
    }

    pub fn is_regular_element(&self, x: usize) -> bool {
        self.elements().any(|y| self.mul(self.mul(x, y), x) == x)
    }

    pub fn is_regular(&self) -> bool {
        self.elements().all(|x| self.is_regular_element(x))
    }

    /// Closure of a set of elements together with the identity.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut out = vec![self.identity];
        seen[self.identity] = true;
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    /// A generating set chosen greedily in index order.
    pub fn generators(&self) -> &[usize] {
        self.gens.get_or_init(|| {
            let mut gens = Vec::new();
            let mut covered = vec![false; self.n];
            covered[self.identity] = true;
            for x in 0..self.n {
                if !covered[x] {
                    gens.push(x);
                    for y in self.closure(&gens) {
                        covered[y] = true;
                    }
                }
            }
            gens
        })
    }

    /// The submonoid on `members` (closed, containing the identity) as a standalone monoid.
    pub fn restrict(&self, members: &[usize]) -> FiniteMonoid {
        let pos: HashMap<usize, usize> = members.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let table = members
            .iter()
            .map(|&a| members.iter().map(|&b| pos[&self.mul(a, b)]).collect())
            .collect();
        let labels = members.iter().map(|&x| self.label(x)).collect();
        FiniteMonoid::build(table, pos[&self.identity], Some(labels), false).expect("restriction is a monoid")
    }

    /// Direct product with pair (a,b) stored at index a·|other|+b.
    pub fn direct_product(&self, other: &FiniteMonoid) -> FiniteMonoid {
        let (n1, n2) = (self.n, other.n);
        let table = (0..n1 * n2)
            .map(|p| {
                (0..n1 * n2)
                    .map(|q| self.mul(p / n2, q / n2) * n2 + other.mul(p % n2, q % n2))
                    .collect()
            })
            .collect();
        let labels = (0..n1 * n2).map(|p| format!("({},{})", self.label(p / n2), other.label(p % n2))).collect();
        FiniteMonoid::build(table, self.identity * n2 + other.identity, Some(labels), false).unwrap()
    }

    pub fn opposite(&self) -> FiniteMonoid {
        let table = (0..self.n).map(|a| (0..self.n).map(|b| self.mul(b, a)).collect()).collect();
        FiniteMonoid::build(table, self.identity, self.labels.clone(), false).unwrap()
    }

    /// Whether `f` (a map on indices) is a monoid homomorphism into `other`.
    pub fn is_homomorphism(&self, other: &FiniteMonoid, f: &[usize]) -> bool {
        f.len() == self.n
            && f[self.identity] == other.identity
            && (0..self.n).all(|a| (0..self.n).all(|b| f[self.mul(a, b)] == other.mul(f[a], f[b])))
    }

    /// An isomorphism onto `other`, by backtracking over images of the generators.
    pub fn find_isomorphism(&self, other: &FiniteMonoid) -> Option<Vec<usize>> {
        if self.n != other.n {
            return None;
        }
        let gens = self.generators().to_vec();
        let targets: Vec<(usize, usize)> = other.elements().map(|y| other.power_type(y)).collect();
        let mut imgs = Vec::new();
        self.iso_search(other, &gens, &targets, &mut imgs)
    }

    /// (index, period) of the cyclic submonoid generated by x.
    pub fn power_type(&self, x: usize) -> (usize, usize) {
        let mut seen = vec![usize::MAX; self.n];
        let mut y = x;
        let mut k = 1;
        loop {
            if seen[y] != usize::MAX {
                return (seen[y], k - seen[y]);
            }
            seen[y] = k;
            y = self.mul(y, x);
            k += 1;
        }
    }

    fn iso_search(
        &self,
        other: &FiniteMonoid,
        gens: &[usize],
        targets: &[(usize, usize)],
        imgs: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        if imgs.len() == gens.len() {
            let f = self.extend_map(other, gens, imgs)?;
            let mut hit = vec![false; self.n];
            for &y in &f {
                if hit[y] {
                    return None;
                }
                hit[y] = true;
            }
            return if self.is_homomorphism(other, &f) { Some(f) } else { None };
        }
        let g = gens[imgs.len()];
        let ty = self.power_type(g);
        for y in 0..other.n {
            if targets[y] != ty {
                continue;
            }
            imgs.push(y);
            if let Some(f) = self.iso_search(other, gens, targets, imgs) {
                return Some(f);
            }
            imgs.pop();
        }
        None
    }

    /// Extends generator images along words; None if inconsistent.
    pub fn extend_map(&self, other: &FiniteMonoid, gens: &[usize], imgs: &[usize]) -> Option<Vec<usize>> {
        let mut f = vec![usize::MAX; self.n];
        f[self.identity] = other.identity;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for (&g, &h) in gens.iter().zip(imgs) {
                let y = self.mul(x, g);
                let fy = other.mul(f[x], h);
                if f[y] == usize::MAX {
                    f[y] = fy;
                    queue.push_back(y);
                } else if f[y] != fy {
                    return None;
                }
            }
        }
        if f.contains(&usize::MAX) {
            return None;
        }
        Some(f)
    }
}

pub fn idempotents(m: &FiniteMonoid) -> Vec<usize> {
    m.idempotents()
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// (a·b)(x) = a(b(x)): b acts first.
pub fn compose(a: &PartialMap, b: &PartialMap) -> PartialMap {
    b.iter().map(|y| y.and_then(|y| a[y])).collect()
}

pub fn map_label(f: &PartialMap) -> String {
    let parts: Vec<String> = f
        .iter()
        .map(|x| match x {
            Some(y) => (y + 1).to_string(),
            None => "-".into(),
        })
        .collect();
    format!("[{}]", parts.join(","))
}

/// Closure under composition of the given partial maps plus the identity; returns the
/// monoid and the map realizing each element. Generators come first in input order,
/// then the identity (if new), then products in discovery order.
pub fn transformation_closure(points: usize, gens: &[PartialMap]) -> (FiniteMonoid, Vec<PartialMap>) {
    let id: PartialMap = (0..points).map(Some).collect();
    let mut elems: Vec<PartialMap> = Vec::new();
    let mut index: HashMap<PartialMap, usize> = HashMap::new();
    let push = |f: PartialMap, elems: &mut Vec<PartialMap>, index: &mut HashMap<PartialMap, usize>| {
        if !index.contains_key(&f) {
            index.insert(f.clone(), elems.len());
            elems.push(f);
        }
    };
    for g in gens {
        assert_eq!(g.len(), points, "generator has wrong number of points");
        push(g.clone(), &mut elems, &mut index);
    }
    push(id.clone(), &mut elems, &mut index);
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let p = compose(&elems[i], g);
            push(p, &mut elems, &mut index);
        }
        i += 1;
    }
    let n = elems.len();
    let table = (0..n)
        .map(|a| (0..n).map(|b| index[&compose(&elems[a], &elems[b])]).collect())
        .collect();
    let labels = elems.iter().map(map_label).collect();
    let m = FiniteMonoid::build(table, index[&id], Some(labels), false).expect("composition is a monoid");
    (m, elems)
}

pub fn monoid_from_partial_transformations(points: usize, gens: &[PartialMap]) -> FiniteMonoid {
    transformation_closure(points, gens).0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn total(v: &[usize]) -> PartialMap {
        v.iter().map(|&x| Some(x)).collect()
    }

    #[test]
    fn trivial_and_c2() {
        let t = monoid_from_table(vec![vec![0]], 0).unwrap();
        assert_eq!(t.size(), 1);
        let c2 = monoid_from_table(vec![vec![0, 1], vec![1, 0]], 0).unwrap();
        assert!(c2.is_group());
        assert_eq!(c2.element_order(1), 2);
    }

    #[test]
    fn bad_tables() {
        // 1 is not an identity
        assert!(monoid_from_table(vec![vec![0, 1], vec![1, 0]], 1).is_err());
        // not associative: a*a = 0 where 0 is identity-like? use left-zero/right-zero mix
        let t = vec![vec![0, 1, 2], vec![1, 2, 1], vec![2, 2, 2]];
        assert!(matches!(monoid_from_table(t, 0), Err(MonoidError::NotAssociative(..))));
        assert_eq!(monoid_from_table(vec![vec![0, 1]], 0), Err(MonoidError::Shape));
    }

    #[test]
    fn t2_and_is2() {
        let all_maps = vec![total(&[0, 0]), total(&[0, 1]), total(&[1, 0]), total(&[1, 1])];
        let t2 = monoid_from_partial_transformations(2, &all_maps);
        assert_eq!(t2.size(), 4);
        assert_eq!(t2.idempotents().len(), 3);
        let is2 = monoid_from_partial_transformations(2, &[total(&[1, 0]), vec![Some(0), None]]);
        assert_eq!(is2.size(), 7);
        assert_eq!(is2.idempotents().len(), 4);
        let triv = monoid_from_partial_transformations(3, &[]);
        assert_eq!(triv.size(), 1);
    }

    #[test]
    fn generation_order() {
        let (m, maps) = transformation_closure(3, &[total(&[1, 2, 0])]);
        assert_eq!(m.size(), 3);
        assert_eq!(maps[0], total(&[1, 2, 0]));
        assert_eq!(maps[1], total(&[0, 1, 2]));
        assert_eq!(m.identity(), 1);
    }

    #[test]
    fn generators_generate() {
        let is2 = monoid_from_partial_transformations(2, &[total(&[1, 0]), vec![Some(0), None]]);
        assert_eq!(is2.closure(is2.generators()).len(), 7);
    }

    #[test]
    fn product_and_iso() {
        let c2 = monoid_from_table(vec![vec![0, 1], vec![1, 0]], 0).unwrap();
        let p = c2.direct_product(&c2);
        assert_eq!(p.size(), 4);
        assert!(p.is_group());
        assert_eq!(p.exponent(), 2);
        let c4 = monoid_from_table((0..4).map(|a| (0..4).map(|b| (a + b) % 4).collect()).collect(), 0).unwrap();
        assert!(p.find_isomorphism(&c4).is_none());
        assert!(p.find_isomorphism(&p.opposite()).is_some());
    }
}
