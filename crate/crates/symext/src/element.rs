use std::collections::BTreeMap;
use std::sync::Arc;

use monoidrep_core::FiniteMonoid;
use monoidrep_linalg::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::{Result, SymExtError};

/// A sorted multiset of group elements, one per tensor slot.
pub type Key = Vec<usize>;

/// Σ c_k k^⊙n over multisets k, in canonical form: keys sorted, no zero coefficients.
#[derive(Clone)]
pub struct SymTensorElement {
    group: Arc<FiniteMonoid>,
    n: usize,
    coeffs: Vec<(Key, Rational)>,
}

impl PartialEq for SymTensorElement {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.coeffs == other.coeffs && Arc::ptr_eq(&self.group, &other.group)
    }
}

impl Eq for SymTensorElement {}

impl std::hash::Hash for SymTensorElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.coeffs.hash(state);
    }
}

impl std::fmt::Debug for SymTensorElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl SymTensorElement {
    /// (g₁,…,g_n)^⊙n.
    pub fn pure(group: Arc<FiniteMonoid>, mut key: Key) -> Self {
        key.sort_unstable();
        let n = key.len();
        SymTensorElement { group, n, coeffs: vec![(key, Rational::one())] }
    }

    pub fn identity(group: Arc<FiniteMonoid>, n: usize) -> Self {
        let e = group.identity();
        Self::pure(group, vec![e; n])
    }

    pub fn from_terms(group: Arc<FiniteMonoid>, n: usize, terms: impl IntoIterator<Item = (Key, Rational)>) -> Self {
        let mut acc: BTreeMap<Key, Rational> = BTreeMap::new();
        for (mut k, c) in terms {
            assert_eq!(k.len(), n, "key of the wrong degree");
            k.sort_unstable();
            *acc.entry(k).or_insert_with(Rational::zero) += c;
        }
        let coeffs = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        SymTensorElement { group, n, coeffs }
    }

    pub fn group(&self) -> &Arc<FiniteMonoid> {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[(Key, Rational)] {
        &self.coeffs
    }

    pub fn is_pure(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].1.is_one()
    }

    /// Nonnegative coefficients summing to one.
    pub fn in_simplex(&self) -> bool {
        let total: Rational = self.coeffs.iter().map(|(_, c)| c.clone()).sum();
        total.is_one() && self.coeffs.iter().all(|(_, c)| c.is_positive())
    }

    /// Image under a map of the underlying groups, applied slotwise.
    pub fn map(&self, target: Arc<FiniteMonoid>, f: &[usize]) -> Self {
        let terms = self.coeffs.iter().map(|(k, c)| (k.iter().map(|&g| f[g]).collect(), c.clone()));
        Self::from_terms(target, self.n, terms)
    }

    pub fn display(&self) -> String {
        let g = &self.group;
        let part = |k: &Key| format!("({})", k.iter().map(|&x| g.label(x)).collect::<Vec<_>>().join(","));
        if self.is_pure() {
            return part(&self.coeffs[0].0);
        }
        self.coeffs
            .iter()
            .map(|(k, c)| format!("{}{}", monoidrep_linalg::rational::format_rational(c), part(k)))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn to_json(&self) -> Value {
        let coeffs: Vec<Value> = self.coeffs.iter().map(|(k, c)| json!([k, c.numer().to_string(), c.denom().to_string()])).collect();
        json!({ "coeffs": coeffs })
    }
}

/// Distinct orderings of a sorted multiset, in lexicographic order.
pub fn arrangements(key: &[usize]) -> Vec<Key> {
    let mut cur = key.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // next lexicographic permutation
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// [g^⊙n][h^⊙n] as an average of (g_i h_{q(i)})^⊙n over the distinct arrangements q of h; each
/// arrangement stands for Π mult(h)! permutations, so the weight 1/n! becomes 1/#arrangements.
fn pure_product(group: &FiniteMonoid, g: &[usize], h: &[usize]) -> Vec<(Key, Rational)> {
    let arr = arrangements(h);
    let w = Rational::new(BigInt::one(), BigInt::from(arr.len()));
    arr.into_iter().map(|q| (g.iter().zip(&q).map(|(&a, &b)| group.mul(a, b)).collect(), w.clone())).collect()
}

pub fn sym_product(a: &SymTensorElement, b: &SymTensorElement) -> Result<SymTensorElement> {
    if a.n != b.n {
        return Err(SymExtError::Mismatch(format!("degrees {} and {}", a.n, b.n)));
    }
    if !Arc::ptr_eq(&a.group, &b.group) && *a.group != *b.group {
        return Err(SymExtError::Mismatch("different groups".into()));
    }
    let mut terms = Vec::new();
    for (k1, c1) in &a.coeffs {
        for (k2, c2) in &b.coeffs {
            let c = c1 * c2;
            terms.extend(pure_product(&a.group, k1, k2).into_iter().map(|(k, w)| (k, w * &c)));
        }
    }
    Ok(SymTensorElement::from_terms(a.group.clone(), a.n, terms))
}
