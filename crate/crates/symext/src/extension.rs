use std::collections::HashMap;
use std::sync::Arc;

use monoidrep_core::FiniteMonoid;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::element::{sym_product, Key, SymTensorElement};
use crate::finiteness::infinitude_witness;
use crate::{Result, SymExtError};

pub const DEFAULT_BUDGET: usize = 20_000;

/// G^⊙n as an abstract monoid plus the dictionary back into the symmetric tensor algebra.
#[derive(Clone, Debug)]
pub struct SymExtension {
    pub group: Arc<FiniteMonoid>,
    pub n: usize,
    pub monoid: Arc<FiniteMonoid>,
    pub elements: Vec<SymTensorElement>,
    /// g ↦ index of g^⊙n = (g,…,g)^⊙n
    pub embedding: Vec<usize>,
    /// indices of the pure generators, in the order used by the closure
    pub generators: Vec<usize>,
    index: HashMap<SymTensorElement, usize>,
}

impl SymExtension {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, x: &SymTensorElement) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn element(&self, i: usize) -> &SymTensorElement {
        &self.elements[i]
    }

    /// Index of the pure element with the given multiset.
    pub fn pure(&self, key: Key) -> Option<usize> {
        self.index_of(&SymTensorElement::pure(self.group.clone(), key))
    }

    pub fn embedding_is_injective_homomorphism(&self) -> bool {
        let mut seen = self.embedding.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == self.group.size() && self.group.is_homomorphism(&self.monoid, &self.embedding)
    }

    pub fn to_json(&self, group: Value) -> Value {
        json!({
            "group": group,
            "n": self.n,
            "elements": self.elements.iter().map(|e| e.to_json()).collect::<Vec<_>>(),
            "table": self.monoid.table(),
        })
    }
}

/// All size-n multisets over 0..k in lexicographic order.
pub fn multisets(k: usize, n: usize) -> Vec<Key> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    if k == 0 {
        return if n == 0 { vec![vec![]] } else { out };
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..n).rev().find(|&i| cur[i] + 1 < k) else {
            return out;
        };
        let v = cur[i] + 1;
        for x in &mut cur[i..] {
            *x = v;
        }
    }
}

pub fn symmetric_extension(g: &Arc<FiniteMonoid>, n: usize, cap: usize) -> Result<SymExtension> {
    symmetric_extension_ordered(g, n, cap, None)
}

/// Refuses up front when an exact witness shows the closure is infinite, then enumerates.
pub fn symmetric_extension_ordered(g: &Arc<FiniteMonoid>, n: usize, cap: usize, order: Option<&[usize]>) -> Result<SymExtension> {
    check_group(g, n, cap)?;
    if let Some(w) = infinitude_witness(g, n) {
        return Err(SymExtError::Infinite(Box::new(w)));
    }
    enumerate_closure(g, n, cap, order)
}

fn check_group(g: &FiniteMonoid, n: usize, cap: usize) -> Result<()> {
    if n == 0 || cap == 0 {
        return Err(SymExtError::Precondition("need n ≥ 1 and a positive budget".into()));
    }
    if !g.is_group() {
        return Err(SymExtError::Precondition("the input monoid is not a group".into()));
    }
    Ok(())
}

/// Plain BFS closure with the pure generators visited in `order` (a permutation of the
/// multisets), stopping at `cap` elements.
pub fn enumerate_closure(g: &Arc<FiniteMonoid>, n: usize, cap: usize, order: Option<&[usize]>) -> Result<SymExtension> {
    check_group(g, n, cap)?;
    let mut keys = multisets(g.size(), n);
    if let Some(p) = order {
        if p.len() != keys.len() {
            return Err(SymExtError::Precondition("generator order has the wrong length".into()));
        }
        keys = p.iter().map(|&i| keys[i].clone()).collect();
    }
    if keys.len() > cap {
        return Err(SymExtError::BudgetExceeded { cap, reached: keys.len(), pending: keys.len() });
    }
    let gens: Vec<SymTensorElement> = keys.into_iter().map(|k| SymTensorElement::pure(g.clone(), k)).collect();
    let ng = gens.len();

    let mut elements = gens.clone();
    let mut index: HashMap<SymTensorElement, usize> = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    // x = parent · gen, for non-generators
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; ng];
    let mut right: Vec<Vec<usize>> = Vec::new();

    let mut done = 0;
    while done < elements.len() {
        let end = elements.len();
        let products: Vec<Vec<SymTensorElement>> = elements[done..end]
            .par_iter()
            .map(|x| gens.iter().map(|h| sym_product(x, h)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        for (off, row) in products.into_iter().enumerate() {
            let x = done + off;
            let mut r = Vec::with_capacity(ng);
            for (k, y) in row.into_iter().enumerate() {
                let next = elements.len();
                let id = *index.entry(y.clone()).or_insert(next);
                if id == next {
                    if next >= cap {
                        return Err(SymExtError::BudgetExceeded { cap, reached: next, pending: end - x });
                    }
                    elements.push(y);
                    parent.push(Some((x, k)));
                }
                r.push(id);
            }
            right.push(r);
        }
        done = end;
    }

    let size = elements.len();
    let mut table = vec![vec![0usize; size]; size];
    for (x, row) in table.iter_mut().enumerate() {
        for y in 0..size {
            row[y] = match parent[y] {
                None => right[x][y],
                Some((p, k)) => right[row[p]][k],
            };
        }
    }
    let identity = index[&SymTensorElement::identity(g.clone(), n)];
    let labels = elements.iter().map(|e| e.display()).collect();
    let monoid = Arc::new(FiniteMonoid::from_table_unchecked(table, identity)?.with_labels(labels));
    let embedding = g.elements().map(|x| index[&SymTensorElement::pure(g.clone(), vec![x; n])]).collect();
    Ok(SymExtension { group: g.clone(), n, monoid, elements, embedding, generators: (0..ng).collect(), index })
}

/// f^⊙n: G₁^⊙n → G₂^⊙n on the abstract tables, from a group homomorphism f: G₁ → G₂.
pub fn functorial_extension(f: &[usize], e1: &SymExtension, e2: &SymExtension) -> Result<Vec<usize>> {
    if e1.n != e2.n {
        return Err(SymExtError::Mismatch(format!("degrees {} and {}", e1.n, e2.n)));
    }
    if f.len() != e1.group.size() || !e1.group.is_homomorphism(&e2.group, f) {
        return Err(SymExtError::Precondition("f is not a group homomorphism".into()));
    }
    let map = e1
        .elements
        .iter()
        .map(|x| {
            let y = x.map(e2.group.clone(), f);
            e2.index_of(&y).ok_or_else(|| SymExtError::Inconsistent(format!("image {} of {} is not in the closure", y.display(), x.display())))
        })
        .collect::<Result<Vec<usize>>>()?;
    if !e1.monoid.is_homomorphism(&e2.monoid, &map) {
        return Err(SymExtError::Inconsistent("f^⊙n is not multiplicative".into()));
    }
    Ok(map)
}

pub fn is_surjective(map: &[usize], target_size: usize) -> bool {
    let mut hit = vec![false; target_size];
    for &y in map {
        hit[y] = true;
    }
    hit.into_iter().all(|h| h)
}
