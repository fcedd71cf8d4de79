//! G≀S_n with the law (f,p)(f',p') = (f·f'_p, pp'), f_p(j) = f(p⁻¹(j)).

use std::collections::HashMap;
use std::sync::Arc;

use monoidrep_core::builtin::{permutations, symmetric_group};
use monoidrep_core::FiniteMonoid;
use monoidrep_linalg::{CycNum, ExactMatrix};
use monoidrep_rep::catalog::{induce_from_subgroup, sort_catalog};
use monoidrep_rep::{Representation, Side};

use crate::partition::{compositions, partitions};
use crate::specht::specht_over;
use crate::SymError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WreathElement {
    /// f(j) as an element index of G, for j = 0..n.
    pub f: Vec<usize>,
    /// p as a permutation of 0..n.
    pub p: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct WreathGroup {
    pub base: Arc<FiniteMonoid>,
    pub n: usize,
    pub group: Arc<FiniteMonoid>,
    pub elements: Vec<WreathElement>,
    /// Permutation action of G on 0..m used by φ.
    pub action: Vec<Vec<usize>>,
    /// φ(w) as a permutation of 0..m·n, point (j, i) ↦ j·m + i.
    pub phi: Vec<Vec<usize>>,
    index: HashMap<WreathElement, usize>,
}

impl WreathGroup {
    pub fn index_of(&self, w: &WreathElement) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.action.first().map_or(0, |a| a.len()) * self.n
    }

    /// Element indices of G≀S_(n) for a composition of n (blocks of consecutive positions).
    pub fn young_members(&self, comp: &[usize]) -> Vec<usize> {
        let block = block_labels(comp);
        self.elements
            .iter()
            .enumerate()
            .filter(|(_, w)| (0..self.n).all(|j| block[w.p[j]] == block[j]))
            .map(|(k, _)| k)
            .collect()
    }
}

fn block_labels(comp: &[usize]) -> Vec<usize> {
    comp.iter().enumerate().flat_map(|(b, &len)| std::iter::repeat(b).take(len)).collect()
}

pub fn wreath_product(base: &FiniteMonoid, a: &WreathElement, b: &WreathElement) -> WreathElement {
    let n = a.p.len();
    let mut pinv = vec![0; n];
    for (j, &pj) in a.p.iter().enumerate() {
        pinv[pj] = j;
    }
    WreathElement {
        f: (0..n).map(|j| base.mul(a.f[j], b.f[pinv[j]])).collect(),
        p: (0..n).map(|j| a.p[b.p[j]]).collect(),
    }
}

/// G≀S_n with φ built from the left regular action of G.
pub fn wreath_group(base: &FiniteMonoid, n: usize) -> Result<WreathGroup, SymError> {
    let action: Vec<Vec<usize>> = base.elements().map(|g| base.elements().map(|x| base.mul(g, x)).collect()).collect();
    wreath_group_with_action(base, &action, n)
}

/// G≀S_n with φ built from a given faithful permutation action (g ↦ perm of 0..m).
pub fn wreath_group_with_action(base: &FiniteMonoid, action: &[Vec<usize>], n: usize) -> Result<WreathGroup, SymError> {
    if !base.is_group() {
        return Err(SymError::NotGroup);
    }
    let k = base.size();
    let perms = permutations(n);
    // identity of G first so that index 0 is the identity of G≀S_n
    let order: Vec<usize> =
        std::iter::once(base.identity()).chain(base.elements().filter(|&x| x != base.identity())).collect();
    let count = k.pow(n as u32);
    let mut elements = Vec::with_capacity(perms.len() * count);
    for p in &perms {
        for mut code in 0..count {
            let mut f = vec![0; n];
            for j in (0..n).rev() {
                f[j] = order[code % k];
                code /= k;
            }
            elements.push(WreathElement { f, p: p.clone() });
        }
    }
    let index: HashMap<WreathElement, usize> = elements.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let table = elements
        .iter()
        .map(|a| elements.iter().map(|b| index[&wreath_product(base, a, b)]).collect())
        .collect();
    let labels = elements
        .iter()
        .map(|w| {
            let f: Vec<String> = w.f.iter().map(|&x| base.label(x)).collect();
            let p: Vec<String> = w.p.iter().map(|x| (x + 1).to_string()).collect();
            format!("([{}],{})", f.join(","), p.join(""))
        })
        .collect();
    let group = Arc::new(FiniteMonoid::build(table, 0, Some(labels), false).expect("wreath law"));
    let m = action.first().map_or(0, |a| a.len());
    let phi = elements
        .iter()
        .map(|w| {
            let mut img = vec![0; m * n];
            for j in 0..n {
                let pj = w.p[j];
                for i in 0..m {
                    img[j * m + i] = pj * m + action[w.f[pj]][i];
                }
            }
            img
        })
        .collect();
    Ok(WreathGroup { base: Arc::new(base.clone()), n, group, elements, action: action.to_vec(), phi, index })
}

/// Matrix of (f,p) on V_0 ⊗ … ⊗ V_{n-1}: position j receives π_j(f(j)) v_{p⁻¹(j)}.
fn tensor_action(pis: &[&Representation], w: &WreathElement) -> ExactMatrix {
    let n = w.p.len();
    let dims: Vec<usize> = pis.iter().map(|r| r.dim()).collect();
    let total: usize = dims.iter().product();
    let mut pinv = vec![0; n];
    for (j, &pj) in w.p.iter().enumerate() {
        pinv[pj] = j;
    }
    let mut out = ExactMatrix::zeros(total, total);
    for col in 0..total {
        // multi-index of the column, most significant position first
        let mut a = vec![0; n];
        let mut rest = col;
        for j in (0..n).rev() {
            a[j] = rest % dims[j];
            rest /= dims[j];
        }
        let mut vec = vec![CycNum::one()];
        for j in 0..n {
            let mj = pis[j].matrix(w.f[j]);
            let src = a[pinv[j]];
            let mut next = Vec::with_capacity(vec.len() * dims[j]);
            for x in &vec {
                for b in 0..dims[j] {
                    let y = mj.get(b, src);
                    next.push(if x.is_zero() || y.is_zero() { CycNum::zero() } else { x * y });
                }
            }
            vec = next;
        }
        for (row, v) in vec.into_iter().enumerate() {
            if !v.is_zero() {
                out.set(row, col, v);
            }
        }
    }
    out
}

/// π≀σ on V^⊗n ⊗ W.
pub fn wreath_irr(w: &WreathGroup, pi: &Representation, sigma: &Representation) -> Result<Representation, SymError> {
    if !pi.is_irreducible() || !sigma.is_irreducible() {
        return Err(SymError::Reducible);
    }
    Ok(wreath_tensor(w, pi, sigma))
}

/// π≀σ without the irreducibility precondition.
pub fn wreath_tensor(w: &WreathGroup, pi: &Representation, sigma: &Representation) -> Representation {
    let perm_index: HashMap<Vec<usize>, usize> = permutations(w.n).into_iter().enumerate().map(|(i, p)| (p, i)).collect();
    let pis = vec![pi; w.n];
    let mats = w
        .elements
        .iter()
        .map(|e| tensor_action(&pis, e).kron(sigma.matrix(perm_index[&e.p])))
        .collect();
    Representation::new_unchecked(w.group.clone(), Side::Left, mats).expect("square")
}

/// All irreducibles of G≀S_n from a full catalog of Irr(G), by inducing
/// (δ_1≀σ_1) ⊗ … ⊗ (δ_r≀σ_r) from G≀S_(n) over every type (n_1..n_r).
pub fn irr_wreath_all(w: &WreathGroup, catalog: &[Representation]) -> Result<Vec<Representation>, SymError> {
    let n = w.n;
    let r = catalog.len();
    let sym: Vec<Arc<FiniteMonoid>> = (0..=n).map(|k| Arc::new(symmetric_group(k))).collect();
    let sym_index: Vec<HashMap<Vec<usize>, usize>> =
        (0..=n).map(|k| permutations(k).into_iter().enumerate().map(|(i, p)| (p, i)).collect()).collect();
    let mut out = Vec::new();
    for comp in compositions(n, r) {
        let labels = block_labels(&comp);
        let starts: Vec<usize> = comp.iter().scan(0, |acc, &c| {
            let s = *acc;
            *acc += c;
            Some(s)
        }).collect();
        let members = w.young_members(&comp);
        let h = Arc::new(w.group.restrict(&members));
        let pis: Vec<&Representation> = labels.iter().map(|&b| &catalog[b]).collect();
        // every choice of σ_b ∈ Irr(S_{n_b})
        let choices: Vec<Vec<Representation>> = comp
            .iter()
            .map(|&k| partitions(k).iter().map(|p| specht_over(sym[k].clone(), p)).collect())
            .collect();
        let mut pick = vec![0usize; r];
        loop {
            let mats = members
                .iter()
                .map(|&k| {
                    let e = &w.elements[k];
                    let mut a = tensor_action(&pis, e);
                    for b in 0..r {
                        let s = starts[b];
                        let local: Vec<usize> = (0..comp[b]).map(|j| e.p[s + j] - s).collect();
                        a = a.kron(choices[b][pick[b]].matrix(sym_index[comp[b]][&local]));
                    }
                    a
                })
                .collect();
            let lambda = Representation::new_unchecked(h.clone(), Side::Left, mats)?;
            out.push(induce_from_subgroup(&w.group, &members, &lambda));
            let mut b = 0;
            loop {
                if b == r {
                    break;
                }
                pick[b] += 1;
                if pick[b] < choices[b].len() {
                    break;
                }
                pick[b] = 0;
                b += 1;
            }
            if b == r {
                break;
            }
        }
    }
    let total: usize = out.iter().map(|v| v.dim() * v.dim()).sum();
    if total != w.order() {
        return Err(SymError::IncompleteCatalog(format!("Σ dim² = {total}, |G≀S_n| = {}", w.order())));
    }
    Ok(sort_catalog(out))
}
