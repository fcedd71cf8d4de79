//! Relative Green's relations for a pair of submonoids (N, K), localization at an
//! element, Mackey cells, sandwich matrices and principal series.

use std::collections::{BTreeMap, HashMap};

use crate::monoid::FiniteMonoid;
use crate::submonoid::Submonoid;

type Bits = Vec<u64>;

fn bits_new(n: usize) -> Bits {
    vec![0; n.div_ceil(64)]
}

fn bits_set(b: &mut Bits, i: usize) {
    b[i / 64] |= 1 << (i % 64);
}

fn bits_get(b: &Bits, i: usize) -> bool {
    b[i / 64] >> (i % 64) & 1 == 1
}

/// N·x as a bitset.
fn left_orbit(m: &FiniteMonoid, n: &Submonoid, x: usize) -> Bits {
    let mut b = bits_new(m.size());
    for &a in n.members() {
        bits_set(&mut b, m.mul(a, x));
    }
    b
}

fn right_orbit(m: &FiniteMonoid, k: &Submonoid, x: usize) -> Bits {
    let mut b = bits_new(m.size());
    for &c in k.members() {
        bits_set(&mut b, m.mul(x, c));
    }
    b
}

fn two_sided_orbit(m: &FiniteMonoid, n: &Submonoid, k: &Submonoid, x: usize) -> Bits {
    let mut b = bits_new(m.size());
    for &a in n.members() {
        let ax = m.mul(a, x);
        for &c in k.members() {
            bits_set(&mut b, m.mul(ax, c));
        }
    }
    b
}

/// Assigns class ids by first occurrence of each key.
fn group_by_key(keys: &[Bits]) -> Vec<usize> {
    let mut ids: HashMap<&Bits, usize> = HashMap::new();
    keys.iter()
        .map(|k| {
            let next = ids.len();
            *ids.entry(k).or_insert(next)
        })
        .collect()
}

/// One J^{(N,K)}-class together with the transversal data of Mackey's formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreenClass {
    /// Base element m (the minimal index unless built by `record_at`).
    pub rep: usize,
    pub members: Vec<usize>,
    /// L_m^N.
    pub l_class: Vec<usize>,
    /// R_m^K.
    pub r_class: Vec<usize>,
    /// H_m^{(N,K)} = L_m^N ∩ R_m^K.
    pub h_class: Vec<usize>,
    /// Representatives of L_m^N / H, with x_1 = m.
    pub xs: Vec<usize>,
    /// Representatives of H \ R_m^K, with y_1 = m.
    pub ys: Vec<usize>,
    /// Some n_i ∈ N with x_i = n_i·m.
    pub x_left: Vec<usize>,
    /// Some k_j ∈ K with y_j = m·k_j.
    pub y_right: Vec<usize>,
}

impl GreenClass {
    pub fn alpha(&self) -> usize {
        self.xs.len()
    }

    pub fn beta(&self) -> usize {
        self.ys.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn idempotents(&self, m: &FiniteMonoid) -> Vec<usize> {
        self.members.iter().copied().filter(|&x| m.is_idempotent(x)).collect()
    }

    pub fn is_regular(&self, m: &FiniteMonoid) -> bool {
        !self.idempotents(m).is_empty()
    }

    /// x_i ∘_m h ∘_m y_j = n_i · h · k_j.
    pub fn triple(&self, m: &FiniteMonoid, i: usize, h: usize, j: usize) -> usize {
        m.mul(m.mul(self.x_left[i], h), self.y_right[j])
    }
}

/// Relative Green structure of M with respect to (N, K).
#[derive(Clone, Debug)]
pub struct GreenData {
    n: Submonoid,
    k: Submonoid,
    l_id: Vec<usize>,
    r_id: Vec<usize>,
    j_id: Vec<usize>,
    classes: Vec<GreenClass>,
}

pub fn green_relative(m: &FiniteMonoid, n: &Submonoid, k: &Submonoid) -> GreenData {
    GreenData::new(m, n, k)
}

impl GreenData {
    pub fn new(m: &FiniteMonoid, n: &Submonoid, k: &Submonoid) -> Self {
        let size = m.size();
        let lkeys: Vec<Bits> = (0..size).map(|x| left_orbit(m, n, x)).collect();
        let rkeys: Vec<Bits> = (0..size).map(|x| right_orbit(m, k, x)).collect();
        let jkeys: Vec<Bits> = (0..size).map(|x| two_sided_orbit(m, n, k, x)).collect();
        let l_id = group_by_key(&lkeys);
        let r_id = group_by_key(&rkeys);
        let j_id = group_by_key(&jkeys);
        let mut g = GreenData { n: n.clone(), k: k.clone(), l_id, r_id, j_id, classes: Vec::new() };
        let mut reps: Vec<usize> = Vec::new();
        let mut seen = vec![false; size];
        for x in 0..size {
            if !seen[g.j_id[x]] {
                seen[g.j_id[x]] = true;
                reps.push(x);
            }
        }
        // reorder class ids so that class i has the i-th smallest representative
        let mut remap = vec![0; size];
        for (i, &r) in reps.iter().enumerate() {
            remap[g.j_id[r]] = i;
        }
        for x in 0..size {
            g.j_id[x] = remap[g.j_id[x]];
        }
        g.classes = reps.iter().map(|&r| g.record_at(m, r)).collect();
        g
    }

    pub fn absolute(m: &FiniteMonoid) -> Self {
        let w = Submonoid::whole(m);
        GreenData::new(m, &w, &w)
    }

    pub fn n(&self) -> &Submonoid {
        &self.n
    }

    pub fn k(&self) -> &Submonoid {
        &self.k
    }

    pub fn classes(&self) -> &[GreenClass] {
        &self.classes
    }

    pub fn class_index(&self, x: usize) -> usize {
        self.j_id[x]
    }

    pub fn class_of(&self, x: usize) -> &GreenClass {
        &self.classes[self.j_id[x]]
    }

    pub fn same_l(&self, a: usize, b: usize) -> bool {
        self.l_id[a] == self.l_id[b]
    }

    pub fn same_r(&self, a: usize, b: usize) -> bool {
        self.r_id[a] == self.r_id[b]
    }

    pub fn same_j(&self, a: usize, b: usize) -> bool {
        self.j_id[a] == self.j_id[b]
    }

    pub fn same_h(&self, a: usize, b: usize) -> bool {
        self.same_l(a, b) && self.same_r(a, b)
    }

    fn partition(ids: &[usize]) -> Vec<Vec<usize>> {
        let mut map: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut order = Vec::new();
        for (x, &id) in ids.iter().enumerate() {
            map.entry(id).or_insert_with(|| {
                order.push(id);
                Vec::new()
            });
            map.get_mut(&id).unwrap().push(x);
        }
        order.into_iter().map(|id| map.remove(&id).unwrap()).collect()
    }

    pub fn l_classes(&self) -> Vec<Vec<usize>> {
        Self::partition(&self.l_id)
    }

    pub fn r_classes(&self) -> Vec<Vec<usize>> {
        Self::partition(&self.r_id)
    }

    pub fn j_classes(&self) -> Vec<Vec<usize>> {
        self.classes.iter().map(|c| c.members.clone()).collect()
    }

    pub fn h_classes(&self) -> Vec<Vec<usize>> {
        let keys: Vec<usize> = (0..self.l_id.len()).map(|x| self.l_id[x] * self.l_id.len() + self.r_id[x]).collect();
        Self::partition(&keys)
    }

    /// Class record with base element `elem` (x_1 = y_1 = elem).
    pub fn record_at(&self, m: &FiniteMonoid, elem: usize) -> GreenClass {
        let members: Vec<usize> = (0..m.size()).filter(|&x| self.j_id[x] == self.j_id[elem]).collect();
        let l_class: Vec<usize> = members.iter().copied().filter(|&x| self.same_l(x, elem)).collect();
        let r_class: Vec<usize> = members.iter().copied().filter(|&x| self.same_r(x, elem)).collect();
        let h_class: Vec<usize> = l_class.iter().copied().filter(|&x| self.same_r(x, elem)).collect();
        let mut xs = vec![elem];
        for &x in &l_class {
            if !xs.iter().any(|&y| self.same_r(x, y)) {
                xs.push(x);
            }
        }
        let mut ys = vec![elem];
        for &y in &r_class {
            if !ys.iter().any(|&z| self.same_l(y, z)) {
                ys.push(y);
            }
        }
        let x_left = xs
            .iter()
            .map(|&x| *self.n.members().iter().find(|&&a| m.mul(a, elem) == x).expect("x in N·m"))
            .collect();
        let y_right = ys
            .iter()
            .map(|&y| *self.k.members().iter().find(|&&c| m.mul(elem, c) == y).expect("y in m·K"))
            .collect();
        GreenClass { rep: elem, members, l_class, r_class, h_class, xs, ys, x_left, y_right }
    }
}

/// The localization (N_m, ∘_m) with N_m = mN ∩ Nm and x ∘_m y = x_l·m·y_r.
#[derive(Clone, Debug)]
pub struct LocalMonoid {
    pub base: usize,
    /// Elements of N_m in the parent, sorted; position i is element i of `monoid`.
    pub members: Vec<usize>,
    pub monoid: FiniteMonoid,
    /// G_m^N as parent indices.
    pub units: Vec<usize>,
    /// Some x_l ∈ N with x = x_l·m, per member.
    pub left_factor: Vec<usize>,
    /// Some x_r ∈ N with x = m·x_r, per member.
    pub right_factor: Vec<usize>,
}

impl LocalMonoid {
    pub fn position(&self, x: usize) -> Option<usize> {
        self.members.binary_search(&x).ok()
    }

    /// x ∘_m y for parent elements of N_m.
    pub fn circ(&self, m: &FiniteMonoid, x: usize, y: usize) -> usize {
        let i = self.position(x).expect("x in N_m");
        m.mul(self.left_factor[i], y)
    }
}

pub fn local_monoid(m: &FiniteMonoid, n: &Submonoid, elem: usize) -> LocalMonoid {
    let size = m.size();
    let mut in_left = vec![false; size];
    let mut in_right = vec![false; size];
    let mut lf = vec![usize::MAX; size];
    let mut rf = vec![usize::MAX; size];
    for &a in n.members() {
        let x = m.mul(a, elem);
        in_left[x] = true;
        if lf[x] == usize::MAX {
            lf[x] = a;
        }
        let y = m.mul(elem, a);
        in_right[y] = true;
        if rf[y] == usize::MAX {
            rf[y] = a;
        }
    }
    let members: Vec<usize> = (0..size).filter(|&x| in_left[x] && in_right[x]).collect();
    let pos: HashMap<usize, usize> = members.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let left_factor: Vec<usize> = members.iter().map(|&x| lf[x]).collect();
    let right_factor: Vec<usize> = members.iter().map(|&x| rf[x]).collect();
    let table: Vec<Vec<usize>> = members
        .iter()
        .enumerate()
        .map(|(i, _)| {
            members
                .iter()
                .enumerate()
                .map(|(j, _)| {
                    let p = m.mul(m.mul(left_factor[i], elem), right_factor[j]);
                    *pos.get(&p).expect("∘_m product stays in N_m")
                })
                .collect()
        })
        .collect();
    // well-definedness: every left factorization gives the same product
    for &a in n.members() {
        let x = m.mul(a, elem);
        if let Some(&i) = pos.get(&x) {
            for (j, &y) in members.iter().enumerate() {
                debug_assert_eq!(m.mul(a, y), members[table[i][j]], "∘_m is ill-defined");
            }
        }
    }
    let labels = members.iter().map(|&x| m.label(x)).collect();
    let monoid = FiniteMonoid::build(table, pos[&elem], Some(labels), false).expect("local monoid");
    let units: Vec<usize> = monoid.units().into_iter().map(|i| members[i]).collect();
    LocalMonoid { base: elem, members, monoid, units, left_factor, right_factor }
}

/// G_m^N as a standalone group, with the parent index of each of its elements.
pub fn local_group(m: &FiniteMonoid, n: &Submonoid, elem: usize) -> (FiniteMonoid, Vec<usize>) {
    let lm = local_monoid(m, n, elem);
    let idx: Vec<usize> = lm.units.iter().map(|&u| lm.position(u).unwrap()).collect();
    (lm.monoid.restrict(&idx), lm.units.clone())
}

/// One cell of Mackey's formula: J_m^{(N,K)} = ⊔ x_i ∘ H ∘ y_j.
#[derive(Clone, Debug)]
pub struct MackeyCell {
    pub class: GreenClass,
    /// blocks[i][j] lists x_i ∘ h ∘ y_j over h ∈ H in the order of `class.h_class`.
    pub blocks: Vec<Vec<Vec<usize>>>,
}

pub fn mackey_decompose(m: &FiniteMonoid, n: &Submonoid, k: &Submonoid) -> Vec<MackeyCell> {
    let g = GreenData::new(m, n, k);
    g.classes()
        .iter()
        .map(|c| {
            let blocks = (0..c.alpha())
                .map(|i| {
                    (0..c.beta())
                        .map(|j| c.h_class.iter().map(|&h| c.triple(m, i, h, j)).collect())
                        .collect()
                })
                .collect();
            MackeyCell { class: c.clone(), blocks }
        })
        .collect()
}

/// Checks that the cells enumerate each class without repetition and cover M disjointly.
pub fn verify_mackey(m: &FiniteMonoid, cells: &[MackeyCell]) -> Result<(), String> {
    let mut hits = vec![0usize; m.size()];
    for cell in cells {
        let c = &cell.class;
        if c.members.len() != c.alpha() * c.beta() * c.h_class.len() {
            return Err(format!(
                "class of {}: |J| = {} but alpha*beta*|H| = {}*{}*{}",
                c.rep,
                c.members.len(),
                c.alpha(),
                c.beta(),
                c.h_class.len()
            ));
        }
        for x in cell.blocks.iter().flatten().flatten() {
            if !c.contains(*x) {
                return Err(format!("element {x} lies outside the class of {}", c.rep));
            }
            hits[*x] += 1;
        }
    }
    if let Some(x) = hits.iter().position(|&h| h != 1) {
        return Err(format!("element {x} covered {} times", hits[x]));
    }
    Ok(())
}

/// P(m): entry (j, i) is y_j·x_i when it lies in G_m, otherwise zero (None).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SandwichMatrix {
    pub elem: usize,
    pub xs: Vec<usize>,
    pub ys: Vec<usize>,
    pub group: Vec<usize>,
    pub entries: Vec<Vec<Option<usize>>>,
}

impl SandwichMatrix {
    pub fn is_all_zero(&self) -> bool {
        self.entries.iter().flatten().all(|e| e.is_none())
    }
}

pub fn sandwich_matrix(m: &FiniteMonoid, elem: usize) -> SandwichMatrix {
    let g = GreenData::absolute(m);
    let rec = g.record_at(m, elem);
    sandwich_matrix_with(m, elem, &rec.xs, &rec.ys)
}

/// Sandwich matrix for explicitly chosen transversals.
pub fn sandwich_matrix_with(m: &FiniteMonoid, elem: usize, xs: &[usize], ys: &[usize]) -> SandwichMatrix {
    let w = Submonoid::whole(m);
    let lm = local_monoid(m, &w, elem);
    let entries = ys
        .iter()
        .map(|&y| {
            xs.iter()
                .map(|&x| {
                    let p = m.mul(y, x);
                    lm.units.binary_search(&p).ok().map(|_| p)
                })
                .collect()
        })
        .collect();
    SandwichMatrix { elem, xs: xs.to_vec(), ys: ys.to_vec(), group: lm.units, entries }
}

/// Ascending chain of N–K bi-ideals, each step adding one J^{(N,K)}-class.
pub fn principal_series(m: &FiniteMonoid, n: &Submonoid, k: &Submonoid) -> Vec<Vec<usize>> {
    let g = GreenData::new(m, n, k);
    let mut inside = vec![true; m.size()];
    let mut remaining: Vec<usize> = (0..g.classes().len()).collect();
    let mut chain = Vec::new();
    while !remaining.is_empty() {
        let current: Vec<usize> = (0..m.size()).filter(|&x| inside[x]).collect();
        chain.push(current);
        let pick = remaining
            .iter()
            .position(|&ci| {
                let cls = &g.classes()[ci];
                // removing the class must leave a bi-ideal
                (0..m.size()).filter(|&x| inside[x] && !cls.contains(x)).all(|x| {
                    n.members().iter().all(|&a| {
                        let ax = m.mul(a, x);
                        k.members().iter().all(|&c| !cls.contains(m.mul(ax, c)))
                    })
                })
            })
            .expect("some class is maximal");
        let ci = remaining.remove(pick);
        for &x in &g.classes()[ci].members {
            inside[x] = false;
        }
    }
    chain.reverse();
    chain
}

/// Whether every element of the class is ∘-reachable: helper for the free-action checks.
pub fn h_is_group(m: &FiniteMonoid, class: &GreenClass) -> bool {
    class.h_class.iter().any(|&x| m.is_idempotent(x))
}

/// Bitset helpers exposed for callers that need raw orbit sets.
pub fn left_set(m: &FiniteMonoid, n: &Submonoid, x: usize) -> Vec<usize> {
    let b = left_orbit(m, n, x);
    (0..m.size()).filter(|&i| bits_get(&b, i)).collect()
}

pub fn right_set(m: &FiniteMonoid, k: &Submonoid, x: usize) -> Vec<usize> {
    let b = right_orbit(m, k, x);
    (0..m.size()).filter(|&i| bits_get(&b, i)).collect()
}

pub fn two_sided_set(m: &FiniteMonoid, n: &Submonoid, k: &Submonoid, x: usize) -> Vec<usize> {
    let b = two_sided_orbit(m, n, k, x);
    (0..m.size()).filter(|&i| bits_get(&b, i)).collect()
}
