//! Specht modules in the standard polytabloid basis (integer matrices).

use std::collections::HashMap;
use std::sync::Arc;

use monoidrep_core::builtin::{perm_sign, permutations, symmetric_group};
use monoidrep_core::FiniteMonoid;
use monoidrep_linalg::{CycNum, ExactMatrix};
use monoidrep_rep::catalog::induce_from_subgroup;
use monoidrep_rep::{multiplicity, Representation, Side};

use crate::partition::{Partition, Tableau};

/// Polytabloid e_T as a sparse combination of tabloids; a tabloid is the row index of each point.
fn polytabloid(t: &Tableau, n: usize) -> HashMap<Vec<usize>, i64> {
    let width = t.first().map_or(0, |r| r.len());
    let columns: Vec<Vec<usize>> = (0..width).map(|c| t.iter().filter_map(|r| r.get(c).copied()).collect()).collect();
    // all signed column permutations, one column at a time
    let mut acc: Vec<(Vec<usize>, i64)> = vec![((0..n).collect(), 1)];
    for col in &columns {
        let mut next = Vec::new();
        for q in permutations(col.len()) {
            let s = perm_sign(&q);
            for (p, sign) in &acc {
                let mut p = p.clone();
                for (k, &x) in col.iter().enumerate() {
                    p[x] = col[q[k]];
                }
                next.push((p, sign * s));
            }
        }
        acc = next;
    }
    let mut out: HashMap<Vec<usize>, i64> = HashMap::new();
    for (q, s) in acc {
        let mut tabloid = vec![0; n];
        for (r, row) in t.iter().enumerate() {
            for &x in row {
                tabloid[q[x]] = r;
            }
        }
        *out.entry(tabloid).or_insert(0) += s;
    }
    out.retain(|_, v| *v != 0);
    out
}

fn tabloid_of(t: &Tableau, n: usize) -> Vec<usize> {
    let mut tab = vec![0; n];
    for (r, row) in t.iter().enumerate() {
        for &x in row {
            tab[x] = r;
        }
    }
    tab
}

fn apply(p: &[usize], t: &Tableau) -> Tableau {
    t.iter().map(|r| r.iter().map(|&x| p[x]).collect()).collect()
}

/// Coordinates of e_{pT} against the standard polytabloids, read off at the standard tabloids.
fn action_matrix(p: &[usize], std: &[Tableau], keys: &[Vec<usize>], b_inv: &ExactMatrix, n: usize) -> ExactMatrix {
    let f = std.len();
    let mut e = ExactMatrix::zeros(f, f);
    for (k, t) in std.iter().enumerate() {
        let v = polytabloid(&apply(p, t), n);
        for (j, key) in keys.iter().enumerate() {
            if let Some(&c) = v.get(key) {
                e.set(j, k, CycNum::from_int(c));
            }
        }
    }
    b_inv.mul(&e)
}

/// [λ] as a left representation of `symmetric_group(n)`.
pub fn specht(lambda: &Partition) -> Representation {
    specht_over(Arc::new(symmetric_group(lambda.n())), lambda)
}

/// [λ] over a given handle of `symmetric_group(n)`.
pub fn specht_over(group: Arc<FiniteMonoid>, lambda: &Partition) -> Representation {
    let n = lambda.n();
    assert_eq!(*group, symmetric_group(n));
    if n < 2 {
        return Representation::trivial(group);
    }
    let std = lambda.standard_tableaux();
    let f = std.len();
    let keys: Vec<Vec<usize>> = std.iter().map(|t| tabloid_of(t, n)).collect();
    let mut b = ExactMatrix::zeros(f, f);
    for (k, t) in std.iter().enumerate() {
        let v = polytabloid(t, n);
        for (j, key) in keys.iter().enumerate() {
            if let Some(&c) = v.get(key) {
                b.set(j, k, CycNum::from_int(c));
            }
        }
    }
    let b_inv = b.inverse().expect("standard polytabloids are independent at standard tabloids");
    let perms = permutations(n);
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let gens: Vec<usize> = [swap, cycle].iter().map(|g| perms.iter().position(|p| p == g).unwrap()).collect();
    let images: Vec<ExactMatrix> = gens.iter().map(|&g| action_matrix(&perms[g], &std, &keys, &b_inv, n)).collect();
    Representation::from_generators(group, Side::Left, &gens, &images).expect("Specht action is a representation")
}

/// Members of the Young subgroup S_λ (blocks of consecutive points) in `symmetric_group(n)`.
pub fn young_subgroup(lambda: &Partition) -> Vec<usize> {
    let n = lambda.n();
    let mut block = vec![0; n];
    for (b, row) in lambda.row_tableau().iter().enumerate() {
        for &x in row {
            block[x] = b;
        }
    }
    permutations(n)
        .iter()
        .enumerate()
        .filter(|(_, p)| (0..n).all(|i| block[p[i]] == block[i]))
        .map(|(k, _)| k)
        .collect()
}

/// Ind_{S_λ}(χ) for the trivial (`signed = false`) or sign character of S_λ.
pub fn young_induced(group: &Arc<FiniteMonoid>, lambda: &Partition, signed: bool) -> Representation {
    let members = young_subgroup(lambda);
    let perms = permutations(lambda.n());
    let h = Arc::new(group.restrict(&members));
    let vals = members
        .iter()
        .map(|&k| CycNum::from_int(if signed { perm_sign(&perms[k]) } else { 1 }))
        .collect();
    let chi = Representation::character(h, vals).expect("character of S_λ");
    induce_from_subgroup(group, &members, &chi)
}

/// dim Hom_{S_n}(Ind_{S_λ} 1, Ind_{S_λ∨} χ⁺).
pub fn young_pairing(lambda: &Partition) -> usize {
    let group = Arc::new(symmetric_group(lambda.n()));
    let a = young_induced(&group, lambda, false);
    let b = young_induced(&group, &lambda.conjugate(), true);
    multiplicity(&a, &b).expect("same group")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions;

    #[test]
    fn trivial_sign_and_standard() {
        let triv = specht(&Partition::new(vec![3]).unwrap());
        assert!(triv.matrices().iter().all(|a| a.is_identity()));
        let sign = specht(&Partition::new(vec![1, 1, 1]).unwrap());
        let perms = permutations(3);
        for (k, p) in perms.iter().enumerate() {
            assert_eq!(sign.matrix(k).get(0, 0), &CycNum::from_int(perm_sign(p)));
        }
        let std = specht(&Partition::new(vec![2, 1]).unwrap());
        assert_eq!(std.dim(), 2);
        assert!(std.is_irreducible());
    }

    #[test]
    fn dims_and_irreducibility() {
        for n in 0..=5 {
            for p in partitions(n) {
                let v = specht(&p);
                assert_eq!(v.dim(), p.dimension());
                assert!(v.is_irreducible(), "{p}");
            }
        }
    }

    #[test]
    fn pairing_small() {
        assert_eq!(young_pairing(&Partition::new(vec![2, 1]).unwrap()), 1);
        assert_eq!(young_pairing(&Partition::new(vec![3]).unwrap()), 1);
        assert_eq!(young_pairing(&Partition::new(vec![2, 2]).unwrap()), 1);
    }
}
