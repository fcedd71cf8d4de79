//! Centric submonoids (mN = Nm for all m) and the quotient M/N.

use std::collections::HashMap;

use crate::green::left_set;
use crate::monoid::FiniteMonoid;
use crate::submonoid::Submonoid;
use crate::MonoidError;

pub fn is_centric(m: &FiniteMonoid, n: &Submonoid) -> bool {
    first_non_centric(m, n).is_none()
}

fn first_non_centric(m: &FiniteMonoid, n: &Submonoid) -> Option<usize> {
    m.elements().find(|&x| {
        let mut left: Vec<usize> = n.members().iter().map(|&a| m.mul(a, x)).collect();
        let mut right: Vec<usize> = n.members().iter().map(|&a| m.mul(x, a)).collect();
        left.sort_unstable();
        left.dedup();
        right.sort_unstable();
        right.dedup();
        left != right
    })
}

/// M/N with classes Nx (= xN = NxN) and [x][y] = [xy]; returns the quotient and x ↦ [x].
pub fn quotient_centric(m: &FiniteMonoid, n: &Submonoid) -> Result<(FiniteMonoid, Vec<usize>), MonoidError> {
    if let Some(x) = first_non_centric(m, n) {
        return Err(MonoidError::NotCentric(x));
    }
    let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut reps = Vec::new();
    let proj: Vec<usize> = m
        .elements()
        .map(|x| {
            let key = left_set(m, n, x);
            let next = ids.len();
            *ids.entry(key).or_insert_with(|| {
                reps.push(x);
                next
            })
        })
        .collect();
    let q = reps.len();
    let mut table = vec![vec![usize::MAX; q]; q];
    for a in m.elements() {
        for b in m.elements() {
            let c = proj[m.mul(a, b)];
            let slot = &mut table[proj[a]][proj[b]];
            if *slot == usize::MAX {
                *slot = c;
            } else if *slot != c {
                return Err(MonoidError::IllDefinedQuotient);
            }
        }
    }
    let labels = reps.iter().map(|&x| format!("[{}]", m.label(x))).collect();
    let qm = FiniteMonoid::build(table, proj[m.identity()], Some(labels), true)?;
    Ok((qm, proj))
}

/// Image of N in M/N.
pub fn image_submonoid(q: &FiniteMonoid, proj: &[usize], n: &Submonoid) -> Submonoid {
    let mut members: Vec<usize> = n.members().iter().map(|&x| proj[x]).collect();
    members.sort_unstable();
    members.dedup();
    Submonoid::new(q, &members).expect("image of a submonoid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::*;

    #[test]
    fn trivial_n_gives_m() {
        let m = symmetric_inverse_monoid(2);
        let (q, _) = quotient_centric(&m, &Submonoid::trivial(&m)).unwrap();
        assert!(q.find_isomorphism(&m).is_some());
    }

    #[test]
    fn whole_group() {
        let s3 = symmetric_group(3);
        let (q, _) = quotient_centric(&s3, &Submonoid::whole(&s3)).unwrap();
        assert_eq!(q.size(), 1);
    }

    #[test]
    fn a3_in_s3() {
        let s3 = symmetric_group(3);
        let a3: Vec<usize> = s3.elements().filter(|&x| s3.element_order(x) != 2).collect();
        let n = Submonoid::new(&s3, &a3).unwrap();
        assert!(is_centric(&s3, &n));
        let (q, proj) = quotient_centric(&s3, &n).unwrap();
        assert_eq!(q.size(), 2);
        assert!(s3.is_homomorphism(&q, &proj));
        let c2 = Submonoid::generated(&s3, &[1]);
        assert!(!is_centric(&s3, &c2));
        assert!(matches!(quotient_centric(&s3, &c2), Err(MonoidError::NotCentric(_))));
    }

    #[test]
    fn double_quotient() {
        let is2 = symmetric_inverse_monoid(2);
        let m = is2.direct_product(&cyclic(2));
        let u = Submonoid::new(&m, &[0, 1]).unwrap();
        assert!(is_centric(&m, &u));
        let (q, proj) = quotient_centric(&m, &u).unwrap();
        assert!(q.find_isomorphism(&is2).is_some());
        let nn = image_submonoid(&q, &proj, &u);
        let (qq, _) = quotient_centric(&q, &nn).unwrap();
        assert!(qq.find_isomorphism(&q).is_some());
    }
}
