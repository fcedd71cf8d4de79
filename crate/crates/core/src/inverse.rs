use crate::monoid::FiniteMonoid;

/// Generalized inverses of x: all y with xyx = x and yxy = y.
pub fn generalized_inverses(m: &FiniteMonoid, x: usize) -> Vec<usize> {
    m.elements()
        .filter(|&y| m.mul(m.mul(x, y), x) == x && m.mul(m.mul(y, x), y) == y)
        .collect()
}

/// The canonical involution m ↦ m* when every element has exactly one generalized inverse.
pub fn involution(m: &FiniteMonoid) -> Option<Vec<usize>> {
    let mut star = Vec::with_capacity(m.size());
    for x in m.elements() {
        let inv = generalized_inverses(m, x);
        if inv.len() != 1 {
            return None;
        }
        star.push(inv[0]);
    }
    Some(star)
}

pub fn is_inverse_monoid(m: &FiniteMonoid) -> bool {
    involution(m).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::*;

    #[test]
    fn group_inversion() {
        let s3 = symmetric_group(3);
        let star = involution(&s3).unwrap();
        for x in s3.elements() {
            assert_eq!(s3.mul(x, star[x]), s3.identity());
        }
    }

    #[test]
    fn is2_partial_inverse() {
        let m = symmetric_inverse_monoid(2);
        let star = involution(&m).unwrap();
        for x in m.elements() {
            assert_eq!(star[star[x]], x);
            assert_eq!(m.mul(m.mul(x, star[x]), x), x);
            for y in m.elements() {
                assert_eq!(star[m.mul(x, y)], m.mul(star[y], star[x]));
            }
        }
    }

    #[test]
    fn t2_not_inverse() {
        let t2 = full_transformation_monoid(2);
        assert!(involution(&t2).is_none());
        // a constant map has both constants as generalized inverses
        let c = t2.elements().find(|&x| t2.label(x) == "[1,1]").unwrap();
        assert_eq!(generalized_inverses(&t2, c).len(), 2);
    }
}
