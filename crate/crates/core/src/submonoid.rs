use crate::monoid::FiniteMonoid;
use crate::MonoidError;

/// A submonoid (sharing the identity) given by its sorted member list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Submonoid {
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl Submonoid {
    pub fn new(m: &FiniteMonoid, members: &[usize]) -> Result<Self, MonoidError> {
        let mut mask = vec![false; m.size()];
        for &x in members {
            if x >= m.size() {
                return Err(MonoidError::NotSubmonoid(format!("element {x} out of range")));
            }
            mask[x] = true;
        }
        if !mask[m.identity()] {
            return Err(MonoidError::NotSubmonoid("identity missing".into()));
        }
        for &a in members {
            for &b in members {
                if !mask[m.mul(a, b)] {
                    return Err(MonoidError::NotSubmonoid(format!("{a}*{b} escapes")));
                }
            }
        }
        let members = (0..m.size()).filter(|&x| mask[x]).collect();
        Ok(Submonoid { members, mask })
    }

    pub fn whole(m: &FiniteMonoid) -> Self {
        Submonoid { members: m.elements().collect(), mask: vec![true; m.size()] }
    }

    pub fn trivial(m: &FiniteMonoid) -> Self {
        Self::generated(m, &[])
    }

    pub fn generated(m: &FiniteMonoid, gens: &[usize]) -> Self {
        let members = m.closure(gens);
        let mut mask = vec![false; m.size()];
        for &x in &members {
            mask[x] = true;
        }
        Submonoid { members, mask }
    }

    pub fn units(m: &FiniteMonoid) -> Self {
        Submonoid::new(m, &m.units()).expect("units form a submonoid")
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.mask[x]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.mask.len()
    }

    /// The submonoid as a standalone monoid; element i corresponds to `members()[i]`.
    pub fn as_monoid(&self, m: &FiniteMonoid) -> FiniteMonoid {
        m.restrict(&self.members)
    }

    pub fn index_of(&self, x: usize) -> Option<usize> {
        self.members.binary_search(&x).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::{symmetric_group, symmetric_inverse_monoid};

    #[test]
    fn units_of_is2() {
        let m = symmetric_inverse_monoid(2);
        let u = Submonoid::units(&m);
        assert_eq!(u.len(), 2);
        assert!(u.as_monoid(&m).is_group());
    }

    #[test]
    fn rejects_non_closed() {
        let s3 = symmetric_group(3);
        // identity and a single transposition is closed; identity plus a 3-cycle is not
        assert!(Submonoid::new(&s3, &[0, 1]).is_ok());
        let three_cycle = (0..6).find(|&x| s3.element_order(x) == 3).unwrap();
        assert!(Submonoid::new(&s3, &[0, three_cycle]).is_err());
        assert_eq!(Submonoid::generated(&s3, &[three_cycle]).len(), 3);
    }
}
