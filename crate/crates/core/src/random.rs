//! Seeded random monoids and submonoids for batteries.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::monoid::{transformation_closure, FiniteMonoid, PartialMap};
use crate::submonoid::Submonoid;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A transformation monoid generated by random (partial) maps, with at most `max_size` elements.
pub fn random_transformation_monoid(r: &mut impl Rng, max_size: usize) -> FiniteMonoid {
    loop {
        let points = r.gen_range(2..=3);
        let ngens = r.gen_range(1..=3);
        let partial = r.gen_bool(0.5);
        let gens: Vec<PartialMap> = (0..ngens)
            .map(|_| {
                (0..points)
                    .map(|_| {
                        if partial && r.gen_bool(0.25) {
                            None
                        } else {
                            Some(r.gen_range(0..points))
                        }
                    })
                    .collect()
            })
            .collect();
        let (m, _) = transformation_closure(points, &gens);
        if m.size() <= max_size {
            return m;
        }
    }
}

/// Submonoid generated by a random subset of elements.
pub fn random_submonoid(r: &mut impl Rng, m: &FiniteMonoid) -> Submonoid {
    let mut elems: Vec<usize> = m.elements().collect();
    elems.shuffle(r);
    let k = r.gen_range(0..=2.min(elems.len()));
    Submonoid::generated(m, &elems[..k])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let a = random_transformation_monoid(&mut rng(7), 12);
        let b = random_transformation_monoid(&mut rng(7), 12);
        assert_eq!(a, b);
        assert!(a.size() <= 12);
    }
}
