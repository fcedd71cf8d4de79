//! Exact certificates that the closure cannot terminate.
//!
//! For a cyclic subgroup ⟨g⟩ of order k and characters χ_{a₁},…,χ_{a_n} of it, the functional
//! χ_{a₁}⊗…⊗χ_{a_n} is an algebra map ℂ[⟨g⟩]^{⊗n} → ℂ. A pure element with all slots in ⟨g⟩
//! whose value v is nonzero and not a root of unity has pairwise distinct powers, so G^⊙n is
//! infinite.

use std::sync::Arc;

use monoidrep_core::FiniteMonoid;
use monoidrep_linalg::{CycNum, Rational};
use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::element::arrangements;
use crate::extension::multisets;

#[derive(Clone, Debug, Serialize)]
pub struct InfinitudeWitness {
    /// generator of the cyclic subgroup and its order
    pub generator: usize,
    pub order: usize,
    /// the pure element, as exponents of the generator
    pub exponents: Vec<usize>,
    /// the character tuple, as exponents of ζ_order
    pub characters: Vec<usize>,
    /// v written as a string; nonzero and not a root of unity
    pub value: String,
}

impl std::fmt::Display for InfinitudeWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "powers of (g^{:?})^⊙n with g of order {} are distinct: χ{:?} takes the value {}",
            self.exponents, self.order, self.characters, self.value
        )
    }
}

fn value(k: usize, exps: &[usize], chars: &[usize]) -> CycNum {
    let arr = arrangements(exps);
    let w = Rational::new(BigInt::one(), BigInt::from(arr.len()));
    let mut acc = CycNum::zero();
    for q in arr {
        let e: usize = chars.iter().zip(&q).map(|(a, b)| a * b).sum::<usize>() % k;
        acc = &acc + &CycNum::zeta(k as u32, e as i64);
    }
    acc.scale(&w)
}

fn char_tuples(k: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..k.pow(n as u32)).map(move |mut i| {
        let mut t = vec![0; n];
        for x in t.iter_mut() {
            *x = i % k;
            i /= k;
        }
        t
    })
}

/// Searches the cyclic subgroups of `g` for a witness that G^⊙n is infinite.
pub fn infinitude_witness(g: &Arc<FiniteMonoid>, n: usize) -> Option<InfinitudeWitness> {
    let mut seen_orders = Vec::new();
    for x in g.elements() {
        let k = g.element_order(x);
        // one generator per isomorphism type suffices: the search is intrinsic to C_k
        if k < 2 || seen_orders.contains(&k) {
            continue;
        }
        seen_orders.push(k);
        for exps in multisets(k, n) {
            for chars in char_tuples(k, n) {
                let v = value(k, &exps, &chars);
                if !v.is_zero() && v.root_of_unity().is_none() {
                    return Some(InfinitudeWitness { generator: x, order: k, exponents: exps, characters: chars, value: format!("{v}") });
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use monoidrep_core::builtin::{cyclic, symmetric_group};

    #[test]
    fn c2_square_has_no_witness() {
        assert!(infinitude_witness(&Arc::new(cyclic(2)), 2).is_none());
        assert!(infinitude_witness(&Arc::new(cyclic(7)), 1).is_none());
        assert!(infinitude_witness(&Arc::new(FiniteMonoid::trivial()), 3).is_none());
    }

    #[test]
    fn witnesses() {
        let w = infinitude_witness(&Arc::new(cyclic(3)), 2).unwrap();
        assert_eq!(w.order, 3);
        assert!(infinitude_witness(&Arc::new(cyclic(2)), 3).is_some());
        assert!(infinitude_witness(&Arc::new(cyclic(4)), 2).is_some());
        assert_eq!(infinitude_witness(&Arc::new(symmetric_group(3)), 2).unwrap().order, 3);
    }
}
