//! The eight n-dimensional actions of C2≀S_n on V = ℂⁿ.
//!
//! p̃ sends i to ξ^{a_i} p(i); in wreath coordinates (f,p) this is a_i = f(p(i)).
//! With s_i = (-1)^{a_i}, s = ∏ s_i and χ⁺ the sign of p, the variants act by
//! e_i ↦ c·e_{p(i)} with c = 1, s, χ⁺(p), s·χ⁺(p), s_i, s_i·χ⁺(p), s·s_i, s·s_i·χ⁺(p).

use monoidrep_core::builtin::{cyclic, perm_sign};
use monoidrep_linalg::{CycNum, ExactMatrix};
use monoidrep_rep::{Representation, Side};

use crate::wreath::{wreath_group, WreathGroup};
use crate::SymError;

/// The hyperoctahedral group C2≀S_n; element 1 of C2 is ξ₂.
pub fn hyperoctahedral(n: usize) -> WreathGroup {
    wreath_group(&cyclic(2), n).expect("C2 is a group")
}

pub fn twisted_action(n: usize, variant: u8) -> Result<Representation, SymError> {
    if !(1..=8).contains(&variant) {
        return Err(SymError::VariantOutOfRange(variant));
    }
    if n < 2 {
        return Err(SymError::TooSmall);
    }
    Ok(twisted_action_on(&hyperoctahedral(n), variant))
}

pub fn twisted_action_on(w: &WreathGroup, variant: u8) -> Representation {
    let n = w.n;
    let mats = w
        .elements
        .iter()
        .map(|e| {
            let s: Vec<i64> = (0..n).map(|i| if e.f[e.p[i]] == 1 { -1 } else { 1 }).collect();
            let total: i64 = s.iter().product();
            let sgn = perm_sign(&e.p);
            let mut a = ExactMatrix::zeros(n, n);
            for i in 0..n {
                let c = match variant {
                    1 => 1,
                    2 => total,
                    3 => sgn,
                    4 => total * sgn,
                    5 => s[i],
                    6 => s[i] * sgn,
                    7 => total * s[i],
                    _ => total * s[i] * sgn,
                };
                a.set(e.p[i], i, CycNum::from_int(c));
            }
            a
        })
        .collect();
    Representation::new(w.group.clone(), Side::Left, mats).expect("twisted action is a representation")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variant_one_is_permutation_matrix() {
        let w = hyperoctahedral(3);
        let v = twisted_action_on(&w, 1);
        for (k, e) in w.elements.iter().enumerate() {
            if e.f.iter().all(|&x| x == 0) {
                for i in 0..3 {
                    assert!(v.matrix(k).get(e.p[i], i).is_one());
                }
            }
        }
    }

    #[test]
    fn variant_five_on_pure_sign() {
        let w = hyperoctahedral(3);
        let v = twisted_action(3, 5).unwrap();
        let k = w.elements.iter().position(|e| e.f == vec![1, 0, 0] && e.p == vec![0, 1, 2]).unwrap();
        let mut d = ExactMatrix::identity(3);
        d.set(0, 0, CycNum::from_int(-1));
        assert_eq!(*v.matrix(k), d);
    }

    #[test]
    fn irreducibility_pattern() {
        for n in [2, 3] {
            for variant in 1..=8 {
                let v = twisted_action(n, variant).unwrap();
                assert_eq!(v.is_irreducible(), variant >= 5, "n={n} variant={variant}");
            }
        }
        assert!(twisted_action(2, 9).is_err());
    }
}
