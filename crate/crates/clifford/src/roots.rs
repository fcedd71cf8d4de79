//! Exact k-th roots of cyclotomic numbers of the form r·ζ with r rational.

use monoidrep_linalg::{CycNum, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

fn int_root(x: &BigInt, k: u32) -> Option<BigInt> {
    let r = x.nth_root(k);
    (num_traits::pow(r.clone(), k as usize) == *x).then_some(r)
}

/// Positive rational k-th root of a positive rational.
fn rational_root(r: &Rational, k: u32) -> Option<Rational> {
    if !r.is_positive() {
        return None;
    }
    Some(Rational::new(int_root(r.numer(), k)?, int_root(r.denom(), k)?))
}

/// Some y with y^k = x, when x is a rational multiple of a root of unity.
pub fn nth_root(x: &CycNum, k: u32) -> Option<CycNum> {
    if k == 0 || x.is_zero() {
        return None;
    }
    if k == 1 {
        return Some(x.clone());
    }
    if let Some((order, e)) = x.root_of_unity() {
        return Some(CycNum::zeta(order * k, e as i64));
    }
    let big = x.conductor().lcm(&2);
    for j in 0..big {
        let y = x * &CycNum::zeta(big, -(j as i64));
        if let Some(r) = y.as_rational() {
            if r.is_positive() {
                let root = rational_root(&r, k)?;
                return Some(&CycNum::from_rational(root) * &CycNum::zeta(big * k, j as i64));
            }
        }
    }
    None
}

/// Whether x = ζ_κ^e for some e, returning e.
pub fn exponent_in(x: &CycNum, kappa: u32) -> Option<u32> {
    let (order, e) = x.root_of_unity()?;
    if kappa % order != 0 {
        return None;
    }
    Some((e * (kappa / order)) % kappa)
}
