use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::{format_rational, parse_rational, Rational};
use crate::LinalgError;

/// Reduction data for Q(ζ_n): the power basis has φ(n) elements and `pow[k]`
/// is x^k mod Φ_n for k < n, stored sparsely.
struct Field {
    phi: usize,
    pow: Vec<Vec<(usize, i64)>>,
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![0i64; num.len() - dd];
    for i in (0..q.len()).rev() {
        let c = rem[i + dd] / den[dd];
        q[i] = c;
        for j in 0..=dd {
            rem[i + j] -= c * den[j];
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    q
}

fn cyclotomic_poly(n: u32, cache: &mut HashMap<u32, Vec<i64>>) -> Vec<i64> {
    if let Some(p) = cache.get(&n) {
        return p.clone();
    }
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let q = cyclotomic_poly(d, cache);
            p = poly_div_exact(&p, &q);
        }
    }
    cache.insert(n, p.clone());
    p
}

fn build_field(n: u32) -> Field {
    let mut cache = HashMap::new();
    let phi_poly = cyclotomic_poly(n, &mut cache);
    let phi = phi_poly.len() - 1;
    let mut pow = Vec::with_capacity(n as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..n {
        pow.push(
            cur.iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(|(i, c)| (i, *c))
                .collect(),
        );
        // multiply by x and reduce by the monic Φ_n
        let top = cur[phi - 1];
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for i in 0..phi {
                cur[i] -= top * phi_poly[i];
            }
        }
    }
    Field { phi, pow }
}

fn field(n: u32) -> Arc<Field> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Field>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard
        .entry(n)
        .or_insert_with(|| Arc::new(build_field(n)))
        .clone()
}

pub fn euler_phi(n: u32) -> usize {
    field(n).phi
}

fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// Element of Q(ζ_N) in the power basis ζ^0..ζ^{φ(N)-1}, reduced modulo Φ_N.
#[derive(Clone)]
pub struct CycNum {
    n: u32,
    c: Vec<Rational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn cyc_arith(a: &CycNum, b: &CycNum, op: CycOp) -> Result<CycNum, LinalgError> {
    match op {
        CycOp::Add => Ok(a + b),
        CycOp::Sub => Ok(a - b),
        CycOp::Mul => Ok(a * b),
        CycOp::Div => a.checked_div(b),
    }
}

impl CycNum {
    pub fn zero() -> Self {
        CycNum { n: 1, c: vec![Rational::zero()] }
    }

    pub fn one() -> Self {
        CycNum { n: 1, c: vec![Rational::one()] }
    }

    pub fn from_int(v: i64) -> Self {
        CycNum { n: 1, c: vec![Rational::from_integer(BigInt::from(v))] }
    }

    pub fn from_rational(r: Rational) -> Self {
        CycNum { n: 1, c: vec![r] }
    }

    /// ζ_n^k.
    pub fn zeta(n: u32, k: i64) -> Self {
        assert!(n > 0, "conductor must be positive");
        let e = k.rem_euclid(n as i64) as usize;
        let f = field(n);
        let mut c = vec![Rational::zero(); f.phi];
        for &(i, v) in &f.pow[e] {
            c[i] = Rational::from_integer(BigInt::from(v));
        }
        CycNum { n, c }.shrink()
    }

    /// Σ coeffs[k]·ζ_n^k for arbitrary exponents k (reduced on construction).
    pub fn from_exponents(n: u32, coeffs: &[(i64, Rational)]) -> Self {
        let f = field(n);
        let mut c = vec![Rational::zero(); f.phi];
        for (k, v) in coeffs {
            let e = k.rem_euclid(n as i64) as usize;
            for &(i, w) in &f.pow[e] {
                c[i] += v * Rational::from_integer(BigInt::from(w));
            }
        }
        CycNum { n, c }.shrink()
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(|x| x.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(|x| x.is_zero())
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    fn shrink(mut self) -> Self {
        if self.n != 1 && self.is_rational() {
            self.c.truncate(1);
            self.n = 1;
        }
        self
    }

    /// Coefficients of `self` in the power basis of Q(ζ_m); m must be a multiple of the conductor.
    pub fn embed(&self, m: u32) -> Vec<Rational> {
        assert!(m % self.n == 0, "conductor {} does not divide {}", self.n, m);
        if m == self.n {
            return self.c.clone();
        }
        let f = field(m);
        let step = (m / self.n) as usize;
        let mut out = vec![Rational::zero(); f.phi];
        for (k, v) in self.c.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            for &(i, w) in &f.pow[k * step] {
                if w == 1 {
                    out[i] += v;
                } else {
                    out[i] += v * Rational::from_integer(BigInt::from(w));
                }
            }
        }
        out
    }

    /// Re-express in Q(ζ_m) for a multiple m of the conductor.
    pub fn lift(&self, m: u32) -> CycNum {
        CycNum { n: m, c: self.embed(m) }
    }

    fn unify(a: &CycNum, b: &CycNum) -> (u32, Vec<Rational>, Vec<Rational>) {
        let m = lcm(a.n, b.n);
        (m, a.embed(m), b.embed(m))
    }

    pub fn scale(&self, r: &Rational) -> CycNum {
        if r.is_zero() {
            return CycNum::zero();
        }
        CycNum { n: self.n, c: self.c.iter().map(|x| x * r).collect() }
    }

    fn mul_same(n: u32, a: &[Rational], b: &[Rational]) -> CycNum {
        let f = field(n);
        let phi = f.phi;
        let mut prod = vec![Rational::zero(); 2 * phi - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                prod[i + j] += x * y;
            }
        }
        let mut c: Vec<Rational> = prod[..phi].to_vec();
        for (k, v) in prod.iter().enumerate().skip(phi) {
            if v.is_zero() {
                continue;
            }
            for &(i, w) in &f.pow[k % n as usize] {
                c[i] += v * Rational::from_integer(BigInt::from(w));
            }
        }
        CycNum { n, c }.shrink()
    }

    pub fn inv(&self) -> Result<CycNum, LinalgError> {
        if self.is_zero() {
            return Err(LinalgError::DivisionByZero);
        }
        if self.n == 1 || self.is_rational() {
            return Ok(CycNum::from_rational(self.c[0].recip()));
        }
        // Solve (multiplication by self) · x = 1 over Q.
        let phi = self.c.len();
        let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(phi);
        for j in 0..phi {
            let mut e = vec![Rational::zero(); phi];
            e[j] = Rational::one();
            cols.push(CycNum::mul_same(self.n, &self.c, &e).embed(self.n));
        }
        // augmented rows: a[i][j] = cols[j][i]
        let mut a: Vec<Vec<Rational>> = (0..phi)
            .map(|i| {
                let mut row: Vec<Rational> = (0..phi).map(|j| cols[j][i].clone()).collect();
                row.push(if i == 0 { Rational::one() } else { Rational::zero() });
                row
            })
            .collect();
        for col in 0..phi {
            let p = (col..phi).find(|&r| !a[r][col].is_zero()).ok_or(LinalgError::Singular)?;
            a.swap(col, p);
            let piv = a[col][col].clone();
            for x in a[col].iter_mut() {
                *x /= &piv;
            }
            let prow = a[col].clone();
            for r in 0..phi {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for (x, y) in a[r].iter_mut().zip(prow.iter()) {
                        *x -= &f * y;
                    }
                }
            }
        }
        Ok(CycNum { n: self.n, c: a.into_iter().map(|r| r[phi].clone()).collect() }.shrink())
    }

    pub fn checked_div(&self, other: &CycNum) -> Result<CycNum, LinalgError> {
        Ok(self * &other.inv()?)
    }

    /// Complex conjugate (ζ ↦ ζ^{-1}).
    pub fn conj(&self) -> CycNum {
        if self.n <= 2 {
            return self.clone();
        }
        let terms: Vec<(i64, Rational)> = self
            .c
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| (-(k as i64), v.clone()))
            .collect();
        CycNum::from_exponents(self.n, &terms)
    }

    pub fn pow(&self, mut e: u64) -> CycNum {
        let mut base = self.clone();
        let mut acc = CycNum::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// If self = ζ_m^k for some root of unity, returns (m, k) with m the order.
    pub fn root_of_unity(&self) -> Option<(u32, u32)> {
        let big = lcm(2, self.n);
        for k in 0..big {
            if *self == CycNum::zeta(big, k as i64) {
                let g = (k as u32).gcd(&big);
                let order = big / g.max(1);
                let order = if k == 0 { 1 } else { order };
                return Some((order, if k == 0 { 0 } else { k as u32 / g }));
            }
        }
        None
    }

    /// Total order used for canonical fingerprints: compare in the common field, lexicographically.
    pub fn cmp_canonical(&self, other: &CycNum) -> Ordering {
        let (_, a, b) = CycNum::unify(self, other);
        for (x, y) in a.iter().zip(b.iter()) {
            match x.cmp(y) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    pub fn abs_rational_hint(&self) -> Option<Rational> {
        self.as_rational().map(|r| r.abs())
    }
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        if self.n == other.n {
            return self.c == other.c;
        }
        let (_, a, b) = CycNum::unify(self, other);
        a == b
    }
}

impl Eq for CycNum {}

impl<'a, 'b> Add<&'b CycNum> for &'a CycNum {
    type Output = CycNum;
    fn add(self, rhs: &'b CycNum) -> CycNum {
        if self.n == rhs.n {
            return CycNum { n: self.n, c: self.c.iter().zip(&rhs.c).map(|(a, b)| a + b).collect() }
                .shrink();
        }
        let (m, a, b) = CycNum::unify(self, rhs);
        CycNum { n: m, c: a.into_iter().zip(b).map(|(a, b)| a + b).collect() }.shrink()
    }
}

impl<'a, 'b> Sub<&'b CycNum> for &'a CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &'b CycNum) -> CycNum {
        if self.n == rhs.n {
            return CycNum { n: self.n, c: self.c.iter().zip(&rhs.c).map(|(a, b)| a - b).collect() }
                .shrink();
        }
        let (m, a, b) = CycNum::unify(self, rhs);
        CycNum { n: m, c: a.into_iter().zip(b).map(|(a, b)| a - b).collect() }.shrink()
    }
}

impl<'a, 'b> Mul<&'b CycNum> for &'a CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &'b CycNum) -> CycNum {
        if self.n == 1 {
            return rhs.scale(&self.c[0]);
        }
        if rhs.n == 1 {
            return self.scale(&rhs.c[0]);
        }
        if self.n == rhs.n {
            return CycNum::mul_same(self.n, &self.c, &rhs.c);
        }
        let (m, a, b) = CycNum::unify(self, rhs);
        CycNum::mul_same(m, &a, &b)
    }
}

impl<'a> Neg for &'a CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum { n: self.n, c: self.c.iter().map(|x| -x).collect() }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

macro_rules! owned_ops {
    ($tr:ident, $f:ident) => {
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $f(self, rhs: CycNum) -> CycNum {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a CycNum> for CycNum {
            type Output = CycNum;
            fn $f(self, rhs: &'a CycNum) -> CycNum {
                (&self).$f(rhs)
            }
        }
        impl<'a> $tr<CycNum> for &'a CycNum {
            type Output = CycNum;
            fn $f(self, rhs: CycNum) -> CycNum {
                self.$f(&rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl<'a> AddAssign<&'a CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &'a CycNum) {
        if self.n == rhs.n {
            for (a, b) in self.c.iter_mut().zip(&rhs.c) {
                if !b.is_zero() {
                    *a += b;
                }
            }
            if self.n != 1 && self.is_rational() {
                self.c.truncate(1);
                self.n = 1;
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl<'a> SubAssign<&'a CycNum> for CycNum {
    fn sub_assign(&mut self, rhs: &'a CycNum) {
        if self.n == rhs.n {
            for (a, b) in self.c.iter_mut().zip(&rhs.c) {
                if !b.is_zero() {
                    *a -= b;
                }
            }
            if self.n != 1 && self.is_rational() {
                self.c.truncate(1);
                self.n = 1;
            }
        } else {
            *self = &*self - rhs;
        }
    }
}

impl From<i64> for CycNum {
    fn from(v: i64) -> Self {
        CycNum::from_int(v)
    }
}

impl From<Rational> for CycNum {
    fn from(r: Rational) -> Self {
        CycNum::from_rational(r)
    }
}

impl Default for CycNum {
    fn default() -> Self {
        CycNum::zero()
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, v) in self.c.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let neg = v.is_negative();
            let mag = v.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            if k == 0 {
                write!(f, "{}", format_rational(&mag))?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", format_rational(&mag))?;
                }
                if k == 1 {
                    write!(f, "z{}", self.n)?;
                } else {
                    write!(f, "z{}^{}", self.n, k)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[derive(Serialize, Deserialize)]
struct CycRepr {
    conductor: u32,
    coeffs: Vec<String>,
}

impl Serialize for CycNum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CycRepr { conductor: self.n, coeffs: self.c.iter().map(format_rational).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let r = CycRepr::deserialize(d)?;
        if r.conductor == 0 {
            return Err(D::Error::custom("conductor must be positive"));
        }
        let terms = r
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, s)| {
                parse_rational(s)
                    .map(|v| (k as i64, v))
                    .ok_or_else(|| D::Error::custom(format!("bad rational {s:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CycNum::from_exponents(r.conductor, &terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn i_squared() {
        let i = CycNum::zeta(4, 1);
        assert_eq!(&i * &i, CycNum::from_int(-1));
    }

    #[test]
    fn third_roots_sum_to_zero() {
        let w = CycNum::zeta(3, 1);
        let s = &(&CycNum::one() + &w) + &(&w * &w);
        assert!(s.is_zero());
    }

    #[test]
    fn self_division() {
        let z = CycNum::zeta(6, 1);
        assert!(z.checked_div(&z).unwrap().is_one());
        assert_eq!(CycNum::one().checked_div(&CycNum::zero()), Err(LinalgError::DivisionByZero));
    }

    #[test]
    fn zeta_n_to_the_n() {
        for n in [1u32, 2, 3, 4, 5, 6, 8, 9, 12, 15] {
            assert!(CycNum::zeta(n, 1).pow(n as u64).is_one(), "n={n}");
            assert_eq!(CycNum::zeta(n, n as i64), CycNum::one());
        }
    }

    #[test]
    fn mixed_conductors() {
        // ζ4 · ζ3 = ζ12^(3+4)
        let p = &CycNum::zeta(4, 1) * &CycNum::zeta(3, 1);
        assert_eq!(p, CycNum::zeta(12, 7));
        assert_eq!(p.conductor(), 12);
        // ζ6 = -ζ3^2
        assert_eq!(CycNum::zeta(6, 1), -CycNum::zeta(3, 2));
    }

    #[test]
    fn inverse_of_nonunit() {
        let a = &CycNum::from_int(2) + &CycNum::zeta(5, 1);
        let b = a.inv().unwrap();
        assert!((&a * &b).is_one());
    }

    #[test]
    fn conjugation() {
        let w = CycNum::zeta(3, 1);
        assert_eq!(w.conj(), CycNum::zeta(3, 2));
        assert!((&w * &w.conj()).is_one());
        let x = CycNum::from_exponents(8, &[(1, rat(1, 2)), (3, rat(-2, 3))]);
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn roots_of_unity_detected() {
        assert_eq!(CycNum::one().root_of_unity(), Some((1, 0)));
        assert_eq!(CycNum::from_int(-1).root_of_unity(), Some((2, 1)));
        assert_eq!(CycNum::zeta(3, 2).root_of_unity(), Some((3, 2)));
        assert_eq!(CycNum::zeta(6, 1).root_of_unity(), Some((6, 1)));
        assert_eq!(CycNum::from_int(2).root_of_unity(), None);
    }

    #[test]
    fn serde_roundtrip() {
        let x = CycNum::from_exponents(12, &[(0, rat(1, 2)), (5, rat(-7, 3))]);
        let s = serde_json::to_string(&x).unwrap();
        let y: CycNum = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn display() {
        assert_eq!(CycNum::from_int(-3).to_string(), "-3");
        assert_eq!(CycNum::zeta(4, 1).to_string(), "z4");
        let x = CycNum::from_exponents(3, &[(0, rat(1, 2)), (1, rat(-1, 1))]);
        assert_eq!(x.to_string(), "1/2 - z3");
    }
}
