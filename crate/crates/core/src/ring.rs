//! Coefficient rings and the element arithmetic behind [`TruncatedSeries`].
//!
//! [`TruncatedSeries`]: crate::series::TruncatedSeries

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::series::SeriesError;

/// The coefficient ring of a truncated series.
///
/// `Mod` and `BigMod` describe the same mathematical ring when their moduli
/// agree; they differ only in storage (machine words versus big integers) and
/// are not interchangeable in binary operations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Integers,
    /// ℤ/mℤ with m held in a machine word.
    Mod(u64),
    /// ℤ/mℤ with big-integer coefficient storage, regardless of the size of m.
    BigMod(BigUint),
}

impl Ring {
    pub fn integers() -> Self {
        Ring::Integers
    }

    pub fn modulo(m: u64) -> Result<Self, SeriesError> {
        if m < 2 {
            return Err(SeriesError::InvalidModulus(BigUint::from(m)));
        }
        Ok(Ring::Mod(m))
    }

    /// Forces big-integer storage even when `m` would fit in a word.
    pub fn big_modulo(m: impl Into<BigUint>) -> Result<Self, SeriesError> {
        let m = m.into();
        if m < BigUint::from(2u32) {
            return Err(SeriesError::InvalidModulus(m));
        }
        Ok(Ring::BigMod(m))
    }

    /// Picks word storage when `m` fits, big storage otherwise.
    pub fn from_modulus(m: BigUint) -> Result<Self, SeriesError> {
        match m.to_u64() {
            Some(w) => Ring::modulo(w),
            None => Ring::big_modulo(m),
        }
    }

    /// `None` for ℤ.
    pub fn modulus(&self) -> Option<BigUint> {
        match self {
            Ring::Integers => None,
            Ring::Mod(m) => Some(BigUint::from(*m)),
            Ring::BigMod(m) => Some(m.clone()),
        }
    }

    pub fn is_integers(&self) -> bool {
        matches!(self, Ring::Integers)
    }

    /// True when every residue class modulo `d` is determined by an element of this ring.
    pub fn determines_residues_mod(&self, d: u64) -> bool {
        match self {
            Ring::Integers => true,
            Ring::Mod(m) => d != 0 && m % d == 0,
            Ring::BigMod(m) => d != 0 && (m % d).is_zero(),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::Mod(m) => write!(f, "Z/{m}Z"),
            Ring::BigMod(m) => write!(f, "Z/{m}Z (big)"),
        }
    }
}

/// Element arithmetic plus the heavy kernels, so each storage type can
/// override the inner loops.
pub(crate) trait Arith {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn embed_i64(&self, v: i64) -> Self::Elem;
    fn embed_bigint(&self, v: &BigInt) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Inverse of a unit, or the gcd witnessing that `a` is not one.
    fn unit_inverse(&self, a: &Self::Elem) -> Result<Self::Elem, BigInt>;

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }

    fn sub_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.sub(a, b);
    }

    /// Largest count of nonzero terms for which the sparse kernels beat a
    /// dense product of length `len`.
    fn sparse_limit(&self, len: usize) -> usize {
        // Karatsuba costs about len^0.585 per output coefficient.
        let mut lim = 1usize;
        let mut n = len;
        while n > 32 {
            n /= 2;
            lim = lim * 3 / 2 + 1;
        }
        (2 * lim).max(48)
    }

    /// `out[i + j] += c * dense[j]` for every `(i, c)` in `sparse`, below `len`.
    fn sparse_mul(
        &self,
        sparse: &[(usize, Self::Elem)],
        dense: &[Self::Elem],
        len: usize,
    ) -> Vec<Self::Elem> {
        let mut out = alloc::vec![self.zero(); len];
        for (i, c) in sparse {
            if *i >= len {
                break;
            }
            for (o, d) in out[*i..].iter_mut().zip(dense) {
                if !self.is_zero(d) {
                    let t = self.mul(c, d);
                    self.add_assign(o, &t);
                }
            }
        }
        out
    }

    fn dense_mul(&self, a: &[Self::Elem], b: &[Self::Elem], len: usize) -> Vec<Self::Elem> {
        crate::kernels::karatsuba_trunc(self, a, b, len)
    }

    /// Forward recurrence `c_n = -u * sum_{i>=1} a_i c_{n-i}`, `u = a_0^{-1}`,
    /// with `sparse` the nonzero terms of `a` of positive index.
    fn sparse_inverse(
        &self,
        u: &Self::Elem,
        sparse: &[(usize, Self::Elem)],
        len: usize,
    ) -> Vec<Self::Elem> {
        let mut c = alloc::vec![self.zero(); len];
        c[0] = u.clone();
        let neg_u = self.neg(u);
        for n in 1..len {
            let mut acc = self.zero();
            for (i, a) in sparse {
                if *i > n {
                    break;
                }
                let prev = &c[n - i];
                if !self.is_zero(prev) {
                    let t = self.mul(a, prev);
                    self.add_assign(&mut acc, &t);
                }
            }
            c[n] = self.mul(&neg_u, &acc);
        }
        c
    }
}

/// ℤ/mℤ on machine words.
#[derive(Clone, Copy, Debug)]
pub(crate) struct WordMod {
    pub m: u64,
}

impl WordMod {
    pub fn new(m: u64) -> Self {
        WordMod { m }
    }

    /// Products of two residues fit in a u64, so sums of products can be
    /// accumulated in a u128 and reduced once.
    fn lazy(&self) -> bool {
        self.m <= 1 << 32
    }

    pub fn reduce_i64(&self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.m as i128) as u64
    }
}

impl Arith for WordMod {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn embed_i64(&self, v: i64) -> u64 {
        self.reduce_i64(v)
    }

    fn embed_bigint(&self, v: &BigInt) -> u64 {
        v.mod_floor(&BigInt::from(self.m)).to_u64().unwrap_or(0)
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let (s, over) = a.overflowing_add(*b);
        if over || s >= self.m {
            s.wrapping_sub(self.m)
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.m - (b - a)
        }
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.m - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.m as u128) as u64
    }

    fn unit_inverse(&self, a: &u64) -> Result<u64, BigInt> {
        let (g, x) = ext_gcd_i128(*a as i128, self.m as i128);
        if g != 1 {
            return Err(BigInt::from(g));
        }
        Ok(x.rem_euclid(self.m as i128) as u64)
    }

    fn sparse_limit(&self, len: usize) -> usize {
        if crate::ntt::supports(self.m, len) {
            let lg = usize::BITS - len.max(2).leading_zeros();
            (40 * lg as usize).max(48)
        } else {
            let mut lim = 1usize;
            let mut n = len;
            while n > 32 {
                n /= 2;
                lim = lim * 3 / 2 + 1;
            }
            (2 * lim).max(48)
        }
    }

    fn sparse_mul(&self, sparse: &[(usize, u64)], dense: &[u64], len: usize) -> Vec<u64> {
        if !self.lazy() {
            let mut out = alloc::vec![0u64; len];
            for &(i, c) in sparse {
                if i >= len {
                    break;
                }
                for (o, d) in out[i..].iter_mut().zip(dense) {
                    *o = self.add(o, &self.mul(&c, d));
                }
            }
            return out;
        }
        let mut acc = alloc::vec![0u128; len];
        for &(i, c) in sparse {
            if i >= len {
                break;
            }
            for (o, &d) in acc[i..].iter_mut().zip(dense) {
                *o += (c * d) as u128;
            }
        }
        acc.into_iter().map(|v| (v % self.m as u128) as u64).collect()
    }

    fn dense_mul(&self, a: &[u64], b: &[u64], len: usize) -> Vec<u64> {
        if crate::ntt::supports(self.m, len) {
            crate::ntt::mul_trunc_mod(a, b, self.m, len)
        } else {
            crate::kernels::karatsuba_trunc(self, a, b, len)
        }
    }

    fn sparse_inverse(&self, u: &u64, sparse: &[(usize, u64)], len: usize) -> Vec<u64> {
        if !self.lazy() {
            let mut c = alloc::vec![0u64; len];
            c[0] = *u;
            let neg_u = self.neg(u);
            for n in 1..len {
                let mut acc = 0u64;
                for &(i, a) in sparse {
                    if i > n {
                        break;
                    }
                    acc = self.add(&acc, &self.mul(&a, &c[n - i]));
                }
                c[n] = self.mul(&neg_u, &acc);
            }
            return c;
        }
        let m = self.m as u128;
        let neg_u = self.neg(u) as u128;
        let mut c = alloc::vec![0u64; len];
        c[0] = *u;
        for n in 1..len {
            let mut acc = 0u128;
            for &(i, a) in sparse {
                if i > n {
                    break;
                }
                acc += (a * c[n - i]) as u128;
            }
            c[n] = ((acc % m) * neg_u % m) as u64;
        }
        c
    }
}

/// Exact integers.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Integers;

impl Arith for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn embed_i64(&self, v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn embed_bigint(&self, v: &BigInt) -> BigInt {
        v.clone()
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn unit_inverse(&self, a: &BigInt) -> Result<BigInt, BigInt> {
        if a.abs().is_one() {
            Ok(a.clone())
        } else {
            Err(a.abs())
        }
    }

    fn add_assign(&self, a: &mut BigInt, b: &BigInt) {
        *a += b;
    }

    fn sub_assign(&self, a: &mut BigInt, b: &BigInt) {
        *a -= b;
    }

    /// Small coefficients go through the transform; anything that might
    /// leave its exact range falls back to Karatsuba on big integers.
    fn dense_mul(&self, a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
        let narrow = |v: &[BigInt]| v.iter().map(|x| x.to_i64()).collect::<Option<Vec<i64>>>();
        if let (Some(na), Some(nb)) = (narrow(a), narrow(b)) {
            if let Some(c) = crate::ntt::mul_trunc_signed(&na, &nb, len) {
                return c.into_iter().map(BigInt::from).collect();
            }
        }
        crate::kernels::karatsuba_trunc(self, a, b, len)
    }

    fn sparse_mul(&self, sparse: &[(usize, BigInt)], dense: &[BigInt], len: usize) -> Vec<BigInt> {
        let small: Option<Vec<(usize, i64)>> = sparse
            .iter()
            .map(|(i, c)| c.to_i64().map(|c| (*i, c)))
            .collect();
        let Some(small) = small else {
            let mut out = alloc::vec![BigInt::zero(); len];
            for (i, c) in sparse {
                if *i >= len {
                    break;
                }
                for (o, d) in out[*i..].iter_mut().zip(dense) {
                    if !d.is_zero() {
                        *o += c * d;
                    }
                }
            }
            return out;
        };
        // Gather by output index so each accumulator is touched once.
        let mut out = Vec::with_capacity(len);
        for n in 0..len {
            let mut acc = BigInt::zero();
            for &(i, c) in &small {
                if i > n {
                    break;
                }
                if let Some(d) = dense.get(n - i) {
                    if !d.is_zero() {
                        acc += d * c;
                    }
                }
            }
            out.push(acc);
        }
        out
    }

    fn sparse_inverse(&self, u: &BigInt, sparse: &[(usize, BigInt)], len: usize) -> Vec<BigInt> {
        let small: Option<Vec<(usize, i64)>> = sparse
            .iter()
            .map(|(i, c)| c.to_i64().map(|c| (*i, c)))
            .collect();
        if let Some(small) = small {
            return crate::wide::sparse_quotient(&[(0, 1)], &small, u.sign() == Sign::Minus, len);
        }
        let mut c: Vec<BigInt> = Vec::with_capacity(len);
        c.push(u.clone());
        let negate = u.sign() == Sign::Plus;
        for n in 1..len {
            let mut acc = BigInt::zero();
            for (i, a) in sparse {
                if *i > n {
                    break;
                }
                acc += a * &c[n - i];
            }
            // u is ±1, so -u * acc is a sign flip.
            c.push(if negate { -acc } else { acc });
        }
        c
    }
}

/// ℤ/mℤ with big-integer elements in [0, m).
#[derive(Clone, Debug)]
pub(crate) struct BigMod {
    m: BigInt,
}

impl BigMod {
    pub fn new(m: &BigUint) -> Self {
        BigMod {
            m: BigInt::from(m.clone()),
        }
    }

    fn reduce(&self, v: BigInt) -> BigInt {
        if v.sign() != Sign::Minus && v < self.m {
            v
        } else {
            v.mod_floor(&self.m)
        }
    }
}

impl Arith for BigMod {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn embed_i64(&self, v: i64) -> BigInt {
        self.reduce(BigInt::from(v))
    }

    fn embed_bigint(&self, v: &BigInt) -> BigInt {
        self.reduce(v.clone())
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        let s = a + b;
        if s >= self.m {
            s - &self.m
        } else {
            s
        }
    }

    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        let d = a - b;
        if d.sign() == Sign::Minus {
            d + &self.m
        } else {
            d
        }
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        if a.is_zero() {
            BigInt::zero()
        } else {
            &self.m - a
        }
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a * b) % &self.m
    }

    fn unit_inverse(&self, a: &BigInt) -> Result<BigInt, BigInt> {
        let e = a.extended_gcd(&self.m);
        if !e.gcd.is_one() {
            return Err(e.gcd);
        }
        Ok(e.x.mod_floor(&self.m))
    }
}

/// Returns `(g, x)` with `a * x ≡ g (mod m)` and `g = gcd(a, m) >= 0`.
pub(crate) fn ext_gcd_i128(a: i128, m: i128) -> (i128, i128) {
    let (mut old_r, mut r) = (a, m);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r < 0 {
        (-old_r, -old_s)
    } else {
        (old_r, old_s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_small_moduli() {
        assert!(Ring::modulo(1).is_err());
        assert!(Ring::modulo(0).is_err());
        assert!(Ring::big_modulo(1u32).is_err());
        assert_eq!(Ring::modulo(2).unwrap(), Ring::Mod(2));
    }

    #[test]
    fn from_modulus_picks_storage() {
        assert_eq!(Ring::from_modulus(BigUint::from(24u32)).unwrap(), Ring::Mod(24));
        let big = BigUint::from(u64::MAX) + 1u32;
        assert_eq!(Ring::from_modulus(big.clone()).unwrap(), Ring::BigMod(big));
    }

    #[test]
    fn word_arithmetic_near_u64_max() {
        let r = WordMod::new(u64::MAX - 58);
        let a = u64::MAX - 60;
        assert_eq!(r.add(&a, &a), (2 * (a as u128) % r.m as u128) as u64);
        assert_eq!(r.sub(&0, &1), r.m - 1);
        assert_eq!(r.mul(&a, &a), ((a as u128 * a as u128) % r.m as u128) as u64);
    }

    #[test]
    fn unit_inverse_reports_gcd() {
        let r = WordMod::new(24);
        assert_eq!(r.unit_inverse(&5), Ok(5));
        assert_eq!(r.unit_inverse(&9), Err(BigInt::from(3)));
        let b = BigMod::new(&BigUint::from(24u32));
        assert_eq!(b.unit_inverse(&BigInt::from(7)), Ok(BigInt::from(7)));
        assert_eq!(b.unit_inverse(&BigInt::from(8)), Err(BigInt::from(8)));
        assert_eq!(Integers.unit_inverse(&BigInt::from(-1)), Ok(BigInt::from(-1)));
        assert_eq!(Integers.unit_inverse(&BigInt::from(-2)), Err(BigInt::from(2)));
    }

    #[test]
    fn residue_determination() {
        assert!(Ring::Mod(24).determines_residues_mod(8));
        assert!(!Ring::Mod(24).determines_residues_mod(16));
        assert!(Ring::Integers.determines_residues_mod(16));
    }
}
