//! Truncated multiplication and inversion over any [`Arith`].

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::ring::Arith;

const SCHOOLBOOK_CUTOFF: usize = 32;

fn nonzero_terms<A: Arith + ?Sized>(r: &A, a: &[A::Elem]) -> Vec<(usize, A::Elem)> {
    a.iter()
        .enumerate()
        .filter(|(_, c)| !r.is_zero(c))
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

/// Product of `a` and `b` truncated to `len` coefficients.
pub(crate) fn mul_trunc<A: Arith + ?Sized>(
    r: &A,
    a: &[A::Elem],
    b: &[A::Elem],
    len: usize,
) -> Vec<A::Elem> {
    let a = &a[..a.len().min(len)];
    let b = &b[..b.len().min(len)];
    if a.is_empty() || b.is_empty() {
        return alloc::vec![r.zero(); len];
    }
    let limit = r.sparse_limit(len);
    let nz_a = a.iter().filter(|c| !r.is_zero(c)).count();
    let nz_b = b.iter().filter(|c| !r.is_zero(c)).count();
    if nz_a.min(nz_b) <= limit {
        if nz_a <= nz_b {
            r.sparse_mul(&nonzero_terms(r, a), b, len)
        } else {
            r.sparse_mul(&nonzero_terms(r, b), a, len)
        }
    } else {
        let mut out = r.dense_mul(a, b, len);
        out.resize(len, r.zero());
        out
    }
}

/// Multiplicative inverse truncated to `len` coefficients.
///
/// Sparse inputs use the forward recurrence; dense ones use Newton iteration
/// `g <- g (2 - a g)`, which doubles the number of correct terms per step.
pub(crate) fn inverse<A: Arith + ?Sized>(
    r: &A,
    a: &[A::Elem],
    len: usize,
) -> Result<Vec<A::Elem>, (A::Elem, BigInt)> {
    let u = r.unit_inverse(&a[0]).map_err(|g| (a[0].clone(), g))?;
    let a = &a[..a.len().min(len)];
    let tail: Vec<(usize, A::Elem)> = nonzero_terms(r, a).into_iter().filter(|(i, _)| *i > 0).collect();
    if tail.len() <= r.sparse_limit(len) {
        return Ok(r.sparse_inverse(&u, &tail, len));
    }
    let two = r.embed_i64(2);
    let mut g = alloc::vec![u];
    let mut k = 1usize;
    while k < len {
        let k2 = (2 * k).min(len);
        let ag = mul_trunc(r, &a[..a.len().min(k2)], &g, k2);
        let mut t: Vec<A::Elem> = ag.iter().map(|c| r.neg(c)).collect();
        t[0] = r.add(&t[0], &two);
        g = mul_trunc(r, &g, &t, k2);
        k = k2;
    }
    Ok(g)
}

/// Full Karatsuba product, truncated to `len`.
pub(crate) fn karatsuba_trunc<A: Arith + ?Sized>(
    r: &A,
    a: &[A::Elem],
    b: &[A::Elem],
    len: usize,
) -> Vec<A::Elem> {
    let n = a.len().max(b.len());
    let mut pa = a.to_vec();
    pa.resize(n, r.zero());
    let mut pb = b.to_vec();
    pb.resize(n, r.zero());
    let mut out = karatsuba(r, &pa, &pb);
    out.truncate(len);
    out.resize(len, r.zero());
    out
}

/// Product of two equal-length slices; result has length `2n - 1`.
fn karatsuba<A: Arith + ?Sized>(r: &A, a: &[A::Elem], b: &[A::Elem]) -> Vec<A::Elem> {
    let n = a.len();
    if n == 0 {
        return Vec::new();
    }
    if n <= SCHOOLBOOK_CUTOFF {
        return schoolbook(r, a, b);
    }
    let h = n / 2;
    let (a0, a1) = a.split_at(h);
    let (b0, b1) = b.split_at(h);
    // a1, b1 have length n - h >= h.
    let hi = n - h;
    let mut sa: Vec<A::Elem> = a1.to_vec();
    let mut sb: Vec<A::Elem> = b1.to_vec();
    for i in 0..h {
        sa[i] = r.add(&sa[i], &a0[i]);
        sb[i] = r.add(&sb[i], &b0[i]);
    }
    let mut a0p = a0.to_vec();
    a0p.resize(hi, r.zero());
    let mut b0p = b0.to_vec();
    b0p.resize(hi, r.zero());
    let z0 = karatsuba(r, &a0p, &b0p);
    let z2 = karatsuba(r, a1, b1);
    let mut z1 = karatsuba(r, &sa, &sb);
    for i in 0..z1.len() {
        z1[i] = r.sub(&r.sub(&z1[i], &z0[i]), &z2[i]);
    }
    let mut out = alloc::vec![r.zero(); 2 * n - 1];
    for (i, c) in z0.iter().enumerate() {
        if i < out.len() {
            r.add_assign(&mut out[i], c);
        }
    }
    for (i, c) in z1.iter().enumerate() {
        if i + h < out.len() {
            r.add_assign(&mut out[i + h], c);
        }
    }
    for (i, c) in z2.iter().enumerate() {
        if i + 2 * h < out.len() {
            r.add_assign(&mut out[i + 2 * h], c);
        }
    }
    out
}

pub(crate) fn schoolbook<A: Arith + ?Sized>(r: &A, a: &[A::Elem], b: &[A::Elem]) -> Vec<A::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = alloc::vec![r.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if r.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = r.mul(x, y);
            r.add_assign(&mut out[i + j], &t);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Integers, WordMod};

    fn lcg(seed: &mut u64) -> u64 {
        *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        *seed >> 33
    }

    #[test]
    fn karatsuba_matches_schoolbook() {
        let r = WordMod::new(1_000_003);
        let mut s = 7;
        for n in [1usize, 2, 31, 33, 64, 100, 257] {
            let a: Vec<u64> = (0..n).map(|_| lcg(&mut s) % r.m).collect();
            let b: Vec<u64> = (0..n).map(|_| lcg(&mut s) % r.m).collect();
            let full = schoolbook(&r, &a, &b);
            assert_eq!(karatsuba(&r, &a, &b), full, "n={n}");
        }
    }

    #[test]
    fn karatsuba_over_integers() {
        let mut s = 3;
        let a: Vec<BigInt> = (0..90).map(|_| BigInt::from(lcg(&mut s) as i64 - (1 << 30))).collect();
        let b: Vec<BigInt> = (0..90).map(|_| BigInt::from(lcg(&mut s) as i64 - (1 << 30))).collect();
        assert_eq!(karatsuba(&Integers, &a, &b), schoolbook(&Integers, &a, &b));
    }

    #[test]
    fn newton_and_recurrence_agree() {
        let r = WordMod::new(24);
        let mut s = 11;
        let len = 3000;
        let mut a: Vec<u64> = (0..len).map(|_| lcg(&mut s) % 24).collect();
        a[0] = 5;
        let tail: Vec<(usize, u64)> = nonzero_terms(&r, &a).into_iter().filter(|(i, _)| *i > 0).collect();
        let u = r.unit_inverse(&5).unwrap();
        let slow = r.sparse_inverse(&u, &tail, len);
        let fast = inverse(&r, &a, len).unwrap();
        assert_eq!(slow, fast);
        let one = mul_trunc(&r, &a, &fast, len);
        assert_eq!(one[0], 1);
        assert!(one[1..].iter().all(|&c| c == 0));
    }
}
