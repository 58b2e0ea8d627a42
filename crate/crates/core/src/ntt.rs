//! Three-prime number-theoretic transform for products over ℤ/mℤ, m ≤ 2^32.
//!
//! The exact integer convolution is recovered by Garner's CRT over the three
//! primes and then reduced mod m, so the bound `len * (m-1)^2 < P1 P2 P3`
//! must hold. Small moduli get away with one or two of the primes.

use alloc::vec::Vec;

const PRIMES: [u64; 3] = [998_244_353, 167_772_161, 469_762_049];
const GENERATOR: u64 = 3;
/// All three primes are 1 mod 2^23.
const MAX_LOG: u32 = 23;

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Whether a truncated product of length `len` mod `m` can go through the transform.
pub(crate) fn supports(m: u64, len: usize) -> bool {
    if m > 1 << 32 || len == 0 {
        return false;
    }
    let size = (2 * len).next_power_of_two();
    if size.trailing_zeros() > MAX_LOG {
        return false;
    }
    let bound = (len as u128) * ((m - 1) as u128) * ((m - 1) as u128);
    let prod = PRIMES.iter().map(|&p| p as u128).product::<u128>();
    bound < prod
}

fn transform<const P: u64>(a: &mut [u64], invert: bool) {
    let n = a.len();
    let mut j = 0usize;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            a.swap(i, j);
        }
    }
    let mut roots = Vec::with_capacity(n / 2);
    let mut len = 2;
    while len <= n {
        let mut w = pow_mod(GENERATOR, (P - 1) / len as u64, P);
        if invert {
            w = pow_mod(w, P - 2, P);
        }
        let half = len / 2;
        roots.clear();
        let mut cur = 1u64;
        for _ in 0..half {
            roots.push(cur);
            cur = cur * w % P;
        }
        for chunk in a.chunks_mut(len) {
            let (lo, hi) = chunk.split_at_mut(half);
            for ((x, y), &r) in lo.iter_mut().zip(hi.iter_mut()).zip(&roots) {
                let u = *x;
                let v = *y * r % P;
                *x = if u + v >= P { u + v - P } else { u + v };
                *y = if u >= v { u - v } else { u + P - v };
            }
        }
        len <<= 1;
    }
    if invert {
        let n_inv = pow_mod(n as u64, P - 2, P);
        for x in a.iter_mut() {
            *x = *x * n_inv % P;
        }
    }
}

fn convolve_prime<const P: u64>(a: &[u64], b: &[u64], size: usize, square: bool) -> Vec<u64> {
    let mut fa: Vec<u64> = a.iter().map(|&x| x % P).collect();
    fa.resize(size, 0);
    transform::<P>(&mut fa, false);
    if square {
        for x in fa.iter_mut() {
            *x = *x * *x % P;
        }
    } else {
        let mut fb: Vec<u64> = b.iter().map(|&x| x % P).collect();
        fb.resize(size, 0);
        transform::<P>(&mut fb, false);
        for (x, y) in fa.iter_mut().zip(&fb) {
            *x = *x * y % P;
        }
    }
    transform::<P>(&mut fa, true);
    fa
}

const P0: u64 = PRIMES[0];
const P1: u64 = PRIMES[1];
const P2: u64 = PRIMES[2];

/// `a * b mod (m, q^len)` for reduced inputs; caller checks [`supports`].
///
/// Uses only as many primes as the coefficient bound needs.
pub(crate) fn mul_trunc_mod(a: &[u64], b: &[u64], m: u64, len: usize) -> Vec<u64> {
    let square = core::ptr::eq(a, b);
    let a = &a[..a.len().min(len)];
    let b = &b[..b.len().min(len)];
    let size = (a.len() + b.len()).next_power_of_two();
    let bound = (a.len().min(b.len()) as u128) * ((m - 1) as u128) * ((m - 1) as u128);
    let m128 = m as u128;
    if bound < P0 as u128 {
        let r0 = convolve_prime::<P0>(a, b, size, square);
        return r0[..len].iter().map(|&x| x % m).collect();
    }
    let r0 = convolve_prime::<P0>(a, b, size, square);
    let r1 = convolve_prime::<P1>(a, b, size, square);
    let inv_p0_mod_p1 = pow_mod(P0, P1 - 2, P1);
    if bound < P0 as u128 * P1 as u128 {
        return (0..len)
            .map(|i| {
                let (x0, x1) = (r0[i], r1[i]);
                let t1 = (x1 + P1 - x0 % P1) % P1 * inv_p0_mod_p1 % P1;
                ((x0 as u128 + P0 as u128 * t1 as u128) % m128) as u64
            })
            .collect();
    }
    let r2 = convolve_prime::<P2>(a, b, size, square);
    let p01_mod_p2 = P0 % P2 * (P1 % P2) % P2;
    let inv_p01_mod_p2 = pow_mod(p01_mod_p2, P2 - 2, P2);
    let p01 = P0 as u128 * P1 as u128;
    (0..len)
        .map(|i| {
            let (x0, x1, x2) = (r0[i], r1[i], r2[i]);
            // x = x0 + p0 t1 + p0 p1 t2
            let t1 = (x1 + P1 - x0 % P1) % P1 * inv_p0_mod_p1 % P1;
            let partial = x0 as u128 + P0 as u128 * t1 as u128;
            let partial_mod_p2 = (partial % P2 as u128) as u64;
            let t2 = (x2 + P2 - partial_mod_p2) % P2 * inv_p01_mod_p2 % P2;
            ((partial + p01 * t2 as u128) % m128) as u64
        })
        .collect()
}

fn residues<const P: u64>(a: &[i64]) -> Vec<u64> {
    a.iter().map(|&x| (x as i128).rem_euclid(P as i128) as u64).collect()
}

/// Exact `a * b mod q^len` over ℤ, or `None` when some coefficient of the
/// product could leave the signed CRT range `(-P/2, P/2)`, `P = P0 P1 P2`.
pub(crate) fn mul_trunc_signed(a: &[i64], b: &[i64], len: usize) -> Option<Vec<i128>> {
    let square = core::ptr::eq(a, b);
    let a = &a[..a.len().min(len)];
    let b = &b[..b.len().min(len)];
    if a.is_empty() || b.is_empty() {
        return Some(alloc::vec![0; len]);
    }
    let size = (a.len() + b.len()).next_power_of_two();
    if size.trailing_zeros() > MAX_LOG {
        return None;
    }
    let max_abs = |v: &[i64]| v.iter().map(|x| x.unsigned_abs() as u128).max().unwrap_or(0);
    let p = P0 as u128 * P1 as u128 * P2 as u128;
    let bound = max_abs(a)
        .checked_mul(max_abs(b))?
        .checked_mul(a.len().min(b.len()) as u128)?;
    if bound >= p / 2 {
        return None;
    }
    let (ra0, rb0) = (residues::<P0>(a), residues::<P0>(b));
    let (ra1, rb1) = (residues::<P1>(a), residues::<P1>(b));
    let (ra2, rb2) = (residues::<P2>(a), residues::<P2>(b));
    let r0 = convolve_prime::<P0>(&ra0, &rb0, size, square);
    let r1 = convolve_prime::<P1>(&ra1, &rb1, size, square);
    let r2 = convolve_prime::<P2>(&ra2, &rb2, size, square);
    let inv_p0_mod_p1 = pow_mod(P0, P1 - 2, P1);
    let inv_p01_mod_p2 = pow_mod(P0 % P2 * (P1 % P2) % P2, P2 - 2, P2);
    let p01 = P0 as u128 * P1 as u128;
    let out = (0..len)
        .map(|i| {
            if i >= r0.len() {
                return 0;
            }
            let (x0, x1, x2) = (r0[i], r1[i], r2[i]);
            let t1 = (x1 + P1 - x0 % P1) % P1 * inv_p0_mod_p1 % P1;
            let partial = x0 as u128 + P0 as u128 * t1 as u128;
            let t2 = (x2 + P2 - (partial % P2 as u128) as u64) % P2 * inv_p01_mod_p2 % P2;
            let x = partial + p01 * t2 as u128;
            if x > p / 2 {
                -((p - x) as i128)
            } else {
                x as i128
            }
        })
        .collect();
    Some(out)
}
