//! Exact integer recurrences on flat two's-complement limb storage.
//!
//! `c_n = u (b_n - Σ_{i>=1} a_i c_{n-i})` with `u = ±1` and small `a_i`,
//! `b_n`. Each `c_n` is kept at its minimal width in one shared buffer, so the
//! inner loop is a carry chain over machine words with no allocation.

use alloc::vec::Vec;

use num_bigint::BigInt;

/// `acc += s * x` modulo `2^(64 acc.len())`, with `x` sign-extended;
/// `acc` must be at least as wide as `x`.
fn mul_add(acc: &mut [u64], x: &[u64], s: i64) {
    let ext = if x.last().is_some_and(|&t| t >> 63 == 1) { u64::MAX } else { 0 };
    let mag = s.unsigned_abs() as u128;
    let (low, high) = acc.split_at_mut(x.len());
    if s >= 0 {
        let mut carry = 0u128;
        for (a, &xi) in low.iter_mut().zip(x) {
            let t = *a as u128 + xi as u128 * mag + carry;
            *a = t as u64;
            carry = t >> 64;
        }
        let p = ext as u128 * mag;
        for a in high {
            let t = *a as u128 + p + carry;
            *a = t as u64;
            carry = t >> 64;
        }
    } else {
        let mut carry = 0u128;
        let mut borrow = false;
        let mut step = |a: &mut u64, xi: u64| {
            let p = xi as u128 * mag + carry;
            carry = p >> 64;
            let (d1, b1) = a.overflowing_sub(p as u64);
            let (d2, b2) = d1.overflowing_sub(borrow as u64);
            *a = d2;
            borrow = b1 | b2;
        };
        for (a, &xi) in low.iter_mut().zip(x) {
            step(a, xi);
        }
        for a in high {
            step(a, ext);
        }
    }
}

fn negate(acc: &mut [u64]) {
    let mut carry = 1u64;
    for a in acc.iter_mut() {
        let (v, c) = (!*a).overflowing_add(carry);
        *a = v;
        carry = c as u64;
    }
}

/// Drops redundant sign-extension limbs, keeping at least one.
fn minimal_width(acc: &[u64]) -> usize {
    let mut w = acc.len();
    while w > 1 {
        let (top, next) = (acc[w - 1], acc[w - 2]);
        if (top == 0 && next >> 63 == 0) || (top == u64::MAX && next >> 63 == 1) {
            w -= 1;
        } else {
            break;
        }
    }
    w
}

fn to_bigint(limbs: &[u64]) -> BigInt {
    let bytes: Vec<u8> = limbs.iter().flat_map(|l| l.to_le_bytes()).collect();
    BigInt::from_signed_bytes_le(&bytes)
}

/// Runs the recurrence for `n < len`. `numerator` and `tail` hold `(index,
/// coefficient)` pairs; `tail` must be sorted by index and exclude index 0.
pub(crate) fn sparse_quotient(
    numerator: &[(usize, i64)],
    tail: &[(usize, i64)],
    negate_result: bool,
    len: usize,
) -> Vec<BigInt> {
    let mut b = alloc::vec![0i64; len];
    for &(i, v) in numerator {
        if i < len {
            b[i] += v;
        }
    }
    let mut data: Vec<u64> = Vec::new();
    let mut start: Vec<usize> = Vec::with_capacity(len + 1);
    start.push(0);
    let mut acc: Vec<u64> = Vec::new();
    for n in 0..len {
        let mut width = 1;
        for &(i, _) in tail {
            if i > n {
                break;
            }
            width = width.max(start[n - i + 1] - start[n - i]);
        }
        // one limb for the small multiplier, one for the number of terms
        acc.clear();
        acc.resize(width + 2, if b[n] < 0 { u64::MAX } else { 0 });
        acc[0] = b[n] as u64;
        for &(i, a) in tail {
            if i > n {
                break;
            }
            let prev = &data[start[n - i]..start[n - i + 1]];
            mul_add(&mut acc, prev, -a);
        }
        if negate_result {
            negate(&mut acc);
        }
        let w = minimal_width(&acc);
        data.extend_from_slice(&acc[..w]);
        start.push(data.len());
    }
    (0..len).map(|n| to_bigint(&data[start[n]..start[n + 1]])).collect()
}
