//! `T_{ℓ,k}(n)`: the number of k-tuples of ℓ-regular partitions of total size n.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::etaq::{eta_quotient, EtaQuotient};
use crate::ring::Ring;
use crate::series::{SeriesError, TruncatedSeries};

/// The pair `(ℓ, k)`; `T_ℓ` alone means `k = 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TupleSpec {
    ell: u64,
    k: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TupleError {
    #[error("ell must be at least 2, got {0}")]
    EllTooSmall(u64),
    #[error("k must be at least 1")]
    ZeroTuple,
    #[error("k = {0} does not fit in an eta-quotient exponent")]
    TupleTooLarge(u64),
    #[error("enumeration oracle is limited to n <= {limit}, got {n}")]
    OracleLimit { n: u64, limit: u64 },
}

impl TupleSpec {
    pub fn new(ell: u64, k: u64) -> Result<Self, TupleError> {
        if ell < 2 {
            return Err(TupleError::EllTooSmall(ell));
        }
        if k == 0 {
            return Err(TupleError::ZeroTuple);
        }
        if i64::try_from(k).is_err() {
            return Err(TupleError::TupleTooLarge(k));
        }
        Ok(TupleSpec { ell, k })
    }

    /// `T_2 = T_{2,3}`, the function most congruences here are about.
    pub fn t2() -> Self {
        TupleSpec { ell: 2, k: 3 }
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// The generating function `f_ℓ^k / f_1^k`.
    pub fn eta_quotient(&self) -> EtaQuotient {
        let k = self.k as i64;
        EtaQuotient::new([(self.ell, k), (1, -k)]).expect("subscripts are positive")
    }
}

impl core::fmt::Display for TupleSpec {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "T({},{})", self.ell, self.k)
    }
}

/// Coefficients `T_{ℓ,k}(0..=order)` reduced into `ring`.
pub fn t_series(spec: TupleSpec, ring: &Ring, order: u64) -> Result<TruncatedSeries, SeriesError> {
    eta_quotient(&spec.eta_quotient(), ring, order)
}

/// Largest `n` accepted by [`t_oracle`].
pub const ORACLE_LIMIT: u64 = 40;

/// Counts ℓ-regular partitions of every size up to `max` by walking every
/// such partition once (parts non-increasing, none divisible by ℓ).
pub fn regular_partition_counts(ell: u64, max: usize) -> Vec<u64> {
    let mut counts = alloc::vec![0u64; max + 1];
    // Each stack frame is (remaining budget, largest part allowed next).
    let mut stack: Vec<(usize, usize)> = alloc::vec![(max, max)];
    while let Some((budget, cap)) = stack.pop() {
        counts[max - budget] += 1;
        for part in 1..=cap.min(budget) {
            if part as u64 % ell != 0 {
                stack.push((budget - part, part));
            }
        }
    }
    counts
}

/// `T_{ℓ,k}(n)` by explicit enumeration, independent of the series code.
///
/// Per-size counts of ℓ-regular partitions come from [`regular_partition_counts`];
/// the k components are then combined by plain convolution.
pub fn t_oracle(spec: TupleSpec, n: u64) -> Result<BigUint, TupleError> {
    if n > ORACLE_LIMIT {
        return Err(TupleError::OracleLimit { n, limit: ORACLE_LIMIT });
    }
    let n = n as usize;
    let single: Vec<BigUint> = regular_partition_counts(spec.ell, n)
        .into_iter()
        .map(BigUint::from)
        .collect();
    let mut acc: Vec<BigUint> = alloc::vec![BigUint::zero(); n + 1];
    acc[0] = BigUint::from(1u32);
    for _ in 0..spec.k {
        let mut next = alloc::vec![BigUint::zero(); n + 1];
        for (i, a) in acc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in single[..=n - i].iter().enumerate() {
                next[i + j] += a * b;
            }
        }
        acc = next;
    }
    Ok(acc.swap_remove(n))
}

/// Exact `T_2(0..=order)` from Jacobi's cube: `f_1^3 T_2 = f_2^3` with both
/// sides written as sums over triangular numbers, solved by forward
/// substitution in wide integer arithmetic. Shares nothing with the
/// eta-quotient expansion except the statement of the identity.
pub fn t2_exact_jacobi(order: u64) -> Result<Vec<BigInt>, SeriesError> {
    let len = usize::try_from(order)
        .ok()
        .and_then(|o| o.checked_add(1))
        .ok_or(SeriesError::OrderTooLarge(order))?;
    let mut cube = Vec::new();
    let mut numerator = Vec::new();
    for m in 0u64.. {
        let tri = m * (m + 1) / 2;
        if tri as usize >= len {
            break;
        }
        let c = if m % 2 == 0 { 2 * m as i64 + 1 } else { -(2 * m as i64 + 1) };
        if m > 0 {
            cube.push((tri as usize, c));
        }
        if ((2 * tri) as usize) < len {
            numerator.push(((2 * tri) as usize, c));
        }
    }
    Ok(crate::wide::sparse_quotient(&numerator, &cube, false, len))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Parity of `T_2(n)`: odd exactly when n is triangular.
pub fn t2_parity(n: u64) -> Parity {
    if crate::numtheory::is_triangular(n).is_some() {
        Parity::Odd
    } else {
        Parity::Even
    }
}
