//! Dense truncated power series over ℤ or ℤ/mℤ.
//!
//! A series of order `N` stores the coefficients of `q^0 ..= q^N`. Binary
//! operations on series of different orders truncate to the smaller one.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::kernels;
use crate::ring::{Arith, BigMod, Integers, Ring, WordMod};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(BigUint),
    #[error("a series needs at least one coefficient")]
    Empty,
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: Ring, right: Ring },
    #[error("constant term {constant} is not a unit (gcd with the modulus is {gcd})")]
    NonUnit { constant: BigInt, gcd: BigInt },
    #[error("dilation factor must be at least 1")]
    ZeroDilation,
    #[error("progression step must be at least 1")]
    ZeroStep,
    #[error("progression offset {offset} must be smaller than the step {step}")]
    OffsetNotBelowStep { step: u64, offset: u64 },
    #[error("progression offset {offset} lies beyond the series order {order}")]
    OffsetBeyondOrder { offset: u64, order: usize },
    #[error("cannot reduce a series over {from} into {to}")]
    IncompatibleReduction { from: Ring, to: Ring },
    #[error("subscript must be at least 1")]
    ZeroSubscript,
    #[error("truncation order {0} is too large for this platform")]
    OrderTooLarge(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Coeffs {
    Word(Vec<u64>),
    Big(Vec<BigInt>),
}

/// Runs `$body` with `$ar` bound to the ring's arithmetic and `$c` to the
/// matching coefficient slice, rewrapping the resulting vector.
macro_rules! with_arith {
    ($ring:expr, $coeffs:expr, |$ar:ident, $c:ident| $body:expr) => {
        match ($ring, $coeffs) {
            (Ring::Mod(m), Coeffs::Word($c)) => {
                let $ar = &WordMod::new(*m);
                Coeffs::Word($body)
            }
            (Ring::Integers, Coeffs::Big($c)) => {
                let $ar = &Integers;
                Coeffs::Big($body)
            }
            (Ring::BigMod(m), Coeffs::Big($c)) => {
                let $ar = &BigMod::new(m);
                Coeffs::Big($body)
            }
            _ => unreachable!("coefficient storage does not match ring"),
        }
    };
}

/// Like [`with_arith!`] for two series already known to share a ring.
macro_rules! with_arith2 {
    ($ring:expr, $a:expr, $b:expr, |$ar:ident, $x:ident, $y:ident| $body:expr) => {
        match ($ring, $a, $b) {
            (Ring::Mod(m), Coeffs::Word($x), Coeffs::Word($y)) => {
                let $ar = &WordMod::new(*m);
                Coeffs::Word($body)
            }
            (Ring::Integers, Coeffs::Big($x), Coeffs::Big($y)) => {
                let $ar = &Integers;
                Coeffs::Big($body)
            }
            (Ring::BigMod(m), Coeffs::Big($x), Coeffs::Big($y)) => {
                let $ar = &BigMod::new(m);
                Coeffs::Big($body)
            }
            _ => unreachable!("coefficient storage does not match ring"),
        }
    };
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    ring: Ring,
    coeffs: Coeffs,
}

fn order_len(order: u64) -> Result<usize, SeriesError> {
    usize::try_from(order)
        .ok()
        .and_then(|o| o.checked_add(1))
        .ok_or(SeriesError::OrderTooLarge(order))
}

impl TruncatedSeries {
    /// Builds a series from integer coefficients, reducing them into `ring`.
    pub fn new(ring: Ring, coeffs: &[i64]) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::Empty);
        }
        let stored = match &ring {
            Ring::Mod(m) => {
                let w = WordMod::new(*m);
                Coeffs::Word(coeffs.iter().map(|&c| w.reduce_i64(c)).collect())
            }
            Ring::Integers => Coeffs::Big(coeffs.iter().map(|&c| BigInt::from(c)).collect()),
            Ring::BigMod(m) => {
                let b = BigMod::new(m);
                Coeffs::Big(coeffs.iter().map(|&c| b.embed_i64(c)).collect())
            }
        };
        Ok(TruncatedSeries { ring, coeffs: stored })
    }

    pub fn from_bigints(ring: Ring, coeffs: &[BigInt]) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::Empty);
        }
        let stored = match &ring {
            Ring::Mod(m) => {
                let w = WordMod::new(*m);
                Coeffs::Word(coeffs.iter().map(|c| w.embed_bigint(c)).collect())
            }
            Ring::Integers => Coeffs::Big(coeffs.to_vec()),
            Ring::BigMod(m) => {
                let b = BigMod::new(m);
                Coeffs::Big(coeffs.iter().map(|c| b.embed_bigint(c)).collect())
            }
        };
        Ok(TruncatedSeries { ring, coeffs: stored })
    }

    /// Sums `(exponent, coefficient)` terms into a series of the given order;
    /// terms above the order are dropped.
    pub fn from_terms(
        ring: Ring,
        order: u64,
        terms: impl IntoIterator<Item = (u64, i64)>,
    ) -> Result<Self, SeriesError> {
        let mut s = Self::zero(ring, order)?;
        let len = s.len() as u64;
        let terms = terms.into_iter().filter(|(e, _)| *e < len);
        s.coeffs = with_arith!(&s.ring, &s.coeffs, |ar, c| {
            let mut c = c.clone();
            for (e, v) in terms {
                let t = ar.embed_i64(v);
                ar.add_assign(&mut c[e as usize], &t);
            }
            c
        });
        Ok(s)
    }

    pub fn zero(ring: Ring, order: u64) -> Result<Self, SeriesError> {
        let len = order_len(order)?;
        let coeffs = match ring {
            Ring::Mod(_) => Coeffs::Word(alloc::vec![0; len]),
            _ => Coeffs::Big(alloc::vec![BigInt::zero(); len]),
        };
        Ok(TruncatedSeries { ring, coeffs })
    }

    pub fn one(ring: Ring, order: u64) -> Result<Self, SeriesError> {
        Self::from_terms(ring, order, [(0, 1)])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Highest stored exponent.
    pub fn order(&self) -> usize {
        self.len() - 1
    }

    /// Number of stored coefficients, `order + 1`.
    pub fn len(&self) -> usize {
        match &self.coeffs {
            Coeffs::Word(c) => c.len(),
            Coeffs::Big(c) => c.len(),
        }
    }

    /// Never true; a series always stores its constant term.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Canonical representative of the coefficient of `q^i` (in `[0, m)` for
    /// modular rings). Panics if `i > order`.
    pub fn coeff(&self, i: usize) -> BigInt {
        match &self.coeffs {
            Coeffs::Word(c) => BigInt::from(c[i]),
            Coeffs::Big(c) => c[i].clone(),
        }
    }

    pub fn coeffs(&self) -> Vec<BigInt> {
        match &self.coeffs {
            Coeffs::Word(c) => c.iter().map(|&x| BigInt::from(x)).collect(),
            Coeffs::Big(c) => c.clone(),
        }
    }

    /// Borrowed coefficients when stored as machine words.
    pub fn word_coeffs(&self) -> Option<&[u64]> {
        match &self.coeffs {
            Coeffs::Word(c) => Some(c),
            Coeffs::Big(_) => None,
        }
    }

    /// Coefficient `i` reduced into `[0, d)`. Only meaningful when the ring
    /// determines residues mod `d` (see [`Ring::determines_residues_mod`]).
    pub fn residue(&self, i: usize, d: u64) -> u64 {
        match &self.coeffs {
            Coeffs::Word(c) => c[i] % d,
            Coeffs::Big(c) => c[i].mod_floor(&BigInt::from(d)).to_u64().unwrap_or(0),
        }
    }

    pub fn is_zero_at(&self, i: usize) -> bool {
        match &self.coeffs {
            Coeffs::Word(c) => c[i] == 0,
            Coeffs::Big(c) => c[i].is_zero(),
        }
    }

    pub fn nonzero_count(&self) -> usize {
        match &self.coeffs {
            Coeffs::Word(c) => c.iter().filter(|x| **x != 0).count(),
            Coeffs::Big(c) => c.iter().filter(|x| !x.is_zero()).count(),
        }
    }

    fn check_ring(&self, other: &Self) -> Result<(), SeriesError> {
        if self.ring != other.ring {
            return Err(SeriesError::RingMismatch {
                left: self.ring.clone(),
                right: other.ring.clone(),
            });
        }
        Ok(())
    }

    /// Keeps exponents `0..=order` (no-op if `order` is not smaller).
    pub fn truncate(&self, order: usize) -> Self {
        let len = (order + 1).min(self.len());
        let coeffs = match &self.coeffs {
            Coeffs::Word(c) => Coeffs::Word(c[..len].to_vec()),
            Coeffs::Big(c) => Coeffs::Big(c[..len].to_vec()),
        };
        TruncatedSeries {
            ring: self.ring.clone(),
            coeffs,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_ring(other)?;
        let len = self.len().min(other.len());
        let coeffs = with_arith2!(&self.ring, &self.coeffs, &other.coeffs, |ar, a, b| {
            a[..len].iter().zip(&b[..len]).map(|(x, y)| ar.add(x, y)).collect()
        });
        Ok(TruncatedSeries {
            ring: self.ring.clone(),
            coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_ring(other)?;
        let len = self.len().min(other.len());
        let coeffs = with_arith2!(&self.ring, &self.coeffs, &other.coeffs, |ar, a, b| {
            a[..len].iter().zip(&b[..len]).map(|(x, y)| ar.sub(x, y)).collect()
        });
        Ok(TruncatedSeries {
            ring: self.ring.clone(),
            coeffs,
        })
    }

    pub fn neg(&self) -> Self {
        let coeffs = with_arith!(&self.ring, &self.coeffs, |ar, c| c.iter().map(|x| ar.neg(x)).collect());
        TruncatedSeries {
            ring: self.ring.clone(),
            coeffs,
        }
    }

    /// Truncated Cauchy product at the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_ring(other)?;
        let len = self.len().min(other.len());
        let coeffs = with_arith2!(&self.ring, &self.coeffs, &other.coeffs, |ar, a, b| {
            kernels::mul_trunc(ar, a, b, len)
        });
        Ok(TruncatedSeries {
            ring: self.ring.clone(),
            coeffs,
        })
    }

    /// Coefficient of `q^n` in `self * other` without forming the product.
    pub fn product_coefficient(&self, other: &Self, n: usize) -> Result<BigInt, SeriesError> {
        self.check_ring(other)?;
        let top = self.order().min(other.order());
        assert!(n <= top, "index {n} exceeds common order {top}");
        let out = with_arith2!(&self.ring, &self.coeffs, &other.coeffs, |ar, a, b| {
            let mut acc = ar.zero();
            for i in 0..=n {
                if !ar.is_zero(&a[i]) && !ar.is_zero(&b[n - i]) {
                    let t = ar.mul(&a[i], &b[n - i]);
                    ar.add_assign(&mut acc, &t);
                }
            }
            alloc::vec![acc]
        });
        Ok(match out {
            Coeffs::Word(c) => BigInt::from(c[0]),
            Coeffs::Big(mut c) => c.pop().unwrap_or_default(),
        })
    }

    /// Multiplicative inverse to the same order; the constant term must be a unit.
    pub fn inv(&self) -> Result<Self, SeriesError> {
        let len = self.len();
        let coeffs = match (&self.ring, &self.coeffs) {
            (Ring::Mod(m), Coeffs::Word(c)) => Coeffs::Word(
                kernels::inverse(&WordMod::new(*m), c, len).map_err(|(c0, gcd)| SeriesError::NonUnit {
                    constant: BigInt::from(c0),
                    gcd,
                })?,
            ),
            (Ring::Integers, Coeffs::Big(c)) => Coeffs::Big(
                kernels::inverse(&Integers, c, len)
                    .map_err(|(constant, gcd)| SeriesError::NonUnit { constant, gcd })?,
            ),
            (Ring::BigMod(m), Coeffs::Big(c)) => Coeffs::Big(
                kernels::inverse(&BigMod::new(m), c, len)
                    .map_err(|(constant, gcd)| SeriesError::NonUnit { constant, gcd })?,
            ),
            _ => unreachable!("coefficient storage does not match ring"),
        };
        Ok(TruncatedSeries {
            ring: self.ring.clone(),
            coeffs,
        })
    }

    /// `self^e` by repeated squaring.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut result: Option<Self> = None;
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = Some(match result {
                    None => base.clone(),
                    Some(r) => r.mul(&base).expect("same ring"),
                });
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        result.unwrap_or_else(|| Self::one(self.ring.clone(), self.order() as u64).expect("order fits"))
    }

    /// Substitutes `q -> q^j`, keeping the same order.
    #[allow(clippy::clone_on_copy)]
    pub fn dilate(&self, j: u64) -> Result<Self, SeriesError> {
        if j == 0 {
            return Err(SeriesError::ZeroDilation);
        }
        let len = self.len();
        let j = usize::try_from(j).unwrap_or(usize::MAX);
        let coeffs = with_arith!(&self.ring, &self.coeffs, |ar, c| {
            let mut out = alloc::vec![ar.zero(); len];
            for (i, x) in c.iter().enumerate() {
                match i.checked_mul(j) {
                    Some(k) if k < len => out[k] = x.clone(),
                    _ => break,
                }
            }
            out
        });
        Ok(TruncatedSeries {
            ring: self.ring.clone(),
            coeffs,
        })
    }

    /// Substitutes `q -> -q`.
    #[allow(clippy::clone_on_copy)]
    pub fn negate_q(&self) -> Self {
        let coeffs = with_arith!(&self.ring, &self.coeffs, |ar, c| {
            c.iter()
                .enumerate()
                .map(|(i, x)| if i % 2 == 1 { ar.neg(x) } else { x.clone() })
                .collect()
        });
        TruncatedSeries {
            ring: self.ring.clone(),
            coeffs,
        }
    }

    /// The series `sum_n a(step*n + offset) q^n`.
    pub fn extract_progression(&self, step: u64, offset: u64) -> Result<Self, SeriesError> {
        if step == 0 {
            return Err(SeriesError::ZeroStep);
        }
        if offset >= step {
            return Err(SeriesError::OffsetNotBelowStep { step, offset });
        }
        let order = self.order();
        if offset > order as u64 {
            return Err(SeriesError::OffsetBeyondOrder { offset, order });
        }
        let (step, offset) = (step as usize, offset as usize);
        let coeffs = match &self.coeffs {
            Coeffs::Word(c) => Coeffs::Word(c[offset..].iter().step_by(step).copied().collect()),
            Coeffs::Big(c) => Coeffs::Big(c[offset..].iter().step_by(step).cloned().collect()),
        };
        Ok(TruncatedSeries {
            ring: self.ring.clone(),
            coeffs,
        })
    }

    /// Multiplies in place by `1 - q^e` (`e >= 1`).
    pub fn mul_one_minus_q_pow(&mut self, e: usize) {
        assert!(e >= 1, "exponent must be positive");
        let len = self.len();
        if e >= len {
            return;
        }
        match (&self.ring, &mut self.coeffs) {
            (Ring::Mod(m), Coeffs::Word(c)) => {
                let m = *m;
                // new[n] = old[n] - old[n-e]; walking down in blocks of at most
                // e keeps each block's sources strictly below it.
                let mut hi = len;
                while hi > e {
                    let lo = hi.saturating_sub(e).max(e);
                    let (src, dst) = c.split_at_mut(lo);
                    let src = &src[lo - e..hi - e];
                    for (d, &s) in dst[..hi - lo].iter_mut().zip(src) {
                        *d = if *d >= s { *d - s } else { *d + (m - s) };
                    }
                    hi = lo;
                }
            }
            (ring, Coeffs::Big(c)) => {
                let big = match ring {
                    Ring::BigMod(m) => Some(BigMod::new(m)),
                    _ => None,
                };
                for n in (e..len).rev() {
                    let (head, tail) = c.split_at_mut(n);
                    match &big {
                        Some(ar) => ar.sub_assign(&mut tail[0], &head[n - e]),
                        None => tail[0] -= &head[n - e],
                    }
                }
            }
            _ => unreachable!("coefficient storage does not match ring"),
        }
    }

    /// Maps into a quotient ring:ℤ into any ℤ/mℤ, or ℤ/mℤ into ℤ/dℤ for `d | m`.
    pub fn reduce(&self, target: &Ring) -> Result<Self, SeriesError> {
        let compatible = match (&self.ring, target) {
            (_, Ring::Integers) => self.ring.is_integers(),
            (Ring::Integers, _) => true,
            (from, to) => {
                let (Some(m), Some(d)) = (from.modulus(), to.modulus()) else {
                    unreachable!()
                };
                (m % d).is_zero()
            }
        };
        if !compatible {
            return Err(SeriesError::IncompatibleReduction {
                from: self.ring.clone(),
                to: target.clone(),
            });
        }
        Self::from_bigints(target.clone(), &self.coeffs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn make_series_reduces_canonically() {
        let s = TruncatedSeries::new(Ring::modulo(24).unwrap(), &[25, -1]).unwrap();
        assert_eq!(ints(&s), vec![1, 23]);
        assert_eq!(s.order(), 1);
        let one = TruncatedSeries::new(Ring::Integers, &[1]).unwrap();
        assert_eq!(ints(&one), vec![1]);
        let s = TruncatedSeries::new(Ring::modulo(8).unwrap(), &[1, 2, 3, 4, 5, 6, 7, 8, 9]).unwrap();
        assert_eq!(ints(&s), vec![1, 2, 3, 4, 5, 6, 7, 0, 1]);
        assert_eq!(s.order(), 8);
    }

    #[test]
    fn make_series_errors() {
        assert_eq!(TruncatedSeries::new(Ring::Integers, &[]), Err(SeriesError::Empty));
        assert!(matches!(Ring::modulo(1), Err(SeriesError::InvalidModulus(_))));
    }

    #[test]
    fn big_modulus_reduces_like_word() {
        let w = TruncatedSeries::new(Ring::modulo(24).unwrap(), &[25, -1, -49]).unwrap();
        let b = TruncatedSeries::new(Ring::big_modulo(24u32).unwrap(), &[25, -1, -49]).unwrap();
        assert_eq!(w.coeffs(), b.coeffs());
    }

    #[test]
    fn geometric_series_times_one_minus_q() {
        let r = Ring::modulo(7).unwrap();
        let geo = TruncatedSeries::new(r.clone(), &[1; 20]).unwrap();
        let lin = TruncatedSeries::new(r.clone(), &[1, -1]).unwrap();
        // order truncates to min(19, 1)
        assert_eq!(lin.mul(&geo).unwrap().order(), 1);
        let mut padded = vec![1, -1];
        padded.resize(20, 0);
        let lin = TruncatedSeries::new(r.clone(), &padded).unwrap();
        assert_eq!(lin.mul(&geo).unwrap(), TruncatedSeries::one(r, 19).unwrap());
    }

    #[test]
    fn mul_rejects_ring_mismatch() {
        let a = TruncatedSeries::new(Ring::modulo(24).unwrap(), &[1]).unwrap();
        let b = TruncatedSeries::new(Ring::big_modulo(24u32).unwrap(), &[1]).unwrap();
        assert!(matches!(a.mul(&b), Err(SeriesError::RingMismatch { .. })));
    }

    #[test]
    fn inverse_of_one_minus_q() {
        let mut c = vec![0i64; 11];
        c[0] = 1;
        c[1] = -1;
        let s = TruncatedSeries::new(Ring::Integers, &c).unwrap();
        assert_eq!(ints(&s.inv().unwrap()), vec![1; 11]);
    }

    #[test]
    fn inverse_names_gcd() {
        let s = TruncatedSeries::new(Ring::modulo(24).unwrap(), &[9, 1]).unwrap();
        assert_eq!(
            s.inv(),
            Err(SeriesError::NonUnit {
                constant: BigInt::from(9),
                gcd: BigInt::from(3)
            })
        );
        let s = TruncatedSeries::new(Ring::Integers, &[2, 1]).unwrap();
        assert!(matches!(s.inv(), Err(SeriesError::NonUnit { .. })));
    }

    #[test]
    fn pow_zero_is_one() {
        let s = TruncatedSeries::new(Ring::Integers, &[3, 1, 4]).unwrap();
        assert_eq!(s.pow(0), TruncatedSeries::one(Ring::Integers, 2).unwrap());
        assert_eq!(s.pow(1), s);
        assert_eq!(ints(&s.pow(2)), vec![9, 6, 25]);
    }

    #[test]
    fn dilate_examples() {
        let s = TruncatedSeries::new(Ring::Integers, &[1, 1, 0, 0]).unwrap();
        assert_eq!(ints(&s.dilate(3).unwrap()), vec![1, 0, 0, 1]);
        assert_eq!(s.dilate(1).unwrap(), s);
        assert_eq!(s.dilate(0), Err(SeriesError::ZeroDilation));
    }

    #[test]
    fn negate_q_examples() {
        let s = TruncatedSeries::new(Ring::modulo(5).unwrap(), &[1, 1, 1]).unwrap();
        assert_eq!(ints(&s.negate_q()), vec![1, 4, 1]);
        assert_eq!(s.negate_q().negate_q(), s);
    }

    #[test]
    fn progression_examples() {
        let s = TruncatedSeries::new(Ring::Integers, &[1, 2, 3]).unwrap();
        assert_eq!(ints(&s.extract_progression(2, 1).unwrap()), vec![2]);
        assert_eq!(s.extract_progression(1, 0).unwrap(), s);
        assert_eq!(
            s.extract_progression(2, 2),
            Err(SeriesError::OffsetNotBelowStep { step: 2, offset: 2 })
        );
        assert_eq!(s.extract_progression(0, 0), Err(SeriesError::ZeroStep));
        assert_eq!(
            s.extract_progression(5, 4),
            Err(SeriesError::OffsetBeyondOrder { offset: 4, order: 2 })
        );
    }

    #[test]
    fn progression_order_is_floor() {
        let s = TruncatedSeries::zero(Ring::Integers, 10).unwrap();
        assert_eq!(s.extract_progression(3, 1).unwrap().order(), 3);
        assert_eq!(s.extract_progression(3, 2).unwrap().order(), 2);
    }

    #[test]
    fn reduce_rules() {
        let z = TruncatedSeries::new(Ring::Integers, &[-1, 30]).unwrap();
        let m24 = z.reduce(&Ring::Mod(24)).unwrap();
        assert_eq!(ints(&m24), vec![23, 6]);
        assert_eq!(ints(&m24.reduce(&Ring::Mod(8)).unwrap()), vec![7, 6]);
        assert!(m24.reduce(&Ring::Mod(16)).is_err());
        assert!(m24.reduce(&Ring::Integers).is_err());
    }

    #[test]
    fn product_coefficient_matches_mul() {
        let a = TruncatedSeries::new(Ring::Integers, &[1, -2, 3, 5]).unwrap();
        let b = TruncatedSeries::new(Ring::Integers, &[2, 7, -1, 4]).unwrap();
        let p = a.mul(&b).unwrap();
        for n in 0..4 {
            assert_eq!(a.product_coefficient(&b, n).unwrap(), p.coeff(n));
        }
    }

    #[test]
    fn from_terms_sums_and_drops() {
        let s = TruncatedSeries::from_terms(Ring::Mod(5), 3, [(1, 3), (1, 4), (9, 1)]).unwrap();
        assert_eq!(ints(&s), vec![0, 2, 0, 0]);
    }
}
