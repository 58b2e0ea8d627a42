//! Expansions of `f_k = (q^k; q^k)_∞`, eta quotients and theta series.
//!
//! The closed forms here are sums over quadratic exponents. Each one has a
//! second construction as a product or quotient of `f_k`, and the test
//! suite checks that the two agree.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::ring::Ring;
use crate::series::{SeriesError, TruncatedSeries};

/// A finite product `∏ f_k^{e_k}` with integer exponents.
///
/// Repeated subscripts merge by adding exponents; zero exponents drop out.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EtaQuotient {
    factors: BTreeMap<u64, i64>,
}

impl EtaQuotient {
    pub fn new(factors: impl IntoIterator<Item = (u64, i64)>) -> Result<Self, SeriesError> {
        let mut merged = BTreeMap::new();
        for (k, e) in factors {
            if k == 0 {
                return Err(SeriesError::ZeroSubscript);
            }
            *merged.entry(k).or_insert(0i64) += e;
        }
        merged.retain(|_, e| *e != 0);
        Ok(EtaQuotient { factors: merged })
    }

    /// The constant series 1.
    pub fn one() -> Self {
        EtaQuotient::default()
    }

    /// `(subscript, exponent)` pairs in increasing subscript order.
    pub fn factors(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.factors.iter().map(|(&k, &e)| (k, e))
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }
}

/// Generalized pentagonal exponents `m(3m-1)/2`, scaled by `k`, with sign
/// `(-1)^m`. For j >= 1 the pair m = j, m = -j gives `j(3j-1)/2` and
/// `j(3j+1)/2`; enumeration stops once the smaller exceeds `order`.
fn pentagonal_terms(k: u64, order: u64) -> Vec<(u64, i64)> {
    let mut terms = alloc::vec![(0u64, 1i64)];
    let k = k as u128;
    let order = order as u128;
    for j in 1u128.. {
        let sign = if j % 2 == 1 { -1 } else { 1 };
        let lo = k * (j * (3 * j - 1) / 2);
        if lo > order {
            break;
        }
        terms.push((lo as u64, sign));
        let hi = k * (j * (3 * j + 1) / 2);
        if hi <= order {
            terms.push((hi as u64, sign));
        }
    }
    terms
}

/// `f_k` to the given order, read off the pentagonal number theorem.
pub fn pochhammer(k: u64, ring: &Ring, order: u64) -> Result<TruncatedSeries, SeriesError> {
    if k == 0 {
        return Err(SeriesError::ZeroSubscript);
    }
    TruncatedSeries::from_terms(ring.clone(), order, pentagonal_terms(k, order))
}

/// `f_k` as the literal truncated product `∏_{i>=1} (1 - q^{ki})`.
///
/// Quadratic in the order; it exists to cross-check [`pochhammer`] and never
/// looks at the pentagonal numbers.
pub fn pochhammer_product(k: u64, ring: &Ring, order: u64) -> Result<TruncatedSeries, SeriesError> {
    if k == 0 {
        return Err(SeriesError::ZeroSubscript);
    }
    if let Ring::Mod(m) = *ring {
        if m < 1 << 15 {
            return narrow_word_product(k, m as u16, order);
        }
        if m <= 1 << 32 {
            return lazy_word_product(k, m, order);
        }
    }
    let mut s = TruncatedSeries::one(ring.clone(), order)?;
    let mut e = k;
    while e <= order {
        s.mul_one_minus_q_pow(e as usize);
        e += k;
    }
    Ok(s)
}

/// The product over ℤ/mℤ for small m, on reduced `u16`s so the whole
/// buffer stays cache resident.
fn narrow_word_product(k: u64, m: u16, order: u64) -> Result<TruncatedSeries, SeriesError> {
    let len = usize::try_from(order)
        .ok()
        .and_then(|o| o.checked_add(1))
        .ok_or(SeriesError::OrderTooLarge(order))?;
    let mut c = alloc::vec![0u16; len];
    c[0] = 1;
    let mut e = k as usize;
    while e < len {
        let mut hi = len;
        while hi > e {
            let lo = hi.saturating_sub(e).max(e);
            let (src, dst) = c.split_at_mut(lo);
            for (d, s) in dst[..hi - lo].iter_mut().zip(&src[lo - e..hi - e]) {
                let t = d.wrapping_sub(*s);
                *d = if *d < *s { t.wrapping_add(m) } else { t };
            }
            hi = lo;
        }
        e += k as usize;
    }
    let c: Vec<i64> = c.into_iter().map(i64::from).collect();
    TruncatedSeries::new(Ring::Mod(m as u64), &c)
}

/// The same product over ℤ/mℤ on unreduced `i64`s. One factor at most
/// doubles the largest magnitude, so a reduction every `62 - bits(m)`
/// factors keeps everything in range while the inner loop stays a plain
/// subtraction.
fn lazy_word_product(k: u64, m: u64, order: u64) -> Result<TruncatedSeries, SeriesError> {
    let len = usize::try_from(order)
        .ok()
        .and_then(|o| o.checked_add(1))
        .ok_or(SeriesError::OrderTooLarge(order))?;
    let mut c = alloc::vec![0i64; len];
    c[0] = 1;
    let batch = 62 - (64 - m.leading_zeros());
    let mut pending = 0;
    let mut e = k as usize;
    while e < len {
        if pending == batch {
            c.iter_mut().for_each(|x| *x = x.rem_euclid(m as i64));
            pending = 0;
        }
        // c[n] -= c[n - e], walking down in blocks of at most e so each
        // block reads only entries below it
        let mut hi = len;
        while hi > e {
            let lo = hi.saturating_sub(e).max(e);
            let (src, dst) = c.split_at_mut(lo);
            for (d, s) in dst[..hi - lo].iter_mut().zip(&src[lo - e..hi - e]) {
                *d -= *s;
            }
            hi = lo;
        }
        pending += 1;
        e += k as usize;
    }
    c.iter_mut().for_each(|x| *x = x.rem_euclid(m as i64));
    TruncatedSeries::new(Ring::Mod(m), &c)
}

fn power_of_f(k: u64, e: u64, ring: &Ring, order: u64) -> Result<TruncatedSeries, SeriesError> {
    Ok(pochhammer(k, ring, order)?.pow(e))
}

/// Expands `∏ f_k^{e_k}`. All positive factors are multiplied first and the
/// negative ones are combined into a single denominator, inverted once.
pub fn eta_quotient(spec: &EtaQuotient, ring: &Ring, order: u64) -> Result<TruncatedSeries, SeriesError> {
    let mut numerator: Option<TruncatedSeries> = None;
    let mut denominator: Option<TruncatedSeries> = None;
    for (k, e) in spec.factors() {
        let part = power_of_f(k, e.unsigned_abs(), ring, order)?;
        let slot = if e > 0 { &mut numerator } else { &mut denominator };
        *slot = Some(match slot.take() {
            None => part,
            Some(acc) => acc.mul(&part)?,
        });
    }
    let numerator = match numerator {
        Some(n) => n,
        None => TruncatedSeries::one(ring.clone(), order)?,
    };
    match denominator {
        None => Ok(numerator),
        Some(d) => numerator.mul(&d.inv()?),
    }
}

/// `f_1^3 = Σ_{m>=0} (-1)^m (2m+1) q^{m(m+1)/2}`.
pub fn theta_cube(ring: &Ring, order: u64) -> Result<TruncatedSeries, SeriesError> {
    let terms = (0u64..)
        .map(|m| (m * (m + 1) / 2, m))
        .take_while(|(e, _)| *e <= order)
        .map(|(e, m)| {
            let w = 2 * m as i64 + 1;
            (e, if m % 2 == 0 { w } else { -w })
        });
    TruncatedSeries::from_terms(ring.clone(), order, terms)
}

/// `f_1^5 / f_2^2 = Σ_{m∈ℤ} (6m+1) q^{m(3m+1)/2}`.
pub fn theta_sextic(ring: &Ring, order: u64) -> Result<TruncatedSeries, SeriesError> {
    let mut terms = alloc::vec![(0u64, 1i64)];
    for j in 1u64.. {
        // m = -j gives j(3j-1)/2, m = j gives j(3j+1)/2.
        let lo = j * (3 * j - 1) / 2;
        if lo > order {
            break;
        }
        terms.push((lo, 1 - 6 * j as i64));
        let hi = j * (3 * j + 1) / 2;
        if hi <= order {
            terms.push((hi, 6 * j as i64 + 1));
        }
    }
    TruncatedSeries::from_terms(ring.clone(), order, terms)
}

fn signed_squares(scale: u64, ring: &Ring, order: u64) -> Result<TruncatedSeries, SeriesError> {
    let terms = (0u64..)
        .map(|n| (scale * n * n, n))
        .take_while(|(e, _)| *e <= order)
        .map(|(e, n)| {
            let w = if n == 0 { 1 } else { 2 };
            (e, if n % 2 == 0 { w } else { -w })
        });
    TruncatedSeries::from_terms(ring.clone(), order, terms)
}

/// `f_1^2 / f_2 = 1 + 2 Σ_{n>=1} (-1)^n q^{n^2}`.
pub fn theta_square(ring: &Ring, order: u64) -> Result<TruncatedSeries, SeriesError> {
    signed_squares(1, ring, order)
}

/// `f_2^2 / f_4 = 1 + 2 Σ_{n>=1} (-1)^n q^{2n^2}`.
pub fn theta_square_even(ring: &Ring, order: u64) -> Result<TruncatedSeries, SeriesError> {
    signed_squares(2, ring, order)
}

/// `(-q; -q)_∞`, computed as the quotient `f_2^3 / (f_1 f_4)`.
pub fn neg_q_pochhammer(ring: &Ring, order: u64) -> Result<TruncatedSeries, SeriesError> {
    let spec = EtaQuotient::new([(2, 3), (1, -1), (4, -1)])?;
    eta_quotient(&spec, ring, order)
}

/// One closed-form identity together with both of its constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    /// `f_1` as a pentagonal sum and as a product.
    Pentagonal,
    /// `f_1^3` as a triangular sum.
    JacobiCube,
    /// `f_1^5 / f_2^2`.
    Sextic,
    /// `(-q;-q)_∞ = f_2^3 / (f_1 f_4)`.
    NegatedPochhammer,
    /// `f_1^2 / f_2` as a signed sum over squares.
    SquareTheta,
    /// `f_2^2 / f_4`, the square theta series in `q^2`.
    EvenSquareTheta,
}

impl Identity {
    pub const ALL: [Identity; 6] = [
        Identity::Pentagonal,
        Identity::JacobiCube,
        Identity::Sextic,
        Identity::NegatedPochhammer,
        Identity::SquareTheta,
        Identity::EvenSquareTheta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Pentagonal => "f1 = sum (-1)^m q^(m(3m-1)/2)",
            Identity::JacobiCube => "f1^3 = sum (-1)^m (2m+1) q^(m(m+1)/2)",
            Identity::Sextic => "f1^5/f2^2 = sum (6m+1) q^(m(3m+1)/2)",
            Identity::NegatedPochhammer => "(-q;-q) = f2^3/(f1 f4)",
            Identity::SquareTheta => "f1^2/f2 = 1 + 2 sum (-1)^n q^(n^2)",
            Identity::EvenSquareTheta => "f2^2/f4 = 1 + 2 sum (-1)^n q^(2n^2)",
        }
    }

    /// The closed-form (sum) side.
    pub fn sum_side(self, ring: &Ring, order: u64) -> Result<TruncatedSeries, SeriesError> {
        match self {
            Identity::Pentagonal => pochhammer(1, ring, order),
            Identity::JacobiCube => theta_cube(ring, order),
            Identity::Sextic => theta_sextic(ring, order),
            Identity::NegatedPochhammer => Ok(pochhammer(1, ring, order)?.negate_q()),
            Identity::SquareTheta => theta_square(ring, order),
            Identity::EvenSquareTheta => theta_square_even(ring, order),
        }
    }

    /// The product or eta-quotient side.
    pub fn product_side(self, ring: &Ring, order: u64) -> Result<TruncatedSeries, SeriesError> {
        let q = |f: &[(u64, i64)]| -> Result<TruncatedSeries, SeriesError> {
            eta_quotient(&EtaQuotient::new(f.iter().copied())?, ring, order)
        };
        match self {
            Identity::Pentagonal => pochhammer_product(1, ring, order),
            Identity::JacobiCube => q(&[(1, 3)]),
            Identity::Sextic => q(&[(1, 5), (2, -2)]),
            Identity::NegatedPochhammer => neg_q_pochhammer(ring, order),
            Identity::SquareTheta => q(&[(1, 2), (2, -1)]),
            Identity::EvenSquareTheta => q(&[(2, 2), (4, -1)]),
        }
    }

    /// First exponent where the two sides differ, if any.
    pub fn first_mismatch(self, ring: &Ring, order: u64) -> Result<Option<usize>, SeriesError> {
        let a = self.sum_side(ring, order)?;
        let b = self.product_side(ring, order)?;
        Ok((0..a.len()).find(|&i| a.coeff(i) != b.coeff(i)))
    }
}
