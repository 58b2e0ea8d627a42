//! Elementary arithmetic on machine integers: primality, Legendre symbols,
//! valuations, modular inverses and sums-of-squares style representations.

use alloc::vec::Vec;

use num_integer::Roots;

use crate::ring::ext_gcd_i128;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumberError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("valuation of zero is undefined")]
    ZeroValuation,
    #[error("{a} is not invertible modulo {m}")]
    NotInvertible { a: i64, m: u64 },
    #[error("modulus must be at least 1")]
    ZeroModulus,
    #[error("t = {0} is not coprime to 6")]
    NotCoprimeToSix(u64),
    #[error("N = {0} must be 33 or 57")]
    UnsupportedClass(u64),
    #[error("{n}·t² - 1 is not divisible by 8 for t = {t}")]
    NotIntegral { n: u64, t: u64 },
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m = m as u128;
    let mut b = base as u128 % m;
    let mut r = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    r as u64
}

/// Deterministic Miller–Rabin; the witness set is exact for all of u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in SMALL {
        if n % p == 0 {
            return n == p;
        }
    }
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    'witness: for a in SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Legendre symbol `(a/p)` by Euler's criterion.
pub fn legendre(a: i64, p: u64) -> Result<i8, NumberError> {
    if p == 2 || !is_prime(p) {
        return Err(NumberError::NotOddPrime(p));
    }
    let r = (a as i128).rem_euclid(p as i128) as u64;
    if r == 0 {
        return Ok(0);
    }
    Ok(if pow_mod(r, (p - 1) / 2, p) == 1 { 1 } else { -1 })
}

/// Exponent of the largest power of `p` dividing `n`.
pub fn nu_p(n: u64, p: u64) -> Result<u32, NumberError> {
    if n == 0 {
        return Err(NumberError::ZeroValuation);
    }
    if !is_prime(p) {
        return Err(NumberError::NotPrime(p));
    }
    let mut n = n;
    let mut e = 0;
    while n % p == 0 {
        n /= p;
        e += 1;
    }
    Ok(e)
}

/// The inverse of `a` modulo `m`, in `[0, m)`.
pub fn inv_mod(a: i64, m: u64) -> Result<u64, NumberError> {
    if m == 0 {
        return Err(NumberError::ZeroModulus);
    }
    if m == 1 {
        return Ok(0);
    }
    let (g, x) = ext_gcd_i128((a as i128).rem_euclid(m as i128), m as i128);
    if g != 1 {
        return Err(NumberError::NotInvertible { a, m });
    }
    Ok(x.rem_euclid(m as i128) as u64)
}

/// `Some(m)` with `n = m(m+1)/2`, if there is one.
pub fn is_triangular(n: u64) -> Option<u64> {
    // n = m(m+1)/2  <=>  8n + 1 = (2m+1)^2
    let d = 8 * n as u128 + 1;
    let r = d.sqrt();
    (r * r == d).then(|| ((r - 1) / 2) as u64)
}

/// The two binary quadratic forms that show up in the mod-8 arguments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuadraticForm {
    /// `x^2 + 2y^2`
    XSquaredPlusTwoYSquared,
    /// `x^2 + y^2`
    SumOfTwoSquares,
}

impl QuadraticForm {
    pub fn y_weight(self) -> u64 {
        match self {
            QuadraticForm::XSquaredPlusTwoYSquared => 2,
            QuadraticForm::SumOfTwoSquares => 1,
        }
    }

    pub fn eval(self, x: u64, y: u64) -> u128 {
        x as u128 * x as u128 + self.y_weight() as u128 * y as u128 * y as u128
    }
}

/// Every way of writing `n` with a form, `x, y >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormRepresentation {
    pub n: u64,
    pub form: QuadraticForm,
    /// Sorted by `x`.
    pub solutions: Vec<(u64, u64)>,
}

impl FormRepresentation {
    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }
}

/// Exhaustive search over `0 <= x <= sqrt(n)`.
pub fn represent(n: u64, form: QuadraticForm) -> FormRepresentation {
    let c = form.y_weight() as u128;
    let target = n as u128;
    let mut solutions = Vec::new();
    for x in 0..=n.sqrt() {
        let rest = target - x as u128 * x as u128;
        if rest % c != 0 {
            continue;
        }
        let y2 = rest / c;
        let y = y2.sqrt();
        if y * y == y2 {
            solutions.push((x, y as u64));
        }
    }
    FormRepresentation { n, form, solutions }
}

/// `(N t^2 - 1)/8 mod 9` for `N ∈ {33, 57}` and `gcd(t, 6) = 1`.
///
/// The result is 4 for N = 33 and 7 for N = 57 whatever t is; it is
/// computed here, not assumed.
pub fn residue_of_family_offset(class: u64, t: u64) -> Result<u64, NumberError> {
    if class != 33 && class != 57 {
        return Err(NumberError::UnsupportedClass(class));
    }
    if t % 2 == 0 || t % 3 == 0 {
        return Err(NumberError::NotCoprimeToSix(t));
    }
    let num = class as u128 * t as u128 * t as u128 - 1;
    if num % 8 != 0 {
        return Err(NumberError::NotIntegral { n: class, t });
    }
    Ok(((num / 8) % 9) as u64)
}
