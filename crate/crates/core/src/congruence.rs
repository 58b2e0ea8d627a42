//! Congruence families `F(A n + B) ≡ 0 (mod M)` and their verification
//! against a precomputed series.
//!
//! Builders check the hypotheses under which a family is known to hold and
//! refuse anything else. A refused family whose arithmetic still makes sense
//! is carried inside the error, tagged [`Claim::Forced`], for exploratory use.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::etaq::{eta_quotient, EtaQuotient};
use crate::numtheory::{inv_mod, is_prime, legendre};
use crate::ring::Ring;
use crate::series::{SeriesError, TruncatedSeries};
use crate::tuples::{t_series, TupleSpec};

/// The counting function a family is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    /// `p(n)`, generating function `1/f_1`.
    Partitions,
    Tuples(TupleSpec),
}

impl Target {
    pub fn series(&self, ring: &Ring, order: u64) -> Result<TruncatedSeries, SeriesError> {
        match self {
            Target::Partitions => eta_quotient(&EtaQuotient::new([(1, -1)])?, ring, order),
            Target::Tuples(spec) => t_series(*spec, ring, order),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Partitions => write!(f, "p"),
            Target::Tuples(spec) => write!(f, "{spec}"),
        }
    }
}

/// Which `n` a family makes a claim about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IndexFilter {
    All,
    NotDivisibleBy(u64),
    NotDivisibleByEither(u64, u64),
}

impl IndexFilter {
    pub fn admits(&self, n: u64) -> bool {
        match *self {
            IndexFilter::All => true,
            IndexFilter::NotDivisibleBy(d) => n % d != 0,
            IndexFilter::NotDivisibleByEither(d1, d2) => n % d1 != 0 && n % d2 != 0,
        }
    }

    fn divisors_ok(&self) -> bool {
        match *self {
            IndexFilter::All => true,
            IndexFilter::NotDivisibleBy(d) => d >= 2,
            IndexFilter::NotDivisibleByEither(a, b) => a >= 2 && b >= 2,
        }
    }
}

impl fmt::Display for IndexFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexFilter::All => write!(f, "all n"),
            IndexFilter::NotDivisibleBy(d) => write!(f, "{d}∤n"),
            IndexFilter::NotDivisibleByEither(a, b) => write!(f, "{a}∤n, {b}∤n"),
        }
    }
}

/// How much a family is backed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Claim {
    /// Hypotheses of a proved result were checked.
    Proved,
    /// Observed numerically only.
    Conjectural,
    /// Built with its hypotheses overridden.
    Forced,
}

impl Claim {
    pub fn as_str(self) -> &'static str {
        match self {
            Claim::Proved => "proved",
            Claim::Conjectural => "conjectural",
            Claim::Forced => "forced",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("progression step must be at least 1")]
    ZeroStep,
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),
    #[error("filter divisors must be at least 2")]
    BadFilter,
}

/// The assertion `target(step·n + offset) ≡ 0 (mod modulus)` for every
/// `n >= 0` admitted by `filter`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CongruenceFamily {
    target: Target,
    step: u64,
    offset: u64,
    modulus: u64,
    filter: IndexFilter,
    claim: Claim,
    label: String,
}

impl CongruenceFamily {
    pub fn new(
        target: Target,
        step: u64,
        offset: u64,
        modulus: u64,
        filter: IndexFilter,
        claim: Claim,
        label: impl Into<String>,
    ) -> Result<Self, FamilyError> {
        if step == 0 {
            return Err(FamilyError::ZeroStep);
        }
        if modulus < 2 {
            return Err(FamilyError::ModulusTooSmall(modulus));
        }
        if !filter.divisors_ok() {
            return Err(FamilyError::BadFilter);
        }
        Ok(CongruenceFamily {
            target,
            step,
            offset,
            modulus,
            filter,
            claim,
            label: label.into(),
        })
    }

    pub fn target(&self) -> Target {
        self.target
    }
    pub fn step(&self) -> u64 {
        self.step
    }
    pub fn offset(&self) -> u64 {
        self.offset
    }
    pub fn modulus(&self) -> u64 {
        self.modulus
    }
    pub fn filter(&self) -> IndexFilter {
        self.filter
    }
    pub fn claim(&self) -> Claim {
        self.claim
    }
    pub fn label(&self) -> &str {
        &self.label
    }

    /// `step·n + offset`, or `None` on overflow.
    pub fn index(&self, n: u64) -> Option<u64> {
        self.step.checked_mul(n)?.checked_add(self.offset)
    }

    /// Largest `n` whose index fits in a series of the given order.
    pub fn max_n_for_order(&self, order: u64) -> Option<u64> {
        (self.offset <= order).then(|| (order - self.offset) / self.step)
    }

    fn forced(mut self) -> Self {
        self.claim = Claim::Forced;
        self.label.push_str(" (forced)");
        self
    }
}

impl fmt::Display for CongruenceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({}n+{}) ≡ 0 (mod {}) for {} [{}; {}]",
            self.target,
            self.step,
            self.offset,
            self.modulus,
            self.filter,
            self.label,
            self.claim.as_str()
        )
    }
}

/// One `n` at which the family fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Exception {
    pub n: u64,
    pub index: u64,
    /// Nonzero residue of the coefficient mod the family's modulus.
    pub residue: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    PassWithExceptions,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::PassWithExceptions => "PASS_WITH_EXCEPTIONS",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub family: CongruenceFamily,
    /// Every `n` in `0..=n_max` admitted by the filter was tested.
    pub n_max: u64,
    pub tested: u64,
    /// Sorted by `n`.
    pub exceptions: Vec<Exception>,
    pub status: Status,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CheckError {
    #[error("series over {ring} does not determine residues mod {modulus}")]
    IncompatibleModulus { ring: Ring, modulus: u64 },
    #[error("series of order {order} is too short: index {needed} is required")]
    SeriesTooShort { needed: u64, order: usize },
    #[error("index for n = {n} overflows")]
    IndexOverflow { n: u64 },
}

/// Tests the family at every admitted `n <= n_max`. Never extends the
/// series: a short series is an error, not a silently smaller range.
pub fn check_family(
    family: &CongruenceFamily,
    series: &TruncatedSeries,
    n_max: u64,
) -> Result<VerificationReport, CheckError> {
    let m = family.modulus;
    if !series.ring().determines_residues_mod(m) {
        return Err(CheckError::IncompatibleModulus {
            ring: series.ring().clone(),
            modulus: m,
        });
    }
    let last = family.index(n_max).ok_or(CheckError::IndexOverflow { n: n_max })?;
    if last > series.order() as u64 {
        return Err(CheckError::SeriesTooShort {
            needed: last,
            order: series.order(),
        });
    }
    let mut exceptions = Vec::new();
    let mut tested = 0;
    for n in 0..=n_max {
        if !family.filter.admits(n) {
            continue;
        }
        tested += 1;
        let index = family.step * n + family.offset;
        let residue = series.residue(index as usize, m);
        if residue != 0 {
            exceptions.push(Exception { n, index, residue });
        }
    }
    let status = if exceptions.is_empty() { Status::Pass } else { Status::Fail };
    Ok(VerificationReport {
        family: family.clone(),
        n_max,
        tested,
        exceptions,
        status,
    })
}

/// Why a builder refused its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NotPrime(u64),
    /// `p` is outside the residue classes mod 8 the result covers.
    ResidueClass { p: u64, allowed: &'static [u64] },
    ExcludedPrime(u64),
    PrimeTooSmall { p: u64, min: u64 },
    LegendreCondition { p: u64 },
    NotCoprimeToSix(u64),
    PrimeDoesNotDivide { p: u64, t: u64 },
    ShiftOutOfRange { value: u64, low: u64, high: u64 },
    ExponentOrder { alpha: u32, s: u32 },
    ZeroParameter(&'static str),
    UnsupportedClass(u64),
    NotIntegral,
    Overflow,
    UnknownModulus(u64),
    Tuple(crate::tuples::TupleError),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotPrime(p) => write!(f, "{p} is not prime"),
            Violation::ResidueClass { p, allowed } => {
                write!(f, "p = {p} is {} mod 8; allowed classes are {allowed:?}", p % 8)
            }
            Violation::ExcludedPrime(p) => write!(f, "p = {p} is excluded"),
            Violation::PrimeTooSmall { p, min } => write!(f, "p = {p} must be at least {min}"),
            Violation::LegendreCondition { p } => write!(f, "(-2/{p}) must be -1"),
            Violation::NotCoprimeToSix(t) => write!(f, "gcd({t}, 6) must be 1"),
            Violation::PrimeDoesNotDivide { p, t } => write!(f, "{p} does not divide {t}"),
            Violation::ShiftOutOfRange { value, low, high } => {
                write!(f, "{value} is outside {low}..={high}")
            }
            Violation::ExponentOrder { alpha, s } => write!(f, "need alpha >= s, got alpha={alpha}, s={s}"),
            Violation::ZeroParameter(name) => write!(f, "{name} must be positive"),
            Violation::UnsupportedClass(n) => write!(f, "N = {n} must be 33 or 57"),
            Violation::NotIntegral => write!(f, "offset is not an integer"),
            Violation::Overflow => write!(f, "progression does not fit in 64 bits"),
            Violation::UnknownModulus(p) => write!(f, "no known congruence for p(n) modulo {p}"),
            Violation::Tuple(e) => write!(f, "{e}"),
        }
    }
}

/// A refused builder call; `forced` holds the family anyway when it is
/// arithmetically well defined.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("hypothesis violated: {violation}")]
pub struct HypothesisError {
    pub violation: Violation,
    pub forced: Option<Box<CongruenceFamily>>,
}

impl HypothesisError {
    fn hard(violation: Violation) -> Self {
        HypothesisError { violation, forced: None }
    }

    fn soft(violation: Violation, family: CongruenceFamily) -> Self {
        HypothesisError {
            violation,
            forced: Some(Box::new(family.forced())),
        }
    }

    /// The family built without hypothesis checks, if there is one.
    pub fn into_forced(self) -> Option<CongruenceFamily> {
        self.forced.map(|b| *b)
    }
}

type Built = Result<CongruenceFamily, HypothesisError>;

fn pow(base: u64, exp: u32) -> Result<u64, HypothesisError> {
    base.checked_pow(exp).ok_or(HypothesisError::hard(Violation::Overflow))
}

fn mul(a: u64, b: u64) -> Result<u64, HypothesisError> {
    a.checked_mul(b).ok_or(HypothesisError::hard(Violation::Overflow))
}

fn exact_div8(v: u64) -> Result<u64, HypothesisError> {
    if v % 8 != 0 {
        return Err(HypothesisError::hard(Violation::NotIntegral));
    }
    Ok(v / 8)
}

fn family(
    spec: TupleSpec,
    step: u64,
    offset: u64,
    modulus: u64,
    filter: IndexFilter,
    label: String,
) -> CongruenceFamily {
    CongruenceFamily::new(Target::Tuples(spec), step, offset, modulus, filter, Claim::Proved, label)
        .expect("builder parameters are valid")
}

/// Returns `family` when `checks` is clean, else the first violation with
/// the family attached as forced.
fn gate(checks: Option<Violation>, family: CongruenceFamily) -> Built {
    match checks {
        None => Ok(family),
        Some(v) => Err(HypothesisError::soft(v, family)),
    }
}

fn residue_class_violation(p: u64, allowed: &'static [u64]) -> Option<Violation> {
    if !is_prime(p) {
        Some(Violation::NotPrime(p))
    } else if !allowed.contains(&(p % 8)) {
        Some(Violation::ResidueClass { p, allowed })
    } else {
        None
    }
}

/// Ramanujan's `p(pn + r) ≡ 0 (mod p)` for p = 5, 7, 11, with `24 r ≡ 1 (mod p)`.
pub fn family_ramanujan(p: u64) -> Built {
    if p < 5 || !is_prime(p) {
        return Err(HypothesisError::hard(Violation::NotPrime(p)));
    }
    let r = inv_mod(24, p).map_err(|_| HypothesisError::hard(Violation::NotIntegral))?;
    let fam = CongruenceFamily::new(
        Target::Partitions,
        p,
        r,
        p,
        IndexFilter::All,
        Claim::Proved,
        format!("ramanujan p={p}"),
    )
    .expect("valid");
    let check = (![5, 7, 11].contains(&p)).then_some(Violation::UnknownModulus(p));
    gate(check, fam)
}

/// Which offset of the pair of mod-24 families with step `3^{4α+2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NssVariant {
    /// offset `Σ_{i=0}^{2α} 3^{2i} + 3^{4α+1}`
    First,
    /// offset `Σ_{i=0}^{2α} 3^{2i} + 2·3^{4α+1}`
    Second,
}

/// `T_2(3^{4α+2} n + Σ_{i=0}^{2α} 9^i + c·3^{4α+1}) ≡ 0 (mod 24)`, c = 1 or 2.
pub fn family_nss_13(variant: NssVariant, alpha: u32) -> Built {
    let e = alpha
        .checked_mul(4)
        .and_then(|v| v.checked_add(1))
        .ok_or(HypothesisError::hard(Violation::Overflow))?;
    let step = mul(pow(3, e)?, 3)?;
    let mut geometric = 0u64;
    for i in 0..=2 * alpha {
        geometric = geometric
            .checked_add(pow(9, i)?)
            .ok_or(HypothesisError::hard(Violation::Overflow))?;
    }
    let c = match variant {
        NssVariant::First => 1,
        NssVariant::Second => 2,
    };
    let offset = geometric
        .checked_add(mul(c, pow(3, e)?)?)
        .ok_or(HypothesisError::hard(Violation::Overflow))?;
    let name = match variant {
        NssVariant::First => "nss-1.2",
        NssVariant::Second => "nss-1.3",
    };
    Ok(family(
        TupleSpec::t2(),
        step,
        offset,
        24,
        IndexFilter::All,
        format!("{name} alpha={alpha}"),
    ))
}

/// `T_2(9n + (N t^2 - 1)/8) ≡ 0 (mod 24)` for N ∈ {33, 57}, `gcd(t, 6) = 1`.
pub fn family_thm12(class: u64, t: u64) -> Built {
    if class != 33 && class != 57 {
        return Err(HypothesisError::hard(Violation::UnsupportedClass(class)));
    }
    if t == 0 {
        return Err(HypothesisError::hard(Violation::ZeroParameter("t")));
    }
    let offset = exact_div8(mul(class, mul(t, t)?)? - 1)?;
    let fam = family(
        TupleSpec::t2(),
        9,
        offset,
        24,
        IndexFilter::All,
        format!("thm1.2 N={class} t={t}"),
    );
    let check = (t % 2 == 0 || t % 3 == 0).then_some(Violation::NotCoprimeToSix(t));
    gate(check, fam)
}

/// `T_2(9t^2 n + 9t^2 j/p + (57t^2 - 1)/8) ≡ 0 (mod 6)` under the
/// conjecture's hypotheses: p >= 5 prime, `(-2/p) = -1`, `gcd(t, 6) = 1`,
/// `p | t`, `1 <= j <= p - 1`.
pub fn family_conj11(p: u64, t: u64, j: u64) -> Built {
    if p == 0 || t == 0 {
        return Err(HypothesisError::hard(Violation::ZeroParameter("p and t")));
    }
    let t2 = mul(t, t)?;
    let step = mul(9, t2)?;
    let shifted = mul(step, j)?;
    if shifted % p != 0 {
        return Err(HypothesisError::hard(Violation::PrimeDoesNotDivide { p, t }));
    }
    let offset = (shifted / p)
        .checked_add(exact_div8(mul(57, t2)? - 1)?)
        .ok_or(HypothesisError::hard(Violation::Overflow))?;
    let fam = family(
        TupleSpec::t2(),
        step,
        offset,
        6,
        IndexFilter::All,
        format!("conj1.1 p={p} t={t} j={j}"),
    );
    let check = if !is_prime(p) {
        Some(Violation::NotPrime(p))
    } else if p < 5 {
        Some(Violation::PrimeTooSmall { p, min: 5 })
    } else if legendre(-2, p) != Ok(-1) {
        Some(Violation::LegendreCondition { p })
    } else if t % 2 == 0 || t % 3 == 0 {
        Some(Violation::NotCoprimeToSix(t))
    } else if t % p != 0 {
        Some(Violation::PrimeDoesNotDivide { p, t })
    } else if j == 0 || j >= p {
        Some(Violation::ShiftOutOfRange { value: j, low: 1, high: p - 1 })
    } else {
        None
    };
    gate(check, fam)
}

/// Strength of the prime-power family with step `p^{2α+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strength {
    /// mod 8 for `p ∤ n`
    Mod8,
    /// mod 24 for `p ∤ n` and `3 ∤ n`
    Mod24,
}

/// `p^{2α+1}` and `(k p^{2α+2} - 1)/8` for odd p.
fn prime_power_progression(p: u64, alpha: u32, k: u64) -> Result<(u64, u64), HypothesisError> {
    if p % 2 == 0 {
        return Err(HypothesisError::hard(Violation::NotIntegral));
    }
    let e = alpha
        .checked_mul(2)
        .and_then(|v| v.checked_add(1))
        .ok_or(HypothesisError::hard(Violation::Overflow))?;
    let step = mul(k, pow(p, e)?)?;
    let offset = exact_div8(mul(step, p)? - 1)?;
    Ok((step, offset))
}

/// `T_2(p^{2α+1} n + (p^{2α+2} - 1)/8) ≡ 0` mod 8 (`p ∤ n`), or mod 24
/// (`p ∤ n`, `3 ∤ n`), for primes p ≡ 3, 5, 7 (mod 8).
pub fn family_thm13(p: u64, alpha: u32, strength: Strength) -> Built {
    let (step, offset) = prime_power_progression(p, alpha, 1)?;
    let (modulus, filter, tag) = match strength {
        Strength::Mod8 => (8, IndexFilter::NotDivisibleBy(p), "mod8"),
        Strength::Mod24 => (24, IndexFilter::NotDivisibleByEither(p, 3), "mod24"),
    };
    let fam = family(
        TupleSpec::t2(),
        step,
        offset,
        modulus,
        filter,
        format!("thm1.3 p={p} alpha={alpha} {tag}"),
    );
    gate(residue_class_violation(p, &[3, 5, 7]), fam)
}

/// `T_2(9 p^{2α+1} n + (9 p^{2α+2} - 1)/8) ≡ 0 (mod 24)` for `p ∤ n`,
/// primes p ≡ 3, 5, 7 (mod 8) other than 3.
pub fn family_cor14(p: u64, alpha: u32) -> Built {
    let (step, offset) = prime_power_progression(p, alpha, 9)?;
    let fam = family(
        TupleSpec::t2(),
        step,
        offset,
        24,
        IndexFilter::NotDivisibleBy(p),
        format!("cor1.4 p={p} alpha={alpha}"),
    );
    let check = residue_class_violation(p, &[3, 5, 7]).or((p == 3).then_some(Violation::ExcludedPrime(3)));
    gate(check, fam)
}

/// The same progression as [`family_cor14`] modulo 6, for p ≡ 5, 7 (mod 8).
pub fn family_nss_16(p: u64, alpha: u32) -> Built {
    let (step, offset) = prime_power_progression(p, alpha, 9)?;
    let fam = family(
        TupleSpec::t2(),
        step,
        offset,
        6,
        IndexFilter::NotDivisibleBy(p),
        format!("nss-1.6 p={p} alpha={alpha}"),
    );
    gate(residue_class_violation(p, &[5, 7]), fam)
}

/// `T_{ℓ, p^α m}(p^s n + r) ≡ 0 (mod p^{α-s+1})` for prime p,
/// `α >= s >= 1`, `1 <= r <= p^s - 1`.
pub fn family_gen_thm29(p: u64, alpha: u32, s: u32, m: u64, ell: u64, r: u64) -> Built {
    if alpha == 0 || s == 0 {
        return Err(HypothesisError::hard(Violation::ZeroParameter("alpha and s")));
    }
    if m == 0 {
        return Err(HypothesisError::hard(Violation::ZeroParameter("m")));
    }
    if alpha < s {
        return Err(HypothesisError::hard(Violation::ExponentOrder { alpha, s }));
    }
    if !is_prime(p) {
        return Err(HypothesisError::hard(Violation::NotPrime(p)));
    }
    let step = pow(p, s)?;
    if r == 0 || r >= step {
        return Err(HypothesisError::hard(Violation::ShiftOutOfRange {
            value: r,
            low: 1,
            high: step - 1,
        }));
    }
    let k = mul(pow(p, alpha)?, m)?;
    let spec = TupleSpec::new(ell, k).map_err(|e| HypothesisError::hard(Violation::Tuple(e)))?;
    let modulus = pow(p, alpha - s + 1)?;
    Ok(family(
        spec,
        step,
        r,
        modulus,
        IndexFilter::All,
        format!("thm2.9 p={p} alpha={alpha} s={s} m={m} ell={ell} r={r}"),
    ))
}
