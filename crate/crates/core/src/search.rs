//! Searching for congruences instead of checking known ones.
//!
//! All routines read one precomputed series whose ring determines residues
//! modulo every candidate modulus, so the expensive expansion happens once.
//! Ranges here are bounded by the largest coefficient index examined
//! (`max_index`), not by the largest `n`, because every step `A` shares the
//! same buffer.

use alloc::format;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use num_integer::Integer;

use crate::congruence::{
    check_family, CheckError, Claim, CongruenceFamily, IndexFilter, Status, Target, VerificationReport,
};
use crate::numtheory::is_prime;
use crate::series::TruncatedSeries;

pub const DEFAULT_MIN_SUPPORT: u64 = 50;
/// Smallest `min_support` a job may ask for.
pub const MIN_SUPPORT_FLOOR: u64 = 10;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScanError {
    #[error("step range is empty or contains 0")]
    BadSteps,
    #[error("at least one candidate modulus is required")]
    NoModuli,
    #[error("candidate modulus {0} is below 2")]
    ModulusTooSmall(u64),
    #[error("min_support must be at least {MIN_SUPPORT_FLOOR}, got {0}")]
    SupportTooSmall(u64),
    #[error("step {step} leaves only {support} tested values below index {max_index}; {min} required")]
    InsufficientSupport { step: u64, support: u64, min: u64, max_index: u64 },
    #[error("offset {offset} exceeds the index bound {max_index}")]
    OffsetBeyondRange { offset: u64, max_index: u64 },
    #[error("p = {0} must be a prime congruent to 3, 5 or 7 mod 8")]
    WrongResidueClass(u64),
    #[error("the lcm of the moduli does not fit in 64 bits")]
    LcmOverflow,
    #[error(transparent)]
    Check(#[from] CheckError),
}

/// A grid search over steps `A`, offsets `0 <= B < A` and moduli `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanJob {
    target: Target,
    steps: RangeInclusive<u64>,
    moduli: Vec<u64>,
    max_index: u64,
    min_support: u64,
}

impl ScanJob {
    pub fn new(
        target: Target,
        steps: RangeInclusive<u64>,
        moduli: Vec<u64>,
        max_index: u64,
        min_support: u64,
    ) -> Result<Self, ScanError> {
        if steps.is_empty() || *steps.start() == 0 {
            return Err(ScanError::BadSteps);
        }
        if moduli.is_empty() {
            return Err(ScanError::NoModuli);
        }
        if let Some(&m) = moduli.iter().find(|&&m| m < 2) {
            return Err(ScanError::ModulusTooSmall(m));
        }
        if min_support < MIN_SUPPORT_FLOOR {
            return Err(ScanError::SupportTooSmall(min_support));
        }
        let mut moduli = moduli;
        moduli.sort_unstable();
        moduli.dedup();
        moduli
            .iter()
            .try_fold(1u64, |acc, &m| (acc / acc.gcd(&m)).checked_mul(m))
            .ok_or(ScanError::LcmOverflow)?;
        Ok(ScanJob {
            target,
            steps,
            moduli,
            max_index,
            min_support,
        })
    }

    pub fn target(&self) -> Target {
        self.target
    }
    pub fn steps(&self) -> RangeInclusive<u64> {
        self.steps.clone()
    }
    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }
    pub fn max_index(&self) -> u64 {
        self.max_index
    }
    pub fn min_support(&self) -> u64 {
        self.min_support
    }

    /// The modulus the shared series must be computed in.
    pub fn series_modulus(&self) -> u64 {
        self.moduli.iter().fold(1u64, |acc, &m| acc.lcm(&m))
    }

    /// Checks the series against the job without scanning anything.
    pub fn validate_series(&self, series: &TruncatedSeries) -> Result<(), ScanError> {
        for &m in &self.moduli {
            if !series.ring().determines_residues_mod(m) {
                return Err(CheckError::IncompatibleModulus {
                    ring: series.ring().clone(),
                    modulus: m,
                }
                .into());
            }
        }
        if self.max_index > series.order() as u64 {
            return Err(CheckError::SeriesTooShort {
                needed: self.max_index,
                order: series.order(),
            }
            .into());
        }
        let step = *self.steps.end();
        // the worst offset is B = A - 1
        let support = support(step, step - 1, self.max_index);
        if support < self.min_support {
            return Err(ScanError::InsufficientSupport {
                step,
                support,
                min: self.min_support,
                max_index: self.max_index,
            });
        }
        Ok(())
    }
}

/// Number of `n >= 0` with `step·n + offset <= max_index`.
fn support(step: u64, offset: u64, max_index: u64) -> u64 {
    if offset > max_index {
        0
    } else {
        (max_index - offset) / step + 1
    }
}

/// Gcd of `modulus` and every coefficient at `step·n + offset <= max_index`,
/// stopping early once it reaches 1.
fn progression_gcd(series: &TruncatedSeries, step: u64, offset: u64, max_index: u64, modulus: u64) -> u64 {
    let mut g = modulus;
    let mut i = offset;
    while i <= max_index && g > 1 {
        g = g.gcd(&series.residue(i as usize, modulus));
        i += step;
    }
    g
}

/// One unit of scan work: every offset for a single step. Only the maximal
/// passing moduli are returned; a passing modulus that divides another
/// passing one is dropped. Output is sorted by `(B, M)`.
///
/// Assumes [`ScanJob::validate_series`] has succeeded.
pub fn scan_step(job: &ScanJob, series: &TruncatedSeries, step: u64) -> Vec<CongruenceFamily> {
    let lcm = job.series_modulus();
    let mut out = Vec::new();
    for offset in 0..step {
        if offset > job.max_index {
            break;
        }
        let g = progression_gcd(series, step, offset, job.max_index, lcm);
        let passing: Vec<u64> = job.moduli.iter().copied().filter(|m| g % m == 0).collect();
        for &m in &passing {
            if passing.iter().any(|&other| other != m && other % m == 0) {
                continue;
            }
            let fam = CongruenceFamily::new(
                job.target,
                step,
                offset,
                m,
                IndexFilter::All,
                Claim::Conjectural,
                format!("scan A={step} B={offset} M={m}"),
            )
            .expect("validated job");
            out.push(fam);
        }
    }
    out
}

/// Every `(A, B, M)` in the job's grid with all coefficients at `A n + B`
/// (up to the index bound) divisible by `M`, sorted by `(A, B, M)`.
pub fn scan(job: &ScanJob, series: &TruncatedSeries) -> Result<Vec<CongruenceFamily>, ScanError> {
    job.validate_series(series)?;
    let mut out = Vec::new();
    for step in job.steps() {
        out.extend(scan_step(job, series, step));
    }
    Ok(out)
}

/// Runs `F(step·n + offset) ≡ 0 (mod modulus)` over every index up to
/// `max_index` and lists every failure. A nonempty list is reported as
/// `PassWithExceptions` rather than `Fail`.
pub fn audit_exceptions(
    target: Target,
    step: u64,
    offset: u64,
    modulus: u64,
    series: &TruncatedSeries,
    max_index: u64,
) -> Result<VerificationReport, ScanError> {
    if offset > max_index {
        return Err(ScanError::OffsetBeyondRange { offset, max_index });
    }
    let family = CongruenceFamily::new(
        target,
        step,
        offset,
        modulus,
        IndexFilter::All,
        Claim::Conjectural,
        format!("audit A={step} B={offset} M={modulus}"),
    )
    .map_err(|_| {
        if step == 0 {
            ScanError::BadSteps
        } else {
            ScanError::ModulusTooSmall(modulus)
        }
    })?;
    let n_max = (max_index - offset) / step;
    let mut report = check_family(&family, series, n_max)?;
    if !report.exceptions.is_empty() {
        report.status = Status::PassWithExceptions;
    }
    Ok(report)
}

/// The offsets `r = p s + (p² - 1)/8`, `1 <= s <= p - 1`.
pub fn thm13_alpha0_offsets(p: u64) -> Vec<u64> {
    let base = (p * p - 1) / 8;
    (1..p).map(|s| p * s + base).collect()
}

/// Checks `F(p² n + r) ≡ 0 (mod modulus)` for each offset of
/// [`thm13_alpha0_offsets`], one report per offset.
///
/// For moduli dividing 8 these progressions lie inside the proved mod-8
/// family with step `p` (take `n' = p n + s`, which is prime to p), so the
/// reports are marked proved; any other modulus is conjectural.
pub fn scan_thm13_alpha0(
    p: u64,
    modulus: u64,
    series: &TruncatedSeries,
    max_index: u64,
) -> Result<Vec<VerificationReport>, ScanError> {
    if !is_prime(p) || ![3, 5, 7].contains(&(p % 8)) {
        return Err(ScanError::WrongResidueClass(p));
    }
    let step = p.checked_mul(p).ok_or(ScanError::WrongResidueClass(p))?;
    let claim = if 8 % modulus == 0 { Claim::Proved } else { Claim::Conjectural };
    let mut reports = Vec::new();
    for (s, offset) in (1..).zip(thm13_alpha0_offsets(p)) {
        if offset > max_index {
            return Err(ScanError::OffsetBeyondRange { offset, max_index });
        }
        let family = CongruenceFamily::new(
            Target::Tuples(crate::TupleSpec::t2()),
            step,
            offset,
            modulus,
            IndexFilter::All,
            claim,
            format!("p^2 progression p={p} s={s}"),
        )
        .map_err(|_| ScanError::ModulusTooSmall(modulus))?;
        reports.push(check_family(&family, series, (max_index - offset) / step)?);
    }
    Ok(reports)
}
