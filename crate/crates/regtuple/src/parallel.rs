//! Multi-threaded scans and batch checks on a shared read-only series.
//!
//! Work is split by step `A`; every unit runs [`scan_step`] independently
//! and the results are merged by sorting on `(A, B, M)`, so output does not
//! depend on the number of threads or on scheduling.

use rayon::prelude::*;
use regtuple_core::congruence::{check_family, CheckError};
use regtuple_core::search::{scan_step, ScanError, ScanJob};
use regtuple_core::{CongruenceFamily, TruncatedSeries, VerificationReport};

/// Environment variable overriding the worker count.
pub const THREADS_ENV: &str = "REGTUPLE_THREADS";

#[derive(Debug, thiserror::Error)]
pub enum ParallelError {
    #[error("{THREADS_ENV} must be a positive integer, got {0:?}")]
    BadThreadCount(String),
    #[error("could not start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
    #[error(transparent)]
    Scan(#[from] ScanError),
}

/// Reads [`THREADS_ENV`]; `None` when unset or empty.
pub fn threads_from_env() -> Result<Option<usize>, ParallelError> {
    match std::env::var(THREADS_ENV) {
        Ok(v) if v.trim().is_empty() => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(ParallelError::BadThreadCount(v)),
        },
        Err(_) => Ok(None),
    }
}

fn in_pool<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, ParallelError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n);
    }
    Ok(builder.build()?.install(f))
}

/// Same result as the sequential scan in the core crate, computed on
/// `threads` workers (rayon's default when `None`).
pub fn scan(
    job: &ScanJob,
    series: &TruncatedSeries,
    threads: Option<usize>,
) -> Result<Vec<CongruenceFamily>, ParallelError> {
    job.validate_series(series)?;
    let steps: Vec<u64> = job.steps().collect();
    let mut found: Vec<CongruenceFamily> = in_pool(threads, || {
        steps
            .par_iter()
            .flat_map_iter(|&a| scan_step(job, series, a))
            .collect()
    })?;
    found.sort_by_key(|f| (f.step(), f.offset(), f.modulus()));
    Ok(found)
}

/// Checks each `(family, n_max)` against the same series; results keep the
/// input order.
pub fn check_all(
    jobs: &[(CongruenceFamily, u64)],
    series: &TruncatedSeries,
    threads: Option<usize>,
) -> Result<Vec<Result<VerificationReport, CheckError>>, ParallelError> {
    in_pool(threads, || {
        jobs.par_iter()
            .map(|(f, n_max)| check_family(f, series, *n_max))
            .collect()
    })
}
