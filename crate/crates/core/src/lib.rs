//! Truncated q-series arithmetic for counting k-tuple ℓ-regular partitions,
//! and executable checks of the congruences those counts satisfy.
//!
//! The crate is `no_std` and needs only `alloc`. The generating function of
//! `T_{ℓ,k}(n)` is the eta quotient `f_ℓ^k / f_1^k` with `f_k = ∏(1 - q^{ki})`;
//! every expansion is done on a dense [`TruncatedSeries`] over ℤ or ℤ/mℤ.
//!
//! - [`series`]: the series type and its ring operations.
//! - [`etaq`]: `f_k`, eta quotients and the classical theta expansions, each
//!   with an independent second construction.
//! - [`tuples`]: `T_{ℓ,k}(n)` by series and by brute-force enumeration.
//! - [`numtheory`]: Legendre symbols, valuations, binary quadratic forms.
//! - [`congruence`]: congruence families and their verifier.
//! - [`search`]: discovery scans and exception audits.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod congruence;
pub mod etaq;
mod kernels;
mod ntt;
pub mod numtheory;
pub mod ring;
pub mod search;
pub mod series;
pub mod tuples;
mod wide;

pub use congruence::{CongruenceFamily, IndexFilter, Status, Target, VerificationReport};
pub use etaq::EtaQuotient;
pub use ring::Ring;
pub use series::{SeriesError, TruncatedSeries};
pub use tuples::TupleSpec;
