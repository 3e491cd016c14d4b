//! Exact arithmetic for truncated q-series with Laurent-polynomial coefficients.
//!
//! The engine works in the ring Z[a, a^-1][[t]] / (t^{N+1}) where t = q^(1/d)
//! for a per-series scale d. Everything is exact: coefficients are
//! arbitrary-precision integers, exponents are integers (after scaling), and
//! every operation states how it propagates the guaranteed truncation order.
//!
//! On top of the series ring sit:
//!
//! - [`qfunctions`]: q-Pochhammer products, Ramanujan theta functions
//!   (bilateral sum and triple-product forms), the m-dissection of the triple
//!   product, and the quintuple product identity.
//! - [`bailey`]: Bailey pairs as first-class values, the defining relation,
//!   and the Slater-style transform identities.
//! - [`catalog`]: a registry of Rogers-Ramanujan type identities with
//!   parameterized side-builders and a uniform verification interface,
//!   including root-of-unity specializations via exact cyclotomic reduction.
//! - [`partitions`]: residue-class-constrained partition counting functions,
//!   brute-force enumerators, and generating-function cross-checks.
//! - [`cli`]: the batch front end behind the `qrr` binary.
//!
//! Verification is truncation-certified: a passing check means exact
//! coefficient agreement for every exponent up to the certified order, with
//! the omitted tails proven (by exponent-valuation bounds) to start above it.

pub mod bailey;
pub mod catalog;
pub mod cli;
pub mod cyclo;
pub mod laurent;
pub mod monomial;
pub mod partitions;
pub mod qfunctions;
pub mod report;
pub mod series;

mod error;

pub use error::Error;
pub use laurent::LaurentPoly;
pub use monomial::SignedMonomial;
pub use series::QSeries;

/// Convenience alias used throughout for exact q-exponents.
pub type Rat = num_rational::Rational64;
