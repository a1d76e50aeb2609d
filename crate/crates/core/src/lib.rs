//! Exact-arithmetic apparatus around the number zeta(3):
//!
//! - [`exact`]: arbitrary-precision rationals, dense univariate and bivariate
//!   polynomials, the Euler operator delta = z d/dz, rational intervals.
//! - [`cf`]: generic continued-fraction machinery (convergents, convergent
//!   matrices, equivalence transforms).
//! - [`apery`]: the Apery and Nesterenko sequences for zeta(3) and the exact
//!   2x2 intertwining identities relating them.
//! - [`matrix`]: the 4x4 polynomial matrix system, its inversion and
//!   left-eigenrow identities, conjugated forms and scaled limits.
//! - [`beta`]: partial-fraction coefficient tables, their generating
//!   polynomials, polylogarithm tails, and linear forms in zeta(2), zeta(3).
//! - [`theorem_a`]: the two continued-fraction expansions of 2*zeta(3) built
//!   from the delta-recurrences, with convergence-rate measurements.
//! - [`oracle`]: an independent series reference for zeta(3) with certified
//!   rational enclosures, plus digit extraction and slope regression.
//! - [`suites`]: named verification suites assembling everything above.
//! - [`report`]: line-oriented check records serialized as JSON.

pub mod apery;
pub mod beta;
pub mod cf;
pub mod exact;
pub mod matrix;
pub mod oracle;
pub mod report;
pub mod suites;
pub mod theorem_a;

pub use exact::{Rational, UniPoly, Var};

use thiserror::Error;

/// Errors shared across the verification modules.
#[derive(Debug, Error)]
pub enum Error {
    /// A partial numerator a_nu of a continued fraction is zero at a queried
    /// index; the fraction truncates there.
    #[error("zero partial numerator a_{index}")]
    ZeroPartialNumerator { index: i64 },
    /// An equivalence-transform scale d_nu is zero.
    #[error("zero scale d_{index} in equivalence transform")]
    ZeroScale { index: i64 },
    /// A convergent denominator Q_nu is zero, so the ratio P_nu/Q_nu is
    /// undefined.
    #[error("convergent denominator Q_{index} is zero")]
    DividedByZeroConvergent { index: i64 },
    /// An identity that must hold exactly failed; `detail` names the first
    /// counterexample.
    #[error("identity violation in {check}: {detail}")]
    IdentityViolation { check: String, detail: String },
    /// A sequence element needed a strictly positive error but matched the
    /// reference exactly.
    #[error("zero error term at position {index}; slope of log-error undefined")]
    NonPositiveError { index: usize },
    /// A series was evaluated outside its convergence region (z <= 1).
    #[error("series diverges at z = {z}")]
    Divergence { z: String },
    /// A digit request beyond the supported precision.
    #[error("requested {requested} digits exceeds the supported maximum {max}")]
    ExcessivePrecision { requested: u32, max: u32 },
}

impl Error {
    /// Shorthand used by the verification sweeps.
    pub fn violation(check: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::IdentityViolation {
            check: check.into(),
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
