//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised by Young-function construction, evaluation, and the
/// numerical operations built on top of them.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument lies outside the operation's domain (negative `t`,
    /// evaluation at a removable singularity, and so on).
    #[error("domain error: {0}")]
    Domain(String),

    /// A catalog form or splice was given parameters that do not produce a
    /// Young function.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The operation requires a strictly increasing, finite-valued Young
    /// function and the argument is flagged non-strict.
    #[error("non-strict Young function: {0}")]
    NonStrict(String),

    /// The function cannot be inverted at the requested value.
    #[error("not invertible at y = {y}: {reason}")]
    NonInvertible { y: f64, reason: String },

    /// The operation is only defined for Δ₂ functions (finite upper
    /// Lebesgue exponent).
    #[error("Δ₂ condition required: {0}")]
    Delta2Required(String),

    /// The operation needs the limits of g_Φ at 0 and ∞ and at least one of
    /// them could not be established.
    #[error("limits of g_Phi required: {0}")]
    LimitsRequired(String),

    /// Constructor parameters lie outside the regime the construction can
    /// reach.
    #[error("infeasible construction: {0}")]
    Infeasible(String),

    /// An iterative search exhausted its budget.
    #[error("no convergence: {0}")]
    NonConvergence(String),

    /// Quadrature error estimate exceeded the acceptable bound without a
    /// divergence verdict.
    #[error("quadrature failure: error estimate {estimate:e} exceeds {limit:e}")]
    QuadratureFailure { estimate: f64, limit: f64 },

    /// The integrand is (numerically) zero, so the Luxemburg norm is not
    /// defined by the usual bisection.
    #[error("zero function")]
    ZeroFunction,

    /// The modular diverges for every scaling, so the norm is infinite.
    #[error("divergent: {0}")]
    Divergent(String),

    /// A nested mixed-norm computation failed for a specific outer
    /// coordinate.
    #[error("inner norm failed at y = {y}: {source}")]
    InnerFailure {
        y: f64,
        #[source]
        source: Box<Error>,
    },

    /// A claimed bound was violated during verification.
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
