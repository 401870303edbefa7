use alloc::string::String;

/// Errors raised by the numerical routines in this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the domain of the function.
    #[error("domain error: {0}")]
    Domain(String),

    /// Requested precision below the supported floor.
    #[error("invalid precision: digits must be >= 16 and guard >= 5 (got digits={digits}, guard={guard})")]
    Precision { digits: usize, guard: usize },

    #[error("anchor mismatch between power series")]
    AnchorMismatch,

    #[error("non-unit divisor: constant term of the divisor is zero")]
    NonUnitDivisor,

    #[error("inversion undefined (f'(a)=0)")]
    InversionUndefined,

    /// Index tuple does not satisfy its summation constraint.
    #[error("constraint violation: {0}")]
    Constraint(String),

    #[error("insufficient derivative data: need {needed} values, got {got}")]
    InsufficientData { needed: usize, got: usize },

    #[error("root finder did not converge after {0} iterations")]
    NonConvergence(usize),

    #[error("cannot parse number: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
