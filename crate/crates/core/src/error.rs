use thiserror::Error;

/// Failure modes shared by every computation in the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Input violates a structural invariant (shape, hermiticity, trace, positivity, ...).
    #[error("validation failed: {invariant} (magnitude {magnitude:e})")]
    Validation { invariant: String, magnitude: f64 },

    /// Input is well formed but outside the domain of the requested quantity.
    #[error("domain error: {0}")]
    Domain(String),

    /// The problem exceeds a configured size cap.
    #[error("resource limit: {what} requires {required}, cap is {cap}")]
    Resource {
        what: &'static str,
        required: u128,
        cap: u128,
    },

    /// Two independent numerical routes disagree beyond the allowed tolerance.
    #[error("numerical consistency failure: {what} (discrepancy {discrepancy:e})")]
    NumericalConsistency { what: String, discrepancy: f64 },
}

impl Error {
    pub(crate) fn validation(invariant: impl Into<String>, magnitude: f64) -> Self {
        Error::Validation {
            invariant: invariant.into(),
            magnitude,
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Validation { .. } | Error::Domain(_) => 2,
            Error::Resource { .. } => 3,
            Error::NumericalConsistency { .. } => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
