use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported characteristic {characteristic}: {reason}")]
    UnsupportedCharacteristic {
        characteristic: u64,
        reason: &'static str,
    },

    #[error("{0} is not a prime modulus")]
    NotPrime(u64),

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("degree too small: {0}")]
    DegreeTooSmall(String),

    #[error("not separable: {0}")]
    NotSeparable(String),

    #[error("search too large: about {estimated} iterations, ceiling is {ceiling}")]
    SearchTooLarge { estimated: u128, ceiling: u128 },

    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),

    #[error("orbit reaches a root of f at step {0}")]
    OrbitHitsRoot(usize),

    #[error("orbit value at step {step} exceeds {limit} decimal digits")]
    OrbitOverflowLimit { step: usize, limit: usize },

    #[error("could not factor {0} within the iteration budget")]
    FactorizationBudget(String),

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("invalid coefficient `{text}`: {reason}")]
    InvalidCoefficient { text: String, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn mismatch(left: impl std::fmt::Debug, right: impl std::fmt::Debug) -> Self {
        Error::FieldMismatch {
            left: format!("{left:?}"),
            right: format!("{right:?}"),
        }
    }

    pub(crate) fn char_two(reason: &'static str) -> Self {
        Error::UnsupportedCharacteristic {
            characteristic: 2,
            reason,
        }
    }
}
