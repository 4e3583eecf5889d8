use thiserror::Error;

use crate::scalar::FieldSpec;

/// Errors raised by the algebra kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: FieldSpec, right: FieldSpec },

    #[error("context mismatch: {0}")]
    ContextMismatch(String),

    #[error("quadratic form mismatch: {0}")]
    FormMismatch(String),

    #[error("operation `{op}` is unavailable in characteristic {characteristic}: {reason}")]
    Characteristic {
        op: &'static str,
        characteristic: u64,
        reason: &'static str,
    },

    #[error("form is not alternating")]
    NotAlternating,

    #[error("odd dimension {0}: Pfaffian needs an even-dimensional matrix")]
    OddDimension(usize),

    #[error("word of length {len} exceeds the grade cap {cap}")]
    GradeCap { len: usize, cap: usize },

    #[error("dimension {dim} exceeds the limit {limit} for `{op}`")]
    DimensionGuard {
        op: &'static str,
        dim: usize,
        limit: usize,
    },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    /// Malformed-input errors, as opposed to domain errors raised by a
    /// well-formed request.
    pub fn is_malformed_input(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::Invalid(_)
                | Error::DimensionMismatch { .. }
                | Error::IndexOutOfRange { .. }
        )
    }

    /// Stable machine-readable tag used in JSON error payloads.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "division-by-zero",
            Error::FieldMismatch { .. } => "field-mismatch",
            Error::ContextMismatch(_) => "context-mismatch",
            Error::FormMismatch(_) => "form-mismatch",
            Error::Characteristic { .. } => "characteristic",
            Error::NotAlternating => "not-alternating",
            Error::OddDimension(_) => "odd-dimension",
            Error::GradeCap { .. } => "grade-cap",
            Error::DimensionGuard { .. } => "dimension-guard",
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::IndexOutOfRange { .. } => "index-out-of-range",
            Error::Parse(_) => "parse",
            Error::Invalid(_) => "invalid",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
