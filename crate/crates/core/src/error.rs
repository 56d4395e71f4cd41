use thiserror::Error;

use crate::chains::Params;

/// Errors raised by element construction and the algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("invalid parameters n={n}, p={p}: both must be at least 1")]
    InvalidParams { n: i64, p: i64 },

    #[error("parameter mismatch: {left} vs {right}")]
    ParamMismatch { left: Params, right: Params },

    #[error("{literal} is not in the universe for {params}: {reason}")]
    Universe { literal: String, params: Params, reason: &'static str },

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("cannot parse element literal {input:?}: {reason}")]
    Literal { input: String, reason: String },
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;

pub(crate) fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(AlgebraError::Overflow)
}

pub(crate) fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(AlgebraError::Overflow)
}

pub(crate) fn neg(a: i64) -> Result<i64> {
    a.checked_neg().ok_or(AlgebraError::Overflow)
}

pub(crate) fn mul2(a: i64) -> Result<i64> {
    a.checked_mul(2).ok_or(AlgebraError::Overflow)
}
