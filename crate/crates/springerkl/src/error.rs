//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// An argument was outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Exact polynomial division left a nonzero remainder.
    #[error("not divisible: {0}")]
    NotDivisible(String),

    /// The shape is not of hook or two-row type, or the operation does
    /// not apply to this shape class.
    #[error("unsupported shape [{shape}]: {reason}")]
    UnsupportedShape { shape: String, reason: String },

    /// Two arguments that must live over the same shape (or diagram
    /// size) do not.
    #[error("mismatch: {0}")]
    Mismatch(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// An enumeration would exceed the configured size limit.
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    /// The Gram equation system did not have a one-dimensional solution
    /// space, or a solved entry failed to clear denominators.
    #[error("solve failure: {0}")]
    SolveFailure(String),

    #[error("invalid cup diagram: {0}")]
    InvalidDiagram(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
}

pub type Result<T> = std::result::Result<T, Error>;
