//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operands belong to incompatible frames")]
    FrameMismatch,

    #[error("matrix must be square of even dimension")]
    OddDimension,

    #[error("matrix is not antisymmetric")]
    NotAntisymmetric,

    #[error("three-form indices ({i}, {j}, {k}) must be distinct and below {n}")]
    BadThreeFormIndex { i: usize, j: usize, k: usize, n: usize },

    #[error("J squared is not minus identity")]
    NotMinusIdentity,

    #[error("matrix is not orthogonal for the natural pairing")]
    NotOrthogonal,

    #[error("omega is not invertible")]
    SingularOmega,

    #[error("imaginary part must be positive")]
    NonPositiveImaginaryPart,

    #[error("value must be positive")]
    NonPositive,

    #[error("expected a {expected} modulus, found a {found} modulus")]
    WrongRole {
        expected: &'static str,
        found: &'static str,
    },

    #[error("fiber form coefficient must be nonzero")]
    DegenerateFiberForm,

    #[error("denominator must be a positive integer")]
    BadDenominator,

    #[error("cannot parse rational from {input:?}: {reason}")]
    ParseRational { input: String, reason: &'static str },

    #[error("malformed structure: {0}")]
    Malformed(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
