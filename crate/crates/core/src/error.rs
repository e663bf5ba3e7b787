use thiserror::Error;

use crate::circle::Model;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Arithmetic between two different real quadratic fields.
    #[error("unsupported field: cannot combine sqrt({0}) with sqrt({1})")]
    UnsupportedField(u64, u64),

    #[error("square root of {0} does not lie in a real quadratic field")]
    NotQuadratic(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("model mismatch: expected {expected:?}, found {found:?}")]
    ModelMismatch { expected: Model, found: Model },

    #[error("degenerate chord: endpoints coincide")]
    DegenerateChord,

    #[error("map is not orientation preserving")]
    NotOrientationPreserving,

    #[error("map is the identity: every point is fixed")]
    AllFixed,

    #[error("map fixes a whole interval")]
    NonIsolatedFixedPoints,

    #[error("operation not supported for this map: {0}")]
    UnsupportedMap(String),

    #[error("element is not hyperbolic")]
    NotHyperbolic,

    #[error("rotation angle must be irrational")]
    RationalAngle,

    #[error("fixed-point flags must alternate between attracting and repelling")]
    NonAlternating,

    #[error("lamination is not loose at {0}")]
    NotLoose(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
