use thiserror::Error;

/// Errors raised by field arithmetic, polynomial operations and the encoders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("unsupported field size p^t = {p}^{t} (at most {max} elements)")]
    UnsupportedSize { p: u64, t: u64, max: u64 },
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("expected {expected} variables, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("polynomial degree {degree} exceeds the bound {bound}")]
    DegreeTooLarge { degree: i64, bound: i64 },
    #[error("exponent {exponent} of a single variable is not below q = {q}")]
    NotReduced { exponent: i64, q: u32 },
    #[error("degree out of range: d = {d} must satisfy 0 <= d < {limit}")]
    DegreeOutOfRange { d: i64, limit: i64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("evaluation matrix on the information set is singular (m = {m}, d = {d})")]
    InvalidInformationSet { m: usize, d: i64 },
    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("component {component} has degree {degree}, above its bound {bound}")]
    ComponentDegreeTooLarge {
        component: String,
        degree: i64,
        bound: i64,
    },
    #[error("codeword shape {got_positions}x{got_symbols} does not match {positions}x{symbols}")]
    ShapeMismatch {
        positions: usize,
        symbols: usize,
        got_positions: usize,
        got_symbols: usize,
    },
    #[error("derivative codes need a single variable, got m = {0}")]
    NotUnivariate(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
