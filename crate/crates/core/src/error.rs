use thiserror::Error;

/// Errors raised by the algebra, kite and emanation layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension exponent {0} is outside the supported range 0..={max}", max = crate::MAX_DIM_EXPONENT)]
    UnsupportedDimension(u32),
    #[error("index {index} does not fit in a 2^{n}-dimensional algebra")]
    IndexOutOfRange { index: u32, n: u32 },
    #[error("dimension mismatch: 2^{left} vs 2^{right}")]
    DimensionMismatch { left: u32, right: u32 },
    #[error("({a}, {b}, {c}) is not a trip: indices must be distinct, nonzero and satisfy a xor b = c")]
    NotATrip { a: u32, b: u32, c: u32 },
    #[error("strut constant {s} is invalid for a 2^{n}-dimensional algebra")]
    StrutOutOfRange { s: u32, n: u32 },
    #[error("({low}, {high}) is not an assessor in a 2^{n}-dimensional algebra")]
    InvalidAssessor { low: u32, high: u32, n: u32 },
    #[error("({a}, {b}, {c}) is not an O-trip")]
    NotAnOTrip { a: u32, b: u32, c: u32 },
    #[error("diagonal of assessor ({low}, {high}) does not lie on the requested sail")]
    NotOnSail { low: u32, high: u32 },
    #[error("product {left} * {right} is not a positive multiple of any yard line")]
    NonCollapsible { left: String, right: String },
    #[error("assessors ({0}, {1}) zero-divide under both orientation pairings")]
    EdgeSignConflict(u32, u32),
    #[error("vertices do not form a box-kite: {0}")]
    NotABoxKite(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
