use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("p = {p} is in the wrong residue class: need p = {expected} (mod 4)")]
    ResidueClass { p: u64, expected: u64 },

    #[error("invalid polynomial: {0}")]
    InvalidPoly(String),

    #[error("polynomial {0} is not primitive")]
    NotPrimitive(String),

    #[error("digit {digit} at position {position} is outside the alphabet of size {alphabet}")]
    DigitOutOfRange {
        digit: u8,
        position: usize,
        alphabet: u8,
    },

    #[error("shift {tau} is out of range for period {period}")]
    ShiftOutOfRange { tau: usize, period: usize },

    #[error("index {index} is out of range (must be below {bound})")]
    IndexOutOfRange { index: u64, bound: u64 },

    #[error("binary sequence is not ideal: C({tau}) = {value}, expected -1")]
    NotIdealAutocorrelation { tau: usize, value: i64 },

    #[error("binary sequence has weight {weight}, expected {expected}")]
    WrongWeight { weight: usize, expected: usize },

    #[error("invalid period {period}: {reason}")]
    InvalidPeriod { period: usize, reason: &'static str },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed sequence file: {0}")]
    Parse(String),

    #[error("{0}")]
    Io(String),
}
