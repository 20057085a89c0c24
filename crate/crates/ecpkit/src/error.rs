use thiserror::Error;

/// Crate-wide error type. Decode failures are not errors: decoding functions
/// return `Option`, since failure on overweight input is an ordinary outcome.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("modulus is not irreducible over GF({0})")]
    ReducibleModulus(u64),
    #[error("modulus has degree {got}, expected {want}")]
    ModulusDegree { got: usize, want: usize },
    #[error("field order {0} exceeds the supported bound 2^32")]
    FieldTooLarge(u128),
    #[error("no subfield embedding: source and target are not a compatible tower")]
    IncompatibleTower,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("matrix does not have full row rank")]
    RankDeficient,
    #[error("enumeration guard exceeded: {0}")]
    EnumerationGuard(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("error weight {got} exceeds budget {budget}")]
    WeightExceeded { got: usize, budget: usize },
    #[error("pair failed verification: {0}")]
    UnverifiedPair(String),
    #[error("resampling budget exhausted after {0} attempts")]
    ResampleBudget(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported format version {0}")]
    Version(u32),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
