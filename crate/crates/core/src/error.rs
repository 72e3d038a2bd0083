use thiserror::Error;

/// Errors raised by the library. Every fallible operation returns one of these.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("q = {0} is not prime")]
    NotPrime(u32),
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error("modulus is reducible over GF({q})")]
    Reducible { q: u32 },
    #[error("modulus has degree {got}, expected {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("modulus is not monic")]
    NotMonic,
    #[error("coefficient {0} is not an element of the base field")]
    BadCoefficient(u32),
    #[error("value {value} is not an element of a field of size {size}")]
    NotAnElement { value: u64, size: u32 },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("basis elements are linearly dependent")]
    DependentBasis,
    #[error("generator rows are linearly dependent")]
    DependentRows,
    #[error("{0} out of range")]
    OutOfRange(String),
    #[error("enumeration of {size} items exceeds the guard of {limit}")]
    GuardExceeded { size: String, limit: u64 },
    #[error("vector does not lie in the subspace")]
    NotInSubspace,
    #[error("subspaces do not form a direct sum")]
    NotDirectSum,
    #[error("no closed form for this case")]
    NoClosedForm,
    #[error("non-integral result: {0}")]
    NonIntegral(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
