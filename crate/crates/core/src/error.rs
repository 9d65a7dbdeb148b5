use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {0} exceeds the 2^16 element limit")]
    FieldTooLarge(u128),
    #[error("modulus has degree {got}, expected {want}")]
    ModulusDegree { got: usize, want: usize },
    #[error("polynomial is reducible")]
    ReduciblePolynomial,
    #[error("no monic irreducible of degree {0} found")]
    NoIrreducible(usize),
    #[error("element index {index} out of range for a field of order {q}")]
    ElementOutOfRange { index: u32, q: u32 },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("polynomial must be monic of degree at least 1")]
    NotMonic,
    #[error("ambient space mismatch")]
    AmbientMismatch,
    #[error("predicted search size {predicted} exceeds cap {cap}")]
    CapExceeded { predicted: u128, cap: u64 },
    #[error("cap must be positive")]
    ZeroCap,
    #[error("k = {k} must divide n = {n}")]
    NonDivisorDimension { k: usize, n: usize },
    #[error("rank-metric shape {k}x{m} violates k <= m")]
    RankShape { k: usize, m: usize },
    #[error("minimum distance is undefined for fewer than two words")]
    UndefinedMinimum,
    #[error("supplied generator is not an automorphism of the code")]
    NotAnAutomorphism,
}

pub type Result<T> = std::result::Result<T, Error>;
