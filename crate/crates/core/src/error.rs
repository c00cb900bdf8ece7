use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty multidegree")]
    EmptyMultidegree,
    #[error("invalid generator name {0:?}")]
    InvalidGenerator(String),
    #[error("oracle degree limit: degree {degree} exceeds bound {bound}")]
    OracleDegreeLimit { degree: usize, bound: usize },
    #[error("oracle/basis mismatch: {0}")]
    OracleMismatch(String),
    #[error("head requires multilinear element")]
    NotMultilinear,
    #[error("not a Jordan element")]
    NotJordan,
    #[error("not a Lie element")]
    NotLie,
    #[error("need at least 2 variables, got {0}")]
    TooFewVariables(usize),
    #[error("repeated variable {0}")]
    RepeatedVariable(String),
    #[error("unmapped variable {0}")]
    UnmappedVariable(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("finite check requires multilinear identity")]
    FiniteNotMultilinear,
    #[error("generator must be multilinear: {0}")]
    GeneratorNotMultilinear(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("degree {degree} out of range ({min}..={max})")]
    DegreeOutOfRange { degree: usize, min: usize, max: usize },
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("zero denominator")]
    ZeroDenominator,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
