use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible dimensions: {0}x{1} vs {2}x{3}")]
    DimensionMismatch(usize, usize, usize, usize),
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("matrix is not symmetric at ({0},{1})")]
    NotSymmetric(usize, usize),
    #[error("the zero polynomial is not supported here")]
    ZeroPolynomial,
    #[error("degree sequence is empty")]
    EmptySequence,
    #[error("degree sequence increases at position {0}")]
    NotSorted(usize),
    #[error("construction string is empty")]
    EmptyString,
    #[error("construction string ends in 0 (the graph would be disconnected)")]
    TrailingZero,
    #[error("construction string contains {0:?}; only '0' and '1' are allowed")]
    BadStringChar(char),
    #[error("not a threshold degree sequence")]
    NotThreshold,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("the 1-vertex graph has no construction string")]
    Singleton,
    #[error("not a canonical threshold Laplacian: {0}")]
    NotCanonicalLaplacian(String),
    #[error("vertices {0} and {1} have different degrees")]
    DegreeMismatch(usize, usize),
    #[error("index {0} out of range (length {1})")]
    IndexOutOfRange(usize, usize),
    #[error("control matrix violates its kind: {0}")]
    BadControlMatrix(String),
    #[error("eigenbasis fails exact verification: {0}")]
    InvalidBasis(String),
    #[error("checking-matrix column {0} is not an exact eigenvector")]
    BadCheckingColumn(usize),
    #[error("spectrum is not certified distinct")]
    NotCertified,
    #[error("equivalence check violated: {0}")]
    EquivalenceViolation(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
