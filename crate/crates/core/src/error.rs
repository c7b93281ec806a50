use thiserror::Error;

/// Errors raised by the algebraic and combinatorial layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("shape error: {0}")]
    ShapeError(String),
    #[error("invalid field characteristic {0}: must be 0 or a prime below 2^31")]
    InvalidField(u64),
    #[error("composition mismatch: {0}")]
    CompositionMismatch(String),
    #[error("square does not commute")]
    NonCommutingSquare,
    #[error("three-term sequence is not a complex (v∘u ≠ 0)")]
    NotAComplex,
    #[error("feet mismatch: {0}")]
    FootMismatch(String),
    #[error("vertex index {index} out of range for {n_vertices} vertices")]
    BadVertexIndex { index: usize, n_vertices: usize },
    #[error("invalid simplicial map: {0}")]
    InvalidSimplicialMap(String),
    #[error("invalid chain data: {0}")]
    InvalidChain(String),
    #[error("not a triad: {0}")]
    NotATriad(String),
    #[error("homology degree {0} too low for the spanical extension (need q >= 1)")]
    DegreeTooLow(i64),
}

pub type Result<T> = std::result::Result<T, Error>;
