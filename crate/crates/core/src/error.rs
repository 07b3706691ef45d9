use thiserror::Error;

#[derive(Debug, Error)]
pub enum GeomError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },
    #[error("grid mismatch: operands must share a sphere grid")]
    GridMismatch,
    #[error("unsupported representation: {0}")]
    UnsupportedRepresentation(&'static str),
    #[error("unbounded body: {0}")]
    UnboundedBody(&'static str),
    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),
}

pub type Result<T> = std::result::Result<T, GeomError>;

impl GeomError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        GeomError::InvalidArgument(msg.into())
    }
}
