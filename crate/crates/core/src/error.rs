use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("conductor mismatch: {0} vs {1} (lift to a common conductor first)")]
    ConductorMismatch(u32, u32),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },

    #[error("axiom violations in {algebra}: {}", .violations.join("; "))]
    AxiomViolations {
        algebra: String,
        violations: Vec<String>,
    },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("{what} not found within bound {bound}")]
    BoundExceeded { what: String, bound: u64 },

    #[error("size envelope exceeded: {0}")]
    TooLarge(String),

    #[error("not a twist: {0}")]
    NotATwist(String),

    #[error("consistency check failed: {0}")]
    Inconsistent(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
