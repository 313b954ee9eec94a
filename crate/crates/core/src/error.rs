use thiserror::Error;

/// Errors produced by the core crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-range input value.
    #[error("invalid input: {0}")]
    Input(String),

    /// An edge set that does not span its ambient space.
    #[error("edge set spans a subspace of dimension {span_dim}, expected full rank {rank}")]
    Rank { rank: u32, span_dim: u32 },

    /// A requested enumeration or search exceeds its configured budget.
    #[error("{what}: {count} exceeds the cap of {cap}")]
    Resource { what: String, count: u128, cap: u128 },

    /// A `.bm` document could not be parsed.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    /// A precondition of an operation is not met by its input.
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
