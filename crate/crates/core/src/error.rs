use thiserror::Error;

/// Errors surfaced by group construction and multiplier computations.
///
/// `Resource` is deliberately distinct from any claim of infiniteness:
/// coset enumeration that runs out of room proves nothing about the
/// presented group.
#[derive(Debug, Error)]
pub enum Error {
    #[error("resource limit exceeded: {what} (limit {limit})")]
    Resource { what: String, limit: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown catalog name: {0}")]
    UnknownCatalog(String),

    #[error("invariant violation: {0}")]
    Invariant(String),

    #[error("group mismatch: {0}")]
    GroupMismatch(String),

    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }
}
