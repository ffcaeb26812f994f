use thiserror::Error;

/// Errors raised by graph ingestion, analysis and search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PdtError {
    /// Malformed graph6 or edge-list input.
    #[error("format error: {0}")]
    Format(String),
    /// A node label or builtin name that does not exist.
    #[error("not found: {0}")]
    NotFound(String),
    /// Input violates an operation precondition (e.g. disconnected graph).
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// Invalid numeric parameter.
    #[error("invalid parameter: {0}")]
    Parameter(String),
}

pub type Result<T> = std::result::Result<T, PdtError>;
