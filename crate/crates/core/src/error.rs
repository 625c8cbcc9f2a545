use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WidthError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("{what}: n = {n} exceeds the size cap of {cap}")]
    SizeLimitExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
    },
    #[error("malformed input at line {line}: {message}")]
    MalformedInput { line: usize, message: String },
    #[error("invalid separator: {0}")]
    InvalidSeparator(String),
    #[error("graph is not chordal")]
    NotChordal,
    #[error("audit violation: {0}")]
    AuditViolation(String),
    #[error("arithmetic overflow evaluating {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, WidthError>;

pub(crate) fn domain(msg: impl Into<String>) -> WidthError {
    WidthError::Domain(msg.into())
}
