//! Crate-wide error type.

/// Errors reported by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A parameter is outside the operation's documented domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A configured resource cap (node budget, monomial cap, vertex cap, …)
    /// would be exceeded. Callers can distinguish this from a domain error to
    /// retry with a larger cap.
    #[error("resource cap exceeded: {0}")]
    Resource(String),

    /// A family file failed to parse. `line` is 1-based.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
