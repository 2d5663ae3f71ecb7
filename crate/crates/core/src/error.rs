use thiserror::Error;

/// Errors raised by the engines. Verification failures that are part of an
/// operation's normal output (axiom violations, failed suites) are values,
/// not errors.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input: masks out of range, overlapping removal sets,
    /// duplicate labels, unresolved label references.
    #[error("structural error: {0}")]
    Structural(String),

    /// An operation's stated precondition does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// The query is outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A size cap or search budget was exceeded.
    #[error("resource limit: {what} ({detail})")]
    Resource { what: String, detail: String },

    /// Malformed JSON or expression.
    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),

    /// An internal invariant failed. Carries a state dump for replay.
    #[error("internal invariant failure: {message}")]
    Internal { message: String, dump: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn resource(what: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Resource {
            what: what.into(),
            detail: detail.into(),
        }
    }

    pub(crate) fn internal(message: impl Into<String>, dump: impl Into<String>) -> Self {
        Error::Internal {
            message: message.into(),
            dump: dump.into(),
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
