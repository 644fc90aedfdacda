//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug)]
pub enum Error {
    /// Malformed input: bad names, schema violations, mismatched subjects.
    #[error("input error: {0}")]
    Input(String),

    /// An operation's closure precondition on the family is not met.
    #[error("missing closure: {0}")]
    MissingClosure(String),

    /// A bounded search finished without finding the requested instance.
    #[error("search exhausted: {0}")]
    SearchExhausted(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Error {
        Error::Input(msg.into())
    }

    pub fn missing_closure(msg: impl Into<String>) -> Error {
        Error::MissingClosure(msg.into())
    }
}
