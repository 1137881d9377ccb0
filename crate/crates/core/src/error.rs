use thiserror::Error;

/// Errors raised by the group, table and block machinery.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("group of order {order} exceeds the enumeration bound {bound}")]
    Capacity { order: u64, bound: u64 },

    #[error("element is not a member of the group: {0}")]
    Membership(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("reduction error: {0}")]
    Reduction(String),

    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("parse error at {locus}: {message}")]
    Parse { locus: String, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
