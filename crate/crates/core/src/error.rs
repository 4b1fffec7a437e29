use thiserror::Error;

/// Errors raised by every fallible operation in the crate.
///
/// The variants fall into two families that the command-line front end maps
/// to distinct exit codes: contract violations (bad input, unsupported
/// shapes) and refusals (a window or precision could not be certified).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field size {0} exceeds the supported cap 2^16")]
    FieldTooLarge(u64),
    #[error("modulus is not irreducible over F_{0}")]
    Reducible(u64),
    #[error("modulus degree {found} does not match extension degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("operands live in different fields or value spaces")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("window too small: {0}")]
    Instability(String),
    #[error("precision cannot be certified: {0}")]
    Precision(String),
    #[error("degenerate pairing: {0}")]
    Degenerate(String),
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    /// True for refusals caused by insufficient window size or precision.
    pub fn is_refusal(&self) -> bool {
        matches!(self, Error::Instability(_) | Error::Precision(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
