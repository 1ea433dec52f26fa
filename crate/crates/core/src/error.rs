use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("pole at {0}")]
    Pole(String),
    #[error("argument outside domain: {0}")]
    Domain(String),
    #[error("function undefined: {0}")]
    Undefined(String),
    #[error("series did not converge: {0}")]
    NoConvergence(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    #[error("limit case not implemented: {0}")]
    LimitNotImplemented(String),
    #[error("window mismatch: {0}")]
    WindowMismatch(String),
    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
