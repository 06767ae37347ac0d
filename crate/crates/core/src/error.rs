use thiserror::Error;

/// Errors produced by the arithmetic, summation and reporting layers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("resource limit: {0}")]
    Resource(String),

    #[error("budget exceeded: x = {x} is above the quadratic-time budget {budget}")]
    BudgetExceeded { x: u64, budget: u64 },

    #[error("numerical instability: exponential sum for d = {d}, m = {m} evaluated to {value}")]
    NumericalInstability { d: u64, m: u64, value: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
