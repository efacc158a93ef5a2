//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by estimation, bridging, and simulation routines.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument was outside the mathematical domain of the operation
    /// (non-finite input, probability outside [0,1], ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A statistic fell outside the attainable range of a bridging function
    /// by more than the clamping tolerance. Reports the attainable interval.
    #[error("{what} = {value} outside attainable range [{lo}, {hi}]")]
    Range {
        what: String,
        value: f64,
        lo: f64,
        hi: f64,
    },

    /// The sample does not support the requested estimate
    /// (single-class data, empty subset, missing pairwise weights, ...).
    #[error("estimation error: {0}")]
    Estimation(String),

    /// A population or sampling-plan specification is infeasible.
    #[error("specification error: {0}")]
    Specification(String),

    /// Invalid configuration or input data.
    #[error("invalid input: {0}")]
    Config(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn estimation(msg: impl Into<String>) -> Self {
        Error::Estimation(msg.into())
    }

    pub fn specification(msg: impl Into<String>) -> Self {
        Error::Specification(msg.into())
    }

    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
