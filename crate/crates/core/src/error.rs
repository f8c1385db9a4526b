//! Crate-wide error type.

use thiserror::Error;

/// Errors shared by all modules. Exact enumeration refuses instances above
/// the configured caps rather than falling back to approximation, so
/// `CapExceeded` is an expected outcome for large inputs.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown graph name '{0}'")]
    UnknownGraph(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("cap exceeded: {0}")]
    CapExceeded(String),

    #[error("operation requires a simple graph: {0}")]
    NotSimple(String),

    #[error("operation requires a regular graph: {0}")]
    NotRegular(String),

    #[error("rejection budget exhausted after {attempts} attempts")]
    RejectionBudget { attempts: u32 },

    #[error("degenerate input: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
