//! Error taxonomy shared across the library.

use thiserror::Error;

/// Library-wide error type.
///
/// Variants map onto the CLI exit-code contract: validation-class errors
/// (bad inputs, malformed files) exit 2, resource refusals exit 3, and
/// numerical failures exit 4.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid domain inputs: broken invariants, inconsistent schemes,
    /// malformed configuration.
    #[error("validation: {0}")]
    Validation(String),

    /// A query outside the supported domain (e.g. an intensity outside
    /// the tabulated hazard grid).
    #[error("out of range: {0}")]
    Range(String),

    /// File parsing failures (CSV, TOML, model files).
    #[error("parse: {0}")]
    Parse(String),

    /// The operation was refused because it would exceed a configured
    /// resource budget (memory plan, oracle size cap).
    #[error("resource refusal: {0}")]
    Resource(String),

    /// Matrix decomposition failure (non-positive-definite correlation
    /// after jitter escalation).
    #[error("decomposition: {0}")]
    Decomposition(String),

    /// Numerical algorithm failure (quadrature or series non-convergence).
    #[error("numerical: {0}")]
    Numerical(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Exit code for the CLI: 2 validation, 3 resource, 4 numerical.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Validation(_) | Error::Range(_) | Error::Parse(_) | Error::Io(_) => 2,
            Error::Resource(_) => 3,
            Error::Decomposition(_) | Error::Numerical(_) => 4,
        }
    }
}
