use thiserror::Error;

use crate::report::Report;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not an odd prime (or exceeds 2^32)")]
    InvalidField(u64),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("not invertible: {0}")]
    NotInvertible(String),

    #[error("bialgebra has no antipode")]
    NoAntipode,

    #[error("Hopf axioms fail:\n{0}")]
    Axioms(Box<Report>),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("inconsistent data: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
