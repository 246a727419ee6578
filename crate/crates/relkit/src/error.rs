//! Error type for constructors, parsers and preconditioned operations.
//!
//! Algebraic operations on already-constructed relations treat carrier
//! mismatches as programming errors and panic; everything that consumes
//! external input (labels, files, CLI arguments) or has a documented
//! precondition returns `Result<_, RelError>` instead.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum RelError {
    /// A text-format problem, with the 1-based line it occurred on.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A carrier was declared with the same label twice.
    #[error("duplicate label `{label}` in carrier `{carrier}`")]
    DuplicateLabel { carrier: String, label: String },

    /// A pair referenced a label the carrier does not contain.
    #[error("unknown label `{label}` for carrier `{carrier}`")]
    UnknownLabel { carrier: String, label: String },

    /// A relation header referenced an undeclared carrier.
    #[error("unknown carrier `{0}`")]
    UnknownCarrier(String),

    /// A name lookup for a relation failed.
    #[error("unknown relation `{0}`")]
    UnknownRel(String),

    /// A documented precondition of an operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An exhaustive procedure was asked to cover a space beyond its budget.
    #[error("budget exceeded: {0}")]
    TooLarge(String),
}

impl RelError {
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        RelError::Parse { line, msg: msg.into() }
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        RelError::Precondition(msg.into())
    }
}
