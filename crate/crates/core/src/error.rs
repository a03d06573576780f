//! Error type shared across the crate.
//!
//! `Internal` is reserved for conditions that signal an arithmetic bug in
//! this library (failed self-verification of an exact computation, loss of
//! integrality during Jack normalization, disagreement between two
//! independent computation routes). These must never fire on valid input;
//! the CLI maps them to a distinct exit code.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Input outside an operation's domain (size mismatch, bad cell, etc.).
    #[error("domain error: {0}")]
    Domain(String),

    /// Polynomial degree exceeds the order of a basis transform.
    #[error("degree overflow: degree {degree} exceeds transform order {order}")]
    DegreeOverflow { degree: usize, order: usize },

    /// Polynomial is not in the span of the target basis.
    #[error("not in span: {0}")]
    NotInSpan(String),

    /// Self-verification of an exact computation failed; indicates a bug.
    #[error("internal inconsistency: {0}")]
    Internal(String),

    /// Enumeration or construction bound exceeded.
    #[error("resource bound exceeded: {0}")]
    Resource(String),

    /// Check id not present in the verification registry.
    #[error("unknown check: {0}")]
    UnknownCheck(String),

    #[error("cache i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("cache format error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
