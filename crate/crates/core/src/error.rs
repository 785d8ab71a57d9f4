//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by the public API.
///
/// Configuration errors come from invalid sampler or experiment parameters,
/// argument errors from malformed inputs to individual operations, and the
/// `ExhaustiveCapExceeded` variant is the refusal issued when a full Hochster
/// enumeration is requested above the configured vertex cap.
#[derive(Debug, Error)]
pub enum Error {
    #[error("configuration error: {0}")]
    Config(String),

    #[error("argument error: {0}")]
    Argument(String),

    #[error("isolated vertex {vertex} present; the normalized Laplacian requires minimum degree 1")]
    IsolatedVertex { vertex: usize },

    #[error(
        "n = {n} exceeds the exhaustive cap {cap}; run `invariants --certified --d <d>` \
         for certificate-based bounds instead"
    )]
    ExhaustiveCapExceeded { n: usize, cap: usize },

    #[error("graph file, line {line}: {msg}")]
    GraphFile { line: usize, msg: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
