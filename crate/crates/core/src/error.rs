//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid configuration; carries the offending field path.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// Dense eigensolver failure, tagged with the ensemble member it
    /// occurred in when known.
    #[error("eigensolver failed{}: {message}", member.map(|m| format!(" (member {m})")).unwrap_or_default())]
    Eigensolve {
        member: Option<usize>,
        message: String,
    },

    /// Adaptive quadrature did not reach the requested tolerance.
    #[error("quadrature did not converge: achieved {achieved:.3e}, requested {requested:.3e} ({context})")]
    QuadratureNoConvergence {
        achieved: f64,
        requested: f64,
        context: String,
    },

    /// Least-squares fit failure; carries the residual trace.
    #[error("fit did not converge: {0}")]
    FitFailed(String),

    /// Unitarity defect beyond the hard bound while building a Floquet
    /// operator (signals a construction bug, not a data problem).
    #[error("unitarity violation: defect {defect:.3e} exceeds {bound:.3e}")]
    UnitarityViolation { defect: f64, bound: f64 },

    /// Spectrum cache file is malformed or truncated.
    #[error("corrupt cache file {path}: {reason}")]
    CorruptCache { path: String, reason: String },

    #[error("empty input: {0}")]
    EmptyInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
