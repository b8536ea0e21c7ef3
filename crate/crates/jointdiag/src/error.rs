//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by matrix kernels, calculus, diagnostics and solvers.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Operand shapes are incompatible with the requested operation.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: String, got: String },

    /// A square matrix was required.
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    /// A transform point fell below the invertibility threshold.
    #[error("matrix is numerically singular (reciprocal condition {rcond:.3e} <= threshold {threshold:.3e})")]
    SingularTransform { rcond: f64, threshold: f64 },

    /// The eigenvalue iteration did not converge.
    #[error("eigenvalue iteration failed to converge after {iterations} steps")]
    EigenNonConvergence { iterations: usize },

    /// Parameter outside the supported range.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Problem size exceeds a guard built into the operation.
    #[error("{0}")]
    SizeGuard(String),

    /// A precondition on the input collection failed.
    #[error("matrix {index} is not self-adjoint: ||A - A*|| = {deviation:.3e} exceeds {tolerance:.3e} * ||A||")]
    NotSelfAdjoint {
        index: usize,
        deviation: f64,
        tolerance: f64,
    },

    /// A_1 must have distinct eigenvalues for the subspace enumeration.
    #[error("leading matrix does not have numerically distinct eigenvalues (min gap {min_gap:.3e})")]
    EigenvaluesNotDistinct { min_gap: f64 },

    /// The rank-deficient target is degenerate at the requested rank.
    #[error("target is degenerate: singular value sigma_{index} = {value:.3e} is below the rank tolerance")]
    DegenerateTarget { index: usize, value: f64 },

    /// Internal consistency check failed; results would be unreliable.
    #[error("internal numeric check failed: {0}")]
    NumericCheck(String),

    /// File I/O failure.
    #[error("io error on {path}: {message}")]
    Io { path: String, message: String },

    /// Malformed or inconsistent serialized data.
    #[error("invalid collection file: {0}")]
    FileFormat(String),

    /// The file declares a schema version this build does not understand.
    #[error("unsupported schema version {found} (supported: {supported})")]
    SchemaVersion { found: u64, supported: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn dim(expected: impl Into<String>, got: impl Into<String>) -> Self {
        Error::DimensionMismatch {
            expected: expected.into(),
            got: got.into(),
        }
    }
}
