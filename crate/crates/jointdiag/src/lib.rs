//! Approximate joint diagonalization of matrix collections.
//!
//! Given matrices `A_1, ..., A_K`, the off-diagonality functional
//!
//! ```text
//! f(Q) = 1/2 sum_k || offdiag(Q^{-1} A_k Q) ||_F^2
//! ```
//!
//! measures how far a basis candidate `Q` is from jointly diagonalizing the
//! collection. This crate provides:
//!
//! - the functional, the similarity kernel behind it, and a Gersgorin-type
//!   norm comparison ([`cost`]);
//! - exact first, second, and arbitrary-order directional derivatives, the
//!   gradient, and the Hessian as a matrix-free real-linear operator
//!   ([`calculus`]);
//! - well-posedness diagnostics: divergence probing toward rank-deficient
//!   matrices, common-invariant-subspace search, and a Sylvester-resultant
//!   test for distinct eigenvalues ([`wellposed`]);
//! - descent solvers on the invertible matrices and on the unitary group
//!   ([`solvers`]);
//! - synthetic problem generation with ground truth and a JSON file format
//!   ([`problems`]).
//!
//! Everything is generic over the scalar type: `f32`/`f64` and their complex
//! extensions. Concrete aliases for the common double-precision case live at
//! the crate root.

pub mod calculus;
pub mod collection;
pub mod cost;
pub mod error;
pub mod fdcheck;
pub mod linalg;
pub mod matrix;
pub mod problems;
pub mod scalar;
pub mod solvers;
pub mod transform;
pub mod wellposed;

pub use collection::MatrixCollection;
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use scalar::{ComplexScalar, Field, Real, Scalar};
pub use transform::TransformPoint;

/// Double-precision complex entry.
pub type Complex64 = num_complex::Complex<f64>;

/// Double-precision real matrix.
pub type RealMatrix = Matrix<f64>;
/// Double-precision complex matrix.
pub type ComplexMatrix = Matrix<Complex64>;
/// Double-precision real collection.
pub type RealCollection = MatrixCollection<f64>;
/// Double-precision complex collection.
pub type ComplexCollection = MatrixCollection<Complex64>;
