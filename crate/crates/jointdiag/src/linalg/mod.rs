//! Factorization kernels: LU solves, Householder QR, one-sided Jacobi SVD,
//! and a shifted-QR eigensolver.

pub mod eig;
pub mod lu;
pub mod qr;
pub mod svd;

pub use eig::{eigen_pairs, eigenvalues, min_eigenvalue_gap, spectral_radius};
pub use lu::{LuFactors, Op};
pub use qr::{haar_factor, orthonormal_columns, qr};
pub use svd::{closest_unitary, svd, Svd};
