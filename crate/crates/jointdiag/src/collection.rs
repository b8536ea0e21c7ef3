//! The tuple of square matrices to be jointly diagonalized.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Field, Real, Scalar};

/// An immutable collection `A_1, ..., A_K` of n x n matrices over one field.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixCollection<T: Scalar> {
    n: usize,
    entries: Vec<Matrix<T>>,
}

impl<T: Scalar> MatrixCollection<T> {
    /// Validates that all matrices are square with equal side and k >= 1.
    pub fn new(entries: Vec<Matrix<T>>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidArgument(
                "collection needs at least one matrix".into(),
            ));
        }
        let n = entries[0].n()?;
        if n == 0 {
            return Err(Error::InvalidArgument("collection needs n >= 1".into()));
        }
        for (k, a) in entries.iter().enumerate() {
            if !a.is_square() || a.rows() != n {
                return Err(Error::dim(
                    format!("{n}x{n} at index {k}"),
                    format!("{}x{}", a.rows(), a.cols()),
                ));
            }
        }
        Ok(MatrixCollection { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.entries.len()
    }

    pub fn field(&self) -> Field {
        T::FIELD
    }

    pub fn get(&self, k: usize) -> &Matrix<T> {
        &self.entries[k]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Matrix<T>> {
        self.entries.iter()
    }

    pub fn matrices(&self) -> &[Matrix<T>] {
        &self.entries
    }

    /// Sum of squared Frobenius norms, the natural scale of the functional.
    pub fn norm_sq_sum(&self) -> T::Real {
        self.entries
            .iter()
            .fold(T::Real::zero(), |s, a| s + a.fro_norm_sq())
    }

    /// Index of the first matrix violating `||A - A*|| <= tol * ||A||`,
    /// or `None` when the whole collection is self-adjoint within `tol`.
    pub fn first_non_self_adjoint(&self, tol: T::Real) -> Option<usize> {
        self.entries
            .iter()
            .position(|a| a.self_adjoint_deviation() > tol * a.fro_norm())
    }
}
