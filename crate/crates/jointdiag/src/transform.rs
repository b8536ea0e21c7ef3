//! Invertible basis candidates with a cached factorization.

use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::lu::{LuFactors, Op};
use crate::matrix::Matrix;
use crate::scalar::{Real, Scalar};

/// An invertible matrix `Q` together with its LU factorization and a
/// reciprocal condition estimate. Construction rejects numerically singular
/// candidates; every `Q^{-1}X` and `Q^{-*}X` in the crate goes through the
/// cached factors rather than an explicit inverse.
#[derive(Debug, Clone)]
pub struct TransformPoint<T: Scalar> {
    q: Matrix<T>,
    lu: LuFactors<T>,
    rcond: T::Real,
}

/// Reciprocal-condition threshold below which a candidate counts as
/// singular: `1e3 * n * machine_epsilon` of the underlying real type.
pub fn singularity_threshold<R: Real>(n: usize) -> R {
    R::from_f64(1e3).unwrap() * R::from_usize(n).unwrap() * R::epsilon()
}

impl<T: Scalar> TransformPoint<T> {
    pub fn new(q: Matrix<T>) -> Result<Self> {
        let n = q.n()?;
        let lu = LuFactors::factor(&q)?;
        let rcond = lu.rcond_one();
        let threshold = singularity_threshold::<T::Real>(n);
        if !(rcond > threshold) {
            return Err(Error::SingularTransform {
                rcond: rcond.to_f64().unwrap_or(0.0),
                threshold: threshold.to_f64().unwrap_or(0.0),
            });
        }
        Ok(TransformPoint { q, lu, rcond })
    }

    pub fn identity(n: usize) -> Self {
        Self::new(Matrix::identity(n)).expect("identity is invertible")
    }

    pub fn n(&self) -> usize {
        self.q.rows()
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.q
    }

    pub fn rcond(&self) -> T::Real {
        self.rcond
    }

    /// Q^{-1} B via the cached factorization.
    pub fn solve(&self, b: &Matrix<T>) -> Result<Matrix<T>> {
        self.lu.solve(b, Op::None)
    }

    /// Q^{-*} B via the cached factorization.
    pub fn solve_adjoint(&self, b: &Matrix<T>) -> Result<Matrix<T>> {
        self.lu.solve(b, Op::Adjoint)
    }
}
