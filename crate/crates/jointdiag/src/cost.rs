//! The off-diagonality functional and its supporting kernels: the
//! diagonal-killing mask, the similarity transform, and the Gersgorin-type
//! norm comparison.

use num_traits::Float;

use crate::collection::MatrixCollection;
use crate::error::{Error, Result};
use crate::linalg::eig::spectral_radius;
use crate::matrix::Matrix;
use crate::scalar::{Real, Scalar};
use crate::transform::TransformPoint;

/// Zero the diagonal, keep everything else: the Hadamard product with the
/// all-ones-off-diagonal mask.
pub fn hadamard_offdiag<T: Scalar>(a: &Matrix<T>) -> Result<Matrix<T>> {
    let n = a.n()?;
    let mut out = a.clone();
    for i in 0..n {
        out[(i, i)] = T::zero();
    }
    Ok(out)
}

/// Squared Frobenius norm of the off-diagonal part, without materializing
/// the masked matrix.
pub fn offdiag_norm_sq<T: Scalar>(a: &Matrix<T>) -> T::Real {
    let n = a.rows();
    let mut acc = T::Real::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc = acc + a[(i, j)].abs_sq();
            }
        }
    }
    acc
}

/// Similarity transform `Q^{-1} A Q`, computed by a factorized solve.
///
/// Eigenvalues are preserved; the off-diagonal mass generally is not.
pub fn similarity<T: Scalar>(a: &Matrix<T>, q: &TransformPoint<T>) -> Result<Matrix<T>> {
    let n = a.n()?;
    if n != q.n() {
        return Err(Error::dim(
            format!("{0}x{0} to match the transform", q.n()),
            format!("{n}x{n}"),
        ));
    }
    q.solve(&a.matmul(q.matrix()))
}

/// The off-diagonality functional
/// `f(Q) = 1/2 sum_k || offdiag(Q^{-1} A_k Q) ||_F^2`.
///
/// Terms are accumulated in collection order for determinism. Debug builds
/// cross-check the masked-norm evaluation against the elementwise sum.
pub fn offdiag_cost<T: Scalar>(
    collection: &MatrixCollection<T>,
    q: &TransformPoint<T>,
) -> Result<T::Real> {
    if collection.n() != q.n() {
        return Err(Error::dim(
            format!("collection of side {}", collection.n()),
            format!("transform of side {}", q.n()),
        ));
    }
    let half = T::Real::from_f64(0.5).unwrap();
    let mut total = T::Real::zero();
    for a in collection.iter() {
        let d = similarity(a, q)?;
        let masked = offdiag_norm_sq(&d);
        #[cfg(debug_assertions)]
        {
            let elementwise = {
                let m = hadamard_offdiag(&d)?;
                m.fro_norm_sq()
            };
            let scale = masked.max(elementwise).max(T::Real::epsilon());
            debug_assert!(
                (masked - elementwise).abs() <= T::Real::from_f64(1e-14).unwrap() * scale,
                "masked-norm and elementwise evaluations disagree"
            );
        }
        total = total + masked;
    }
    Ok(total * half)
}

/// The three norms of the Gersgorin comparison and the resulting bound.
#[derive(Debug, Clone)]
pub struct GersgorinBound<R> {
    /// ||offdiag(A)||_F
    pub offdiag_norm: R,
    /// ||A||_F
    pub full_norm: R,
    /// max |lambda| over the spectrum
    pub spectral_max: R,
    /// sqrt(n) * (spectral_max + 2n * offdiag_norm)
    pub upper: R,
}

/// Norm comparison `||offdiag(A)|| <= ||A|| <= sqrt(n)(max|lambda| + 2n ||offdiag(A)||)`.
///
/// The upper bound comes from covering the spectrum with Gersgorin disks; it
/// is what forces the functional to blow up near rank-deficient points.
pub fn gersgorin_check<T: Scalar>(a: &Matrix<T>) -> Result<GersgorinBound<T::Real>> {
    let n = a.n()?;
    let offdiag_norm = offdiag_norm_sq(a).sqrt();
    let full_norm = a.fro_norm();
    let spectral_max = spectral_radius(a)?;
    let nf = T::Real::from_usize(n).unwrap();
    let two = T::Real::one() + T::Real::one();
    let upper = nf.sqrt() * (spectral_max + two * nf * offdiag_norm);
    Ok(GersgorinBound {
        offdiag_norm,
        full_norm,
        spectral_max,
        upper,
    })
}
