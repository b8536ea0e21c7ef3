//! Householder QR over real or complex scalars.

use num_traits::Float;

use crate::matrix::Matrix;
use crate::scalar::{Real, Scalar};

/// Full QR decomposition `A = Q R` with `Q` unitary (rows x rows) and `R`
/// upper trapezoidal.
pub fn qr<T: Scalar>(a: &Matrix<T>) -> (Matrix<T>, Matrix<T>) {
    let m = a.rows();
    let n = a.cols();
    let mut r = a.clone();
    let mut q = Matrix::<T>::identity(m);
    let steps = n.min(m.saturating_sub(1));
    for k in 0..steps {
        // Householder vector for column k below the diagonal.
        let mut norm_sq = T::Real::zero();
        for i in k..m {
            norm_sq = norm_sq + r[(i, k)].abs_sq();
        }
        let norm = norm_sq.sqrt();
        if norm == T::Real::zero() {
            continue;
        }
        let x0 = r[(k, k)];
        // alpha = -phase(x0) * ||x||, with phase(0) = 1.
        let phase = if x0 == T::zero() {
            T::one()
        } else {
            x0.scale(x0.abs().recip())
        };
        let alpha = -phase.scale(norm);
        let mut v: Vec<T> = (k..m).map(|i| r[(i, k)]).collect();
        v[0] = v[0] - alpha;
        let v_norm_sq = v.iter().fold(T::Real::zero(), |s, x| s + x.abs_sq());
        if v_norm_sq == T::Real::zero() {
            continue;
        }
        let beta = v_norm_sq.recip();
        // r <- (I - 2 v v^* / v^* v) r, applied to the trailing block.
        for j in k..n {
            let mut dot = T::zero();
            for i in k..m {
                dot += v[i - k].conj() * r[(i, j)];
            }
            let f = dot.scale(beta + beta);
            for i in k..m {
                let s = v[i - k] * f;
                let cur = r[(i, j)];
                r[(i, j)] = cur - s;
            }
        }
        // q <- q (I - 2 v v^* / v^* v)
        for i in 0..m {
            let mut dot = T::zero();
            for l in k..m {
                dot += q[(i, l)] * v[l - k];
            }
            let f = dot.scale(beta + beta);
            for l in k..m {
                let s = f * v[l - k].conj();
                let cur = q[(i, l)];
                q[(i, l)] = cur - s;
            }
        }
    }
    // Zero the sub-diagonal explicitly.
    for j in 0..n {
        for i in j + 1..m {
            r[(i, j)] = T::zero();
        }
    }
    (q, r)
}

/// QR-based orthonormalization of the columns of `a` (assumed full column
/// rank): returns the thin unitary factor, m x n.
pub fn orthonormal_columns<T: Scalar>(a: &Matrix<T>) -> Matrix<T> {
    let (q, _) = qr(a);
    q.select_columns(&(0..a.cols()).collect::<Vec<_>>())
}

/// Unitary factor with the phase convention that `R` has positive real
/// diagonal. On Gaussian input this samples the Haar measure.
pub fn haar_factor<T: Scalar>(a: &Matrix<T>) -> Matrix<T> {
    let (mut q, r) = qr(a);
    let n = r.rows().min(r.cols());
    for j in 0..n {
        let d = r[(j, j)];
        if d == T::zero() {
            continue;
        }
        let phase = d.scale(d.abs().recip());
        for i in 0..q.rows() {
            let cur = q[(i, j)];
            q[(i, j)] = cur * phase;
        }
    }
    q
}
