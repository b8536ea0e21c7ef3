//! Singular value decomposition by one-sided Jacobi rotations.
//!
//! Works over real and complex scalars and computes small singular values to
//! high relative accuracy, which the rank-deficiency diagnostics rely on.
//! `U` is always completed to a full unitary basis, including the columns
//! attached to (numerically) zero singular values.

use num_traits::Float;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Real, Scalar};

/// Full decomposition `A = U diag(sigma) V^*` of a square matrix.
#[derive(Debug, Clone)]
pub struct Svd<T: Scalar> {
    pub u: Matrix<T>,
    /// Nonnegative, nonincreasing.
    pub sigma: Vec<T::Real>,
    pub v: Matrix<T>,
}

const MAX_SWEEPS: usize = 60;

/// One-sided Jacobi SVD of a square matrix.
pub fn svd<T: Scalar>(a: &Matrix<T>) -> Result<Svd<T>> {
    let n = a.n()?;
    let mut g = a.clone();
    let mut v = Matrix::<T>::identity(n);
    let eps = T::Real::epsilon();

    let mut converged = false;
    for _sweep in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let mut app = T::Real::zero();
                let mut aqq = T::Real::zero();
                let mut apq = T::zero();
                for i in 0..n {
                    let gp = g[(i, p)];
                    let gq = g[(i, q)];
                    app = app + gp.abs_sq();
                    aqq = aqq + gq.abs_sq();
                    apq += gp.conj() * gq;
                }
                if app == T::Real::zero() || aqq == T::Real::zero() {
                    continue;
                }
                if apq.abs_sq() <= eps * eps * app * aqq {
                    continue;
                }
                rotated = true;
                // Phase that makes the pair inner product real positive.
                let g_abs = apq.abs();
                let phase = apq.scale(g_abs.recip()).conj();
                let zeta = (aqq - app) / (g_abs + g_abs);
                let t = {
                    let s = if zeta >= T::Real::zero() {
                        T::Real::one()
                    } else {
                        -T::Real::one()
                    };
                    s / (zeta.abs() + (T::Real::one() + zeta * zeta).sqrt())
                };
                let cs = (T::Real::one() + t * t).sqrt().recip();
                let sn = cs * t;
                for i in 0..n {
                    let gp = g[(i, p)];
                    let gq = g[(i, q)] * phase;
                    g[(i, p)] = gp.scale(cs) - gq.scale(sn);
                    g[(i, q)] = gp.scale(sn) + gq.scale(cs);
                }
                for i in 0..n {
                    let vp = v[(i, p)];
                    let vq = v[(i, q)] * phase;
                    v[(i, p)] = vp.scale(cs) - vq.scale(sn);
                    v[(i, q)] = vp.scale(sn) + vq.scale(cs);
                }
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::EigenNonConvergence {
            iterations: MAX_SWEEPS,
        });
    }

    // Column norms are the singular values; sort descending.
    let mut order: Vec<usize> = (0..n).collect();
    let norms: Vec<T::Real> = (0..n)
        .map(|j| {
            (0..n)
                .fold(T::Real::zero(), |s, i| s + g[(i, j)].abs_sq())
                .sqrt()
        })
        .collect();
    order.sort_by(|&x, &y| norms[y].partial_cmp(&norms[x]).unwrap());
    let sigma: Vec<T::Real> = order.iter().map(|&j| norms[j]).collect();
    let g = g.select_columns(&order);
    let v = v.select_columns(&order);

    // Normalize the nonzero columns into U, then complete the basis.
    let sigma_max = sigma.first().copied().unwrap_or(T::Real::zero());
    let floor = sigma_max * eps * T::Real::from_usize(n).unwrap();
    let mut u = Matrix::<T>::zeros(n, n);
    let mut fixed = Vec::with_capacity(n);
    for j in 0..n {
        if sigma[j] > floor && sigma[j] > T::Real::zero() {
            let inv = sigma[j].recip();
            for i in 0..n {
                u[(i, j)] = g[(i, j)].scale(inv);
            }
            fixed.push(j);
        }
    }
    for j in 0..n {
        if fixed.contains(&j) {
            continue;
        }
        complete_column(&mut u, &fixed, j);
        fixed.push(j);
    }
    Ok(Svd { u, sigma, v })
}

/// Fill column `j` of `u` with a unit vector orthogonal to the columns in
/// `fixed`, by Gram-Schmidt over the standard basis candidates.
fn complete_column<T: Scalar>(u: &mut Matrix<T>, fixed: &[usize], j: usize) {
    let n = u.rows();
    for cand in 0..n {
        let mut col: Vec<T> = (0..n)
            .map(|i| if i == cand { T::one() } else { T::zero() })
            .collect();
        // Two rounds of projection for orthogonality at working precision.
        for _ in 0..2 {
            for &f in fixed {
                let mut dot = T::zero();
                for i in 0..n {
                    dot += u[(i, f)].conj() * col[i];
                }
                for i in 0..n {
                    let s = u[(i, f)] * dot;
                    col[i] = col[i] - s;
                }
            }
        }
        let norm = col
            .iter()
            .fold(T::Real::zero(), |s, x| s + x.abs_sq())
            .sqrt();
        if norm > T::Real::from_f64(0.5).unwrap() {
            let inv = norm.recip();
            for i in 0..n {
                u[(i, j)] = col[i].scale(inv);
            }
            return;
        }
    }
    // Unreachable for fixed.len() < n: some basis vector always has a large
    // component outside the fixed span.
    unreachable!("basis completion failed");
}

/// Closest unitary matrix in Frobenius norm, `U V^*` from the SVD.
///
/// Errors on (numerically) singular input: the minimizer still exists, but
/// the retraction is reserved for invertible arguments.
pub fn closest_unitary<T: Scalar>(q: &Matrix<T>) -> Result<Matrix<T>> {
    let n = q.n()?;
    let dec = svd(q)?;
    let sigma_min = dec.sigma.last().copied().unwrap_or(T::Real::zero());
    let sigma_max = dec.sigma.first().copied().unwrap_or(T::Real::zero());
    let threshold =
        sigma_max * T::Real::epsilon() * T::Real::from_usize(n * 1000).unwrap();
    if sigma_min <= threshold {
        return Err(Error::SingularTransform {
            rcond: (sigma_min / sigma_max).to_f64().unwrap_or(0.0),
            threshold: (threshold / sigma_max).to_f64().unwrap_or(0.0),
        });
    }
    Ok(dec.u.matmul_adjoint(&dec.v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    fn check_svd<T: Scalar>(a: &Matrix<T>, tol: f64) {
        let n = a.rows();
        let Svd { u, sigma, v } = svd(a).unwrap();
        assert!(u.adjoint_matmul(&u).distance_from_identity().to_f64().unwrap() < tol);
        assert!(v.adjoint_matmul(&v).distance_from_identity().to_f64().unwrap() < tol);
        for w in sigma.windows(2) {
            assert!(w[0] >= w[1]);
        }
        let s = Matrix::<T>::diagonal(
            &sigma
                .iter()
                .map(|&x| T::from_real(x))
                .collect::<Vec<_>>(),
        );
        let rec = u.matmul(&s).matmul_adjoint(&v);
        let scale = a.fro_norm().to_f64().unwrap().max(1.0);
        assert!(
            (&rec - a).fro_norm().to_f64().unwrap() < tol * scale,
            "reconstruction failed for n={n}"
        );
    }

    #[test]
    fn svd_random() {
        let mut rng = ChaCha20Rng::seed_from_u64(7);
        for n in [1usize, 2, 3, 5, 8] {
            let a = Matrix::<f64>::from_fn(n, n, |_, _| f64::sample_standard(&mut rng));
            check_svd(&a, 1e-12);
            let c = Matrix::<Complex<f64>>::from_fn(n, n, |_, _| {
                <Complex<f64>>::sample_standard(&mut rng)
            });
            check_svd(&c, 1e-12);
        }
    }

    #[test]
    fn svd_rank_deficient_completes_u() {
        let mut rng = ChaCha20Rng::seed_from_u64(8);
        // Rank-2 4x4 matrix.
        let b = Matrix::<f64>::from_fn(4, 2, |_, _| f64::sample_standard(&mut rng));
        let c = Matrix::<f64>::from_fn(2, 4, |_, _| f64::sample_standard(&mut rng));
        let a = b.matmul(&c);
        check_svd(&a, 1e-10);
        let dec = svd(&a).unwrap();
        assert!(dec.sigma[2] < 1e-10 * dec.sigma[0]);
        assert!(dec.sigma[3] < 1e-10 * dec.sigma[0]);
    }

    #[test]
    fn svd_diagonal() {
        let a = Matrix::<f64>::diagonal(&[3.0, -2.0, 0.5]);
        let dec = svd(&a).unwrap();
        assert!((dec.sigma[0] - 3.0).abs() < 1e-14);
        assert!((dec.sigma[1] - 2.0).abs() < 1e-14);
        assert!((dec.sigma[2] - 0.5).abs() < 1e-14);
    }

    #[test]
    fn closest_unitary_examples() {
        // 2I retracts to I.
        let q = Matrix::<f64>::identity(3).scaled(2.0);
        let r = closest_unitary(&q).unwrap();
        assert!(r.distance_from_identity() < 1e-13);

        // Positive diagonal retracts to I.
        let q = Matrix::<f64>::diagonal(&[3.0, 0.5]);
        let r = closest_unitary(&q).unwrap();
        assert!(r.distance_from_identity() < 1e-13);

        // Singular input is refused.
        let q = Matrix::<f64>::diagonal(&[1.0, 0.0]);
        assert!(closest_unitary(&q).is_err());
    }

    #[test]
    fn closest_unitary_minimality_random_comparison() {
        let mut rng = ChaCha20Rng::seed_from_u64(9);
        let q = Matrix::<Complex<f64>>::from_fn(4, 4, |_, _| {
            <Complex<f64>>::sample_standard(&mut rng)
        });
        let r = closest_unitary(&q).unwrap();
        assert!(r.adjoint_matmul(&r).distance_from_identity() < 1e-12);
        let best = (&q - &r).fro_norm();
        for _ in 0..100 {
            let w = crate::linalg::qr::haar_factor(&Matrix::<Complex<f64>>::from_fn(
                4,
                4,
                |_, _| <Complex<f64>>::sample_standard(&mut rng),
            ));
            assert!((&q - &w).fro_norm() >= best - 1e-12);
        }
    }
}
