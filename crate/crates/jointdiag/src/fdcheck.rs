//! Finite-difference and Taylor-slope verification of the exact
//! derivatives.
//!
//! These evaluators only touch the functional itself, so they form an
//! independent route against the closed-form derivatives in [`calculus`].
//! The derivative-certification command and the test suites share them.

use num_traits::Float;

use crate::calculus::jth_differential_f;
use crate::collection::MatrixCollection;
use crate::cost::offdiag_cost;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Real, Scalar};
use crate::transform::TransformPoint;

/// Default relative step for first-order central differences.
pub fn default_first_step<R: Real>() -> R {
    R::from_f64(1e-6).unwrap()
}

/// Default relative step for second-order central differences.
pub fn default_second_step<R: Real>() -> R {
    R::from_f64(1e-4).unwrap()
}

/// Log-spaced evaluation offsets for the Taylor-remainder slope, all inside
/// [1e-3, 1e-1].
pub fn default_slope_grid<R: Real>() -> Vec<R> {
    [3e-2, 1e-2, 3e-3]
        .iter()
        .map(|&t| R::from_f64(t).unwrap())
        .collect()
}

fn cost_at<T: Scalar>(collection: &MatrixCollection<T>, q: &Matrix<T>) -> Result<T::Real> {
    offdiag_cost(collection, &TransformPoint::new(q.clone())?)
}

/// Central difference `(f(Q + tZ) - f(Q - tZ)) / (2t)` with
/// `t = step * max(1, ||Q||)`.
pub fn fd_first_directional<T: Scalar>(
    collection: &MatrixCollection<T>,
    q: &Matrix<T>,
    z: &Matrix<T>,
    step: f64,
) -> Result<T::Real> {
    let t = T::Real::from_f64(step).unwrap() * q.fro_norm().max(T::Real::one());
    let plus = cost_at(collection, &(q + &z.scaled(t)))?;
    let minus = cost_at(collection, &(q - &z.scaled(t)))?;
    Ok((plus - minus) / (t + t))
}

/// Second central difference `(f(Q + tZ) - 2 f(Q) + f(Q - tZ)) / t^2`.
pub fn fd_second_directional<T: Scalar>(
    collection: &MatrixCollection<T>,
    q: &Matrix<T>,
    z: &Matrix<T>,
    step: f64,
) -> Result<T::Real> {
    let t = T::Real::from_f64(step).unwrap() * q.fro_norm().max(T::Real::one());
    let two = T::Real::one() + T::Real::one();
    let plus = cost_at(collection, &(q + &z.scaled(t)))?;
    let center = cost_at(collection, q)?;
    let minus = cost_at(collection, &(q - &z.scaled(t)))?;
    Ok((plus - center * two + minus) / (t * t))
}

/// Componentwise central-difference gradient with respect to the real inner
/// product: real and (for complex scalars) imaginary parts are perturbed
/// independently.
pub fn fd_gradient<T: Scalar>(
    collection: &MatrixCollection<T>,
    q: &Matrix<T>,
    step: f64,
) -> Result<Matrix<T>> {
    let n = q.n()?;
    let t = T::Real::from_f64(step).unwrap() * q.fro_norm().max(T::Real::one());
    let two_t = t + t;
    let mut g = Matrix::<T>::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let mut probe = |delta: T| -> Result<T::Real> {
                let mut qp = q.clone();
                qp[(i, j)] += delta;
                let plus = cost_at(collection, &qp)?;
                let mut qm = q.clone();
                qm[(i, j)] -= delta;
                let minus = cost_at(collection, &qm)?;
                Ok((plus - minus) / two_t)
            };
            let re = probe(T::from_real(t))?;
            let im = match T::from_parts(T::Real::zero(), t) {
                Some(delta) => probe(delta)?,
                None => T::Real::zero(),
            };
            g[(i, j)] = T::from_parts(re, im).ok_or_else(|| {
                Error::NumericCheck("imaginary finite-difference on a real scalar".into())
            })?;
        }
    }
    Ok(g)
}

/// Least-squares slope of `log |f(Q + tZ) - taylor_order_j(t)|` against
/// `log t` over `grid`. A correct order-j expansion leaves a remainder of
/// order j+1, so the slope should approach j+1 from below.
pub fn taylor_remainder_slope<T: Scalar>(
    collection: &MatrixCollection<T>,
    q: &TransformPoint<T>,
    z: &Matrix<T>,
    order: u32,
    grid: &[T::Real],
) -> Result<f64> {
    if grid.len() < 2 {
        return Err(Error::InvalidArgument(
            "slope estimation needs at least two offsets".into(),
        ));
    }
    let mut coeffs = Vec::with_capacity(order as usize + 1);
    let mut fact = T::Real::one();
    for m in 0..=order {
        if m > 0 {
            fact = fact * T::Real::from_u32(m).unwrap();
        }
        coeffs.push(jth_differential_f(collection, q, z, m)? / fact);
    }
    let mut logs: Vec<(f64, f64)> = Vec::with_capacity(grid.len());
    for &t in grid {
        let ft = cost_at(collection, &(q.matrix() + &z.scaled(t)))?;
        let mut taylor = T::Real::zero();
        let mut tm = T::Real::one();
        for c in &coeffs {
            taylor = taylor + *c * tm;
            tm = tm * t;
        }
        let rem = (ft - taylor).abs().to_f64().unwrap_or(f64::MIN_POSITIVE);
        logs.push((
            t.to_f64().unwrap().ln(),
            rem.max(f64::MIN_POSITIVE).ln(),
        ));
    }
    // Ordinary least squares for the slope.
    let m = logs.len() as f64;
    let sx: f64 = logs.iter().map(|p| p.0).sum();
    let sy: f64 = logs.iter().map(|p| p.1).sum();
    let sxx: f64 = logs.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = logs.iter().map(|p| p.0 * p.1).sum();
    Ok((m * sxy - sx * sy) / (m * sxx - sx * sx))
}

/// Whether `z` is an admissible direction for certifying order `order`: the
/// leading remainder coefficient must clear an absolute floor and dominate
/// the next coefficient across the slope grid, otherwise remainder sign
/// changes make the fitted slope uninformative.
pub fn admissible_slope_direction<T: Scalar>(
    collection: &MatrixCollection<T>,
    q: &TransformPoint<T>,
    z: &Matrix<T>,
    order: u32,
    scale: T::Real,
) -> Result<bool> {
    let mut fact = T::Real::one();
    for m in 1..=order + 2 {
        fact = fact * T::Real::from_u32(m).unwrap();
        if m == order + 1 {
            let lead = (jth_differential_f(collection, q, z, m)? / fact).abs();
            let next_fact = fact * T::Real::from_u32(m + 1).unwrap();
            let next = (jth_differential_f(collection, q, z, m + 1)? / next_fact).abs();
            let floor = T::Real::from_f64(0.05).unwrap() * scale;
            let dominance = T::Real::from_f64(0.3).unwrap() * next;
            return Ok(lead >= floor && lead >= dominance);
        }
    }
    unreachable!("loop covers order + 1");
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    #[test]
    fn fd_gradient_matches_exact_on_small_problem() {
        let mut rng = ChaCha20Rng::seed_from_u64(60);
        let c = MatrixCollection::new(vec![Matrix::<f64>::from_fn(2, 2, |_, _| {
            f64::sample_standard(&mut rng)
        })])
        .unwrap();
        let q = TransformPoint::identity(2);
        let exact = crate::calculus::gradient(&c, &q).unwrap();
        let fd = fd_gradient(&c, q.matrix(), 1e-6).unwrap();
        assert!((&exact - &fd).fro_norm() <= 1e-6 * exact.fro_norm().max(1.0));
    }
}
