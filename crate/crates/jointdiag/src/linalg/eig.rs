//! General nonsymmetric eigenvalues via complex Hessenberg reduction and
//! shifted QR iteration, plus inverse-iteration eigenvectors for matrices
//! with distinct eigenvalues.
//!
//! Real input is lifted to the complex extension first; one code path covers
//! both fields. Intended for the desk-scale sizes of this crate.

use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::lu::{LuFactors, Op};
use crate::matrix::Matrix;
use crate::scalar::{ComplexScalar, Real, Scalar};

/// Eigenvalues of a square matrix, sorted lexicographically by (re, im).
pub fn eigenvalues<T: Scalar>(a: &Matrix<T>) -> Result<Vec<T::Cx>> {
    let mut h = hessenberg(&a.complexify())?;
    let mut vals = qr_iterate(&mut h)?;
    sort_lex(&mut vals);
    Ok(vals)
}

/// Largest eigenvalue modulus.
pub fn spectral_radius<T: Scalar>(a: &Matrix<T>) -> Result<T::Real> {
    Ok(eigenvalues(a)?
        .iter()
        .fold(T::Real::zero(), |m, l| m.max(l.abs())))
}

/// Smallest pairwise distance between eigenvalues (infinity for n < 2).
pub fn min_eigenvalue_gap<C: ComplexScalar>(vals: &[C]) -> C::Real {
    let mut gap = C::Real::infinity();
    for i in 0..vals.len() {
        for j in i + 1..vals.len() {
            gap = gap.min((vals[i] - vals[j]).abs());
        }
    }
    gap
}

/// Eigenvalues and unit eigenvectors of a matrix with distinct eigenvalues.
///
/// Vectors come from inverse iteration on the (complexified) input, one
/// column per eigenvalue, sorted together with the eigenvalues.
pub fn eigen_pairs<T: Scalar>(a: &Matrix<T>) -> Result<(Vec<T::Cx>, Matrix<T::Cx>)> {
    let n = a.n()?;
    let ac = a.complexify();
    let vals = eigenvalues(a)?;
    let scale = ac.fro_norm().max(T::Real::one());
    let mut vectors = Matrix::<T::Cx>::zeros(n, n);
    for (idx, &lambda) in vals.iter().enumerate() {
        let vec = inverse_iteration(&ac, lambda, scale)?;
        vectors.set_column(idx, &vec);
    }
    Ok((vals, vectors))
}

fn sort_lex<C: ComplexScalar>(vals: &mut [C]) {
    vals.sort_by(|a, b| {
        a.re()
            .partial_cmp(&b.re())
            .unwrap()
            .then(a.im().partial_cmp(&b.im()).unwrap())
    });
}

/// Householder reduction to upper Hessenberg form (similarity transform).
fn hessenberg<C: ComplexScalar>(a: &Matrix<C>) -> Result<Matrix<C>> {
    let n = a.n()?;
    let mut h = a.clone();
    for k in 0..n.saturating_sub(2) {
        let mut norm_sq = C::Real::zero();
        for i in k + 1..n {
            norm_sq = norm_sq + h[(i, k)].abs_sq();
        }
        let norm = norm_sq.sqrt();
        if norm == C::Real::zero() {
            continue;
        }
        let x0 = h[(k + 1, k)];
        let phase = if x0 == C::zero() {
            C::one()
        } else {
            x0.scale(x0.abs().recip())
        };
        let alpha = -phase.scale(norm);
        let mut v: Vec<C> = (k + 1..n).map(|i| h[(i, k)]).collect();
        v[0] = v[0] - alpha;
        let v_norm_sq = v.iter().fold(C::Real::zero(), |s, x| s + x.abs_sq());
        if v_norm_sq == C::Real::zero() {
            continue;
        }
        let beta = (C::Real::one() + C::Real::one()) / v_norm_sq;
        // Rows: h <- (I - beta v v^*) h on rows k+1.., all columns.
        for j in k..n {
            let mut dot = C::zero();
            for i in k + 1..n {
                dot += v[i - k - 1].conj() * h[(i, j)];
            }
            let f = dot.scale(beta);
            for i in k + 1..n {
                let s = v[i - k - 1] * f;
                h[(i, j)] -= s;
            }
        }
        // Columns: h <- h (I - beta v v^*) on columns k+1.., all rows.
        for i in 0..n {
            let mut dot = C::zero();
            for j in k + 1..n {
                dot += h[(i, j)] * v[j - k - 1];
            }
            let f = dot.scale(beta);
            for j in k + 1..n {
                let s = f * v[j - k - 1].conj();
                h[(i, j)] -= s;
            }
        }
    }
    for j in 0..n {
        for i in j + 2..n {
            h[(i, j)] = C::zero();
        }
    }
    Ok(h)
}

/// Complex Givens rotation [c s; -conj(s) c] with real c mapping (f, g) to
/// (r, 0).
fn givens<C: ComplexScalar>(f: C, g: C) -> (C::Real, C) {
    if g == C::zero() {
        return (C::Real::one(), C::zero());
    }
    if f == C::zero() {
        return (C::Real::zero(), g.conj().scale(g.abs().recip()));
    }
    let fa = f.abs();
    let d = (fa * fa + g.abs_sq()).sqrt();
    let c = fa / d;
    let s = (f * g.conj()).scale((d * fa).recip());
    (c, s)
}

/// Shifted QR iteration on an upper Hessenberg matrix; returns eigenvalues.
fn qr_iterate<C: ComplexScalar>(h: &mut Matrix<C>) -> Result<Vec<C>> {
    let n = h.rows();
    let mut vals = vec![C::zero(); n];
    if n == 0 {
        return Ok(vals);
    }
    let eps = C::Real::epsilon();
    let mut hi = n - 1;
    let mut total_iters = 0usize;
    let max_iters = 60 * n.max(4);
    let mut stagnation = 0usize;
    loop {
        // Deflate negligible subdiagonals.
        for i in 1..=hi {
            let s = h[(i - 1, i - 1)].abs() + h[(i, i)].abs();
            let s = if s == C::Real::zero() {
                h.fro_norm()
            } else {
                s
            };
            if h[(i, i - 1)].abs() <= eps * s {
                h[(i, i - 1)] = C::zero();
            }
        }
        // Find the active block [lo, hi].
        let mut lo = hi;
        while lo > 0 && h[(lo, lo - 1)] != C::zero() {
            lo -= 1;
        }
        if lo == hi {
            vals[hi] = h[(hi, hi)];
            if hi == 0 {
                break;
            }
            hi -= 1;
            stagnation = 0;
            continue;
        }

        total_iters += 1;
        stagnation += 1;
        if total_iters > max_iters {
            return Err(Error::EigenNonConvergence {
                iterations: total_iters,
            });
        }

        let shift = if stagnation % 12 == 0 {
            // Exceptional shift breaks rare stalls.
            let extra = if hi >= 2 {
                h[(hi - 1, hi - 2)].abs()
            } else {
                C::Real::zero()
            };
            C::from_real(h[(hi, hi - 1)].abs() + extra)
        } else {
            wilkinson_shift(
                h[(hi - 1, hi - 1)],
                h[(hi - 1, hi)],
                h[(hi, hi - 1)],
                h[(hi, hi)],
            )
        };

        // Explicit shifted QR step on the block.
        for i in lo..=hi {
            h[(i, i)] -= shift;
        }
        let mut rots = Vec::with_capacity(hi - lo);
        for i in lo..hi {
            let (c, s) = givens(h[(i, i)], h[(i + 1, i)]);
            rots.push((c, s));
            for j in i..=hi {
                let a = h[(i, j)];
                let b = h[(i + 1, j)];
                h[(i, j)] = a.scale(c) + s * b;
                h[(i + 1, j)] = b.scale(c) - s.conj() * a;
            }
        }
        for (offset, &(c, s)) in rots.iter().enumerate() {
            let i = lo + offset;
            let top = hi.min(i + 1);
            for r in lo..=top {
                let a = h[(r, i)];
                let b = h[(r, i + 1)];
                h[(r, i)] = a.scale(c) + b * s.conj();
                h[(r, i + 1)] = b.scale(c) - s * a;
            }
        }
        for i in lo..=hi {
            h[(i, i)] += shift;
        }
    }
    Ok(vals)
}

fn wilkinson_shift<C: ComplexScalar>(a: C, b: C, c: C, d: C) -> C {
    let half = C::Real::from_f64(0.5).unwrap();
    let tr2 = (a + d).scale(half);
    let det = a * d - b * c;
    let disc = (tr2 * tr2 - det).csqrt();
    let l1 = tr2 + disc;
    let l2 = tr2 - disc;
    if (l1 - d).abs() <= (l2 - d).abs() {
        l1
    } else {
        l2
    }
}

/// One eigenvector by inverse iteration; requires the eigenvalue to be
/// simple and reasonably separated.
fn inverse_iteration<C: ComplexScalar>(
    a: &Matrix<C>,
    lambda: C,
    scale: C::Real,
) -> Result<Vec<C>> {
    let n = a.rows();
    // Tiny shift keeps A - lambda I invertible at working precision.
    let shift = lambda
        + C::from_real(scale * C::Real::epsilon() * C::Real::from_f64(32.0).unwrap());
    let mut b = a.clone();
    for i in 0..n {
        b[(i, i)] -= shift;
    }
    let lu = LuFactors::factor(&b)?;
    let inv_sqrt_n = C::Real::from_usize(n).unwrap().sqrt().recip();
    let mut x = Matrix::<C>::from_fn(n, 1, |_, _| C::from_real(inv_sqrt_n));
    for _ in 0..4 {
        let y = match lu.solve(&x, Op::None) {
            Ok(y) => y,
            Err(_) => break,
        };
        let norm = y.fro_norm();
        if !norm.is_finite() || norm == C::Real::zero() {
            break;
        }
        x = y.scaled(norm.recip());
    }
    // Residual check against the untouched matrix.
    let ax = a.matmul(&x);
    let mut res = C::Real::zero();
    for i in 0..n {
        res = res + (ax[(i, 0)] - lambda * x[(i, 0)]).abs_sq();
    }
    let res = res.sqrt();
    let tol = scale * C::Real::epsilon().sqrt();
    if res > tol {
        return Err(Error::NumericCheck(format!(
            "inverse iteration residual {res:.3e} exceeds {tol:.3e}; eigenvalue may be clustered"
        )));
    }
    Ok(x.column(0))
}
