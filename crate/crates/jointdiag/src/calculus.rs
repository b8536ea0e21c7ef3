//! Exact derivatives of the off-diagonality functional: directional
//! differentials of any order, the gradient in standard form, and the
//! Hessian as a matrix-free real-linear operator.
//!
//! All inner products are real parts of the Frobenius pairing; in the
//! complex case the matrix space is treated as a Hilbert space over the
//! reals, and the Hessian operator is linear only over real scalars.

use num_traits::Float;

use crate::collection::MatrixCollection;
use crate::cost::{hadamard_offdiag, offdiag_cost, offdiag_norm_sq, similarity};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Real, Scalar};
use crate::transform::TransformPoint;

/// Largest derivative order for which binomial weights are kept in exact
/// integer arithmetic.
pub const MAX_DIFFERENTIAL_ORDER: u32 = 20;

/// Point evaluation of the functional together with its first two
/// directional derivatives, the gradient, and one Hessian application.
#[derive(Debug, Clone)]
pub struct DerivativeReport<T: Scalar> {
    pub f_value: T::Real,
    pub df_z: T::Real,
    pub d2f_z: T::Real,
    pub gradient: Matrix<T>,
    pub hessian_z: Matrix<T>,
}

fn check_dims<T: Scalar>(
    collection: &MatrixCollection<T>,
    q: &TransformPoint<T>,
    z: &Matrix<T>,
) -> Result<()> {
    if collection.n() != q.n() || z.rows() != q.n() || !z.is_square() {
        return Err(Error::dim(
            format!("matching sides of {}", collection.n()),
            format!(
                "transform {}x{} and direction {}x{}",
                q.n(),
                q.n(),
                z.rows(),
                z.cols()
            ),
        ));
    }
    Ok(())
}

fn binomial(j: u32, l: u32) -> u128 {
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..l.min(j - l) {
        num *= (j - i) as u128;
        den *= (i + 1) as u128;
    }
    num / den
}

fn factorial_real<R: Real>(j: u32) -> R {
    let mut f = R::one();
    for i in 2..=j {
        f = f * R::from_u32(i).unwrap();
    }
    f
}

/// The j-th directional differential of the similarity map `Q -> Q^{-1}AQ`,
/// evaluated on the diagonal: `(-1)^j j! [P, P^{j-1} H]` with `P = Q^{-1}Z`
/// and `H = Q^{-1}AQ`.
pub fn differential_h<T: Scalar>(
    a: &Matrix<T>,
    q: &TransformPoint<T>,
    z: &Matrix<T>,
    j: u32,
) -> Result<Matrix<T>> {
    if j == 0 {
        return Err(Error::InvalidArgument(
            "order must be >= 1; use similarity for the 0th term".into(),
        ));
    }
    let n = a.n()?;
    if n != q.n() || z.rows() != n || !z.is_square() {
        return Err(Error::dim(format!("{n}x{n}"), format!("{}x{}", z.rows(), z.cols())));
    }
    let p = q.solve(z)?;
    let h = similarity(a, q)?;
    let mut w = h;
    for _ in 1..j {
        w = p.matmul(&w);
    }
    let comm = p.commutator(&w);
    let sign = if j % 2 == 0 { T::Real::one() } else { -T::Real::one() };
    Ok(comm.scaled(sign * factorial_real::<T::Real>(j)))
}

/// The j-th directional differential of the functional, as a real scalar.
///
/// `j = 0` returns the functional itself. Orders above
/// [`MAX_DIFFERENTIAL_ORDER`] are refused rather than computed with inexact
/// binomial weights.
pub fn jth_differential_f<T: Scalar>(
    collection: &MatrixCollection<T>,
    q: &TransformPoint<T>,
    z: &Matrix<T>,
    j: u32,
) -> Result<T::Real> {
    if j == 0 {
        return offdiag_cost(collection, q);
    }
    if j > MAX_DIFFERENTIAL_ORDER {
        return Err(Error::InvalidArgument(format!(
            "differential order {j} exceeds the exact-arithmetic bound {MAX_DIFFERENTIAL_ORDER}"
        )));
    }
    check_dims(collection, q, z)?;
    let p = q.solve(z)?;
    let half = T::Real::from_f64(0.5).unwrap();
    let mut total = T::Real::zero();
    for a in collection.iter() {
        let h = similarity(a, q)?;
        // powers[l] = P^l H for l = 0..j-1.
        let mut powers: Vec<Matrix<T>> = Vec::with_capacity(j as usize);
        powers.push(h.clone());
        for _ in 1..j {
            let next = p.matmul(powers.last().unwrap());
            powers.push(next);
        }
        // diffs[l] = d^l h = (-1)^l l! [P, P^{l-1} H], with d^0 h = h.
        let mut diffs: Vec<Matrix<T>> = Vec::with_capacity(j as usize + 1);
        diffs.push(h);
        for l in 1..=j {
            let comm = p.commutator(&powers[(l - 1) as usize]);
            let sign = if l % 2 == 0 {
                T::Real::one()
            } else {
                -T::Real::one()
            };
            diffs.push(comm.scaled(sign * factorial_real::<T::Real>(l)));
        }
        let masked: Vec<Matrix<T>> = diffs
            .iter()
            .map(|d| hadamard_offdiag(d))
            .collect::<Result<_>>()?;
        for l in 0..=j {
            let weight = T::Real::from_f64(binomial(j, l) as f64).unwrap();
            let term = diffs[(j - l) as usize].re_inner(&masked[l as usize]);
            total = total + weight * term;
        }
    }
    Ok(total * half)
}

/// First directional derivative `sum_k <[H_k, Q^{-1}Z], offdiag(H_k)>_R`.
///
/// Debug builds cross-check against [`jth_differential_f`] at order one; a
/// disagreement is a bug, not something to paper over.
pub fn first_differential_f<T: Scalar>(
    collection: &MatrixCollection<T>,
    q: &TransformPoint<T>,
    z: &Matrix<T>,
) -> Result<T::Real> {
    check_dims(collection, q, z)?;
    let p = q.solve(z)?;
    let mut total = T::Real::zero();
    for a in collection.iter() {
        let h = similarity(a, q)?;
        let comm = h.commutator(&p);
        let masked = hadamard_offdiag(&h)?;
        total = total + comm.re_inner(&masked);
    }
    #[cfg(debug_assertions)]
    {
        let general = jth_differential_f(collection, q, z, 1)?;
        let scale = total.abs().max(general.abs()).max(T::Real::one());
        debug_assert!(
            (total - general).abs() <= T::Real::from_f64(1e-12).unwrap() * scale,
            "direct first differential disagrees with the general formula: {total:?} vs {general:?}"
        );
    }
    Ok(total)
}

fn gradient_term<T: Scalar>(d: &Matrix<T>) -> Result<Matrix<T>> {
    // [D^*, offdiag(D)]
    let masked = hadamard_offdiag(d)?;
    let adj = d.adjoint();
    Ok(adj.commutator(&masked))
}

/// Gradient with respect to the real Frobenius inner product:
/// `sum_k Q^{-*} [D_k^*, offdiag(D_k)]` with `D_k = Q^{-1} A_k Q`.
///
/// Satisfies `first_differential_f(c, q, z) = Re<gradient, z>` for every
/// direction, and is orthogonal to `Q` by degree-zero homogeneity.
pub fn gradient<T: Scalar>(
    collection: &MatrixCollection<T>,
    q: &TransformPoint<T>,
) -> Result<Matrix<T>> {
    let n = q.n();
    if collection.n() != n {
        return Err(Error::dim(
            format!("collection of side {n}"),
            format!("side {}", collection.n()),
        ));
    }
    let mut g = Matrix::<T>::zeros(n, n);
    for a in collection.iter() {
        let d = similarity(a, q)?;
        let term = q.solve_adjoint(&gradient_term(&d)?)?;
        g = &g + &term;
    }
    Ok(g)
}

/// Same gradient, evaluated through the base change `D_k = Q^{-1} A_k Q`:
/// the per-matrix terms are summed at the identity first and the single
/// adjoint solve is applied once at the end. Numerically this concentrates
/// all the conditioning of `Q` in one place, which is the form solvers
/// prefer; the two routes agree to roundoff.
pub fn gradient_via_base_change<T: Scalar>(
    collection: &MatrixCollection<T>,
    q: &TransformPoint<T>,
) -> Result<Matrix<T>> {
    let n = q.n();
    if collection.n() != n {
        return Err(Error::dim(
            format!("collection of side {n}"),
            format!("side {}", collection.n()),
        ));
    }
    let mut sum = Matrix::<T>::zeros(n, n);
    for a in collection.iter() {
        let d = similarity(a, q)?;
        sum = &sum + &gradient_term(&d)?;
    }
    q.solve_adjoint(&sum)
}

/// Hessian operator applied to a direction:
///
/// ```text
/// H(Z) = sum_k Q^{-*} ( [D_k^*, offdiag([D_k, P])]
///                     - [offdiag(D_k), P^*] D_k^*
///                     + [offdiag(D_k), (P D_k)^*] )      with P = Q^{-1}Z.
/// ```
///
/// Real-linear in `Z` (additive; homogeneous only for real scalars in the
/// complex case) and symmetric under the real inner product. The middle
/// term's sign makes the operator the exact adjoint pair of the third; the
/// quadratic form then matches the second differential to roundoff.
pub fn hessian_apply<T: Scalar>(
    collection: &MatrixCollection<T>,
    q: &TransformPoint<T>,
    z: &Matrix<T>,
) -> Result<Matrix<T>> {
    check_dims(collection, q, z)?;
    let n = q.n();
    let p = q.solve(z)?;
    let p_adj = p.adjoint();
    let mut acc = Matrix::<T>::zeros(n, n);
    for a in collection.iter() {
        let d = similarity(a, q)?;
        let d_adj = d.adjoint();
        let masked = hadamard_offdiag(&d)?;

        let comm_dp = d.commutator(&p);
        let t1 = d_adj.commutator(&hadamard_offdiag(&comm_dp)?);

        let t2 = masked.commutator(&p_adj).matmul(&d_adj);

        let pd_adj = p.matmul(&d).adjoint();
        let t3 = masked.commutator(&pd_adj);

        let term = &(&t1 - &t2) + &t3;
        acc = &acc + &term;
    }
    q.solve_adjoint(&acc)
}

/// Second directional derivative
/// `sum_k ||offdiag([H_k, P])||^2 + 2 <[P, P H_k], offdiag(H_k)>_R`.
///
/// Agrees with `Re<hessian_apply(z), z>` and with the order-2 general
/// differential to roundoff.
pub fn second_differential_f<T: Scalar>(
    collection: &MatrixCollection<T>,
    q: &TransformPoint<T>,
    z: &Matrix<T>,
) -> Result<T::Real> {
    check_dims(collection, q, z)?;
    let p = q.solve(z)?;
    let two = T::Real::one() + T::Real::one();
    let mut total = T::Real::zero();
    for a in collection.iter() {
        let h = similarity(a, q)?;
        let comm = h.commutator(&p);
        let first = offdiag_norm_sq(&hadamard_offdiag(&comm)?);
        let ph = p.matmul(&h);
        let comm2 = p.commutator(&ph);
        let second = comm2.re_inner(&hadamard_offdiag(&h)?);
        total = total + first + two * second;
    }
    Ok(total)
}

/// Bundle of point evaluations used by the derivative-certification paths.
pub fn derivative_report<T: Scalar>(
    collection: &MatrixCollection<T>,
    q: &TransformPoint<T>,
    z: &Matrix<T>,
) -> Result<DerivativeReport<T>> {
    Ok(DerivativeReport {
        f_value: offdiag_cost(collection, q)?,
        df_z: first_differential_f(collection, q, z)?,
        d2f_z: second_differential_f(collection, q, z)?,
        gradient: gradient(collection, q)?,
        hessian_z: hessian_apply(collection, q, z)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fdcheck;
    use num_complex::Complex;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    fn random_matrix<T: Scalar>(n: usize, rng: &mut ChaCha20Rng) -> Matrix<T> {
        Matrix::from_fn(n, n, |_, _| T::sample_standard(rng))
    }

    fn random_transform<T: Scalar>(n: usize, rng: &mut ChaCha20Rng) -> TransformPoint<T> {
        loop {
            let q: Matrix<T> = random_matrix(n, rng);
            if let Ok(tp) = TransformPoint::new(q) {
                if tp.rcond() > T::Real::from_f64(1e-3).unwrap() {
                    return tp;
                }
            }
        }
    }

    fn random_collection<T: Scalar>(
        n: usize,
        k: usize,
        rng: &mut ChaCha20Rng,
    ) -> MatrixCollection<T> {
        MatrixCollection::new((0..k).map(|_| random_matrix(n, rng)).collect()).unwrap()
    }

    #[test]
    fn differential_h_first_order_identity_point() {
        let mut rng = ChaCha20Rng::seed_from_u64(40);
        let a: Matrix<f64> = random_matrix(3, &mut rng);
        let q = TransformPoint::identity(3);

        // Direction equal to the matrix itself: commutator vanishes.
        let d = differential_h(&a, &q, &a, 1).unwrap();
        assert!(d.fro_norm() < 1e-13 * a.fro_norm());

        // General direction: d^1 h |_I (z) = [a, z].
        let z: Matrix<f64> = random_matrix(3, &mut rng);
        let d = differential_h(&a, &q, &z, 1).unwrap();
        assert!((&d - &a.commutator(&z)).fro_norm() < 1e-13);
    }

    #[test]
    fn differential_h_rejects_order_zero() {
        let a = Matrix::<f64>::identity(2);
        let q = TransformPoint::identity(2);
        assert!(differential_h(&a, &q, &a, 0).is_err());
    }

    #[test]
    fn differential_h_second_order_matches_fd() {
        let mut rng = ChaCha20Rng::seed_from_u64(41);
        let a: Matrix<f64> = random_matrix(3, &mut rng);
        let q = random_transform::<f64>(3, &mut rng);
        let z: Matrix<f64> = random_matrix(3, &mut rng);

        let exact = differential_h(&a, &q, &z, 2).unwrap();
        let t = 1e-3;
        let plus = similarity(&a, &TransformPoint::new(&(q.matrix().clone()) + &z.scaled(t)).unwrap()).unwrap();
        let minus = similarity(&a, &TransformPoint::new(&(q.matrix().clone()) - &z.scaled(t)).unwrap()).unwrap();
        let center = similarity(&a, &q).unwrap();
        let fd = (&(&plus + &minus) - &center.scaled(2.0)).scaled(1.0 / (t * t));
        let rel = (&exact - &fd).fro_norm() / exact.fro_norm();
        assert!(rel < 1e-5, "rel = {rel:e}");
    }

    #[test]
    fn jth_matches_cost_at_zero_and_vanishes_on_zero_direction() {
        let mut rng = ChaCha20Rng::seed_from_u64(42);
        let c: MatrixCollection<f64> = random_collection(3, 2, &mut rng);
        let q = random_transform::<f64>(3, &mut rng);
        let z = Matrix::<f64>::zeros(3, 3);

        let f0 = jth_differential_f(&c, &q, &z, 0).unwrap();
        assert!((f0 - offdiag_cost(&c, &q).unwrap()).abs() < 1e-14 * f0.max(1.0));
        for j in 1..=4 {
            assert_eq!(jth_differential_f(&c, &q, &z, j).unwrap(), 0.0);
        }
    }

    #[test]
    fn jth_refuses_huge_order() {
        let c: MatrixCollection<f64> =
            MatrixCollection::new(vec![Matrix::identity(2)]).unwrap();
        let q = TransformPoint::identity(2);
        let z = Matrix::<f64>::identity(2);
        assert!(jth_differential_f(&c, &q, &z, 21).is_err());
        assert!(jth_differential_f(&c, &q, &z, 20).is_ok());
    }

    #[test]
    fn first_differential_zero_for_diagonal_collection() {
        let mut rng = ChaCha20Rng::seed_from_u64(43);
        let c = MatrixCollection::new(vec![
            Matrix::<f64>::diagonal(&[1.0, 2.0, 3.0]),
            Matrix::<f64>::diagonal(&[-1.0, 0.5, 2.0]),
        ])
        .unwrap();
        let q = TransformPoint::identity(3);
        for _ in 0..5 {
            let z: Matrix<f64> = random_matrix(3, &mut rng);
            assert_eq!(first_differential_f(&c, &q, &z).unwrap(), 0.0);
        }
    }

    #[test]
    fn radial_direction_kills_first_differential() {
        let mut rng = ChaCha20Rng::seed_from_u64(44);
        let c: MatrixCollection<Complex<f64>> = random_collection(3, 2, &mut rng);
        let q = random_transform::<Complex<f64>>(3, &mut rng);
        let df = first_differential_f(&c, &q, q.matrix()).unwrap();
        let scale = offdiag_cost(&c, &q).unwrap().max(1.0);
        assert!(df.abs() < 1e-12 * scale, "df along Q = {df:e}");
    }

    #[test]
    fn first_differential_matches_fd_complex() {
        let mut rng = ChaCha20Rng::seed_from_u64(45);
        let c: MatrixCollection<Complex<f64>> = random_collection(3, 2, &mut rng);
        let q = random_transform::<Complex<f64>>(3, &mut rng);
        let z: Matrix<Complex<f64>> = random_matrix(3, &mut rng);
        let exact = first_differential_f(&c, &q, &z).unwrap();
        let fd = fdcheck::fd_first_directional(&c, q.matrix(), &z, 1e-6).unwrap();
        assert!((exact - fd).abs() < 1e-6 * exact.abs().max(1.0));
    }

    #[test]
    fn gradient_hand_example() {
        let c = MatrixCollection::new(vec![Matrix::from_rows(
            2,
            2,
            &[0.0, 1.0, 0.0, 0.0],
        )
        .unwrap()])
        .unwrap();
        let q = TransformPoint::identity(2);
        let g = gradient(&c, &q).unwrap();
        let expected = Matrix::from_rows(2, 2, &[-1.0, 0.0, 0.0, 1.0]).unwrap();
        assert!((&g - &expected).fro_norm() < 1e-14);
    }

    #[test]
    fn gradient_zero_for_diagonal_collection() {
        let c = MatrixCollection::new(vec![Matrix::<f64>::diagonal(&[1.0, 2.0])]).unwrap();
        let q = TransformPoint::identity(2);
        assert_eq!(gradient(&c, &q).unwrap().fro_norm(), 0.0);
    }

    #[test]
    fn gradient_represents_first_differential() {
        let mut rng = ChaCha20Rng::seed_from_u64(46);
        for _ in 0..20 {
            let c: MatrixCollection<Complex<f64>> = random_collection(3, 2, &mut rng);
            let q = random_transform::<Complex<f64>>(3, &mut rng);
            let g = gradient(&c, &q).unwrap();
            let z: Matrix<Complex<f64>> = random_matrix(3, &mut rng);
            let df = first_differential_f(&c, &q, &z).unwrap();
            let pairing = g.re_inner(&z);
            let scale = g.fro_norm() * z.fro_norm();
            assert!((df - pairing).abs() <= 1e-12 * scale.max(1.0));
        }
    }

    #[test]
    fn gradient_orthogonal_to_point() {
        let mut rng = ChaCha20Rng::seed_from_u64(47);
        let c: MatrixCollection<f64> = random_collection(4, 3, &mut rng);
        let q = random_transform::<f64>(4, &mut rng);
        let g = gradient(&c, &q).unwrap();
        let radial = g.re_inner(q.matrix());
        assert!(radial.abs() <= 1e-12 * g.fro_norm() * q.matrix().fro_norm());
    }

    #[test]
    fn base_change_route_agrees() {
        let mut rng = ChaCha20Rng::seed_from_u64(48);
        for _ in 0..10 {
            let c: MatrixCollection<Complex<f64>> = random_collection(3, 2, &mut rng);
            let q = random_transform::<Complex<f64>>(3, &mut rng);
            let g1 = gradient(&c, &q).unwrap();
            let g2 = gradient_via_base_change(&c, &q).unwrap();
            assert!((&g1 - &g2).fro_norm() <= 1e-12 * g1.fro_norm().max(1e-30));
        }
        // At the identity the two routes coincide by construction.
        let c: MatrixCollection<f64> = random_collection(3, 2, &mut rng);
        let q = TransformPoint::identity(3);
        let g1 = gradient(&c, &q).unwrap();
        let g2 = gradient_via_base_change(&c, &q).unwrap();
        assert!((&g1 - &g2).fro_norm() <= 1e-14 * g1.fro_norm());
    }

    #[test]
    fn hessian_zero_direction() {
        let mut rng = ChaCha20Rng::seed_from_u64(49);
        let c: MatrixCollection<f64> = random_collection(3, 2, &mut rng);
        let q = random_transform::<f64>(3, &mut rng);
        let hz = hessian_apply(&c, &q, &Matrix::zeros(3, 3)).unwrap();
        assert_eq!(hz.fro_norm(), 0.0);
    }

    #[test]
    fn hessian_quadratic_form_nonnegative_at_diagonal_point() {
        let mut rng = ChaCha20Rng::seed_from_u64(50);
        let c = MatrixCollection::new(vec![
            Matrix::<f64>::diagonal(&[1.0, -2.0, 0.5]),
            Matrix::<f64>::diagonal(&[2.0, 1.0, -1.0]),
        ])
        .unwrap();
        let q = TransformPoint::identity(3);
        for _ in 0..10 {
            let z: Matrix<f64> = random_matrix(3, &mut rng);
            let hz = hessian_apply(&c, &q, &z).unwrap();
            let qf = hz.re_inner(&z);
            // Equals sum_k ||offdiag([A_k, z])||^2.
            let expected: f64 = c
                .iter()
                .map(|a| offdiag_norm_sq(&a.commutator(&z)))
                .sum();
            assert!((qf - expected).abs() <= 1e-12 * expected.max(1.0));
            assert!(qf >= 0.0);
        }
    }

    #[test]
    fn hessian_symmetry_and_consistency() {
        let mut rng = ChaCha20Rng::seed_from_u64(51);
        for trial in 0..40 {
            let complex_case = trial % 2 == 0;
            if complex_case {
                let c: MatrixCollection<Complex<f64>> = random_collection(3, 2, &mut rng);
                let q = random_transform::<Complex<f64>>(3, &mut rng);
                let z: Matrix<Complex<f64>> = random_matrix(3, &mut rng);
                let w: Matrix<Complex<f64>> = random_matrix(3, &mut rng);
                let hz = hessian_apply(&c, &q, &z).unwrap();
                let hw = hessian_apply(&c, &q, &w).unwrap();
                let s1 = hz.re_inner(&w);
                let s2 = hw.re_inner(&z);
                assert!((s1 - s2).abs() <= 1e-11 * s1.abs().max(s2.abs()).max(1.0));

                let qf = hz.re_inner(&z);
                let d2 = second_differential_f(&c, &q, &z).unwrap();
                let dj = jth_differential_f(&c, &q, &z, 2).unwrap();
                assert!((qf - d2).abs() <= 1e-12 * d2.abs().max(1.0));
                assert!((dj - d2).abs() <= 1e-12 * d2.abs().max(1.0));
            } else {
                let c: MatrixCollection<f64> = random_collection(3, 2, &mut rng);
                let q = random_transform::<f64>(3, &mut rng);
                let z: Matrix<f64> = random_matrix(3, &mut rng);
                let hz = hessian_apply(&c, &q, &z).unwrap();
                let qf = hz.re_inner(&z);
                let d2 = second_differential_f(&c, &q, &z).unwrap();
                assert!((qf - d2).abs() <= 1e-12 * d2.abs().max(1.0));
            }
        }
    }

    #[test]
    fn second_differential_matches_fd() {
        let mut rng = ChaCha20Rng::seed_from_u64(52);
        let c: MatrixCollection<f64> = random_collection(3, 2, &mut rng);
        let q = random_transform::<f64>(3, &mut rng);
        let z: Matrix<f64> = random_matrix(3, &mut rng);
        let d2 = second_differential_f(&c, &q, &z).unwrap();
        let fd = fdcheck::fd_second_directional(&c, q.matrix(), &z, 1e-4).unwrap();
        assert!((d2 - fd).abs() <= 1e-4 * d2.abs().max(1.0), "{d2} vs {fd}");
    }

    #[test]
    fn radial_second_differential_vanishes() {
        let mut rng = ChaCha20Rng::seed_from_u64(53);
        let c: MatrixCollection<f64> = random_collection(3, 2, &mut rng);
        let q = random_transform::<f64>(3, &mut rng);
        let d2 = second_differential_f(&c, &q, q.matrix()).unwrap();
        let scale = offdiag_cost(&c, &q).unwrap().max(1.0);
        assert!(d2.abs() < 1e-11 * scale, "d2 along Q = {d2:e}");
    }

    #[test]
    fn complexified_real_problem_stays_real() {
        let mut rng = ChaCha20Rng::seed_from_u64(54);
        let c_real: MatrixCollection<f64> = random_collection(3, 2, &mut rng);
        let q_real = random_transform::<f64>(3, &mut rng);
        let z_real: Matrix<f64> = random_matrix(3, &mut rng);

        let c = MatrixCollection::new(c_real.iter().map(|a| a.complexify()).collect()).unwrap();
        let q = TransformPoint::new(q_real.matrix().complexify()).unwrap();
        let z = z_real.complexify();

        let g = gradient(&c, &q).unwrap();
        let hz = hessian_apply(&c, &q, &z).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(g[(i, j)].im, 0.0);
                assert_eq!(hz[(i, j)].im, 0.0);
            }
        }
    }
}
