//! Dense row-major matrices over a [`Scalar`] field.
//!
//! Sizes in this crate are small (a few hundred at most), so every kernel is
//! a straightforward triple loop; no blocking, no BLAS. Storage is
//! `data[row * cols + col]`.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{Real, Scalar};

/// Dense matrix with entries of type `T`.
#[derive(Clone, PartialEq)]
pub struct Matrix<T: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Build from a row-major slice; `data.len()` must equal `rows * cols`.
    pub fn from_rows(rows: usize, cols: usize, data: &[T]) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::dim(
                format!("{} entries ({rows}x{cols})", rows * cols),
                format!("{}", data.len()),
            ));
        }
        Ok(Matrix {
            rows,
            cols,
            data: data.to_vec(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn diagonal(entries: &[T]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = entries[i];
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Side length of a square matrix.
    pub fn n(&self) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rows)
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn conjugate(&self) -> Self {
        self.map(|x| x.conj())
    }

    pub fn scaled(&self, r: T::Real) -> Self {
        self.map(|x| x.scale(r))
    }

    pub fn scaled_scalar(&self, s: T) -> Self {
        self.map(|x| x * s)
    }

    /// Matrix product.
    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(
            self.cols, rhs.rows,
            "matmul shape mismatch: {}x{} * {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self[(i, l)];
                if a == T::zero() {
                    continue;
                }
                let lhs_row = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                let rhs_row = &rhs.data[l * rhs.cols..(l + 1) * rhs.cols];
                for (o, &b) in lhs_row.iter_mut().zip(rhs_row) {
                    *o += a * b;
                }
            }
        }
        out
    }

    /// self * rhs^* without materializing the adjoint.
    pub fn matmul_adjoint(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.cols, "matmul_adjoint shape mismatch");
        Matrix::from_fn(self.rows, rhs.rows, |i, j| {
            let mut acc = T::zero();
            for l in 0..self.cols {
                acc += self[(i, l)] * rhs[(j, l)].conj();
            }
            acc
        })
    }

    /// self^* * rhs without materializing the adjoint.
    pub fn adjoint_matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.rows, rhs.rows, "adjoint_matmul shape mismatch");
        Matrix::from_fn(self.cols, rhs.cols, |i, j| {
            let mut acc = T::zero();
            for l in 0..self.rows {
                acc += self[(l, i)].conj() * rhs[(l, j)];
            }
            acc
        })
    }

    /// Commutator [self, rhs] = self*rhs - rhs*self.
    pub fn commutator(&self, rhs: &Self) -> Self {
        &self.matmul(rhs) - &rhs.matmul(self)
    }

    /// Frobenius inner product <A, B> = sum a_ij * conj(b_ij).
    pub fn inner(&self, rhs: &Self) -> T {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut acc = T::zero();
        for (&a, &b) in self.data.iter().zip(&rhs.data) {
            acc += a * b.conj();
        }
        acc
    }

    /// Real part of the Frobenius inner product.
    pub fn re_inner(&self, rhs: &Self) -> T::Real {
        self.inner(rhs).re()
    }

    pub fn fro_norm_sq(&self) -> T::Real {
        self.data
            .iter()
            .fold(T::Real::zero(), |acc, x| acc + x.abs_sq())
    }

    pub fn fro_norm(&self) -> T::Real {
        self.fro_norm_sq().sqrt()
    }

    /// Maximum column sum of moduli.
    pub fn one_norm(&self) -> T::Real {
        let mut best = T::Real::zero();
        for j in 0..self.cols {
            let mut s = T::Real::zero();
            for i in 0..self.rows {
                s = s + self[(i, j)].abs();
            }
            if s > best {
                best = s;
            }
        }
        best
    }

    pub fn max_abs(&self) -> T::Real {
        self.data
            .iter()
            .fold(T::Real::zero(), |acc, x| acc.max(x.abs()))
    }

    /// Deviation from the identity, ||self - I||_F.
    pub fn distance_from_identity(&self) -> T::Real {
        let mut acc = T::Real::zero();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let d = if i == j {
                    self[(i, j)] - T::one()
                } else {
                    self[(i, j)]
                };
                acc = acc + d.abs_sq();
            }
        }
        acc.sqrt()
    }

    /// Deviation from self-adjointness, ||self - self^*||_F.
    pub fn self_adjoint_deviation(&self) -> T::Real {
        let mut acc = T::Real::zero();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let d = self[(i, j)] - self[(j, i)].conj();
                acc = acc + d.abs_sq();
            }
        }
        acc.sqrt()
    }

    /// Lift to the complex extension of the base field.
    pub fn complexify(&self) -> Matrix<T::Cx> {
        self.map(|x| x.lift())
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn set_column(&mut self, j: usize, col: &[T]) {
        assert_eq!(col.len(), self.rows);
        for i in 0..self.rows {
            self[(i, j)] = col[i];
        }
    }

    /// Columns `keep` of self, as an n x keep.len() matrix.
    pub fn select_columns(&self, keep: &[usize]) -> Self {
        Matrix::from_fn(self.rows, keep.len(), |i, j| self[(i, keep[j])])
    }
}

impl<T: Scalar> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T: Scalar> IndexMut<(usize, usize)> for Matrix<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> Add for &Matrix<T> {
    type Output = Matrix<T>;

    fn add(self, rhs: Self) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }
}

impl<T: Scalar> Sub for &Matrix<T> {
    type Output = Matrix<T>;

    fn sub(self, rhs: Self) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, rhs: Self) -> Matrix<T> {
        self.matmul(rhs)
    }
}

impl<T: Scalar> Neg for &Matrix<T> {
    type Output = Matrix<T>;

    fn neg(self) -> Matrix<T> {
        self.map(|x| -x)
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}
