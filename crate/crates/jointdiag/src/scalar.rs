//! Scalar abstraction: the matrix kernels are generic over the entry type,
//! covering `f32`/`f64` and their complex extensions.

use std::fmt::{Debug, Display};
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_complex::Complex;
use num_traits::{Float, FromPrimitive, One, Zero};
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

/// Which base field a collection lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Real,
    Complex,
}

impl Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Field::Real => write!(f, "real"),
            Field::Complex => write!(f, "complex"),
        }
    }
}

/// Real number type usable as the base of a scalar field.
pub trait Real:
    Float + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Draw from the standard normal distribution N(0, 1).
    fn sample_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;
}

impl Real for f32 {
    fn sample_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let x: f64 = StandardNormal.sample(rng);
        x as f32
    }
}

impl Real for f64 {
    fn sample_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }
}

/// Matrix entry type: real or complex floating point.
///
/// `abs` is the modulus, `conj` the complex conjugate (identity for real
/// types). Complex types sample the standard complex normal CN(0, 1), so
/// `E|z|^2 = 1` for every implementor.
pub trait Scalar:
    Copy
    + Clone
    + Debug
    + Display
    + PartialEq
    + Default
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + AddAssign
    + SubAssign
    + Send
    + Sync
    + 'static
{
    type Real: Real;

    /// The complex extension of this scalar's field (itself, when already
    /// complex). Lets real matrices lift into complex kernels generically.
    type Cx: ComplexScalar<Real = Self::Real>;

    const FIELD: Field;

    fn from_real(re: Self::Real) -> Self;

    /// Embed into the complex extension.
    fn lift(self) -> Self::Cx;

    /// Build from real and imaginary parts; `None` when the type cannot
    /// represent a nonzero imaginary part.
    fn from_parts(re: Self::Real, im: Self::Real) -> Option<Self>;

    fn re(self) -> Self::Real;

    fn im(self) -> Self::Real;

    fn conj(self) -> Self;

    /// Modulus |z|.
    fn abs(self) -> Self::Real;

    /// Squared modulus |z|^2, cheaper than `abs` for complex types.
    fn abs_sq(self) -> Self::Real;

    /// Multiply by a real scalar.
    fn scale(self, r: Self::Real) -> Self;

    /// Standard (complex) normal draw with unit E|z|^2.
    fn sample_standard<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// JSON wire form: bare number for real entries, `[re, im]` for complex.
    fn to_json(self) -> serde_json::Value;
}

/// Complex scalar with explicit part-wise construction and a principal
/// square root; the target of [`Scalar::lift`].
pub trait ComplexScalar: Scalar {
    fn from_re_im(re: Self::Real, im: Self::Real) -> Self;

    /// Principal branch square root.
    fn csqrt(self) -> Self;
}

impl ComplexScalar for Complex<f32> {
    fn from_re_im(re: f32, im: f32) -> Self {
        Complex::new(re, im)
    }

    fn csqrt(self) -> Self {
        self.sqrt()
    }
}

impl ComplexScalar for Complex<f64> {
    fn from_re_im(re: f64, im: f64) -> Self {
        Complex::new(re, im)
    }

    fn csqrt(self) -> Self {
        self.sqrt()
    }
}

macro_rules! impl_real_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            type Real = $t;
            type Cx = Complex<$t>;

            const FIELD: Field = Field::Real;

            fn from_real(re: $t) -> Self {
                re
            }

            fn lift(self) -> Complex<$t> {
                Complex::new(self, 0.0)
            }

            fn from_parts(re: $t, im: $t) -> Option<Self> {
                if im == 0.0 {
                    Some(re)
                } else {
                    None
                }
            }

            fn re(self) -> $t {
                self
            }

            fn im(self) -> $t {
                0.0
            }

            fn conj(self) -> Self {
                self
            }

            fn abs(self) -> $t {
                <$t>::abs(self)
            }

            fn abs_sq(self) -> $t {
                self * self
            }

            fn scale(self, r: $t) -> Self {
                self * r
            }

            fn sample_standard<G: Rng + ?Sized>(rng: &mut G) -> Self {
                <$t as Real>::sample_normal(rng)
            }

            fn to_json(self) -> serde_json::Value {
                serde_json::json!(self as f64)
            }
        }
    };
}

macro_rules! impl_complex_scalar {
    ($t:ty) => {
        impl Scalar for Complex<$t> {
            type Real = $t;
            type Cx = Complex<$t>;

            const FIELD: Field = Field::Complex;

            fn from_real(re: $t) -> Self {
                Complex::new(re, 0.0)
            }

            fn lift(self) -> Complex<$t> {
                self
            }

            fn from_parts(re: $t, im: $t) -> Option<Self> {
                Some(Complex::new(re, im))
            }

            fn re(self) -> $t {
                self.re
            }

            fn im(self) -> $t {
                self.im
            }

            fn conj(self) -> Self {
                Complex::new(self.re, -self.im)
            }

            fn abs(self) -> $t {
                self.re.hypot(self.im)
            }

            fn abs_sq(self) -> $t {
                self.re * self.re + self.im * self.im
            }

            fn scale(self, r: $t) -> Self {
                Complex::new(self.re * r, self.im * r)
            }

            fn sample_standard<G: Rng + ?Sized>(rng: &mut G) -> Self {
                // CN(0,1): independent N(0, 1/2) parts.
                let half = std::f64::consts::FRAC_1_SQRT_2 as $t;
                Complex::new(
                    <$t as Real>::sample_normal(rng) * half,
                    <$t as Real>::sample_normal(rng) * half,
                )
            }

            fn to_json(self) -> serde_json::Value {
                serde_json::json!([self.re as f64, self.im as f64])
            }
        }
    };
}

impl_real_scalar!(f32);
impl_real_scalar!(f64);
impl_complex_scalar!(f32);
impl_complex_scalar!(f64);

/// Machine epsilon of the underlying real type as `f64`, for diagnostics.
pub fn epsilon_f64<T: Scalar>() -> f64 {
    T::Real::epsilon().to_f64().unwrap_or(f64::EPSILON)
}
