//! Scalar abstraction shared by every state, gate and operator in the crate.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, Num};

/// Real floating-point scalar: `f32` or `f64`.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + Entry<Real = Self>
    + Sum
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + 'static
{
    /// Absolute tolerance used by validating constructors when the caller
    /// does not pass one.
    fn default_tolerance() -> Self;

    /// Converts an `f64` literal. Every literal used by the crate is
    /// representable in both supported widths.
    #[inline]
    fn lit(value: f64) -> Self {
        Self::from_f64(value).expect("finite literal")
    }

    #[inline]
    fn two() -> Self {
        Self::one() + Self::one()
    }

    #[inline]
    fn half() -> Self {
        Self::lit(0.5)
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    fn default_tolerance() -> Self {
        1e-9
    }
}

impl Scalar for f32 {
    fn default_tolerance() -> Self {
        1e-5
    }
}

/// Element of a dense matrix: a real scalar or a complex number over one.
pub trait Entry: Copy + Num + std::ops::Neg<Output = Self> + Debug {
    type Real: Scalar;

    fn modulus(self) -> Self::Real;
    fn conjugate(self) -> Self;
    fn from_real(value: Self::Real) -> Self;
}

macro_rules! real_entry {
    ($t:ty) => {
        impl Entry for $t {
            type Real = $t;

            #[inline]
            fn modulus(self) -> $t {
                self.abs()
            }

            #[inline]
            fn conjugate(self) -> $t {
                self
            }

            #[inline]
            fn from_real(value: $t) -> $t {
                value
            }
        }
    };
}

real_entry!(f32);
real_entry!(f64);

impl<T: Scalar> Entry for Complex<T> {
    type Real = T;

    #[inline]
    fn modulus(self) -> T {
        self.norm()
    }

    #[inline]
    fn conjugate(self) -> Self {
        self.conj()
    }

    #[inline]
    fn from_real(value: T) -> Self {
        Complex::new(value, T::zero())
    }
}

/// `1/√2`, the global factor carried implicitly by Kronecker states.
#[inline]
pub fn frac_1_sqrt_2<T: Scalar>() -> T {
    T::FRAC_1_SQRT_2()
}

/// Shorthand for a complex number with the given real and imaginary parts.
#[inline]
pub fn c<T: Scalar>(re: T, im: T) -> Complex<T> {
    Complex::new(re, im)
}

/// Purely real complex number.
#[inline]
pub fn re<T: Scalar>(value: T) -> Complex<T> {
    Complex::new(value, T::zero())
}
