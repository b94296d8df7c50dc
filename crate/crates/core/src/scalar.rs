//! Scalar abstraction shared by every numerical module.
//!
//! All math is written against [`Real`], which is implemented for `f32` and
//! `f64`. Hermitian matrices are stored over [`Complex<T>`].

use nalgebra::{DMatrix, DVector, RealField};
use num_traits::{FromPrimitive, ToPrimitive};

pub use nalgebra::Complex;

/// Dense complex matrix over the scalar `T`.
pub type CMatrix<T> = DMatrix<Complex<T>>;
/// Dense complex column vector over the scalar `T`.
pub type CVector<T> = DVector<Complex<T>>;

/// Real scalar field used throughout the crate.
pub trait Real: RealField + Copy + FromPrimitive + ToPrimitive + Send + Sync + 'static {
    /// Absolute tolerance used when callers do not supply one.
    fn default_tol() -> Self;

    /// Converts an `f64` literal into this field.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("finite literal")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn from_usize_lossy(n: usize) -> Self {
        Self::from_usize(n).expect("representable count")
    }

    fn is_nan(self) -> bool {
        self.partial_cmp(&self).is_none()
    }

    fn is_finite(self) -> bool {
        self.as_f64().is_finite()
    }
}

impl Real for f64 {
    fn default_tol() -> Self {
        1e-9
    }
}

impl Real for f32 {
    fn default_tol() -> Self {
        1e-4
    }
}

#[inline]
pub(crate) fn cx<T: Real>(re: T, im: T) -> Complex<T> {
    Complex::new(re, im)
}

#[inline]
pub(crate) fn cr<T: Real>(re: T) -> Complex<T> {
    Complex::new(re, T::zero())
}
