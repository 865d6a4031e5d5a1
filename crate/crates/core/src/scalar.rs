//! Scalar abstraction: the numeric kernels are generic over the floating
//! point type, with `f64` as the production default (see the crate root
//! aliases).

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Floating point scalar the toolkit computes with.
///
/// Implemented for `f32` and `f64`. The accuracy contracts documented on the
/// individual operations are stated for `f64`; `f32` runs the same
/// algorithms at correspondingly lower accuracy.
pub trait Real:
    'static
    + Send
    + Sync
    + Float
    + FloatConst
    + FromPrimitive
    + NumAssign
    + std::fmt::Debug
    + std::fmt::Display
    + std::fmt::LowerExp
{
}

impl Real for f32 {}
impl Real for f64 {}

/// Casts an `f64` constant into the working scalar type.
#[inline]
pub fn real<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("f64 constant converts into the scalar type")
}

/// Ordinate of the first nontrivial zeta zero, `gamma_1 = 14.134725...`.
pub const GAMMA1: f64 = 14.134_725_141_734_693;

/// `gamma_1` in the working scalar type.
#[inline]
pub fn gamma1<T: Real>() -> T {
    real(GAMMA1)
}

/// `log(2 pi)` to full double precision.
pub const LN_TWO_PI: f64 = 1.837_877_066_409_345_5;

/// `log(u / 2 pi)` in the working scalar type.
#[inline]
pub(crate) fn ln_over_two_pi<T: Real>(u: T) -> T {
    u.ln() - real::<T>(LN_TWO_PI)
}
