//! Numerical toolkit around the positivity of Re ξ′/ξ(s) for the Riemann
//! ξ-function.
//!
//! The crate evaluates ξ and its logarithmic derivative by two independent
//! routes (the defining factors and the paired sum over critical-line
//! zeros), implements the explicit zero-counting and kernel-integral bounds
//! that sandwich Re Σ 1/(s−ρ), validates them against zero tables and a
//! quadrature oracle, and maps the positivity regions that survive
//! hypothetical off-critical-line zeros.
//!
//! All numeric kernels are generic over the scalar type through [`Real`];
//! the `*64` aliases below are the production instantiation.

// validation guards are written as !(x > 0) on purpose: unlike x <= 0 the
// negated form also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod error;
pub mod point;
pub mod quad;
pub mod region;
pub mod scalar;
pub mod special;
pub mod xi;
pub mod zeros;

pub use error::{Error, Result};
pub use scalar::{gamma1, real, Real, GAMMA1};

/// Production scalar type.
pub type Scalar = f64;
/// Complex value in the production scalar.
pub type Complex64 = num_complex::Complex<Scalar>;
/// Validated plane point in the production scalar.
pub type Point64 = point::ComplexPoint<Scalar>;
/// Zero table in the production scalar.
pub type ZeroTable64 = zeros::ZeroTable<Scalar>;
/// Kernel parameters in the production scalar.
pub type KernelParams64 = bounds::KernelParams<Scalar>;
/// Bound report in the production scalar.
pub type BoundReport64 = bounds::BoundReport<Scalar>;
/// Region grid in the production scalar.
pub type RegionGrid64 = region::RegionGrid<Scalar>;
