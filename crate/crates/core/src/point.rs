use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// A validated point `s = sigma + i t` of the complex plane.
///
/// Both coordinates are finite by construction; this is the type callers use
/// at the API boundary before handing arguments to the evaluation routines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexPoint<T> {
    sigma: T,
    t: T,
}

impl<T: Real> ComplexPoint<T> {
    /// Builds a point, rejecting NaN or infinite coordinates.
    pub fn new(sigma: T, t: T) -> Result<Self> {
        if !sigma.is_finite() || !t.is_finite() {
            return Err(Error::Domain(format!(
                "complex point ({sigma}, {t}) has a non-finite coordinate"
            )));
        }
        Ok(Self { sigma, t })
    }

    /// Real part.
    pub fn sigma(&self) -> T {
        self.sigma
    }

    /// Imaginary part.
    pub fn t(&self) -> T {
        self.t
    }
}

impl<T: Real> From<ComplexPoint<T>> for Complex<T> {
    fn from(p: ComplexPoint<T>) -> Self {
        Complex::new(p.sigma, p.t)
    }
}
