use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// A point `x = re + i·im` of the complexified coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ComplexCoordinate<T> {
    pub re: T,
    pub im: T,
}

impl<T: Real> ComplexCoordinate<T> {
    pub fn new(re: T, im: T) -> Result<Self> {
        if !(re.is_finite() && im.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "coordinate must be finite, got {re}{im:+}i"
            )));
        }
        Ok(Self { re, im })
    }

    pub fn real(re: T) -> Self {
        Self { re, im: T::zero() }
    }

    pub fn to_complex(self) -> Complex<T> {
        Complex::new(self.re, self.im)
    }

    /// Scaled well variables `(xi, eta)` with `xi + i·eta = a·(x + c)`.
    pub fn well_variables(self, a: T, c: Complex<T>) -> (T, T) {
        (a * (self.re + c.re), a * (self.im + c.im))
    }

    /// Inverse of [`Self::well_variables`].
    pub fn from_well_variables(xi: T, eta: T, a: T, c: Complex<T>) -> Self {
        Self {
            re: xi / a - c.re,
            im: eta / a - c.im,
        }
    }
}

impl<T: Real> From<Complex<T>> for ComplexCoordinate<T> {
    fn from(z: Complex<T>) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl<T: Real> From<ComplexCoordinate<T>> for Complex<T> {
    fn from(x: ComplexCoordinate<T>) -> Self {
        x.to_complex()
    }
}
