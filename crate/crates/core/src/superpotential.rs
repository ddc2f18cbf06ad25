//! Superpotential families `W(x)` evaluated at complex coordinates.

use num_complex::Complex;

use crate::coord::ComplexCoordinate;
use crate::error::{Error, Result};
use crate::poles::{hyperbolic_singular, trig_singular, PoleLattice};
use crate::scalar::{cplx, imag_unit, real, to_pair, Real};

/// Parametric superpotential families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SuperpotentialSpec<T> {
    /// `W = A`, the free particle.
    Constant { amplitude: Complex<T> },
    /// `W = -A coth(A x + A c)`.
    CothShifted { amplitude: Complex<T>, c: Complex<T> },
    /// `W = -a cot(α x + α c) + i B`.
    GeneralizedCot { a: T, alpha: T, b: T, c: Complex<T> },
    /// `W = A + g(x)` with `g` the closed-form Bernoulli deformation of the
    /// constant superpotential. Coincides with `CothShifted` pointwise.
    Deformed { amplitude: Complex<T>, c: Complex<T> },
}

impl<T: Real> SuperpotentialSpec<T> {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Constant { .. } => "constant",
            Self::CothShifted { .. } => "coth-shifted",
            Self::GeneralizedCot { .. } => "generalized-cot",
            Self::Deformed { .. } => "deformed",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let finite = |z: Complex<T>| z.re.is_finite() && z.im.is_finite();
        match *self {
            Self::Constant { amplitude } if !finite(amplitude) => {
                Err(Error::InvalidParameter("amplitude must be finite".into()))
            }
            Self::CothShifted { amplitude, c } | Self::Deformed { amplitude, c } => {
                if !(finite(amplitude) && finite(c)) {
                    Err(Error::InvalidParameter("parameters must be finite".into()))
                } else if amplitude.norm() == T::zero() {
                    Err(Error::InvalidParameter(format!(
                        "{} superpotential needs a nonzero amplitude",
                        self.name()
                    )))
                } else {
                    Ok(())
                }
            }
            Self::GeneralizedCot { a, alpha, b, c } => {
                if !(a.is_finite() && alpha.is_finite() && b.is_finite() && finite(c)) {
                    Err(Error::InvalidParameter("parameters must be finite".into()))
                } else if alpha == T::zero() {
                    Err(Error::InvalidParameter("alpha must be nonzero".into()))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    /// `W(x)`.
    pub fn eval(&self, x: ComplexCoordinate<T>) -> Result<Complex<T>> {
        self.eval_at(x.to_complex())
    }

    /// `W'(x)` from the closed form of each family.
    pub fn derivative(&self, x: ComplexCoordinate<T>) -> Result<Complex<T>> {
        self.derivative_at(x.to_complex())
    }

    pub fn eval_at(&self, x: Complex<T>) -> Result<Complex<T>> {
        self.validate()?;
        match *self {
            Self::Constant { amplitude } => Ok(amplitude),
            Self::CothShifted { amplitude, c } => {
                let z = amplitude * (x + c);
                self.check_hyperbolic(x, z)?;
                Ok(-amplitude * stable_coth(z))
            }
            Self::Deformed { amplitude, c } => {
                let z = amplitude * (x + c);
                self.check_hyperbolic(x, z)?;
                Ok(amplitude + deformation_value(amplitude, z))
            }
            Self::GeneralizedCot { a, alpha, b, c } => {
                let u = (x + c) * alpha;
                self.check_trig(x, u)?;
                Ok(-stable_cot(u) * a + imag_unit::<T>() * b)
            }
        }
    }

    pub fn derivative_at(&self, x: Complex<T>) -> Result<Complex<T>> {
        self.validate()?;
        match *self {
            Self::Constant { .. } => Ok(real(T::zero())),
            Self::CothShifted { amplitude, c } => {
                let z = amplitude * (x + c);
                self.check_hyperbolic(x, z)?;
                let coth = stable_coth(z);
                Ok(amplitude * amplitude * (coth * coth - T::one()))
            }
            Self::Deformed { amplitude, c } => {
                let z = amplitude * (x + c);
                self.check_hyperbolic(x, z)?;
                let g = deformation_value(amplitude, z);
                // g solves g' = g² + 2 A g
                Ok(g * g + amplitude * g * T::lit(2.0))
            }
            Self::GeneralizedCot { a, alpha, c, .. } => {
                let u = (x + c) * alpha;
                self.check_trig(x, u)?;
                let cot = stable_cot(u);
                Ok((cot * cot + T::one()) * (a * alpha))
            }
        }
    }

    /// Singular points of `W` in the x-plane.
    pub fn poles(&self) -> Option<PoleLattice<T>> {
        match *self {
            Self::Constant { .. } => None,
            Self::CothShifted { amplitude, c } | Self::Deformed { amplitude, c } => Some(PoleLattice {
                origin: -c,
                period: cplx(T::zero(), T::PI()) / amplitude,
            }),
            Self::GeneralizedCot { alpha, c, .. } => Some(PoleLattice {
                origin: -c,
                period: real(T::PI() / alpha),
            }),
        }
    }

    fn check_trig(&self, x: Complex<T>, u: Complex<T>) -> Result<()> {
        if trig_singular(u) {
            return Err(Error::SingularPoint {
                x: to_pair(x),
                family: self.name(),
            });
        }
        Ok(())
    }

    fn check_hyperbolic(&self, x: Complex<T>, z: Complex<T>) -> Result<()> {
        if hyperbolic_singular(z) {
            return Err(Error::SingularPoint {
                x: to_pair(x),
                family: self.name(),
            });
        }
        Ok(())
    }
}

/// `coth z` without overflow for large `|Re z|`.
pub(crate) fn stable_coth<T: Real>(z: Complex<T>) -> Complex<T> {
    if z.re >= T::zero() {
        let e = (-z * T::lit(2.0)).exp();
        (e + T::one()) / (-e + T::one())
    } else {
        -stable_coth(-z)
    }
}

/// `cot u = i coth(i u)`, stable for large `|Im u|`.
pub(crate) fn stable_cot<T: Real>(u: Complex<T>) -> Complex<T> {
    let i = imag_unit::<T>();
    i * stable_coth(i * u)
}

/// Closed-form deformation `g = -2A e^{2z} / (e^{2z} - 1)` at `z = A (x + c)`.
pub(crate) fn deformation_value<T: Real>(amplitude: Complex<T>, z: Complex<T>) -> Complex<T> {
    let two = T::lit(2.0);
    if z.re > T::zero() {
        // -2A / (1 - e^{-2z}) avoids overflow as Re z -> +inf
        let e = (-z * two).exp();
        -amplitude * two / (-e + T::one())
    } else {
        let e = (z * two).exp();
        -amplitude * two * e / (e - T::one())
    }
}
