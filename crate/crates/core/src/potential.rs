//! Complex potentials: the closed-form partner families and grid-sampled data.
//!
//! Closed forms (λ = 1, `u = α (x + c)`, `z = A (x + c)`):
//!
//! | family               | V(x)                                                  |
//! |----------------------|-------------------------------------------------------|
//! | `Constant`           | `v`                                                   |
//! | `CscSquared`         | `2a² csc²(a(x+c)) - a²`                               |
//! | `SinhInvSquared`     | `2A² sinh⁻²(z) + A²`                                  |
//! | `GeneralizedPT`      | `(a² + αa) csc²u - 2iaB cot u - (a² + B²)`            |
//! | `GeneralizedPTLower` | `(a² - αa) csc²u - 2iaB cot u - (a² + B²)`            |
//!
//! `GeneralizedPTLower` is `W² - W'` for `W = -a cot u + iB`: expanding
//! `W² = a²(csc²u - 1) - 2iaB cot u - B²` and `W' = aα csc²u`.

use num_complex::Complex;

use crate::coord::ComplexCoordinate;
use crate::error::{Error, Result};
use crate::grid::Grid1D;
use crate::poles::{hyperbolic_singular, trig_singular, PoleLattice};
use crate::scalar::{cplx, imag_unit, real, to_pair, Real};
use crate::superpotential::{stable_coth, stable_cot};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PotentialFamily<T> {
    Constant { value: Complex<T> },
    CscSquared { a: T, c: Complex<T> },
    SinhInvSquared { amplitude: Complex<T>, c: Complex<T> },
    /// Upper partner of the generalized cotangent superpotential.
    GeneralizedPT { a: T, alpha: T, b: T, c: Complex<T> },
    /// Lower partner of the generalized cotangent superpotential.
    GeneralizedPTLower { a: T, alpha: T, b: T, c: Complex<T> },
}

impl<T: Real> PotentialFamily<T> {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Constant { .. } => "constant",
            Self::CscSquared { .. } => "csc-squared",
            Self::SinhInvSquared { .. } => "sinh-inv-squared",
            Self::GeneralizedPT { .. } => "generalized-pt",
            Self::GeneralizedPTLower { .. } => "generalized-pt-lower",
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = match *self {
            Self::Constant { value } => value.re.is_finite() && value.im.is_finite(),
            Self::CscSquared { a, c } => a.is_finite() && a != T::zero() && c.re.is_finite() && c.im.is_finite(),
            Self::SinhInvSquared { amplitude, c } => {
                amplitude.norm() > T::zero() && amplitude.norm().is_finite() && c.norm().is_finite()
            }
            Self::GeneralizedPT { a, alpha, b, c } | Self::GeneralizedPTLower { a, alpha, b, c } => {
                a.is_finite() && alpha.is_finite() && alpha != T::zero() && b.is_finite() && c.norm().is_finite()
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("invalid {} parameters", self.name())))
        }
    }

    fn eval_at(&self, x: Complex<T>) -> Result<Complex<T>> {
        let singular = || Error::SingularPoint {
            x: to_pair(x),
            family: self.name(),
        };
        let two = T::lit(2.0);
        match *self {
            Self::Constant { value } => Ok(value),
            Self::CscSquared { a, c } => {
                let u = (x + c) * a;
                if trig_singular(u) {
                    return Err(singular());
                }
                let cot = stable_cot(u);
                Ok((cot * cot + T::one()) * (two * a * a) - a * a)
            }
            Self::SinhInvSquared { amplitude, c } => {
                let z = amplitude * (x + c);
                if hyperbolic_singular(z) {
                    return Err(singular());
                }
                let coth = stable_coth(z);
                let a2 = amplitude * amplitude;
                Ok(a2 * (coth * coth - T::one()) * two + a2)
            }
            Self::GeneralizedPT { a, alpha, b, c } => generalized(x, a, alpha, b, c, T::one()).ok_or_else(singular),
            Self::GeneralizedPTLower { a, alpha, b, c } => {
                generalized(x, a, alpha, b, c, -T::one()).ok_or_else(singular)
            }
        }
    }

    pub fn poles(&self) -> Option<PoleLattice<T>> {
        match *self {
            Self::Constant { .. } => None,
            Self::CscSquared { a, c } => Some(PoleLattice {
                origin: -c,
                period: real(T::PI() / a),
            }),
            Self::SinhInvSquared { amplitude, c } => Some(PoleLattice {
                origin: -c,
                period: cplx(T::zero(), T::PI()) / amplitude,
            }),
            Self::GeneralizedPT { alpha, c, .. } | Self::GeneralizedPTLower { alpha, c, .. } => Some(PoleLattice {
                origin: -c,
                period: real(T::PI() / alpha),
            }),
        }
    }

    /// Real interval between the two poles bounding the principal well.
    pub fn well(&self) -> Option<(T, T)> {
        let (origin, width) = match *self {
            Self::CscSquared { a, c } => (-c.re, T::PI() / a.abs()),
            Self::GeneralizedPT { alpha, c, .. } | Self::GeneralizedPTLower { alpha, c, .. } => {
                (-c.re, T::PI() / alpha.abs())
            }
            Self::SinhInvSquared { amplitude, c } if amplitude.re == T::zero() => {
                (-c.re, T::PI() / amplitude.im.abs())
            }
            _ => return None,
        };
        Some((origin, origin + width))
    }
}

/// `(a² + s·αa) csc²u - 2iaB cot u - (a² + B²)` for `s = ±1`.
fn generalized<T: Real>(x: Complex<T>, a: T, alpha: T, b: T, c: Complex<T>, sign: T) -> Option<Complex<T>> {
    let u = (x + c) * alpha;
    if trig_singular(u) {
        return None;
    }
    let cot = stable_cot(u);
    let csc2 = cot * cot + T::one();
    let two = T::lit(2.0);
    Some(csc2 * (a * a + sign * alpha * a) - imag_unit::<T>() * cot * (two * a * b) - (a * a + b * b))
}

/// Potential values on the nodes of a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledPotential<T> {
    grid: Grid1D<T>,
    values: Vec<Complex<T>>,
}

impl<T: Real> SampledPotential<T> {
    pub fn new(grid: Grid1D<T>, values: Vec<Complex<T>>) -> Result<Self> {
        if values.len() != grid.n() {
            return Err(Error::GridMismatch(format!(
                "{} samples for a grid of {} nodes",
                values.len(),
                grid.n()
            )));
        }
        Ok(Self { grid, values })
    }

    /// Samples `f` at every node of `grid`.
    pub fn from_fn(grid: Grid1D<T>, f: impl Fn(Complex<T>) -> Complex<T>) -> Self {
        let values = grid.points().map(f).collect();
        Self { grid, values }
    }

    pub fn grid(&self) -> &Grid1D<T> {
        &self.grid
    }

    pub fn values(&self) -> &[Complex<T>] {
        &self.values
    }

    /// Linear interpolation between nodes; only points on the grid's contour
    /// and inside `[first node, last node]` are in range.
    fn eval_at(&self, x: Complex<T>) -> Result<Complex<T>> {
        let first = self.grid.node(0);
        let last = self.grid.node(self.grid.n() - 1);
        let h = self.grid.spacing();
        let slack = h * T::lit(1e-9);
        let on_contour = (x.im - self.grid.eta()).abs() <= T::lit(1e-12) * (T::one() + self.grid.eta().abs());
        if !on_contour || x.re < first - slack || x.re > last + slack {
            return Err(Error::OutOfRange {
                x: to_pair(x),
                range: (first.as_f64(), last.as_f64()),
                eta: self.grid.eta().as_f64(),
            });
        }
        let t = ((x.re - first) / h).max(T::zero());
        let last_cell = self.grid.n() - 2;
        let i = t.floor().to_usize().unwrap_or(0).min(last_cell);
        let frac = t - T::from_count(i);
        Ok(self.values[i] * (T::one() - frac) + self.values[i + 1] * frac)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum PotentialSpec<T> {
    /// Closed-form family plus a constant energy offset.
    Analytic { family: PotentialFamily<T>, offset: Complex<T> },
    Sampled(SampledPotential<T>),
}

impl<T: Real> PotentialSpec<T> {
    pub fn analytic(family: PotentialFamily<T>) -> Self {
        Self::Analytic {
            family,
            offset: real(T::zero()),
        }
    }

    pub fn constant(value: T) -> Self {
        Self::analytic(PotentialFamily::Constant { value: real(value) })
    }

    pub fn csc_squared(a: T, c: Complex<T>) -> Self {
        Self::analytic(PotentialFamily::CscSquared { a, c })
    }

    pub fn generalized_pt(a: T, alpha: T, b: T, c: Complex<T>) -> Self {
        Self::analytic(PotentialFamily::GeneralizedPT { a, alpha, b, c })
    }

    pub fn generalized_pt_lower(a: T, alpha: T, b: T, c: Complex<T>) -> Self {
        Self::analytic(PotentialFamily::GeneralizedPTLower { a, alpha, b, c })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Analytic { family, .. } => family.name(),
            Self::Sampled(_) => "sampled",
        }
    }

    /// `V(x)`.
    pub fn eval(&self, x: ComplexCoordinate<T>) -> Result<Complex<T>> {
        self.eval_at(x.to_complex())
    }

    pub fn eval_at(&self, x: Complex<T>) -> Result<Complex<T>> {
        match self {
            Self::Analytic { family, offset } => {
                family.validate()?;
                Ok(family.eval_at(x)? + offset)
            }
            Self::Sampled(sampled) => sampled.eval_at(x),
        }
    }

    /// Singular points of analytic families.
    pub fn poles(&self) -> Option<PoleLattice<T>> {
        match self {
            Self::Analytic { family, .. } => family.poles(),
            Self::Sampled(_) => None,
        }
    }

    pub fn well(&self) -> Option<(T, T)> {
        match self {
            Self::Analytic { family, .. } => family.well(),
            Self::Sampled(_) => None,
        }
    }

    /// Midpoint of the principal well, the parity center for PT checks.
    pub fn parity_center(&self) -> Option<T> {
        self.well().map(|(lo, hi)| (lo + hi) / T::lit(2.0))
    }

    /// Values at every node of `grid`.
    pub fn sample(&self, grid: &Grid1D<T>) -> Result<Vec<Complex<T>>> {
        grid.points().map(|x| self.eval_at(x)).collect()
    }
}
