//! Closed-form eigenfunctions and spectra used as references for the solver.

use num_complex::Complex;

use crate::coord::ComplexCoordinate;
use crate::error::{Error, Result};
use crate::poles::trig_singular;
use crate::scalar::{cplx, to_pair, Real};

/// Unnormalized upper-sector eigenfunction of `2a² csc²(a(x+c)) - a²`,
///
/// `ψₙ⁺ ∝ (n+1) cos((n+2)u) - sin((n+1)u) csc u`, `u = a(x + c)`,
///
/// evaluated through the real split in `ξ + iη = u`. Its energy is
/// [`plus_sector_energy`].
pub fn analytic_plus_eigenfunction<T: Real>(
    n: usize,
    a: T,
    c: Complex<T>,
    x: ComplexCoordinate<T>,
) -> Result<Complex<T>> {
    let (xi, eta) = x.well_variables(a, c);
    if trig_singular(cplx(xi, eta)) {
        return Err(Error::SingularPoint {
            x: to_pair(x.to_complex()),
            family: "csc-squared eigenfunction",
        });
    }
    let k1 = T::from_count(n + 1);
    let k2 = T::from_count(n + 2);
    // (n+1) cos(k2 (ξ+iη))
    let first = cplx(
        k1 * (k2 * xi).cos() * (k2 * eta).cosh(),
        -k1 * (k2 * xi).sin() * (k2 * eta).sinh(),
    );
    // sin(k1 (ξ+iη)) / sin(ξ+iη)
    let numerator = cplx((k1 * xi).sin() * (k1 * eta).cosh(), (k1 * xi).cos() * (k1 * eta).sinh());
    let denominator = cplx(xi.sin() * eta.cosh(), xi.cos() * eta.sinh());
    Ok(first - numerator / denominator)
}

/// Energy `a² ((n+2)² - 1)` of [`analytic_plus_eigenfunction`].
pub fn plus_sector_energy<T: Real>(n: usize, a: T) -> T {
    let k = T::from_count(n + 2);
    a * a * (k * k - T::one())
}

/// Level formulas for the shape-invariant cot family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumConvention {
    /// `Eₙ = a² - (a - nα)²`. Kept for comparison; it disagrees with the
    /// finite-difference levels for every `n ≥ 1`.
    Printed,
    /// `Eₙ = (a + nα)² - a²`, which reproduces the partner-box levels at
    /// `α = a` and matches the finite-difference spectrum.
    Shifted,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ShapeInvariantSpectrum<T> {
    pub printed: Vec<T>,
    pub shifted: Vec<T>,
}

impl<T: Real> ShapeInvariantSpectrum<T> {
    pub fn levels(&self, convention: SpectrumConvention) -> &[T] {
        match convention {
            SpectrumConvention::Printed => &self.printed,
            SpectrumConvention::Shifted => &self.shifted,
        }
    }
}

/// Lower-sector levels `n = 0..=n_max` in both conventions.
pub fn shape_invariant_spectrum<T: Real>(a: T, alpha: T, n_max: usize) -> Result<ShapeInvariantSpectrum<T>> {
    if alpha == T::zero() || !alpha.is_finite() || !a.is_finite() {
        return Err(Error::InvalidParameter("alpha must be finite and nonzero".into()));
    }
    let (printed, shifted) = (0..=n_max)
        .map(|n| {
            let step = T::from_count(n) * alpha;
            (a * a - (a - step) * (a - step), (a + step) * (a + step) - a * a)
        })
        .unzip();
    Ok(ShapeInvariantSpectrum { printed, shifted })
}
