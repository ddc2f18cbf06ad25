//! The infinite well in the complex plane.
//!
//! A box with endpoints `x⁽¹⁾`, `x⁽²⁾` anywhere in the complex plane is
//! analysed by separating `ψ(x_re, x_im) = R(x_re) I(x_im)` under the
//! d'Alembertian `∂²_re - ∂²_im`. The real factor `R = A e^{iK̄x} + B e^{-iK̄x}`
//! vanishes at both endpoints iff `K̄ Δx_re = nπ`. The imaginary factor
//! `I = C e^{K̃x} + D e^{-K̃x}` with real `K̃ ≠ 0` has a nontrivial solution
//! vanishing at both endpoints only if `sinh(K̃ Δx_im) = 0`, i.e. `Δx_im = 0`:
//! the box must lie parallel to the real axis (`m = 0`). The `K̃ = 0` branch
//! (a free imaginary direction) is not part of this analysis and is reported
//! as untreated rather than admitted.

use num_complex::Complex;

use crate::coord::ComplexCoordinate;
use crate::error::{Error, Result};
use crate::grid::Grid1D;
use crate::scalar::Real;
use crate::wavefunction::{NormConvention, SampledWavefunction};

/// Default absolute tolerance on `|Δx_im|` for admissibility.
pub const DEFAULT_ADMISSIBILITY_TOLERANCE: f64 = 1e-9;

/// Number of `K̄ₙ` values reported by [`complex_box_admissibility`].
pub const DEFAULT_REPORTED_MODES: usize = 10;

/// Levels `(nπ/L)²`, `n = 1..=n_max`.
pub fn box_spectrum<T: Real>(length: T, n_max: usize) -> Result<Vec<T>> {
    if !(length > T::zero() && length.is_finite()) {
        return Err(Error::InvalidParameter(format!("box length must be positive, got {length}")));
    }
    if n_max == 0 {
        return Err(Error::InvalidParameter("n_max must be at least 1".into()));
    }
    let unit = T::PI() / length;
    Ok((1..=n_max)
        .map(|n| {
            let k = T::from_count(n) * unit;
            k * k
        })
        .collect())
}

/// Admissible real widths `κπ/a` of the complexified box.
pub fn quantized_widths<T: Real>(a: T, kappa_list: &[u32]) -> Result<Vec<T>> {
    if a == T::zero() || !a.is_finite() {
        return Err(Error::InvalidParameter("a must be finite and nonzero".into()));
    }
    kappa_list
        .iter()
        .map(|&kappa| {
            if kappa == 0 {
                Err(Error::InvalidParameter("kappa must be at least 1".into()))
            } else {
                Ok(T::from_u32(kappa).expect("kappa representable") * T::PI() / a)
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexBox<T> {
    pub endpoint1: ComplexCoordinate<T>,
    pub endpoint2: ComplexCoordinate<T>,
}

impl<T: Real> ComplexBox<T> {
    pub fn new(endpoint1: ComplexCoordinate<T>, endpoint2: ComplexCoordinate<T>) -> Self {
        Self { endpoint1, endpoint2 }
    }

    pub fn swapped(&self) -> Self {
        Self {
            endpoint1: self.endpoint2,
            endpoint2: self.endpoint1,
        }
    }

    pub fn delta(&self) -> Complex<T> {
        self.endpoint1.to_complex() - self.endpoint2.to_complex()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AdmissibilityVerdict<T> {
    pub admissible: bool,
    /// Integer in `exp(K̃ Δx_im) = exp(2πi m)`; real exponents force zero.
    pub m_index: i64,
    /// Allowed real-direction momenta `K̄ₙ = nπ / |Δx_re|` (empty when inadmissible).
    pub k_real: Vec<T>,
    pub reason: String,
}

/// `2 sinh(K̃ Δx_im)`: determinant of the endpoint conditions on the
/// imaginary factor `C e^{K̃x} + D e^{-K̃x}`.
pub fn imaginary_factor_determinant<T: Real>(k_tilde: T, delta_im: T) -> T {
    T::lit(2.0) * (k_tilde * delta_im).sinh()
}

pub fn complex_box_admissibility<T: Real>(cbox: &ComplexBox<T>, tolerance: T) -> Result<AdmissibilityVerdict<T>> {
    complex_box_admissibility_with_modes(cbox, tolerance, DEFAULT_REPORTED_MODES)
}

pub fn complex_box_admissibility_with_modes<T: Real>(
    cbox: &ComplexBox<T>,
    tolerance: T,
    modes: usize,
) -> Result<AdmissibilityVerdict<T>> {
    if !(tolerance > T::zero()) {
        return Err(Error::InvalidParameter("tolerance must be positive".into()));
    }
    let delta = cbox.delta();
    let (d_re, d_im) = (delta.re.abs(), delta.im.abs());
    if d_re < tolerance && d_im < tolerance {
        return Err(Error::DegenerateBox(tolerance.as_f64()));
    }
    if d_im >= tolerance {
        // any real K̃ ≠ 0 leaves the 2x2 endpoint system nonsingular
        let probe = imaginary_factor_determinant(T::one(), d_im);
        return Ok(AdmissibilityVerdict {
            admissible: false,
            m_index: 0,
            k_real: Vec::new(),
            reason: format!(
                "endpoints differ in imaginary part by {}; exp(K̃Δx_im) = 1 with real K̃ forces m = 0 and \
                 Δx_im = 0 (2 sinh(K̃Δx_im) = {} at K̃ = 1); the K̃ = 0 branch is untreated",
                d_im.as_f64(),
                probe.as_f64()
            ),
        });
    }
    if d_re < tolerance {
        return Err(Error::DegenerateBox(tolerance.as_f64()));
    }
    let unit = T::PI() / d_re;
    let k_real = (1..=modes).map(|n| T::from_count(n) * unit).collect();
    Ok(AdmissibilityVerdict {
        admissible: true,
        m_index: 0,
        k_real,
        reason: format!(
            "box parallel to the real axis with real width {}; K̄ₙ = nπ/{}",
            d_re.as_f64(),
            d_re.as_f64()
        ),
    })
}

/// Modes `sin(nπ x_re / L)` on a Dirichlet grid of `(0, L)` at height `eta`,
/// unit-L² normalized. On the `m = 0` branch the imaginary-direction factor is
/// a constant, so the samples do not depend on `eta`.
pub fn complex_box_modes<T: Real>(
    length: T,
    eta: T,
    n_max: usize,
    grid_n: usize,
) -> Result<Vec<SampledWavefunction<T>>> {
    if !(length > T::zero() && length.is_finite()) {
        return Err(Error::InvalidParameter(format!("box length must be positive, got {length}")));
    }
    let grid = Grid1D::dirichlet(T::zero(), length, grid_n, eta)?;
    (1..=n_max)
        .map(|n| {
            let k = T::from_count(n) * T::PI() / length;
            let values = grid.nodes().map(|x| Complex::new((k * x).sin(), T::zero())).collect();
            SampledWavefunction::new(grid, values, NormConvention::UnitL2)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn pt(re: f64, im: f64) -> ComplexCoordinate<f64> {
        ComplexCoordinate::new(re, im).unwrap()
    }

    #[test]
    fn spectra_in_natural_units() {
        assert_eq!(box_spectrum(PI, 3).unwrap(), vec![1.0, 4.0, 9.0]);
        assert_eq!(box_spectrum(PI / 2.0, 1).unwrap(), vec![4.0]);
        assert_eq!(box_spectrum(2.0 * PI, 2).unwrap(), vec![0.25, 1.0]);
        assert!(box_spectrum(-1.0, 2).is_err());
        assert!(box_spectrum(1.0, 0).is_err());
    }

    #[test]
    fn widths() {
        assert_eq!(quantized_widths(1.0, &[1, 2, 3]).unwrap(), vec![PI, 2.0 * PI, 3.0 * PI]);
        assert_eq!(quantized_widths(2.0, &[1]).unwrap(), vec![PI / 2.0]);
        assert_eq!(quantized_widths(PI, &[1]).unwrap(), vec![1.0]);
        assert!(quantized_widths(1.0, &[0]).is_err());
        assert!(quantized_widths(0.0, &[1]).is_err());
    }

    #[test]
    fn horizontal_box_admissible() {
        let v = complex_box_admissibility(&ComplexBox::new(pt(0.0, 0.5), pt(PI, 0.5)), 1e-9).unwrap();
        assert!(v.admissible);
        assert_eq!(v.m_index, 0);
        for (n, k) in v.k_real.iter().enumerate() {
            assert!((k - (n + 1) as f64).abs() < 1e-14);
        }
    }

    #[test]
    fn tilted_box_rejected() {
        let v = complex_box_admissibility(&ComplexBox::new(pt(0.0, 0.0), pt(PI, 1.0)), 1e-9).unwrap();
        assert!(!v.admissible);
        assert!(v.k_real.is_empty());
    }

    #[test]
    fn vertical_box_rejected_and_point_box_degenerate() {
        let v = complex_box_admissibility(&ComplexBox::new(pt(1.0, 0.0), pt(1.0, 2.0)), 1e-9).unwrap();
        assert!(!v.admissible);
        assert!(matches!(
            complex_box_admissibility(&ComplexBox::new(pt(0.0, 0.5), pt(0.0, 0.5)), 1e-9),
            Err(Error::DegenerateBox(_))
        ));
    }

    #[test]
    fn modes_do_not_depend_on_height() {
        let lifted = complex_box_modes(PI, 0.5, 2, 201).unwrap();
        let flat = complex_box_modes(PI, 0.0, 2, 201).unwrap();
        assert_eq!(lifted[0].values(), flat[0].values());
        let sine = SampledWavefunction::from_fn(*lifted[0].grid(), |x| Complex::new(x.re.sin(), 0.0));
        assert!(lifted[0].overlap(&sine).unwrap() > 1.0 - 1e-14);
        let second = lifted[1].values();
        let nodes = second.windows(2).filter(|w| (w[0].re > 0.0) != (w[1].re > 0.0)).count();
        assert_eq!(nodes, 1);
    }
}
