//! PT symmetry of potentials and spectra.
//!
//! Parity reflects only the real part of the coordinate about a center,
//! `x_re - center -> center - x_re`, keeping `x_im`; time reversal is complex
//! conjugation. A PT-symmetric potential therefore satisfies
//! `V(center + δ + iη) = conj(V(center - δ + iη))`.
//!
//! The reflection `x_im -> -x_im` at fixed `x_re` also leaves the `csc²`
//! family invariant, but does not describe a box along the real axis and is
//! not used here.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::poles::trig_singular;
use crate::potential::PotentialSpec;
use crate::scalar::{cplx, Real};
use crate::spectral::Spectrum;

/// `|Im E|` at or below this counts as real.
pub const DEFAULT_IM_TOLERANCE: f64 = 1e-6;
/// Maximum `|E - conj(E')|` for two eigenvalues to form a conjugate pair.
pub const DEFAULT_PAIR_TOLERANCE: f64 = 1e-4;

/// `max_δ |V(c + δ + iη) - conj(V(c - δ + iη))|` over `δ = w·j/n`, `j = 1..=n`.
pub fn pt_residual<T: Real>(v: &PotentialSpec<T>, center: T, half_width: T, eta: T, n_samples: usize) -> Result<T> {
    if !(half_width > T::zero()) || n_samples == 0 {
        return Err(Error::InvalidParameter(
            "pt_residual needs a positive half width and at least one sample".into(),
        ));
    }
    let mut worst = T::zero();
    for j in 1..=n_samples {
        let delta = half_width * T::from_count(j) / T::from_count(n_samples);
        let right = v.eval_at(cplx(center + delta, eta))?;
        let left = v.eval_at(cplx(center - delta, eta))?;
        worst = worst.max((right - left.conj()).norm());
    }
    Ok(worst)
}

/// Real and imaginary parts of `2a² csc²(ξ + iη) - a²` from the explicit
/// split
///
/// `Re = a² [8 (sin²ξ cosh²η - cos²ξ sinh²η) / (cos 2ξ - cosh 2η)² - 1]`,
/// `Im = -4a² sin 2ξ sinh 2η / (cos 2ξ - cosh 2η)²`.
///
/// The real part is even and the imaginary part odd in `ξ`.
pub fn eq11_real_imag<T: Real>(xi: T, eta: T, a: T) -> Result<(T, T)> {
    if trig_singular(cplx(xi, eta)) {
        return Err(Error::SingularPoint {
            x: (xi.as_f64(), eta.as_f64()),
            family: "csc-squared (ξ, η)",
        });
    }
    let two = T::lit(2.0);
    let (s, c) = (xi.sin(), xi.cos());
    let (sh, ch) = (eta.sinh(), eta.cosh());
    let denom = (((two * xi).cos()) - (two * eta).cosh()).powi(2);
    let a2 = a * a;
    let re = a2 * (T::lit(8.0) * (s * s * ch * ch - c * c * sh * sh) / denom - T::one());
    let im = -a2 * T::lit(4.0) * (two * xi).sin() * (two * eta).sinh() / denom;
    Ok((re, im))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Phase {
    Unbroken,
    Broken,
}

impl Phase {
    pub fn as_str(&self) -> &'static str {
        match self {
            Phase::Unbroken => "Unbroken",
            Phase::Broken => "Broken",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PTClassification<T> {
    pub phase: Phase,
    pub max_abs_im: T,
    /// Index pairs `(i, j)`, `i < j`, of eigenvalues with `E_i ≈ conj(E_j)`.
    pub conjugate_pairs: Vec<(usize, usize)>,
    /// Complex eigenvalues with no conjugate partner; a solver-quality warning.
    pub unpaired_complex: Vec<usize>,
}

impl<T: Real> PTClassification<T> {
    pub fn has_pairing_warning(&self) -> bool {
        !self.unpaired_complex.is_empty()
    }
}

/// Unbroken when every eigenvalue is real within `im_tolerance`; otherwise
/// broken, with complex eigenvalues greedily matched to their nearest conjugate.
pub fn classify<T: Real>(spectrum: &Spectrum<T>, im_tolerance: T, pair_tolerance: T) -> PTClassification<T> {
    let values = &spectrum.eigenvalues;
    let max_abs_im = values.iter().map(|z| z.im.abs()).fold(T::zero(), T::max);
    let complex: Vec<usize> = (0..values.len()).filter(|&i| values[i].im.abs() > im_tolerance).collect();
    let mut matched = vec![false; values.len()];
    let mut conjugate_pairs = Vec::new();
    let mut unpaired_complex = Vec::new();
    for &i in &complex {
        if matched[i] {
            continue;
        }
        let target: Complex<T> = values[i].conj();
        let best = complex
            .iter()
            .copied()
            .filter(|&j| j != i && !matched[j])
            .map(|j| (j, (values[j] - target).norm()))
            .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal));
        match best {
            Some((j, distance)) if distance <= pair_tolerance => {
                matched[i] = true;
                matched[j] = true;
                conjugate_pairs.push((i.min(j), i.max(j)));
            }
            _ => {
                matched[i] = true;
                unpaired_complex.push(i);
            }
        }
    }
    PTClassification {
        phase: if complex.is_empty() { Phase::Unbroken } else { Phase::Broken },
        max_abs_im,
        conjugate_pairs,
        unpaired_complex,
    }
}
