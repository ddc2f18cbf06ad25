use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::superpotential::SuperpotentialSpec;
use crate::wavefunction::{NormConvention, SampledWavefunction};

/// Energies below this magnitude cannot be used to normalize an intertwined state.
pub const ZERO_ENERGY_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Intertwiner {
    /// `𝒜 = d/dx + W`, maps the lower sector to the upper one.
    Lower,
    /// `𝒜† = -d/dx + W`, maps the upper sector to the lower one.
    Raise,
}

/// Applies `𝒜` or `𝒜†` to a sampled state without normalization.
pub fn intertwine<T: Real>(
    direction: Intertwiner,
    w: &SuperpotentialSpec<T>,
    psi: &SampledWavefunction<T>,
) -> Result<SampledWavefunction<T>> {
    let derivative = psi.derivative();
    let sign = match direction {
        Intertwiner::Lower => T::one(),
        Intertwiner::Raise => -T::one(),
    };
    let values = psi
        .grid()
        .points()
        .zip(psi.values())
        .zip(derivative)
        .map(|((x, &v), dv)| Ok(dv * sign + w.eval_at(x)? * v))
        .collect::<Result<Vec<Complex<T>>>>()?;
    SampledWavefunction::new(*psi.grid(), values, NormConvention::Unnormalized)
}

/// `|E|^{-1/2} 𝒜ψ` (or `𝒜†ψ`), the partner-sector image of an eigenstate of energy `E`.
pub fn apply_intertwiner<T: Real>(
    direction: Intertwiner,
    w: &SuperpotentialSpec<T>,
    psi: &SampledWavefunction<T>,
    energy: Complex<T>,
) -> Result<SampledWavefunction<T>> {
    let magnitude = energy.norm();
    if magnitude < T::lit(ZERO_ENERGY_TOLERANCE) {
        return Err(Error::ZeroEnergy(magnitude.as_f64()));
    }
    let image = intertwine(direction, w, psi)?;
    Ok(image.scaled(Complex::new(magnitude.sqrt().recip(), T::zero())))
}
