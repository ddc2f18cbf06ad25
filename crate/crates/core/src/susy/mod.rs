//! Supersymmetric partner construction and isospectral deformation.
//!
//! With λ = 1 a superpotential `W` factorizes the pair
//! `V∓ = W² ∓ W'`, and the first-order operators `𝒜 = d/dx + W`,
//! `𝒜† = -d/dx + W` give `H₋ = 𝒜†𝒜`, `H₊ = 𝒜𝒜†`.

mod deformation;
mod intertwiner;

pub use deformation::{deformation_closed_form, deformation_numeric, DeformationClosedForm, BLOW_UP_THRESHOLD};
pub use intertwiner::{apply_intertwiner, intertwine, Intertwiner, ZERO_ENERGY_TOLERANCE};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::grid::Grid1D;
use crate::potential::{PotentialFamily, PotentialSpec};
use crate::scalar::{imag_unit, Real};
use crate::superpotential::SuperpotentialSpec;
use crate::wavefunction::{NormConvention, SampledWavefunction};

/// The two potentials `W² ∓ W'` generated by one superpotential.
#[derive(Debug, Clone, PartialEq)]
pub struct PartnerPair<T> {
    pub v_minus: PotentialSpec<T>,
    pub v_plus: PotentialSpec<T>,
    pub w: SuperpotentialSpec<T>,
}

/// Closed-form partner potentials for each superpotential family.
///
/// The deformed (coth) superpotential keeps `V₋ = A²` and moves `V₊` to the
/// `sinh⁻²` form; for purely imaginary `A = i a` that is `2a² csc² - a²`.
pub fn partner_potentials<T: Real>(w: &SuperpotentialSpec<T>) -> Result<PartnerPair<T>> {
    w.validate()?;
    let (v_minus, v_plus) = match *w {
        SuperpotentialSpec::Constant { amplitude } => {
            let v = PotentialSpec::analytic(PotentialFamily::Constant {
                value: amplitude * amplitude,
            });
            (v.clone(), v)
        }
        SuperpotentialSpec::GeneralizedCot { a, alpha, b, c } => (
            PotentialSpec::generalized_pt_lower(a, alpha, b, c),
            PotentialSpec::generalized_pt(a, alpha, b, c),
        ),
        SuperpotentialSpec::CothShifted { amplitude, c } | SuperpotentialSpec::Deformed { amplitude, c } => {
            let v_minus = PotentialSpec::analytic(PotentialFamily::Constant {
                value: amplitude * amplitude,
            });
            let v_plus = if amplitude.re == T::zero() {
                PotentialSpec::csc_squared(amplitude.im, c)
            } else {
                PotentialSpec::analytic(PotentialFamily::SinhInvSquared { amplitude, c })
            };
            (v_minus, v_plus)
        }
    };
    Ok(PartnerPair { v_minus, v_plus, w: *w })
}

/// `ψ₀ = exp(-∫ˣ W)` in closed form on the grid nodes.
///
/// * constant: `e^{-A x}`
/// * generalized cot: `sin(α x + α c)^{a/α} e^{-i B x}`
/// * coth / deformed: `-e^{-A x} + e^{A x + 2 A c}`
///
/// A negative power `a/α` with a pole on the closed grid interval makes the
/// state diverge at the wall and is reported as [`Error::NonNormalizable`].
pub fn ground_state_from_superpotential<T: Real>(
    w: &SuperpotentialSpec<T>,
    grid: &Grid1D<T>,
    convention: NormConvention,
) -> Result<SampledWavefunction<T>> {
    w.validate()?;
    let i = imag_unit::<T>();
    let values: Vec<Complex<T>> = match *w {
        SuperpotentialSpec::Constant { amplitude } => grid.points().map(|x| (-amplitude * x).exp()).collect(),
        SuperpotentialSpec::GeneralizedCot { a, alpha, b, c } => {
            let power = a / alpha;
            if power < T::zero() {
                let lattice = w.poles().expect("cot family has poles");
                let tol = grid.spacing() * T::lit(1e-9);
                let walls = lattice.on_segment(grid.x_min(), grid.x_max(), grid.eta(), tol);
                if !walls.is_empty() {
                    return Err(Error::NonNormalizable(format!(
                        "sin(αx+αc)^{} diverges at the pole x = {}",
                        power.as_f64(),
                        walls[0].re.as_f64()
                    )));
                }
            }
            grid.points()
                .map(|x| {
                    let u = (x + c) * alpha;
                    (u.sin().ln() * power).exp() * (-i * x * b).exp()
                })
                .collect()
        }
        SuperpotentialSpec::CothShifted { amplitude, c } | SuperpotentialSpec::Deformed { amplitude, c } => {
            let two = T::lit(2.0);
            grid.points()
                .map(|x| -(-amplitude * x).exp() + (amplitude * x + amplitude * c * two).exp())
                .collect()
        }
    };
    if let Some(bad) = values.iter().position(|v| !(v.re.is_finite() && v.im.is_finite())) {
        return Err(Error::NonNormalizable(format!(
            "ground state is not finite at x = {}",
            grid.node(bad).as_f64()
        )));
    }
    SampledWavefunction::new(*grid, values, convention)
}

/// `W² - W'` and `W² + W'` evaluated directly from the superpotential.
pub fn partner_values_from_superpotential<T: Real>(
    w: &SuperpotentialSpec<T>,
    x: Complex<T>,
) -> Result<(Complex<T>, Complex<T>)> {
    let wv = w.eval_at(x)?;
    let dw = w.derivative_at(x)?;
    let sq = wv * wv;
    Ok((sq - dw, sq + dw))
}
