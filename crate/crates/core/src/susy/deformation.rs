use num_complex::Complex;

use crate::coord::ComplexCoordinate;
use crate::error::{Error, Result};
use crate::grid::Grid1D;
use crate::poles::{hyperbolic_singular, PoleLattice};
use crate::scalar::{cplx, to_pair, Real};
use crate::superpotential::{deformation_value, SuperpotentialSpec};
use crate::wavefunction::{NormConvention, SampledWavefunction};

/// `|g|` above which the Bernoulli integration is declared divergent.
pub const BLOW_UP_THRESHOLD: f64 = 1e12;

/// Closed-form solution `g(x) = -2A e^{2A(x+c)} / (e^{2A(x+c)} - 1)` of
/// `g' = g² + 2Ag`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeformationClosedForm<T> {
    amplitude: Complex<T>,
    c: Complex<T>,
}

pub fn deformation_closed_form<T: Real>(amplitude: Complex<T>, c: Complex<T>) -> Result<DeformationClosedForm<T>> {
    if amplitude.norm() == T::zero() || !amplitude.norm().is_finite() || !c.norm().is_finite() {
        return Err(Error::InvalidParameter(
            "deformation needs a finite nonzero amplitude".into(),
        ));
    }
    Ok(DeformationClosedForm { amplitude, c })
}

impl<T: Real> DeformationClosedForm<T> {
    pub fn amplitude(&self) -> Complex<T> {
        self.amplitude
    }

    pub fn c(&self) -> Complex<T> {
        self.c
    }

    pub fn eval(&self, x: ComplexCoordinate<T>) -> Result<Complex<T>> {
        self.eval_at(x.to_complex())
    }

    pub fn eval_at(&self, x: Complex<T>) -> Result<Complex<T>> {
        let z = self.amplitude * (x + self.c);
        if hyperbolic_singular(z) {
            return Err(Error::SingularPoint {
                x: to_pair(x),
                family: "deformation",
            });
        }
        Ok(deformation_value(self.amplitude, z))
    }

    /// Points where `e^{2A(x+c)} = 1`.
    pub fn poles(&self) -> PoleLattice<T> {
        PoleLattice {
            origin: -self.c,
            period: cplx(T::zero(), T::PI()) / self.amplitude,
        }
    }
}

/// Integrates the Bernoulli equation `g' = g² + 2 W g` with classical RK4.
///
/// The step is the grid spacing. Integration starts at `x0` (on the grid's
/// contour), takes one partial step to the nearest node when `x0` is off-node,
/// then sweeps outward in both directions. Values are returned on every node.
pub fn deformation_numeric<T: Real>(
    w: &SuperpotentialSpec<T>,
    x0: T,
    g0: Complex<T>,
    grid: &Grid1D<T>,
) -> Result<SampledWavefunction<T>> {
    w.validate()?;
    let n = grid.n();
    let h = grid.spacing();
    let first = grid.node(0);
    let last = grid.node(n - 1);
    if !(x0 >= first - h * T::lit(1e-9) && x0 <= last + h * T::lit(1e-9)) {
        return Err(Error::InvalidParameter(format!(
            "anchor x0 = {x0} lies outside the grid nodes [{first}, {last}]"
        )));
    }
    if !(g0.re.is_finite() && g0.im.is_finite()) {
        return Err(Error::InvalidParameter("anchor value g0 must be finite".into()));
    }

    let eta = grid.eta();
    let rhs = |x: T, g: Complex<T>| -> Result<Complex<T>> {
        let wv = w.eval_at(Complex::new(x, eta))?;
        Ok(g * g + wv * g * T::lit(2.0))
    };
    let step = |x: T, g: Complex<T>, dx: T| -> Result<Complex<T>> {
        let half = dx / T::lit(2.0);
        let k1 = rhs(x, g)?;
        let k2 = rhs(x + half, g + k1 * half)?;
        let k3 = rhs(x + half, g + k2 * half)?;
        let k4 = rhs(x + dx, g + k3 * dx)?;
        Ok(g + (k1 + k2 * T::lit(2.0) + k3 * T::lit(2.0) + k4) * (dx / T::lit(6.0)))
    };
    let threshold = T::lit(BLOW_UP_THRESHOLD);
    let guard = |x: T, g: Complex<T>| -> Result<Complex<T>> {
        let m = g.norm();
        if !m.is_finite() || m > threshold {
            return Err(Error::BlowUp {
                reach: x.as_f64(),
                magnitude: m.as_f64(),
            });
        }
        Ok(g)
    };

    let anchor = ((x0 - first) / h).round().to_usize().unwrap_or(0).min(n - 1);
    let anchor_x = grid.node(anchor);
    let mut values = vec![Complex::new(T::zero(), T::zero()); n];
    values[anchor] = if anchor_x == x0 {
        g0
    } else {
        guard(anchor_x, step(x0, g0, anchor_x - x0)?)?
    };
    for i in anchor + 1..n {
        let x = grid.node(i - 1);
        values[i] = guard(grid.node(i), step(x, values[i - 1], grid.node(i) - x)?)?;
    }
    for i in (0..anchor).rev() {
        let x = grid.node(i + 1);
        values[i] = guard(grid.node(i), step(x, values[i + 1], grid.node(i) - x)?)?;
    }
    SampledWavefunction::new(*grid, values, NormConvention::Unnormalized)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn i() -> Complex<f64> {
        Complex::new(0.0, 1.0)
    }

    #[test]
    fn closed_form_at_quarter_turn() {
        let g = deformation_closed_form(i(), Complex::new(0.0, 0.0)).unwrap();
        let v = g.eval(ComplexCoordinate::real(PI / 2.0)).unwrap();
        assert!((v + i()).norm() < 1e-15);
    }

    #[test]
    fn closed_form_limits_for_real_amplitude() {
        let g = deformation_closed_form(Complex::new(1.0, 0.0), Complex::new(0.0, 0.0)).unwrap();
        assert!((g.eval(ComplexCoordinate::real(40.0)).unwrap() + 2.0).norm() < 1e-15);
        assert!(g.eval(ComplexCoordinate::real(-40.0)).unwrap().norm() < 1e-30);
        // far tails must not overflow
        assert!((g.eval(ComplexCoordinate::real(1e4)).unwrap() + 2.0).norm() < 1e-15);
        assert_eq!(g.eval(ComplexCoordinate::real(-1e4)).unwrap().norm(), 0.0);
    }

    #[test]
    fn closed_form_pole() {
        let g = deformation_closed_form(i(), Complex::new(0.0, 0.0)).unwrap();
        assert!(matches!(
            g.eval(ComplexCoordinate::real(PI)),
            Err(Error::SingularPoint { .. })
        ));
        assert!((g.poles().pole(1) - Complex::new(PI, 0.0)).norm() < 1e-15);
        assert!(deformation_closed_form(Complex::new(0.0, 0.0), Complex::new(0.0, 0.0)).is_err());
    }

    #[test]
    fn zero_anchor_stays_zero() {
        let grid = Grid1D::closed(0.3, PI - 0.3, 101, 0.0).unwrap();
        let w = SuperpotentialSpec::GeneralizedCot {
            a: 1.0,
            alpha: 1.0,
            b: 0.5,
            c: Complex::new(0.0, 0.0),
        };
        let g = deformation_numeric(&w, 1.0, Complex::new(0.0, 0.0), &grid).unwrap();
        assert!(g.values().iter().all(|v| v.norm() == 0.0));
    }

    #[test]
    fn blow_up_is_reported() {
        // g' = g² with g(0) = 1 diverges at x = 1
        let grid = Grid1D::closed(0.0, 2.0, 201, 0.0).unwrap();
        let w = SuperpotentialSpec::Constant {
            amplitude: Complex::new(0.0, 0.0),
        };
        match deformation_numeric(&w, 0.0, Complex::new(1.0, 0.0), &grid) {
            Err(Error::BlowUp { reach, .. }) => assert!(reach > 0.9 && reach < 1.1, "{reach}"),
            other => panic!("expected blow-up, got {other:?}"),
        }
    }

    #[test]
    fn anchor_must_be_inside() {
        let grid = Grid1D::closed(0.0, 1.0, 11, 0.0).unwrap();
        let w = SuperpotentialSpec::Constant {
            amplitude: Complex::new(1.0, 0.0),
        };
        assert!(deformation_numeric(&w, 1.5, Complex::new(0.1, 0.0), &grid).is_err());
    }
}
