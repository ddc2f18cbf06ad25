use num_complex::Complex;

use crate::error::{Error, Result};
use crate::grid::Grid1D;
use crate::scalar::{real, Real};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormConvention {
    /// Discrete L² norm `sqrt(h Σ |ψ_i|²)` equal to one.
    UnitL2,
    Unnormalized,
}

/// Complex function values on the nodes of a [`Grid1D`].
#[derive(Debug, Clone, PartialEq)]
pub struct SampledWavefunction<T> {
    grid: Grid1D<T>,
    values: Vec<Complex<T>>,
    norm_convention: NormConvention,
}

impl<T: Real> SampledWavefunction<T> {
    /// Wraps raw samples; `UnitL2` rescales them.
    pub fn new(grid: Grid1D<T>, values: Vec<Complex<T>>, norm_convention: NormConvention) -> Result<Self> {
        if values.len() != grid.n() {
            return Err(Error::GridMismatch(format!(
                "{} samples for a grid of {} nodes",
                values.len(),
                grid.n()
            )));
        }
        let raw = Self {
            grid,
            values,
            norm_convention: NormConvention::Unnormalized,
        };
        match norm_convention {
            NormConvention::Unnormalized => Ok(raw),
            NormConvention::UnitL2 => raw.normalized(),
        }
    }

    pub fn from_fn(grid: Grid1D<T>, f: impl Fn(Complex<T>) -> Complex<T>) -> Self {
        let values = grid.points().map(f).collect();
        Self {
            grid,
            values,
            norm_convention: NormConvention::Unnormalized,
        }
    }

    pub fn grid(&self) -> &Grid1D<T> {
        &self.grid
    }

    pub fn values(&self) -> &[Complex<T>] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex<T>> {
        self.values
    }

    pub fn norm_convention(&self) -> NormConvention {
        self.norm_convention
    }

    pub fn norm(&self) -> T {
        self.grid.norm(&self.values)
    }

    pub fn normalized(mut self) -> Result<Self> {
        let norm = self.norm();
        if !(norm.is_finite() && norm > T::zero()) {
            return Err(Error::NonNormalizable(format!("discrete norm is {norm}")));
        }
        for v in &mut self.values {
            *v = *v / norm;
        }
        self.norm_convention = NormConvention::UnitL2;
        Ok(self)
    }

    /// Rotates the global phase so the largest-magnitude sample is real positive.
    pub fn with_fixed_phase(mut self) -> Self {
        let pivot = self
            .values
            .iter()
            .copied()
            .max_by(|a, b| a.norm_sqr().partial_cmp(&b.norm_sqr()).unwrap_or(std::cmp::Ordering::Equal));
        if let Some(p) = pivot {
            if p.norm() > T::zero() {
                let phase = p.conj() / p.norm();
                for v in &mut self.values {
                    *v = *v * phase;
                }
            }
        }
        self
    }

    /// `|⟨self, other⟩| / (‖self‖ ‖other‖)`.
    pub fn overlap(&self, other: &Self) -> Result<T> {
        self.check_same_grid(other)?;
        let ip = self.grid.inner(&self.values, &other.values);
        Ok(ip.norm() / (self.norm() * other.norm()))
    }

    pub fn scaled(mut self, factor: Complex<T>) -> Self {
        for v in &mut self.values {
            *v = *v * factor;
        }
        self.norm_convention = NormConvention::Unnormalized;
        self
    }

    /// First derivative with 3-point central differences inside and
    /// second-order one-sided stencils at the two edge nodes.
    pub fn derivative(&self) -> Vec<Complex<T>> {
        let h = self.grid.spacing();
        let v = &self.values;
        let n = v.len();
        let two_h = h * T::lit(2.0);
        let mut d = vec![real(T::zero()); n];
        for i in 1..n - 1 {
            d[i] = (v[i + 1] - v[i - 1]) / two_h;
        }
        let three = T::lit(3.0);
        let four = T::lit(4.0);
        d[0] = (v[0] * (-three) + v[1] * four - v[2]) / two_h;
        d[n - 1] = (v[n - 1] * three - v[n - 2] * four + v[n - 3]) / two_h;
        d
    }

    pub(crate) fn check_same_grid(&self, other: &Self) -> Result<()> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch("wavefunctions live on different grids".into()));
        }
        Ok(())
    }
}
