use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Uniform grid on the horizontal contour `Im x = eta`.
///
/// With `endpoints_excluded` the nodes are the `n` interior points of a
/// Dirichlet problem on `(x_min, x_max)`, spacing `(x_max - x_min) / (n + 1)`.
/// Otherwise both endpoints are nodes and the spacing is `(x_max - x_min) / (n - 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D<T> {
    x_min: T,
    x_max: T,
    n: usize,
    eta: T,
    endpoints_excluded: bool,
}

impl<T: Real> Grid1D<T> {
    pub fn new(x_min: T, x_max: T, n: usize, eta: T, endpoints_excluded: bool) -> Result<Self> {
        if !(x_min.is_finite() && x_max.is_finite() && eta.is_finite()) {
            return Err(Error::InvalidParameter("grid bounds must be finite".into()));
        }
        if x_min >= x_max {
            return Err(Error::InvalidParameter(format!(
                "grid requires x_min < x_max, got [{x_min}, {x_max}]"
            )));
        }
        if n < 3 {
            return Err(Error::InvalidParameter(format!("grid requires n >= 3, got {n}")));
        }
        Ok(Self {
            x_min,
            x_max,
            n,
            eta,
            endpoints_excluded,
        })
    }

    /// Dirichlet grid: `n` interior nodes of `(x_min, x_max)` at height `eta`.
    pub fn dirichlet(x_min: T, x_max: T, n: usize, eta: T) -> Result<Self> {
        Self::new(x_min, x_max, n, eta, true)
    }

    /// Closed grid: `n` nodes including both endpoints.
    pub fn closed(x_min: T, x_max: T, n: usize, eta: T) -> Result<Self> {
        Self::new(x_min, x_max, n, eta, false)
    }

    pub fn x_min(&self) -> T {
        self.x_min
    }

    pub fn x_max(&self) -> T {
        self.x_max
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn eta(&self) -> T {
        self.eta
    }

    pub fn endpoints_excluded(&self) -> bool {
        self.endpoints_excluded
    }

    pub fn length(&self) -> T {
        self.x_max - self.x_min
    }

    pub fn spacing(&self) -> T {
        let intervals = if self.endpoints_excluded {
            self.n + 1
        } else {
            self.n - 1
        };
        self.length() / T::from_count(intervals)
    }

    /// Real part of node `i`.
    pub fn node(&self, i: usize) -> T {
        let offset = if self.endpoints_excluded { i + 1 } else { i };
        self.x_min + T::from_count(offset) * self.spacing()
    }

    /// Node `i` as a point on the contour.
    pub fn point(&self, i: usize) -> Complex<T> {
        Complex::new(self.node(i), self.eta)
    }

    pub fn nodes(&self) -> impl Iterator<Item = T> + '_ {
        (0..self.n).map(move |i| self.node(i))
    }

    pub fn points(&self) -> impl Iterator<Item = Complex<T>> + '_ {
        (0..self.n).map(move |i| self.point(i))
    }

    /// Same contour and range at a different imaginary offset.
    pub fn with_eta(&self, eta: T) -> Self {
        Self { eta, ..*self }
    }

    /// Same range and offset with a different node count.
    pub fn with_n(&self, n: usize) -> Result<Self> {
        Self::new(self.x_min, self.x_max, n, self.eta, self.endpoints_excluded)
    }

    /// Bit-level identity of the grid, used to key scan records.
    pub fn signature(&self) -> GridSignature {
        GridSignature {
            x_min: self.x_min.as_f64().to_bits(),
            x_max: self.x_max.as_f64().to_bits(),
            n: self.n,
            eta: self.eta.as_f64().to_bits(),
            endpoints_excluded: self.endpoints_excluded,
        }
    }

    /// Discrete L² inner product `h · Σ conj(u_i) v_i`.
    pub fn inner(&self, u: &[Complex<T>], v: &[Complex<T>]) -> Complex<T> {
        let sum = u
            .iter()
            .zip(v)
            .fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| acc + a.conj() * b);
        sum * self.spacing()
    }

    /// Discrete L² norm `sqrt(h · Σ |v_i|²)`.
    pub fn norm(&self, v: &[Complex<T>]) -> T {
        let sum = v.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr());
        (sum * self.spacing()).sqrt()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridSignature {
    pub x_min: u64,
    pub x_max: u64,
    pub n: usize,
    pub eta: u64,
    pub endpoints_excluded: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn dirichlet_spacing_excludes_walls() {
        let g = Grid1D::dirichlet(0.0, PI, 3, 0.0).unwrap();
        assert!((g.spacing() - PI / 4.0).abs() < 1e-15);
        assert!((g.node(0) - PI / 4.0).abs() < 1e-15);
        assert!((g.node(2) - 3.0 * PI / 4.0).abs() < 1e-15);
    }

    #[test]
    fn closed_grid_hits_both_endpoints() {
        let g = Grid1D::closed(-1.0, 1.0, 5, 0.25).unwrap();
        assert_eq!(g.spacing(), 0.5);
        assert_eq!(g.node(0), -1.0);
        assert_eq!(g.node(4), 1.0);
        assert_eq!(g.point(1), Complex::new(-0.5, 0.25));
    }

    #[test]
    fn rejects_bad_ranges() {
        assert!(Grid1D::dirichlet(1.0, 1.0, 10, 0.0).is_err());
        assert!(Grid1D::dirichlet(0.0, 1.0, 2, 0.0).is_err());
        assert!(Grid1D::dirichlet(0.0, f64::INFINITY, 10, 0.0).is_err());
    }

    #[test]
    fn norm_of_constant() {
        let g = Grid1D::closed(0.0, 1.0, 11, 0.0).unwrap();
        let v = vec![Complex::new(0.0, 2.0); 11];
        // h · 11 · 4 with h = 0.1
        assert!((g.norm(&v) - (4.4f64).sqrt()).abs() < 1e-14);
    }
}
