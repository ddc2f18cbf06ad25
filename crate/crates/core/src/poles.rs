//! Pole bookkeeping for the trigonometric and hyperbolic families.
//!
//! Singularity is decided in argument space: a trigonometric argument `u` is
//! singular when it lies within [`POLE_TOLERANCE`] of some `kπ`, a hyperbolic
//! argument `z` when it lies within the same distance of some `i·kπ`.

use num_complex::Complex;

use crate::scalar::{cplx, Real};

/// Distance in argument space below which a point counts as a pole.
pub const POLE_TOLERANCE: f64 = 1e-12;

/// Distance from `u` to the nearest multiple of π.
pub fn trig_pole_distance<T: Real>(u: Complex<T>) -> T {
    let k = (u.re / T::PI()).round();
    (u - cplx(k * T::PI(), T::zero())).norm()
}

/// Distance from `z` to the nearest `i·kπ`.
pub fn hyperbolic_pole_distance<T: Real>(z: Complex<T>) -> T {
    let k = (z.im / T::PI()).round();
    (z - cplx(T::zero(), k * T::PI())).norm()
}

pub(crate) fn trig_singular<T: Real>(u: Complex<T>) -> bool {
    trig_pole_distance(u) < T::lit(POLE_TOLERANCE)
}

pub(crate) fn hyperbolic_singular<T: Real>(z: Complex<T>) -> bool {
    hyperbolic_pole_distance(z) < T::lit(POLE_TOLERANCE)
}

/// Singular points `origin + k·period`, `k ∈ ℤ`, in the x-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleLattice<T> {
    pub origin: Complex<T>,
    pub period: Complex<T>,
}

impl<T: Real> PoleLattice<T> {
    pub fn pole(&self, k: i64) -> Complex<T> {
        self.origin + self.period * T::from_i64(k).expect("pole index representable")
    }

    /// Pole closest to `x`.
    pub fn nearest(&self, x: Complex<T>) -> Complex<T> {
        // project onto the lattice direction
        let t = (x - self.origin) / self.period;
        let k = t.re.round();
        self.origin + self.period * k
    }

    /// Poles on the contour `Im x = eta` with real part in `[x_min, x_max]`.
    ///
    /// `tolerance` is measured in the x-plane.
    pub fn on_segment(&self, x_min: T, x_max: T, eta: T, tolerance: T) -> Vec<Complex<T>> {
        let mut out = Vec::new();
        if self.period.re.abs() <= tolerance {
            // vertical lattice: at most one column of poles
            if (self.origin.re - x_min) >= -tolerance && (x_max - self.origin.re) >= -tolerance {
                let t = ((Complex::new(self.origin.re, eta) - self.origin) / self.period).re.round();
                let p = self.origin + self.period * t;
                if (p.im - eta).abs() <= tolerance {
                    out.push(p);
                }
            }
            return out;
        }
        let lo = ((x_min - self.origin.re) / self.period.re).min((x_max - self.origin.re) / self.period.re);
        let hi = ((x_min - self.origin.re) / self.period.re).max((x_max - self.origin.re) / self.period.re);
        let mut k = lo.floor() - T::one();
        while k <= hi.ceil() + T::one() {
            let p = self.origin + self.period * k;
            if (p.im - eta).abs() <= tolerance && p.re >= x_min - tolerance && p.re <= x_max + tolerance {
                out.push(p);
            }
            k = k + T::one();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn trig_distance_wraps_to_nearest_multiple() {
        assert!(trig_pole_distance(Complex::new(3.0 * PI + 1e-3, 0.0)) - 1e-3 < 1e-12);
        assert!(trig_singular(Complex::new(-2.0 * PI, 0.0)));
        assert!(!trig_singular(Complex::new(PI, 1e-3)));
    }

    #[test]
    fn hyperbolic_poles_on_imaginary_axis() {
        assert!(hyperbolic_singular(Complex::new(0.0, PI)));
        assert!(!hyperbolic_singular(Complex::new(1e-6, PI)));
    }

    #[test]
    fn segment_lists_real_poles() {
        let lattice = PoleLattice {
            origin: Complex::new(0.0, 0.0),
            period: Complex::new(PI / 2.0, 0.0),
        };
        let poles = lattice.on_segment(0.0, PI, 0.0, 1e-9);
        assert_eq!(poles.len(), 3);
        assert!(lattice.on_segment(0.0, PI, 0.3, 1e-9).is_empty());
    }
}
