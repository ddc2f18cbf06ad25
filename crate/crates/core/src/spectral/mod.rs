//! Finite-difference spectra of `H = -d²/dx² + V` on a horizontal contour.

mod analytic;
mod dense;
mod hamiltonian;
mod tridiag;

pub use analytic::{
    analytic_plus_eigenfunction, plus_sector_energy, shape_invariant_spectrum, ShapeInvariantSpectrum,
    SpectrumConvention,
};
pub use dense::{dense_eigenvalues, hessenberg_reduce};
pub use hamiltonian::{discretize, HamiltonianMatrix};
pub use tridiag::{inverse_iteration, tridiagonal_eigenvalues};

use std::cmp::Ordering;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::grid::Grid1D;
use crate::potential::PotentialSpec;
use crate::scalar::{real, Real};
use crate::wavefunction::{NormConvention, SampledWavefunction};

/// Relative residual bound `‖Hψ - Eψ‖₂ ≤ RESIDUAL_BOUND · ‖H‖_∞ · ‖ψ‖₂`
/// every returned eigenpair satisfies.
pub const RESIDUAL_BOUND: f64 = 1e-8;

const INVERSE_ITERATIONS: usize = 3;
const MAX_REFINEMENTS: usize = 6;

/// Which eigenvalue algorithm backs [`eigenpairs_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EigenMethod {
    /// Complex-symmetric tridiagonal QL, falling back to `Dense` if it breaks down.
    #[default]
    Tridiagonal,
    /// Hessenberg reduction and shifted QR on the full matrix.
    Dense,
}

/// Eigenvalues sorted by `(Re E, Im E)`, with optional eigenvectors and residuals.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<T> {
    pub eigenvalues: Vec<Complex<T>>,
    pub eigenvectors: Option<Vec<SampledWavefunction<T>>>,
    /// `‖Hψ - Eψ‖₂ / ‖ψ‖₂` for each pair, present with eigenvectors.
    pub residuals: Option<Vec<T>>,
}

impl<T: Real> Spectrum<T> {
    /// Eigenvalues only, sorted.
    pub fn from_eigenvalues(mut eigenvalues: Vec<Complex<T>>) -> Self {
        sort_eigenvalues(&mut eigenvalues);
        Self {
            eigenvalues,
            eigenvectors: None,
            residuals: None,
        }
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// Complex conjugate of every eigenvalue (re-sorted); vectors are dropped.
    pub fn conjugated(&self) -> Self {
        Self::from_eigenvalues(self.eigenvalues.iter().map(|z| z.conj()).collect())
    }
}

/// Lexicographic `(Re, Im)` order.
pub fn compare_eigenvalues<T: Real>(a: &Complex<T>, b: &Complex<T>) -> Ordering {
    a.re.partial_cmp(&b.re)
        .unwrap_or(Ordering::Equal)
        .then(a.im.partial_cmp(&b.im).unwrap_or(Ordering::Equal))
}

pub fn sort_eigenvalues<T: Real>(values: &mut [Complex<T>]) {
    values.sort_by(compare_eigenvalues);
}

/// The `k` eigenvalues of smallest real part, optionally with unit-L²
/// eigenvectors whose largest component is real positive.
pub fn eigenpairs<T: Real>(m: &HamiltonianMatrix<T>, k: usize, want_vectors: bool) -> Result<Spectrum<T>> {
    eigenpairs_with(m, k, want_vectors, EigenMethod::default())
}

pub fn eigenpairs_with<T: Real>(
    m: &HamiltonianMatrix<T>,
    k: usize,
    want_vectors: bool,
    method: EigenMethod,
) -> Result<Spectrum<T>> {
    let n = m.n();
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!("need 1 <= k <= {n}, got {k}")));
    }
    let off = vec![real(m.offdiag()); n - 1];
    let mut all = match method {
        EigenMethod::Tridiagonal => match tridiagonal_eigenvalues(m.diag(), &off) {
            Ok(values) => values,
            Err(Error::NoConvergence(_)) => dense_eigenvalues(m.to_dense())?,
            Err(other) => return Err(other),
        },
        EigenMethod::Dense => dense_eigenvalues(m.to_dense())?,
    };
    sort_eigenvalues(&mut all);
    all.truncate(k);
    if !want_vectors {
        return Ok(Spectrum {
            eigenvalues: all,
            eigenvectors: None,
            residuals: None,
        });
    }

    let bound = T::lit(RESIDUAL_BOUND) * m.norm_inf();
    let mut vectors = Vec::with_capacity(k);
    let mut residuals = Vec::with_capacity(k);
    for (index, lambda) in all.iter_mut().enumerate() {
        let mut v = inverse_iteration(m.diag(), &off, *lambda, INVERSE_ITERATIONS);
        let mut residual = euclidean_residual(m, &v, *lambda);
        let mut refinements = 0;
        while !(residual <= bound) && refinements < MAX_REFINEMENTS {
            // complex-symmetric Rayleigh quotient vᵀHv / vᵀv
            let hv = m.apply(&v);
            let num = v.iter().zip(&hv).fold(real(T::zero()), |acc, (a, b)| acc + a * b);
            let den = v.iter().fold(real(T::zero()), |acc, a| acc + a * a);
            if den.norm() > T::zero() {
                *lambda = num / den;
            }
            v = inverse_iteration(m.diag(), &off, *lambda, INVERSE_ITERATIONS);
            residual = euclidean_residual(m, &v, *lambda);
            refinements += 1;
        }
        if !(residual <= bound) {
            return Err(Error::NoConvergence(format!(
                "eigenpair {index}: residual {:e} exceeds bound {:e}",
                residual.as_f64(),
                bound.as_f64()
            )));
        }
        let psi = SampledWavefunction::new(*m.grid(), v, NormConvention::UnitL2)?.with_fixed_phase();
        vectors.push(psi);
        residuals.push(residual);
    }
    Ok(Spectrum {
        eigenvalues: all,
        eigenvectors: Some(vectors),
        residuals: Some(residuals),
    })
}

/// `‖Hv - λv‖₂ / ‖v‖₂` in plain Euclidean norms.
fn euclidean_residual<T: Real>(m: &HamiltonianMatrix<T>, v: &[Complex<T>], lambda: Complex<T>) -> T {
    let hv = m.apply(v);
    let num = hv
        .iter()
        .zip(v)
        .fold(T::zero(), |acc, (a, b)| acc + (a - b * lambda).norm_sqr())
        .sqrt();
    let den = v.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr()).sqrt();
    num / den
}

/// `‖Hψ - Eψ‖₂ / ‖ψ‖₂` with the FD Hamiltonian of `v` on `grid`.
pub fn residual_norm<T: Real>(
    v: &PotentialSpec<T>,
    grid: &Grid1D<T>,
    psi: &SampledWavefunction<T>,
    energy: Complex<T>,
) -> Result<T> {
    if psi.grid() != grid {
        return Err(Error::GridMismatch("wavefunction is sampled on a different grid".into()));
    }
    let m = discretize(v, grid)?;
    Ok(euclidean_residual(&m, psi.values(), energy))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn box_grid(n: usize) -> Grid1D<f64> {
        Grid1D::dirichlet(0.0, PI, n, 0.0).unwrap()
    }

    #[test]
    fn free_box_levels() {
        let m = discretize(&PotentialSpec::constant(0.0), &box_grid(2001)).unwrap();
        let s = eigenpairs(&m, 3, false).unwrap();
        for (e, exact) in s.eigenvalues.iter().zip([1.0, 4.0, 9.0]) {
            assert!((e.re - exact).abs() / exact < 5e-3 && e.im.abs() < 1e-9);
        }
    }

    #[test]
    fn vectors_meet_residual_bound_and_phase() {
        let grid = box_grid(400);
        let v = PotentialSpec::generalized_pt(1.0, 1.0, 0.6, Complex::new(0.0, 0.0));
        let m = discretize(&v, &grid).unwrap();
        let s = eigenpairs(&m, 4, true).unwrap();
        let bound = RESIDUAL_BOUND * m.norm_inf();
        for (psi, r) in s.eigenvectors.as_ref().unwrap().iter().zip(s.residuals.as_ref().unwrap()) {
            assert!(*r <= bound);
            assert!((psi.norm() - 1.0).abs() < 1e-10);
            let peak = psi.values().iter().max_by(|a, b| a.norm().partial_cmp(&b.norm()).unwrap()).unwrap();
            assert!(peak.im.abs() < 1e-14 && peak.re > 0.0);
        }
    }

    #[test]
    fn k_out_of_range() {
        let m = discretize(&PotentialSpec::constant(0.0), &box_grid(5)).unwrap();
        assert!(eigenpairs(&m, 0, false).is_err());
        assert!(eigenpairs(&m, 6, false).is_err());
    }

    #[test]
    fn continuum_sine_residual_is_discretization_error() {
        let grid = box_grid(2001);
        let psi = SampledWavefunction::from_fn(grid, |x| x.sin());
        let r = residual_norm(&PotentialSpec::constant(0.0), &grid, &psi, Complex::new(1.0, 0.0)).unwrap();
        assert!(r < 1e-5, "{r}");
    }

    #[test]
    fn residual_rejects_foreign_grid() {
        let psi = SampledWavefunction::from_fn(box_grid(11), |x| x.sin());
        assert!(matches!(
            residual_norm(&PotentialSpec::constant(0.0), &box_grid(12), &psi, Complex::new(1.0, 0.0)),
            Err(Error::GridMismatch(_))
        ));
    }

    #[test]
    fn sorting_is_lexicographic() {
        let s = Spectrum::from_eigenvalues(vec![
            Complex::new(2.0, 1.0),
            Complex::new(1.0, 0.0),
            Complex::new(2.0, -1.0),
        ]);
        assert_eq!(
            s.eigenvalues,
            vec![Complex::new(1.0, 0.0), Complex::new(2.0, -1.0), Complex::new(2.0, 1.0)]
        );
    }
}
