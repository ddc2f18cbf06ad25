//! Parameter scans of the generalized PT family over `(a, α, B)`.

use num_complex::Complex;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grid::{Grid1D, GridSignature};
use crate::potential::PotentialSpec;
use crate::pt::{classify, pt_residual, PTClassification, DEFAULT_IM_TOLERANCE, DEFAULT_PAIR_TOLERANCE};
use crate::scalar::Real;
use crate::spectral::{discretize, eigenpairs};

/// Number of eigenvalues kept in each record.
pub const RECORDED_LEVELS: usize = 6;

/// Where each scan point is discretized.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScanDomain<T> {
    /// The same grid for every point (its `eta` is replaced by the scan's).
    Fixed(Grid1D<T>),
    /// The pole-to-pole well `(0, π/|α|)` of each point with `n` interior nodes.
    Well { n: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanConfig<T> {
    pub a_values: Vec<T>,
    pub alpha_values: Vec<T>,
    pub b_values: Vec<T>,
    pub eta: T,
    pub domain: ScanDomain<T>,
    pub k_levels: usize,
    pub im_tolerance: T,
    pub pair_tolerance: T,
}

impl<T: Real> ScanConfig<T> {
    pub fn new(a_values: Vec<T>, alpha_values: Vec<T>, b_values: Vec<T>, eta: T, domain: ScanDomain<T>, k_levels: usize) -> Self {
        Self {
            a_values,
            alpha_values,
            b_values,
            eta,
            domain,
            k_levels,
            im_tolerance: T::lit(DEFAULT_IM_TOLERANCE),
            pair_tolerance: T::lit(DEFAULT_PAIR_TOLERANCE),
        }
    }

    fn validate(&self) -> Result<()> {
        for (name, list) in [("a", &self.a_values), ("alpha", &self.alpha_values), ("B", &self.b_values)] {
            if list.is_empty() {
                return Err(Error::InvalidParameter(format!("scan range for {name} is empty")));
            }
            if list.iter().any(|v| !v.is_finite()) {
                return Err(Error::InvalidParameter(format!("scan range for {name} has non-finite values")));
            }
            let mut sorted: Vec<u64> = list.iter().map(|v| v.as_f64().to_bits()).collect();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidParameter(format!("scan range for {name} has duplicates")));
            }
        }
        if self.alpha_values.iter().any(|&v| v == T::zero()) {
            return Err(Error::InvalidParameter("alpha must be nonzero".into()));
        }
        if self.k_levels == 0 {
            return Err(Error::InvalidParameter("k_levels must be at least 1".into()));
        }
        if !self.eta.is_finite() {
            return Err(Error::InvalidParameter("eta must be finite".into()));
        }
        if let ScanDomain::Well { n } = self.domain {
            if n < 3 {
                return Err(Error::InvalidParameter("well grid needs n >= 3".into()));
            }
        }
        Ok(())
    }

    /// Points in lexicographic `(a, α, B)` input order.
    pub fn points(&self) -> Vec<(T, T, T)> {
        let mut out = Vec::with_capacity(self.a_values.len() * self.alpha_values.len() * self.b_values.len());
        for &a in &self.a_values {
            for &alpha in &self.alpha_values {
                for &b in &self.b_values {
                    out.push((a, alpha, b));
                }
            }
        }
        out
    }

    fn grid_for(&self, alpha: T) -> Result<Grid1D<T>> {
        match self.domain {
            ScanDomain::Fixed(grid) => Ok(grid.with_eta(self.eta)),
            ScanDomain::Well { n } => Grid1D::dirichlet(T::zero(), T::PI() / alpha.abs(), n, self.eta),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PhaseMapRecord<T> {
    pub a: T,
    pub alpha: T,
    pub b: T,
    pub eta: T,
    pub grid: Option<GridSignature>,
    pub classification: Option<PTClassification<T>>,
    pub lowest_levels: Vec<Complex<T>>,
    /// Largest PT-mirror mismatch of the potential about the well center.
    pub pt_residual: Option<T>,
    /// Failure recorded for this point; the scan itself continues.
    pub error: Option<String>,
}

/// Classifies the spectrum of the generalized PT potential at every
/// `(a, α, B)` using `workers` threads. Output order follows the inputs and is
/// independent of the worker count.
pub fn phase_scan<T: Real>(config: &ScanConfig<T>, workers: usize) -> Result<Vec<PhaseMapRecord<T>>> {
    config.validate()?;
    let points = config.points();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::InvalidParameter(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(|| {
        points
            .par_iter()
            .map(|&(a, alpha, b)| scan_point(config, a, alpha, b))
            .collect()
    }))
}

fn scan_point<T: Real>(config: &ScanConfig<T>, a: T, alpha: T, b: T) -> PhaseMapRecord<T> {
    let mut record = PhaseMapRecord {
        a,
        alpha,
        b,
        eta: config.eta,
        grid: None,
        classification: None,
        lowest_levels: Vec::new(),
        pt_residual: None,
        error: None,
    };
    let outcome = (|| -> Result<()> {
        let grid = config.grid_for(alpha)?;
        record.grid = Some(grid.signature());
        let v = PotentialSpec::generalized_pt(a, alpha, b, Complex::new(T::zero(), T::zero()));
        if let Some((lo, hi)) = v.well() {
            let half = (hi - lo) / T::lit(2.0);
            // stay clear of the walls, where the residual is a difference of huge numbers
            record.pt_residual = Some(pt_residual(&v, (lo + hi) / T::lit(2.0), half * T::lit(0.9), config.eta, 64)?);
        }
        let m = discretize(&v, &grid)?;
        let spectrum = eigenpairs(&m, config.k_levels.min(m.n()), false)?;
        record.classification = Some(classify(&spectrum, config.im_tolerance, config.pair_tolerance));
        record.lowest_levels = spectrum.eigenvalues.iter().copied().take(RECORDED_LEVELS).collect();
        Ok(())
    })();
    if let Err(e) = outcome {
        record.error = Some(e.to_string());
    }
    record
}
