use thiserror::Error;

/// Errors raised by evaluation, construction and solver routines.
///
/// Coordinates are reported as `(re, im)` pairs in `f64` regardless of the
/// scalar type the computation ran in.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("singular point at x = {}{:+}i (pole of the {family} family)", .x.0, .x.1)]
    SingularPoint { x: (f64, f64), family: &'static str },

    #[error("x = {}{:+}i lies outside the sampled range [{}, {}] at height {}", .x.0, .x.1, .range.0, .range.1, .eta)]
    OutOfRange {
        x: (f64, f64),
        range: (f64, f64),
        eta: f64,
    },

    #[error("unsupported superpotential family: {0}")]
    UnsupportedFamily(&'static str),

    #[error("ground state is not normalizable: {0}")]
    NonNormalizable(String),

    #[error("Bernoulli integration blew up at x = {reach} (|g| = {magnitude:e})")]
    BlowUp { reach: f64, magnitude: f64 },

    #[error("normalized intertwiner needs a nonzero energy, got |E| = {0:e}")]
    ZeroEnergy(f64),

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("eigensolver did not converge: {0}")]
    NoConvergence(String),

    #[error("degenerate box: endpoints coincide within {0:e}")]
    DegenerateBox(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    /// True for failures of a numerical procedure (as opposed to bad input).
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NoConvergence(_) | Error::BlowUp { .. } | Error::NonNormalizable(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
