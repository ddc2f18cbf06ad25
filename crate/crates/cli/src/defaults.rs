//! Frozen default values for every subcommand. Bump [`DEFAULTS_VERSION`]
//! whenever one of them changes.

pub const DEFAULTS_VERSION: u32 = 1;

/// Interior nodes for sampled potentials and deformations.
pub const SAMPLE_POINTS: usize = 201;
/// Interior nodes for finite-difference spectra and scans.
pub const SPECTRUM_POINTS: usize = 2001;
/// Levels reported by `spectrum` and `scan`.
pub const LEVELS: usize = 6;
/// Deformation interval, kept clear of the poles of `cot x` at 0 and π.
pub const DEFORM_X_MIN: f64 = 0.3;
pub const DEFORM_X_MAX: f64 = std::f64::consts::PI - 0.3;
pub const DEFORM_POINTS: usize = 4001;
pub const ADMISSIBILITY_TOLERANCE: f64 = ptwell::well::DEFAULT_ADMISSIBILITY_TOLERANCE;
pub const REPORTED_MODES: usize = ptwell::well::DEFAULT_REPORTED_MODES;
pub const IM_TOLERANCE: f64 = ptwell::pt::DEFAULT_IM_TOLERANCE;
pub const PAIR_TOLERANCE: f64 = ptwell::pt::DEFAULT_PAIR_TOLERANCE;
/// Environment variable naming the directory that relative `--out` paths resolve against.
pub const OUT_DIR_ENV: &str = "PTWELL_OUT_DIR";
