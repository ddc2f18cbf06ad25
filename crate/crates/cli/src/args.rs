use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::defaults::*;
use crate::output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "ptwell",
    version,
    about = "Partner potentials, isospectral deformations, complex boxes and PT-symmetric spectra of the infinite well",
    after_help = "Exit codes: 0 success, 1 invalid input, 2 numerical failure (or a failed `verify` check).\n\
                  Errors are reported on stderr as a single JSON object.\n\
                  Relative --out paths resolve against $PTWELL_OUT_DIR when it is set."
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Write the result to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample the partner potentials V∓ = W² ∓ W' of a superpotential.
    Partner(PartnerArgs),
    /// Compare the closed-form deformation g(x) with a numerical solution of g' = g² + 2Ag.
    Deform(DeformArgs),
    /// Lowest eigenvalues and residuals of a finite-difference Hamiltonian.
    Spectrum(SpectrumArgs),
    /// Quantized box widths κπ/a and admissibility of complex boxes.
    Box(BoxArgs),
    /// Classify the spectrum of the generalized PT family over a parameter grid.
    Scan(ScanArgs),
    /// Run the built-in invariant suite.
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuperpotentialKind {
    /// W = -a cot(α(x+c)) + iB
    Cot,
    /// W = A
    Constant,
    /// W = -A coth(A(x+c))
    Coth,
    /// W = A + g with the closed-form deformation g
    Deformed,
}

#[derive(Debug, Args)]
pub struct PartnerArgs {
    #[arg(long, value_enum, default_value_t = SuperpotentialKind::Cot)]
    pub family: SuperpotentialKind,
    #[command(flatten)]
    pub cot: CotParams,
    #[command(flatten)]
    pub amplitude: AmplitudeParams,
    /// Left end of the sampled interval [default: -Re c for cot, 0 otherwise].
    #[arg(long, value_parser = finite)]
    pub x_min: Option<f64>,
    /// Right end of the sampled interval [default: x-min + π/|α| for cot, π otherwise].
    #[arg(long, value_parser = finite)]
    pub x_max: Option<f64>,
    /// Interior sample points; the interval ends are excluded.
    #[arg(long, default_value_t = SAMPLE_POINTS)]
    pub n: usize,
    /// Imaginary offset of the sampling line.
    #[arg(long, default_value_t = 0.0, value_parser = finite)]
    pub eta: f64,
    /// Emit (ξ, Re V, Im V) of 2a²csc²(ξ+iη) - a² in the real split form, using only --a and --eta.
    #[arg(long)]
    pub split_parts: bool,
}

#[derive(Debug, Args)]
pub struct CotParams {
    #[arg(long, default_value_t = 1.0, value_parser = finite)]
    pub a: f64,
    #[arg(long, default_value_t = 1.0, value_parser = finite)]
    pub alpha: f64,
    /// Real coefficient of the imaginary shift iB.
    #[arg(long, default_value_t = 0.0, value_parser = finite)]
    pub b: f64,
    #[arg(long, default_value_t = 0.0, value_parser = finite)]
    pub c_re: f64,
    #[arg(long, default_value_t = 0.0, value_parser = finite)]
    pub c_im: f64,
}

#[derive(Debug, Args)]
pub struct AmplitudeParams {
    /// Real part of the amplitude A (constant, coth and deformed families).
    #[arg(long, default_value_t = 0.0, value_parser = finite)]
    pub amplitude_re: f64,
    /// Imaginary part of the amplitude A.
    #[arg(long, default_value_t = 1.0, value_parser = finite)]
    pub amplitude_im: f64,
}

#[derive(Debug, Args)]
pub struct DeformArgs {
    #[command(flatten)]
    pub amplitude: AmplitudeParams,
    /// Real part of the shift c in z = A(x + c).
    #[arg(long, default_value_t = 0.0, value_parser = finite)]
    pub c_re: f64,
    #[arg(long, default_value_t = 0.0, value_parser = finite)]
    pub c_im: f64,
    #[arg(long, default_value_t = DEFORM_X_MIN, value_parser = finite)]
    pub x_min: f64,
    #[arg(long, default_value_t = DEFORM_X_MAX, value_parser = finite)]
    pub x_max: f64,
    /// Grid nodes, both ends included.
    #[arg(long, default_value_t = DEFORM_POINTS)]
    pub n: usize,
    /// Anchor where the numerical solution takes the closed-form value [default: interval midpoint].
    #[arg(long, value_parser = finite)]
    pub anchor: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PotentialKind {
    /// (a² + αa) csc²(α(x+c)) - 2iaB cot(α(x+c)) - (a² + B²)
    Gpt,
    /// (a² - αa) csc²(α(x+c)) - 2iaB cot(α(x+c)) - (a² + B²)
    GptLower,
    /// 2a² csc²(a(x+c)) - a²
    Csc2,
    /// V = value
    Constant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Tridiagonal,
    Dense,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long, value_enum, default_value_t = PotentialKind::Gpt)]
    pub potential: PotentialKind,
    #[command(flatten)]
    pub cot: CotParams,
    /// Value of the constant potential.
    #[arg(long, default_value_t = 0.0, value_parser = finite)]
    pub value: f64,
    /// Left wall of the box.
    #[arg(long, default_value_t = 0.0, value_parser = finite)]
    pub x_min: f64,
    /// Box length [default: π/|α| for gpt families, π/|a| for csc2, π for constant].
    #[arg(long, value_parser = finite)]
    pub length: Option<f64>,
    /// Interior grid nodes.
    #[arg(long, default_value_t = SPECTRUM_POINTS)]
    pub n: usize,
    /// Number of levels.
    #[arg(long, default_value_t = LEVELS)]
    pub k: usize,
    /// Imaginary offset of the contour.
    #[arg(long, default_value_t = 0.0, value_parser = finite)]
    pub eta: f64,
    #[arg(long, value_enum, default_value_t = Method::Tridiagonal)]
    pub method: Method,
}

#[derive(Debug, Args)]
pub struct BoxArgs {
    #[arg(long, default_value_t = 1.0, value_parser = finite)]
    pub a: f64,
    /// Width indices κ as a list "1,2,3" or an inclusive range "1..3".
    #[arg(long, default_value = "1..3")]
    pub kappa: String,
    /// Complex box "x1_re,x1_im,x2_re,x2_im" to test for admissibility; repeatable.
    #[arg(long = "endpoints", value_name = "X1RE,X1IM,X2RE,X2IM")]
    pub endpoints: Vec<String>,
    /// Absolute tolerance on the imaginary mismatch of the endpoints.
    #[arg(long, default_value_t = ADMISSIBILITY_TOLERANCE, value_parser = finite)]
    pub tolerance: f64,
    /// Momenta reported for an admissible box.
    #[arg(long, default_value_t = REPORTED_MODES)]
    pub modes: usize,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Values of a: list "0.5,1,2" or inclusive range "start:stop:step".
    #[arg(long, default_value = "1")]
    pub a: String,
    /// Values of α, same syntax.
    #[arg(long, default_value = "1")]
    pub alpha: String,
    /// Values of B, same syntax.
    #[arg(long, default_value = "0")]
    pub b: String,
    #[arg(long, default_value_t = 0.0, value_parser = finite)]
    pub eta: f64,
    /// Interior nodes of the well (0, π/|α|) at every point.
    #[arg(long, default_value_t = SPECTRUM_POINTS)]
    pub n: usize,
    #[arg(long, default_value_t = LEVELS)]
    pub k: usize,
    /// Worker threads; results do not depend on it [default: available cores].
    #[arg(long)]
    pub workers: Option<usize>,
    #[arg(long, default_value_t = IM_TOLERANCE, value_parser = finite)]
    pub im_tolerance: f64,
    #[arg(long, default_value_t = PAIR_TOLERANCE, value_parser = finite)]
    pub pair_tolerance: f64,
}

fn finite(text: &str) -> Result<f64, String> {
    let value: f64 = text.trim().parse().map_err(|e| format!("{e}"))?;
    if value.is_finite() {
        Ok(value)
    } else {
        Err(format!("{text} is not a finite number"))
    }
}

/// Parses "v1,v2,…" or an inclusive "start:stop:step" range.
pub fn parse_values(name: &str, text: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = text.split(':').collect();
    match parts.as_slice() {
        [start, stop, step] => {
            let (start, stop, step) = (finite(start)?, finite(stop)?, finite(step)?);
            if !(step > 0.0) || stop < start {
                return Err(format!("{name}: range needs start <= stop and step > 0"));
            }
            let intervals = ((stop - start) / step).round();
            if (start + intervals * step - stop).abs() > 1e-9 * step.max(stop.abs()) {
                return Err(format!("{name}: step does not divide stop - start"));
            }
            let count = intervals as usize;
            if count > 100_000 {
                return Err(format!("{name}: range has more than 100000 values"));
            }
            if count == 0 {
                return Ok(vec![start]);
            }
            // hit both ends exactly
            Ok((0..=count)
                .map(|i| start + (stop - start) * (i as f64) / (count as f64))
                .collect())
        }
        [_] => text
            .split(',')
            .map(|v| finite(v).map_err(|e| format!("{name}: {e}")))
            .collect(),
        _ => Err(format!("{name}: expected a list or start:stop:step")),
    }
}

/// Parses "1,2,3" or "1..3" into positive integers.
pub fn parse_kappa(text: &str) -> Result<Vec<u32>, String> {
    let parse = |s: &str| s.trim().parse::<u32>().map_err(|e| format!("kappa: {e}"));
    let values = if let Some((lo, hi)) = text.split_once("..") {
        let (lo, hi) = (parse(lo)?, parse(hi)?);
        if hi < lo || hi - lo > 100_000 {
            return Err("kappa: range must be nonempty and at most 100000 long".into());
        }
        (lo..=hi).collect()
    } else {
        text.split(',').map(parse).collect::<Result<Vec<_>, _>>()?
    };
    if values.contains(&0) {
        return Err("kappa: values must be at least 1".into());
    }
    Ok(values)
}

/// Parses "x1_re,x1_im,x2_re,x2_im".
pub fn parse_endpoints(text: &str) -> Result<[f64; 4], String> {
    let values: Vec<f64> = text.split(',').map(finite).collect::<Result<_, _>>()?;
    values
        .try_into()
        .map_err(|_| format!("endpoints: expected four numbers, got {text:?}"))
}
