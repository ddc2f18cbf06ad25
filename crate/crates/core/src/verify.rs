//! Built-in invariant suite behind `ptwell verify`.
//!
//! Every check runs in `f64` at desk scale and reports pass/fail with a short
//! numeric detail. Sample points come from fixed low-discrepancy sequences, so
//! results are reproducible.

use std::f64::consts::PI;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::grid::Grid1D;
use crate::potential::{PotentialFamily, PotentialSpec};
use crate::pt::{classify, eq11_real_imag, pt_residual, DEFAULT_IM_TOLERANCE, DEFAULT_PAIR_TOLERANCE};
use crate::scan::{phase_scan, ScanConfig, ScanDomain};
use crate::spectral::{discretize, eigenpairs, Spectrum};
use crate::superpotential::SuperpotentialSpec;
use crate::susy::{deformation_closed_form, deformation_numeric, partner_potentials};
use crate::well::{box_spectrum, complex_box_admissibility, ComplexBox};
use crate::ComplexCoordinate;

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub module: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Check = (&'static str, &'static str, fn() -> Result<(bool, String)>);

const CHECKS: &[Check] = &[
    ("core", "generalized-pt-reduces-to-csc2", generalized_pt_reduces_to_csc2),
    ("core", "deformed-equals-coth", deformed_equals_coth),
    ("core", "singularity-metadata-sound", singularity_metadata_sound),
    ("susy", "partner-identity", partner_identity),
    ("susy", "deformation-keeps-lower-partner", deformation_keeps_lower_partner),
    ("susy", "deformation-sweep-uniqueness", deformation_sweep_uniqueness),
    ("susy", "intertwining-isospectrality", intertwining_isospectrality),
    ("spectral", "second-order-convergence", second_order_convergence),
    ("spectral", "susy-degeneracy", susy_degeneracy),
    ("spectral", "complex-symmetric-assembly", complex_symmetric_assembly),
    ("spectral", "contour-invariance", contour_invariance),
    ("box", "isospectral-width-family", isospectral_width_family),
    ("box", "admissibility-symmetric", admissibility_symmetric),
    ("box", "admissible-spectrum-matches-momenta", admissible_spectrum_matches_momenta),
    ("pt", "classification-conjugation-invariant", classification_conjugation_invariant),
    ("pt", "family-pt-residual", family_pt_residual),
    ("pt", "scan-determinism", scan_determinism),
    ("pt", "split-form-identity", split_form_identity),
];

/// Names of all checks as `module/name`.
pub fn check_names() -> Vec<String> {
    CHECKS.iter().map(|(m, n, _)| format!("{m}/{n}")).collect()
}

/// Runs every check; a check that errors counts as failed.
pub fn run_all() -> Vec<CheckOutcome> {
    CHECKS
        .iter()
        .map(|&(module, name, check)| match check() {
            Ok((passed, detail)) => CheckOutcome {
                module,
                name,
                passed,
                detail,
            },
            Err(e) => CheckOutcome {
                module,
                name,
                passed: false,
                detail: format!("error: {e}"),
            },
        })
        .collect()
}

/// `k`-th point of the 1-D golden-ratio sequence in `[0, 1)`.
fn golden(k: usize) -> f64 {
    (0.5 + k as f64 * 0.618_033_988_749_894_9).fract()
}

/// `k`-th point of the plastic-number 2-D sequence in `[0, 1)²`.
fn plastic(k: usize) -> (f64, f64) {
    let g = 1.324_717_957_244_746;
    ((0.5 + k as f64 / g).fract(), (0.5 + k as f64 / (g * g)).fract())
}

fn c(re: f64, im: f64) -> Complex<f64> {
    Complex::new(re, im)
}

fn levels(v: &PotentialSpec<f64>, grid: &Grid1D<f64>, k: usize) -> Result<Vec<Complex<f64>>> {
    Ok(eigenpairs(&discretize(v, grid)?, k, false)?.eigenvalues)
}

fn generalized_pt_reduces_to_csc2() -> Result<(bool, String)> {
    let mut worst: f64 = 0.0;
    for a in [0.5, 1.0, 2.0] {
        for shift in [c(0.0, 0.0), c(0.3, 0.2)] {
            let gpt = PotentialSpec::generalized_pt(a, a, 0.0, shift);
            let csc = PotentialSpec::csc_squared(a, shift);
            let (lo, hi) = gpt.well().expect("trig family has a well");
            for k in 0..200 {
                let x = lo + (hi - lo) * (0.1 + 0.8 * golden(k));
                for eta in [0.0, 0.3] {
                    let z = c(x, eta);
                    worst = worst.max((gpt.eval_at(z)? - csc.eval_at(z)?).norm());
                }
            }
        }
    }
    Ok((worst < 1e-13, format!("max |ΔV| = {worst:.3e} (tol 1e-13)")))
}

fn deformed_equals_coth() -> Result<(bool, String)> {
    let mut worst: f64 = 0.0;
    for amplitude in [c(0.0, 1.0), c(0.7, 0.0), c(0.5, 0.8)] {
        for shift in [c(0.0, 0.0), c(0.2, -0.1)] {
            let w = SuperpotentialSpec::Deformed { amplitude, c: shift };
            for k in 0..200 {
                let x = c(-2.0 + 4.0 * golden(k), 0.3 * (golden(k + 7) - 0.5));
                let z = amplitude * (x + shift);
                if z.sinh().norm() < 0.1 {
                    continue;
                }
                let reference = -amplitude * z.cosh() / z.sinh();
                worst = worst.max((w.eval_at(x)? - reference).norm());
            }
        }
    }
    Ok((worst < 1e-12, format!("max |W - (-A coth)| = {worst:.3e} (tol 1e-12)")))
}

fn singularity_metadata_sound() -> Result<(bool, String)> {
    let shift = c(0.1, 0.0);
    let families = [
        PotentialFamily::CscSquared { a: 1.3, c: shift },
        PotentialFamily::SinhInvSquared {
            amplitude: c(0.4, 0.9),
            c: shift,
        },
        PotentialFamily::GeneralizedPT {
            a: 1.0,
            alpha: 2.0,
            b: 0.5,
            c: shift,
        },
        PotentialFamily::GeneralizedPTLower {
            a: 2.0,
            alpha: 1.0,
            b: 0.5,
            c: shift,
        },
    ];
    let mut failures = Vec::new();
    for family in families {
        let v = PotentialSpec::analytic(family);
        let lattice = v.poles().expect("analytic family has poles");
        for k in -1..=1 {
            let pole = lattice.pole(k);
            if !matches!(v.eval_at(pole), Err(Error::SingularPoint { .. })) {
                failures.push(format!("{} pole {k} evaluated", family.name()));
            }
            if v.eval_at(pole + c(1e-3, 0.0)).is_err() {
                failures.push(format!("{} near pole {k} failed", family.name()));
            }
        }
    }
    let passed = failures.is_empty();
    Ok((passed, if passed { "all poles flagged, neighbours evaluate".into() } else { failures.join("; ") }))
}

fn partner_identity() -> Result<(bool, String)> {
    let families = [
        SuperpotentialSpec::Constant { amplitude: c(0.3, 0.4) },
        SuperpotentialSpec::CothShifted {
            amplitude: c(0.8, 0.3),
            c: c(0.1, 0.0),
        },
        SuperpotentialSpec::Deformed {
            amplitude: c(0.0, 1.0),
            c: c(0.0, 0.2),
        },
        SuperpotentialSpec::GeneralizedCot {
            a: 1.0,
            alpha: 2.0,
            b: 0.7,
            c: c(0.0, 0.0),
        },
        SuperpotentialSpec::GeneralizedCot {
            a: 2.0,
            alpha: 1.0,
            b: 0.0,
            c: c(0.2, 0.1),
        },
    ];
    let mut worst: f64 = 0.0;
    for w in families {
        let pair = partner_potentials(&w)?;
        let lattice = w.poles();
        for k in 0..100 {
            let x = c(0.1 + 1.3 * golden(k), 0.2 * golden(k + 11));
            if let Some(l) = lattice {
                if (x - l.nearest(x)).norm() < 0.1 {
                    continue;
                }
            }
            let lhs = pair.v_plus.eval_at(x)? - pair.v_minus.eval_at(x)?;
            let rhs = w.derivative_at(x)? * 2.0;
            worst = worst.max((lhs - rhs).norm());
        }
    }
    Ok((worst < 1e-9, format!("max |V₊ - V₋ - 2W'| = {worst:.3e} (tol 1e-9)")))
}

/// Fourth-order central derivative at interior nodes `2..n-2`.
pub(crate) fn five_point_derivative(values: &[Complex<f64>], h: f64) -> Vec<(usize, Complex<f64>)> {
    (2..values.len() - 2)
        .map(|i| {
            let d = (values[i - 2] - values[i - 1] * 8.0 + values[i + 1] * 8.0 - values[i + 2]) / (12.0 * h);
            (i, d)
        })
        .collect()
}

fn deformation_keeps_lower_partner() -> Result<(bool, String)> {
    let amplitude = c(0.0, 1.0);
    let w = SuperpotentialSpec::Constant { amplitude };
    let grid = Grid1D::closed(0.3, PI - 0.3, 4001, 0.0)?;
    let anchor = PI / 2.0;
    let g0 = deformation_closed_form(amplitude, c(0.0, 0.0))?.eval_at(c(anchor, 0.0))?;
    let g = deformation_numeric(&w, anchor, g0, &grid)?;
    let mut worst: f64 = 0.0;
    for (i, dg) in five_point_derivative(g.values(), grid.spacing()) {
        let total = amplitude + g.values()[i];
        worst = worst.max((total * total - dg - amplitude * amplitude).norm());
    }
    Ok((worst < 1e-8, format!("max |(A+g)² - (A+g)' - A²| = {worst:.3e} (tol 1e-8)")))
}

fn deformation_sweep_uniqueness() -> Result<(bool, String)> {
    let amplitude = c(0.0, 1.0);
    let w = SuperpotentialSpec::Constant { amplitude };
    let grid = Grid1D::closed(0.3, PI - 0.3, 4001, 0.0)?;
    let closed = deformation_closed_form(amplitude, c(0.0, 0.0))?;
    let left = grid.node(0);
    let forward = deformation_numeric(&w, left, closed.eval_at(c(left, 0.0))?, &grid)?;
    let right = grid.node(grid.n() - 1);
    let g_right = forward.values()[grid.n() - 1];
    let backward = deformation_numeric(&w, right, g_right, &grid)?;
    let worst = forward
        .values()
        .iter()
        .zip(backward.values())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    Ok((worst < 1e-8, format!("max forward/backward gap = {worst:.3e} (tol 1e-8)")))
}

fn intertwining_isospectrality() -> Result<(bool, String)> {
    let w = SuperpotentialSpec::GeneralizedCot {
        a: 1.0,
        alpha: 1.0,
        b: 0.0,
        c: c(0.0, 0.0),
    };
    let pair = partner_potentials(&w)?;
    let grid = Grid1D::dirichlet(0.0, PI, 2001, 0.0)?;
    let lower = levels(&pair.v_minus, &grid, 5)?;
    let upper = levels(&pair.v_plus, &grid, 4)?;
    let worst = upper
        .iter()
        .zip(&lower[1..])
        .map(|(p, m)| (p - m).norm() / m.norm())
        .fold(0.0, f64::max);
    Ok((worst < 5e-3, format!("max |E⁺ₙ - E⁻ₙ₊₁|/E = {worst:.3e} (tol 5e-3)")))
}

fn second_order_convergence() -> Result<(bool, String)> {
    let v = PotentialSpec::constant(0.0);
    let coarse = levels(&v, &Grid1D::dirichlet(0.0, PI, 1000, 0.0)?, 1)?[0];
    let fine = levels(&v, &Grid1D::dirichlet(0.0, PI, 2000, 0.0)?, 1)?[0];
    let ratio = (coarse.re - 1.0).abs() / (fine.re - 1.0).abs();
    Ok((ratio >= 3.8, format!("error ratio = {ratio:.4} (need >= 3.8)")))
}

fn susy_degeneracy() -> Result<(bool, String)> {
    let mut worst: f64 = 0.0;
    for (a, alpha) in [(1.0, 1.0), (2.0, 1.0)] {
        let w = SuperpotentialSpec::GeneralizedCot {
            a,
            alpha,
            b: 0.0,
            c: c(0.0, 0.0),
        };
        let pair = partner_potentials(&w)?;
        let grid = Grid1D::dirichlet(0.0, PI / alpha, 4001, 0.0)?;
        let lower = levels(&pair.v_minus, &grid, 5)?;
        let upper = levels(&pair.v_plus, &grid, 4)?;
        for (p, m) in upper.iter().zip(&lower[1..]) {
            worst = worst.max((p - m).norm());
        }
    }
    Ok((worst < 1e-2, format!("max |E⁺ₙ - E⁻ₙ₊₁| = {worst:.3e} (tol 1e-2)")))
}

fn complex_symmetric_assembly() -> Result<(bool, String)> {
    let grid = Grid1D::dirichlet(0.0, PI, 501, 0.3)?;
    let m = discretize(&PotentialSpec::generalized_pt(1.0, 1.0, 0.7, c(0.0, 0.0)), &grid)?;
    let ok = m.is_complex_symmetric();
    Ok((ok, format!("M == Mᵀ bitwise: {ok}")))
}

fn contour_invariance() -> Result<(bool, String)> {
    let v = PotentialSpec::generalized_pt(1.0, 1.0, 0.0, c(0.0, 0.0));
    let flat = levels(&v, &Grid1D::dirichlet(0.0, PI, 2001, 0.0)?, 4)?;
    let lifted = levels(&v, &Grid1D::dirichlet(0.0, PI, 2001, 0.3)?, 4)?;
    let worst = flat.iter().zip(&lifted).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
    let show = |v: &[Complex<f64>]| v.iter().map(|z| format!("{:.4}", z.re)).collect::<Vec<_>>().join(", ");
    Ok((
        worst < 1e-2,
        format!(
            "η=0: [{}]  η=0.3: [{}]  max gap {worst:.3e} (tol 1e-2)",
            show(&flat),
            show(&lifted)
        ),
    ))
}

fn isospectral_width_family() -> Result<(bool, String)> {
    let narrow = box_spectrum(PI, 10)?;
    let wide = box_spectrum(2.0 * PI, 20)?;
    let ok = narrow.iter().enumerate().all(|(i, e)| wide[2 * i + 1] == *e);
    Ok((ok, format!("levels of width π found exactly among even levels of width 2π: {ok}")))
}

fn box_cases() -> Result<Vec<ComplexBox<f64>>> {
    let mut cases = Vec::new();
    for k in 0..50 {
        let (u, v) = plastic(k);
        let x1 = ComplexCoordinate::new(-2.0 + 4.0 * u, -1.0 + 2.0 * v)?;
        let width = 0.5 + 3.0 * golden(k);
        let lift = if k % 2 == 0 { 0.0 } else { 0.05 + golden(k + 3) };
        let x2 = ComplexCoordinate::new(x1.re + width, x1.im + lift)?;
        cases.push(ComplexBox::new(x1, x2));
    }
    Ok(cases)
}

fn admissibility_symmetric() -> Result<(bool, String)> {
    let mut mismatches = 0;
    for cbox in box_cases()? {
        let forward = complex_box_admissibility(&cbox, 1e-9)?;
        let backward = complex_box_admissibility(&cbox.swapped(), 1e-9)?;
        if forward.admissible != backward.admissible || forward.k_real != backward.k_real {
            mismatches += 1;
        }
    }
    Ok((mismatches == 0, format!("{mismatches} of 50 verdicts change under endpoint swap")))
}

fn admissible_spectrum_matches_momenta() -> Result<(bool, String)> {
    let mut mismatches = 0;
    let mut admitted = 0;
    for cbox in box_cases()? {
        let verdict = complex_box_admissibility(&cbox, 1e-9)?;
        if !verdict.admissible {
            continue;
        }
        admitted += 1;
        let spectrum = box_spectrum(cbox.delta().re.abs(), verdict.k_real.len())?;
        if spectrum.iter().zip(&verdict.k_real).any(|(e, k)| *e != k * k) {
            mismatches += 1;
        }
    }
    Ok((
        mismatches == 0 && admitted > 0,
        format!("{admitted} admissible boxes, {mismatches} with E ≠ K̄²"),
    ))
}

fn classification_conjugation_invariant() -> Result<(bool, String)> {
    let samples = [
        Spectrum::from_eigenvalues(vec![c(1.0, 0.0), c(4.0, 0.0), c(9.0, 0.0)]),
        Spectrum::from_eigenvalues(vec![c(2.0, 0.5), c(2.0, -0.5), c(7.0, 0.0)]),
        Spectrum::from_eigenvalues(vec![c(1.0, 0.3), c(1.0, -0.3), c(3.0, 0.0), c(5.0, 1e-3)]),
        Spectrum::from_eigenvalues(vec![c(0.5, 2.0), c(0.5, -2.0 + 5e-5), c(6.0, 0.2), c(6.0, -0.2)]),
    ];
    let mut ok = true;
    for s in &samples {
        let direct = classify(s, DEFAULT_IM_TOLERANCE, DEFAULT_PAIR_TOLERANCE);
        let mirrored = classify(&s.conjugated(), DEFAULT_IM_TOLERANCE, DEFAULT_PAIR_TOLERANCE);
        ok &= direct.phase == mirrored.phase
            && direct.max_abs_im == mirrored.max_abs_im
            && direct.conjugate_pairs.len() == mirrored.conjugate_pairs.len()
            && direct.unpaired_complex.len() == mirrored.unpaired_complex.len();
    }
    Ok((ok, format!("{} spectra classified identically under conjugation: {ok}", samples.len())))
}

fn family_pt_residual() -> Result<(bool, String)> {
    let mut worst: f64 = 0.0;
    for a in [0.5, 1.0, 2.0] {
        for alpha in [1.0, 2.0] {
            for b in [0.0, 0.7, 2.0] {
                for eta in [0.0, 0.3] {
                    let v = PotentialSpec::generalized_pt(a, alpha, b, c(0.0, 0.0));
                    let (lo, hi) = v.well().expect("trig family has a well");
                    let center = (lo + hi) / 2.0;
                    worst = worst.max(pt_residual(&v, center, 0.45 * (hi - lo), eta, 64)?);
                }
            }
        }
    }
    Ok((worst < 1e-10, format!("max PT residual = {worst:.3e} (tol 1e-10)")))
}

fn scan_determinism() -> Result<(bool, String)> {
    let config = ScanConfig::new(
        vec![1.0],
        vec![1.0, 2.0],
        (0..6).map(|i| 0.5 * i as f64).collect(),
        0.0,
        ScanDomain::Well { n: 400 },
        6,
    );
    let serial = phase_scan(&config, 1)?;
    let parallel = phase_scan(&config, 8)?;
    let same = serial.len() == parallel.len()
        && serial.iter().zip(&parallel).all(|(a, b)| {
            a.lowest_levels.len() == b.lowest_levels.len()
                && a.lowest_levels
                    .iter()
                    .zip(&b.lowest_levels)
                    .all(|(x, y)| x.re.to_bits() == y.re.to_bits() && x.im.to_bits() == y.im.to_bits())
                && a.classification == b.classification
                && a.pt_residual.map(f64::to_bits) == b.pt_residual.map(f64::to_bits)
        });
    Ok((same, format!("{} records bitwise identical for 1 and 8 workers: {same}", serial.len())))
}

fn split_form_identity() -> Result<(bool, String)> {
    let mut worst_identity: f64 = 0.0;
    let mut worst_parity: f64 = 0.0;
    let mut used = 0;
    let mut k = 0;
    while used < 10_000 {
        let (u, v) = plastic(k);
        k += 1;
        let xi = -2.0 * PI + 4.0 * PI * u;
        let eta = -1.5 + 3.0 * v;
        let a = 0.2 + 1.8 * golden(k);
        let z = c(xi, eta);
        if z.sin().norm() < 0.2 {
            continue;
        }
        used += 1;
        let (re, im) = eq11_real_imag(xi, eta, a)?;
        let direct = 2.0 * a * a / (z.sin() * z.sin()) - a * a;
        worst_identity = worst_identity.max((re - direct.re).abs()).max((im - direct.im).abs());
        let (re_m, im_m) = eq11_real_imag(-xi, eta, a)?;
        worst_parity = worst_parity.max((re - re_m).abs()).max((im + im_m).abs());
    }
    Ok((
        worst_identity < 1e-11 && worst_parity < 1e-12,
        format!("identity {worst_identity:.3e} (tol 1e-11), parity {worst_parity:.3e} (tol 1e-12)"),
    ))
}
