//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use num_complex::Complex64;
use ptwell::pt::{classify, eq11_real_imag, DEFAULT_IM_TOLERANCE, DEFAULT_PAIR_TOLERANCE};
use ptwell::spectral::{discretize, eigenpairs, shape_invariant_spectrum, SpectrumConvention};
use ptwell::susy::{deformation_numeric, ground_state_from_superpotential, intertwine, partner_potentials, Intertwiner};
use ptwell::well::{complex_box_admissibility, quantized_widths};
use ptwell::{ComplexBox, ComplexCoordinate, Grid64, NormConvention, Phase, Potential64, ScanConfig, ScanDomain, Superpotential64};

type Outcome = Result<(bool, String), ptwell::Error>;
type Criterion = (&'static str, fn() -> Outcome);

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn lowest(v: &Potential64, grid: &Grid64, k: usize) -> Result<Vec<Complex64>, ptwell::Error> {
    Ok(eigenpairs(&discretize(v, grid)?, k, false)?.eigenvalues)
}

fn max_rel(found: &[Complex64], exact: &[f64]) -> f64 {
    found.iter().zip(exact).map(|(e, x)| (e - x).norm() / x.abs()).fold(0.0, f64::max)
}

fn box_baseline() -> Outcome {
    let v = Potential64::constant(0.0);
    let levels = lowest(&v, &Grid64::dirichlet(0.0, PI, 2001, 0.0)?, 4)?;
    let rel = max_rel(&levels, &[1.0, 4.0, 9.0, 16.0]);
    let coarse = lowest(&v, &Grid64::dirichlet(0.0, PI, 1000, 0.0)?, 1)?[0];
    let fine = lowest(&v, &Grid64::dirichlet(0.0, PI, 2000, 0.0)?, 1)?[0];
    let ratio = (coarse - 1.0).norm() / (fine - 1.0).norm();
    Ok((
        rel < 5e-3 && ratio >= 3.8,
        format!("max rel err {rel:.3e} (< 5e-3), convergence ratio {ratio:.4} (>= 3.8)"),
    ))
}

fn isospectral_partner() -> Outcome {
    let v = Potential64::csc_squared(1.0, c(0.0, 0.0));
    let levels = lowest(&v, &Grid64::dirichlet(0.0, PI, 2001, 0.0)?, 4)?;
    let rel = max_rel(&levels, &[3.0, 8.0, 15.0, 24.0]);
    Ok((rel < 5e-3, format!("levels vs {{3, 8, 15, 24}}: max rel err {rel:.3e} (< 5e-3)")))
}

fn deformation_identity() -> Outcome {
    let amplitude = c(0.0, 1.0);
    let exact = |x: f64| {
        let z = amplitude * x;
        -amplitude * z.cosh() / z.sinh() - amplitude
    };
    let grid = Grid64::closed(0.3, PI - 0.3, 4001, 0.0)?;
    let w = Superpotential64::Constant { amplitude };
    let g = deformation_numeric(&w, PI / 2.0, exact(PI / 2.0), &grid)?;
    let values = g.values();
    let closed_err = grid
        .nodes()
        .zip(values)
        .map(|(x, v)| (v - exact(x)).norm())
        .fold(0.0, f64::max);
    let h = grid.spacing();
    let mut bernoulli_err: f64 = 0.0;
    for i in 2..values.len() - 2 {
        let dg = (values[i - 2] - values[i - 1] * 8.0 + values[i + 1] * 8.0 - values[i + 2]) / (12.0 * h);
        let total = amplitude + values[i];
        bernoulli_err = bernoulli_err.max((total * total - dg - amplitude * amplitude).norm());
    }
    Ok((
        closed_err < 1e-8 && bernoulli_err < 1e-8,
        format!("numeric vs closed form {closed_err:.3e} (< 1e-8), (A+g)²-(A+g)'-A² {bernoulli_err:.3e} (< 1e-8)"),
    ))
}

fn intertwining() -> Outcome {
    let w = Superpotential64::GeneralizedCot { a: 1.0, alpha: 1.0, b: 0.0, c: c(0.0, 0.0) };
    let pair = partner_potentials(&w)?;
    let grid = Grid64::dirichlet(0.0, PI, 4001, 0.0)?;
    let lower = eigenpairs(&discretize(&pair.v_minus, &grid)?, 4, true)?;
    let upper = eigenpairs(&discretize(&pair.v_plus, &grid)?, 3, true)?;
    let lower_vectors = lower.eigenvectors.expect("vectors requested");
    let upper_vectors = upper.eigenvectors.expect("vectors requested");
    let mut worst: f64 = 1.0;
    for n in 0..3 {
        let image = intertwine(Intertwiner::Lower, &w, &lower_vectors[n + 1])?;
        worst = worst.min(image.overlap(&upper_vectors[n])?);
    }
    let ground = ground_state_from_superpotential(&w, &grid, NormConvention::UnitL2)?;
    let annihilated = intertwine(Intertwiner::Lower, &w, &ground)?.norm() / ground.norm();
    Ok((
        worst > 0.999 && annihilated < 1e-6,
        format!("min overlap {worst:.9} (> 0.999), ‖𝒜ψ₀⁻‖/‖ψ₀⁻‖ {annihilated:.3e} (< 1e-6)"),
    ))
}

fn quantized_widths_and_admissibility() -> Outcome {
    let mut width_errors = 0;
    for a in [0.5, 1.0, 2.0, 3.0] {
        let kappas: Vec<u32> = (1..=6).collect();
        for (kappa, width) in kappas.iter().zip(quantized_widths(a, &kappas)?) {
            if width != f64::from(*kappa) * PI / a {
                width_errors += 1;
            }
        }
    }
    let mut table = Vec::new();
    for k in 0..50 {
        let x1 = ComplexCoordinate::new(-1.0 + 0.07 * k as f64, 0.5 - 0.03 * k as f64)?;
        let width = 0.4 + 0.11 * k as f64;
        let lift = if k % 2 == 0 { 0.0 } else { 0.01 * k as f64 };
        let x2 = ComplexCoordinate::new(x1.re + width, x1.im + lift)?;
        table.push((ComplexBox::new(x1, x2), lift == 0.0));
    }
    let mut wrong = 0;
    for (cbox, expected) in &table {
        if complex_box_admissibility(cbox, 1e-9)?.admissible != *expected {
            wrong += 1;
        }
    }
    let accepted = table.iter().filter(|(_, e)| *e).count();
    Ok((
        width_errors == 0 && wrong == 0,
        format!(
            "{width_errors} width mismatches; {wrong} wrong verdicts on 50 boxes ({accepted} horizontal, {} lifted)",
            50 - accepted
        ),
    ))
}

fn split_form() -> Outcome {
    let mut identity: f64 = 0.0;
    let mut parity: f64 = 0.0;
    let mut sampled = 0;
    let mut k = 0u64;
    while sampled < 10_000 {
        k += 1;
        let xi = -PI + 2.0 * PI * (k as f64 * 0.754_877_666_246_692_7).fract();
        let eta = -1.2 + 2.4 * (k as f64 * 0.569_840_290_998_053_2).fract();
        let a = 0.3 + 2.0 * (k as f64 * 0.618_033_988_749_894_9).fract();
        let z = c(xi, eta);
        if z.sin().norm() < 0.15 {
            continue;
        }
        sampled += 1;
        let (re, im) = eq11_real_imag(xi, eta, a)?;
        let s = z.sin();
        let direct = 2.0 * a * a / (s * s) - a * a;
        identity = identity.max((re - direct.re).abs()).max((im - direct.im).abs());
        let (re_m, im_m) = eq11_real_imag(-xi, eta, a)?;
        parity = parity.max((re - re_m).abs()).max((im + im_m).abs());
    }
    Ok((
        identity < 1e-11 && parity < 1e-12,
        format!("10000 points: identity {identity:.3e} (< 1e-11), even/odd {parity:.3e} (< 1e-12)"),
    ))
}

fn contour_invariance() -> Outcome {
    let v = Potential64::generalized_pt(1.0, 1.0, 0.0, c(0.0, 0.0));
    let flat = lowest(&v, &Grid64::dirichlet(0.0, PI, 2001, 0.0)?, 4)?;
    let lifted = lowest(&v, &Grid64::dirichlet(0.0, PI, 2001, 0.3)?, 4)?;
    let gap = flat.iter().zip(&lifted).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
    let show = |v: &[Complex64]| v.iter().map(|z| format!("{:.4}", z.re)).collect::<Vec<_>>().join(", ");
    Ok((
        gap < 1e-2,
        format!("η=0 [{}] vs η=0.3 [{}]: max gap {gap:.3e} (< 1e-2)", show(&flat), show(&lifted)),
    ))
}

fn spectrum_convention() -> Outcome {
    let mut shifted_err: f64 = 0.0;
    let mut printed_min_gap = f64::INFINITY;
    for (a, alpha) in [(1.0, 1.0), (2.0, 1.0)] {
        let v = Potential64::generalized_pt_lower(a, alpha, 0.0, c(0.0, 0.0));
        let levels = lowest(&v, &Grid64::dirichlet(0.0, PI / alpha, 2001, 0.0)?, 4)?;
        let conventions = shape_invariant_spectrum(a, alpha, 3)?;
        let shifted = conventions.levels(SpectrumConvention::Shifted);
        let printed = conventions.levels(SpectrumConvention::Printed);
        for n in 0..4 {
            let oracle = (a + n as f64 * alpha).powi(2) - a * a;
            shifted_err = shifted_err.max((levels[n] - oracle).norm()).max((shifted[n] - oracle).abs());
            if n >= 2 {
                printed_min_gap = printed_min_gap.min((levels[n] - printed[n]).norm());
            }
        }
    }
    Ok((
        shifted_err < 1e-2 && printed_min_gap > 1e-2,
        format!(
            "vs (a+nα)²-a²: max err {shifted_err:.3e} (< 1e-2); vs a²-(a-nα)² for n>=2: min gap {printed_min_gap:.3} (> 1e-2)"
        ),
    ))
}

fn breaking_scan_config() -> ScanConfig<f64> {
    let b_values = (0..=30).map(|i| f64::from(i) / 10.0).collect();
    ScanConfig::new(vec![1.0], vec![2.0], b_values, 0.0, ScanDomain::Well { n: 2001 }, 6)
}

fn broken_phase_detection() -> Outcome {
    let records = ptwell::scan::phase_scan(&breaking_scan_config(), 4)?;
    let mut failures = Vec::new();
    let mut broken = 0;
    for record in &records {
        let Some(classification) = &record.classification else {
            failures.push(format!("B={} errored: {:?}", record.b, record.error));
            continue;
        };
        if record.b == 0.0 && classification.phase != Phase::Unbroken {
            failures.push("B=0 not Unbroken".to_string());
        }
        if classification.phase == Phase::Broken {
            broken += 1;
            if !classification.unpaired_complex.is_empty() {
                failures.push(format!("B={} has unpaired complex levels", record.b));
            }
        }
        let recheck = classify(
            &ptwell::Spectrum::from_eigenvalues(record.lowest_levels.clone()),
            DEFAULT_IM_TOLERANCE,
            DEFAULT_PAIR_TOLERANCE,
        );
        if recheck.phase != classification.phase {
            failures.push(format!("B={} classification not reproducible from its levels", record.b));
        }
    }
    let max_im = records
        .iter()
        .filter_map(|r| r.classification.as_ref().map(|c| c.max_abs_im))
        .fold(0.0, f64::max);
    Ok((
        failures.is_empty() && records.len() == 31,
        format!(
            "{} points, {broken} Broken, max |Im E| {max_im:.3e}{}",
            records.len(),
            if failures.is_empty() { String::new() } else { format!("; {}", failures.join("; ")) }
        ),
    ))
}

fn determinism() -> Outcome {
    let config = breaking_scan_config();
    let one = ptwell::scan::phase_scan(&config, 1)?;
    let eight = ptwell::scan::phase_scan(&config, 8)?;
    let bits = |records: &[ptwell::PhaseMapRecord64]| -> Vec<u64> {
        records
            .iter()
            .flat_map(|r| {
                let mut v = vec![r.a.to_bits(), r.alpha.to_bits(), r.b.to_bits(), r.eta.to_bits()];
                v.extend(r.lowest_levels.iter().flat_map(|z| [z.re.to_bits(), z.im.to_bits()]));
                v.extend(r.pt_residual.map(f64::to_bits));
                v.extend(r.classification.as_ref().map(|c| c.max_abs_im.to_bits()));
                v
            })
            .collect()
    };
    let same = bits(&one) == bits(&eight) && one == eight;
    Ok((same, format!("{} records, 1 vs 8 workers bitwise identical: {same}", one.len())))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("box baseline", box_baseline),
        ("isospectral partner", isospectral_partner),
        ("deformation identity", deformation_identity),
        ("intertwining", intertwining),
        ("quantized widths and admissibility", quantized_widths_and_admissibility),
        ("split real/imaginary form", split_form),
        ("contour invariance", contour_invariance),
        ("spectrum convention", spectrum_convention),
        ("broken-phase detection", broken_phase_detection),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (index, (name, criterion)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let (passed, detail) = criterion().unwrap_or_else(|e| (false, format!("error: {e}")));
        let seconds = started.elapsed().as_secs_f64();
        if !passed {
            failed += 1;
        }
        println!(
            "{} {:>2} {name}: {detail} [{seconds:.1} s]",
            if passed { "PASS" } else { "FAIL" },
            index + 1
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
