use std::f64::consts::PI;

use num_complex::Complex64;
use ptwell::pt::eq11_real_imag;
use ptwell::scan::phase_scan;
use ptwell::spectral::{discretize, eigenpairs_with};
use ptwell::susy::{deformation_closed_form, deformation_numeric, partner_potentials};
use ptwell::well::{complex_box_admissibility_with_modes, quantized_widths};
use ptwell::{
    ComplexBox, ComplexCoordinate, EigenMethod, Grid64, Potential64, ScanConfig, ScanDomain, Superpotential64,
};

use crate::args::*;
use crate::output::{Cell, Report};
use crate::Failure;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn require(condition: bool, message: impl FnOnce() -> String) -> Result<(), Failure> {
    if condition {
        Ok(())
    } else {
        Err(Failure::Invalid(message()))
    }
}

fn check_points(n: usize, minimum: usize) -> Result<(), Failure> {
    require(n >= minimum, || format!("--n must be at least {minimum}, got {n}"))?;
    require(n <= 200_000, || format!("--n must be at most 200000, got {n}"))
}

fn superpotential(args: &PartnerArgs) -> Superpotential64 {
    let shift = c(args.cot.c_re, args.cot.c_im);
    let amplitude = c(args.amplitude.amplitude_re, args.amplitude.amplitude_im);
    match args.family {
        SuperpotentialKind::Cot => Superpotential64::GeneralizedCot {
            a: args.cot.a,
            alpha: args.cot.alpha,
            b: args.cot.b,
            c: shift,
        },
        SuperpotentialKind::Constant => Superpotential64::Constant { amplitude },
        SuperpotentialKind::Coth => Superpotential64::CothShifted { amplitude, c: shift },
        SuperpotentialKind::Deformed => Superpotential64::Deformed { amplitude, c: shift },
    }
}

pub fn partner(args: &PartnerArgs) -> Result<Report, Failure> {
    check_points(args.n, 1)?;
    if args.split_parts {
        return split_parts(args);
    }
    let w = superpotential(args);
    w.validate()?;
    let (default_min, default_span) = match args.family {
        SuperpotentialKind::Cot => (-args.cot.c_re, PI / args.cot.alpha.abs()),
        _ => (0.0, PI),
    };
    let x_min = args.x_min.unwrap_or(default_min);
    let x_max = args.x_max.unwrap_or(x_min + default_span);
    let grid = Grid64::dirichlet(x_min, x_max, args.n, args.eta)?;
    let pair = partner_potentials(&w)?;

    let mut report = Report::new(
        "partner",
        &["x_re", "x_im", "w_re", "w_im", "v_minus_re", "v_minus_im", "v_plus_re", "v_plus_im"],
    );
    report.param("family", Cell::text(w.name()));
    describe_superpotential(&mut report, args);
    report.param("x_min", Cell::Num(x_min));
    report.param("x_max", Cell::Num(x_max));
    report.param("n", Cell::count(args.n));
    report.param("eta", Cell::Num(args.eta));
    for x in grid.points() {
        let wx = w.eval_at(x)?;
        let minus = pair.v_minus.eval_at(x)?;
        let plus = pair.v_plus.eval_at(x)?;
        report.push(
            [x.re, x.im, wx.re, wx.im, minus.re, minus.im, plus.re, plus.im]
                .into_iter()
                .map(Cell::Num)
                .collect(),
        );
    }
    Ok(report)
}

fn describe_superpotential(report: &mut Report, args: &PartnerArgs) {
    match args.family {
        SuperpotentialKind::Cot => {
            report.param("a", Cell::Num(args.cot.a));
            report.param("alpha", Cell::Num(args.cot.alpha));
            report.param("b", Cell::Num(args.cot.b));
        }
        _ => {
            report.param("amplitude_re", Cell::Num(args.amplitude.amplitude_re));
            report.param("amplitude_im", Cell::Num(args.amplitude.amplitude_im));
        }
    }
    if args.family != SuperpotentialKind::Constant {
        report.param("c_re", Cell::Num(args.cot.c_re));
        report.param("c_im", Cell::Num(args.cot.c_im));
    }
}

/// Rows `(ξ, η, Re V, Im V)` of `2a²csc²(ξ+iη) - a²` across one well, `ξ ∈ (0, π)`.
fn split_parts(args: &PartnerArgs) -> Result<Report, Failure> {
    let a = args.cot.a;
    require(a != 0.0, || "--a must be nonzero".into())?;
    let grid = Grid64::dirichlet(0.0, PI, args.n, 0.0)?;
    let eta = a * args.eta;
    let mut report = Report::new("partner", &["xi", "eta", "re_v", "im_v"]);
    report.param("split_parts", Cell::Bool(true));
    report.param("a", Cell::Num(a));
    report.param("n", Cell::count(args.n));
    report.param("eta", Cell::Num(args.eta));
    for xi in grid.nodes() {
        let (re, im) = eq11_real_imag(xi, eta, a)?;
        report.push(vec![Cell::Num(xi), Cell::Num(eta), Cell::Num(re), Cell::Num(im)]);
    }
    Ok(report)
}

pub fn deform(args: &DeformArgs) -> Result<Report, Failure> {
    check_points(args.n, 2)?;
    require(args.x_max > args.x_min, || "--x-max must exceed --x-min".into())?;
    let amplitude = c(args.amplitude.amplitude_re, args.amplitude.amplitude_im);
    require(amplitude.norm() > 0.0, || "the amplitude A must be nonzero".into())?;
    let shift = c(args.c_re, args.c_im);
    let anchor = args.anchor.unwrap_or((args.x_min + args.x_max) / 2.0);
    require(anchor >= args.x_min && anchor <= args.x_max, || {
        format!("--anchor {anchor} lies outside [{}, {}]", args.x_min, args.x_max)
    })?;
    let grid = Grid64::closed(args.x_min, args.x_max, args.n, 0.0)?;
    let closed = deformation_closed_form(amplitude, shift)?;
    let w = Superpotential64::Constant { amplitude };
    // the numerical branch is selected by the closed-form value at the anchor
    let numeric = deformation_numeric(&w, anchor, closed.eval_at(c(anchor, 0.0))?, &grid)?;

    let mut report = Report::new(
        "deform",
        &["x", "closed_re", "closed_im", "numeric_re", "numeric_im", "abs_deviation"],
    );
    report.param("amplitude_re", Cell::Num(amplitude.re));
    report.param("amplitude_im", Cell::Num(amplitude.im));
    report.param("c_re", Cell::Num(shift.re));
    report.param("c_im", Cell::Num(shift.im));
    report.param("x_min", Cell::Num(args.x_min));
    report.param("x_max", Cell::Num(args.x_max));
    report.param("n", Cell::count(args.n));
    report.param("anchor", Cell::Num(anchor));
    let mut worst: f64 = 0.0;
    for (x, g) in grid.nodes().zip(numeric.values()) {
        let exact = closed.eval_at(c(x, 0.0))?;
        let deviation = (g - exact).norm();
        worst = worst.max(deviation);
        report.push(
            [x, exact.re, exact.im, g.re, g.im, deviation]
                .into_iter()
                .map(Cell::Num)
                .collect(),
        );
    }
    report.summary.push(("max_abs_deviation", Cell::Num(worst)));
    Ok(report)
}

pub fn spectrum(args: &SpectrumArgs) -> Result<Report, Failure> {
    check_points(args.n, 1)?;
    require(args.k >= 1 && args.k <= args.n, || format!("--k must lie in 1..={}, got {}", args.n, args.k))?;
    let p = &args.cot;
    let shift = c(p.c_re, p.c_im);
    let (v, default_length) = match args.potential {
        PotentialKind::Gpt => (Potential64::generalized_pt(p.a, p.alpha, p.b, shift), PI / p.alpha.abs()),
        PotentialKind::GptLower => (Potential64::generalized_pt_lower(p.a, p.alpha, p.b, shift), PI / p.alpha.abs()),
        PotentialKind::Csc2 => (Potential64::csc_squared(p.a, shift), PI / p.a.abs()),
        PotentialKind::Constant => (Potential64::constant(args.value), PI),
    };
    let length = args.length.unwrap_or(default_length);
    require(length > 0.0 && length.is_finite(), || format!("box length must be positive, got {length}"))?;
    let grid = Grid64::dirichlet(args.x_min, args.x_min + length, args.n, args.eta)?;
    let method = match args.method {
        Method::Tridiagonal => EigenMethod::Tridiagonal,
        Method::Dense => {
            require(args.n <= 3000, || "--method dense is limited to --n <= 3000".into())?;
            EigenMethod::Dense
        }
    };
    let solved = eigenpairs_with(&discretize(&v, &grid)?, args.k, true, method)?;

    let uses_cot = args.potential != PotentialKind::Constant;
    let uses_alpha = matches!(args.potential, PotentialKind::Gpt | PotentialKind::GptLower);
    let mut report = Report::new(
        "spectrum",
        &["potential", "a", "alpha", "b", "value", "eta", "length", "grid_n", "n", "re_E", "im_E", "residual"],
    );
    report.param("potential", Cell::text(v.name()));
    report.param("x_min", Cell::Num(args.x_min));
    report.param("c_re", Cell::Num(p.c_re));
    report.param("c_im", Cell::Num(p.c_im));
    report.param("method", Cell::text(format!("{:?}", args.method).to_lowercase()));
    let residuals = solved.residuals.unwrap_or_default();
    for (level, e) in solved.eigenvalues.iter().enumerate() {
        report.push(vec![
            Cell::text(v.name()),
            Cell::opt(uses_cot.then_some(p.a)),
            Cell::opt(uses_alpha.then_some(p.alpha)),
            Cell::opt(uses_alpha.then_some(p.b)),
            Cell::opt((!uses_cot).then_some(args.value)),
            Cell::Num(args.eta),
            Cell::Num(length),
            Cell::count(args.n),
            Cell::count(level),
            Cell::Num(e.re),
            Cell::Num(e.im),
            Cell::opt(residuals.get(level).copied()),
        ]);
    }
    Ok(report)
}

pub fn quantized_box(args: &BoxArgs) -> Result<Report, Failure> {
    let kappas = parse_kappa(&args.kappa).map_err(Failure::Invalid)?;
    let boxes = args
        .endpoints
        .iter()
        .map(|text| parse_endpoints(text))
        .collect::<Result<Vec<_>, _>>()
        .map_err(Failure::Invalid)?;
    require(args.tolerance > 0.0, || "--tolerance must be positive".into())?;
    require(args.modes <= 100_000, || "--modes must be at most 100000".into())?;
    let widths = quantized_widths(args.a, &kappas)?;

    let mut report = Report::new(
        "box",
        &[
            "kind", "a", "kappa", "width", "x1_re", "x1_im", "x2_re", "x2_im", "admissible", "m_index", "n", "k_real",
            "energy", "reason",
        ],
    );
    report.param("a", Cell::Num(args.a));
    report.param("tolerance", Cell::Num(args.tolerance));
    report.param("modes", Cell::count(args.modes));
    for (kappa, width) in kappas.iter().zip(widths) {
        let mut row = vec![Cell::text("width"), Cell::Num(args.a), Cell::Int((*kappa).into()), Cell::Num(width)];
        row.extend(std::iter::repeat_n(Cell::Empty, 10));
        report.push(row);
    }
    for [x1_re, x1_im, x2_re, x2_im] in boxes {
        let cbox = ComplexBox::new(ComplexCoordinate::new(x1_re, x1_im)?, ComplexCoordinate::new(x2_re, x2_im)?);
        let verdict = complex_box_admissibility_with_modes(&cbox, args.tolerance, args.modes)?;
        let prefix = vec![
            Cell::text("admissibility"),
            Cell::Empty,
            Cell::Empty,
            Cell::Empty,
            Cell::Num(x1_re),
            Cell::Num(x1_im),
            Cell::Num(x2_re),
            Cell::Num(x2_im),
            Cell::Bool(verdict.admissible),
            Cell::Int(verdict.m_index),
        ];
        if verdict.k_real.is_empty() {
            let mut row = prefix.clone();
            row.extend([Cell::Empty, Cell::Empty, Cell::Empty, Cell::text(verdict.reason.clone())]);
            report.push(row);
        }
        for (index, k) in verdict.k_real.iter().enumerate() {
            let mut row = prefix.clone();
            row.extend([
                Cell::count(index + 1),
                Cell::Num(*k),
                Cell::Num(k * k),
                Cell::text(verdict.reason.clone()),
            ]);
            report.push(row);
        }
    }
    Ok(report)
}

pub fn scan(args: &ScanArgs) -> Result<Report, Failure> {
    let a_values = parse_values("a", &args.a).map_err(Failure::Invalid)?;
    let alpha_values = parse_values("alpha", &args.alpha).map_err(Failure::Invalid)?;
    let b_values = parse_values("b", &args.b).map_err(Failure::Invalid)?;
    check_points(args.n, 1)?;
    require(args.k >= 1 && args.k <= args.n, || format!("--k must lie in 1..={}, got {}", args.n, args.k))?;
    require(args.im_tolerance > 0.0 && args.pair_tolerance > 0.0, || "tolerances must be positive".into())?;
    let workers = match args.workers {
        Some(0) => return Err(Failure::Invalid("--workers must be at least 1".into())),
        Some(w) => w,
        None => std::thread::available_parallelism().map_or(1, usize::from),
    };
    let mut config = ScanConfig::new(a_values, alpha_values, b_values, args.eta, ScanDomain::Well { n: args.n }, args.k);
    config.im_tolerance = args.im_tolerance;
    config.pair_tolerance = args.pair_tolerance;
    let records = phase_scan(&config, workers)?;

    let mut report = Report::new(
        "scan",
        &[
            "a", "alpha", "b", "eta", "grid_n", "phase", "max_abs_im", "conjugate_pairs", "unpaired_complex",
            "pt_residual", "error", "n", "re_E", "im_E",
        ],
    );
    report.param("eta", Cell::Num(args.eta));
    report.param("n", Cell::count(args.n));
    report.param("k", Cell::count(args.k));
    report.param("im_tolerance", Cell::Num(args.im_tolerance));
    report.param("pair_tolerance", Cell::Num(args.pair_tolerance));
    let (mut unbroken, mut broken, mut failed) = (0usize, 0usize, 0usize);
    for record in &records {
        let classification = record.classification.as_ref();
        match classification.map(|c| c.phase) {
            Some(ptwell::Phase::Unbroken) => unbroken += 1,
            Some(ptwell::Phase::Broken) => broken += 1,
            None => failed += 1,
        }
        let prefix = vec![
            Cell::Num(record.a),
            Cell::Num(record.alpha),
            Cell::Num(record.b),
            Cell::Num(record.eta),
            Cell::count(args.n),
            classification.map_or(Cell::Empty, |c| Cell::text(c.phase.as_str())),
            Cell::opt(classification.map(|c| c.max_abs_im)),
            classification.map_or(Cell::Empty, |c| Cell::count(c.conjugate_pairs.len())),
            classification.map_or(Cell::Empty, |c| Cell::count(c.unpaired_complex.len())),
            Cell::opt(record.pt_residual),
            record.error.clone().map_or(Cell::Empty, Cell::Text),
        ];
        if record.lowest_levels.is_empty() {
            let mut row = prefix.clone();
            row.extend([Cell::Empty, Cell::Empty, Cell::Empty]);
            report.push(row);
        }
        for (level, e) in record.lowest_levels.iter().enumerate() {
            let mut row = prefix.clone();
            row.extend([Cell::count(level), Cell::Num(e.re), Cell::Num(e.im)]);
            report.push(row);
        }
    }
    report.summary.push(("points", Cell::count(records.len())));
    report.summary.push(("unbroken", Cell::count(unbroken)));
    report.summary.push(("broken", Cell::count(broken)));
    report.summary.push(("failed", Cell::count(failed)));
    Ok(report)
}

pub fn verify() -> Report {
    let outcomes = ptwell::verify::run_all();
    let mut report = Report::new("verify", &["module", "check", "passed", "detail"]);
    let passed = outcomes.iter().filter(|o| o.passed).count();
    for o in &outcomes {
        report.push(vec![
            Cell::text(o.module),
            Cell::text(o.name),
            Cell::Bool(o.passed),
            Cell::text(o.detail.clone()),
        ]);
    }
    report.summary.push(("checks", Cell::count(outcomes.len())));
    report.summary.push(("passed", Cell::count(passed)));
    report.summary.push(("failed", Cell::count(outcomes.len() - passed)));
    report
}
