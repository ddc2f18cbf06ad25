use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;
use ptwell::spectral::{discretize, eigenpairs, residual_norm};
use ptwell::susy::{
    apply_intertwiner, deformation_closed_form, deformation_numeric, ground_state_from_superpotential, intertwine,
    partner_potentials, partner_values_from_superpotential, Intertwiner,
};
use ptwell::{Error, Grid64, NormConvention, Potential64, Superpotential64};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn cot_family(a: f64, alpha: f64, b: f64) -> Superpotential64 {
    Superpotential64::GeneralizedCot { a, alpha, b, c: c(0.0, 0.0) }
}

#[test]
fn ground_state_sign_matches_fd_ground_state() {
    // exp(-∫W) with W = -a cot(αx) must be the lowest FD state of V₋, not its reciprocal
    let w = cot_family(2.0, 1.0, 0.0);
    let grid = Grid64::dirichlet(0.0, PI, 2001, 0.0).unwrap();
    let pair = partner_potentials(&w).unwrap();
    let fd = eigenpairs(&discretize(&pair.v_minus, &grid).unwrap(), 1, true).unwrap();
    assert!(fd.eigenvalues[0].norm() < 1e-3, "{}", fd.eigenvalues[0]);
    let closed = ground_state_from_superpotential(&w, &grid, NormConvention::UnitL2).unwrap();
    let overlap = closed.overlap(&fd.eigenvectors.unwrap()[0]).unwrap();
    assert!(overlap > 0.9999, "{overlap}");
}

#[test]
fn negative_power_ground_state_is_rejected() {
    let w = cot_family(-1.0, 1.0, 0.0);
    let grid = Grid64::closed(0.0, PI, 101, 0.0).unwrap();
    assert!(matches!(
        ground_state_from_superpotential(&w, &grid, NormConvention::UnitL2),
        Err(Error::NonNormalizable(_))
    ));
}

#[test]
fn complex_b_ground_state_is_annihilated() {
    let w = cot_family(1.0, 1.0, 0.8);
    let grid = Grid64::dirichlet(0.0, PI, 4001, 0.0).unwrap();
    let psi = ground_state_from_superpotential(&w, &grid, NormConvention::UnitL2).unwrap();
    let image = intertwine(Intertwiner::Lower, &w, &psi).unwrap();
    assert!(image.norm() < 1e-6, "{}", image.norm());
}

#[test]
fn raising_maps_upper_states_back_down() {
    let w = cot_family(1.0, 1.0, 0.0);
    let grid = Grid64::dirichlet(0.0, PI, 4001, 0.0).unwrap();
    let pair = partner_potentials(&w).unwrap();
    let lower = eigenpairs(&discretize(&pair.v_minus, &grid).unwrap(), 4, true).unwrap();
    let upper = eigenpairs(&discretize(&pair.v_plus, &grid).unwrap(), 3, true).unwrap();
    let lower_vectors = lower.eigenvectors.unwrap();
    for (n, psi) in upper.eigenvectors.unwrap().iter().enumerate() {
        let image = apply_intertwiner(Intertwiner::Raise, &w, psi, upper.eigenvalues[n]).unwrap();
        // unit-norm image: 𝒜𝒜† ψ = E ψ with ‖ψ‖ = 1
        assert!((image.norm() - 1.0).abs() < 1e-3, "{}", image.norm());
        assert!(image.overlap(&lower_vectors[n + 1]).unwrap() > 0.999);
        let residual = residual_norm(&pair.v_minus, &grid, &image, upper.eigenvalues[n]).unwrap();
        assert!(residual / upper.eigenvalues[n].norm() < 1e-2, "{residual}");
    }
}

#[test]
fn factorized_hamiltonian_reproduces_energy() {
    // 𝒜†𝒜 ψ = E ψ for the lower-sector eigenstates
    let w = cot_family(1.0, 1.0, 0.0);
    let grid = Grid64::dirichlet(0.0, PI, 4001, 0.0).unwrap();
    let pair = partner_potentials(&w).unwrap();
    let lower = eigenpairs(&discretize(&pair.v_minus, &grid).unwrap(), 3, true).unwrap();
    for (psi, e) in lower.eigenvectors.unwrap().iter().zip(&lower.eigenvalues).skip(1) {
        let up = intertwine(Intertwiner::Lower, &w, psi).unwrap();
        let back = intertwine(Intertwiner::Raise, &w, &up).unwrap();
        let interior = 4..grid.n() - 4;
        let num: f64 = interior
            .clone()
            .map(|i| (back.values()[i] - psi.values()[i] * e).norm_sqr())
            .sum::<f64>()
            .sqrt();
        let den: f64 = interior.map(|i| (psi.values()[i] * e).norm_sqr()).sum::<f64>().sqrt();
        assert!(num / den < 1e-4, "{}", num / den);
    }
}

#[test]
fn real_amplitude_deformation_matches_closed_form() {
    // A = 1, c = 0.5: the pole of coth sits at x = -0.5, outside the grid
    let amplitude = c(1.0, 0.0);
    let shift = c(0.5, 0.0);
    let exact = |x: f64| {
        let z = amplitude * (x + shift);
        -2.0 * amplitude * (2.0 * z).exp() / ((2.0 * z).exp() - 1.0)
    };
    let grid = Grid64::closed(0.0, 3.0, 4001, 0.0).unwrap();
    let w = Superpotential64::Constant { amplitude };
    let numeric = deformation_numeric(&w, 1.3, exact(1.3), &grid).unwrap();
    let closed = deformation_closed_form(amplitude, shift).unwrap();
    for (x, g) in grid.nodes().zip(numeric.values()) {
        assert!((g - exact(x)).norm() < 1e-8, "x = {x}");
        assert!((closed.eval_at(c(x, 0.0)).unwrap() - exact(x)).norm() < 1e-12);
    }
}

#[test]
fn deformation_hitting_a_pole_blows_up() {
    let amplitude = c(0.0, 1.0);
    let w = Superpotential64::Constant { amplitude };
    // cot x - i has a pole at π inside the grid
    let grid = Grid64::closed(1.0, 4.0, 4001, 0.0).unwrap();
    let g0 = deformation_closed_form(amplitude, c(0.0, 0.0)).unwrap().eval_at(c(1.0, 0.0)).unwrap();
    assert!(matches!(
        deformation_numeric(&w, 1.0, g0, &grid),
        Err(Error::BlowUp { .. })
    ));
}

#[test]
fn deformed_partners_at_imaginary_amplitude() {
    // A = i: the deformed pair is V₋ = A² = -1 and V₊ = 2csc²x - 1
    let pair = partner_potentials(&Superpotential64::Deformed { amplitude: c(0.0, 1.0), c: c(0.0, 0.0) }).unwrap();
    let reference = Potential64::csc_squared(1.0, c(0.0, 0.0));
    for k in 1..50 {
        let x = c(k as f64 * PI / 50.0, 0.2);
        assert!((pair.v_plus.eval_at(x).unwrap() - reference.eval_at(x).unwrap()).norm() < 1e-10);
        assert!((pair.v_minus.eval_at(x).unwrap() - c(-1.0, 0.0)).norm() < 1e-10);
    }
}

proptest! {
    #[test]
    fn partner_identity_holds(
        a in 0.2f64..3.0,
        alpha in 0.5f64..3.0,
        b in -2.0f64..2.0,
        x in 0.05f64..0.95,
        eta in -0.4f64..0.4,
    ) {
        let w = cot_family(a, alpha, b);
        let point = c(x * PI / alpha, eta);
        let pair = partner_potentials(&w).unwrap();
        let (minus, plus) = partner_values_from_superpotential(&w, point).unwrap();
        let analytic_minus = pair.v_minus.eval_at(point).unwrap();
        let analytic_plus = pair.v_plus.eval_at(point).unwrap();
        let scale = 1.0 + analytic_plus.norm();
        prop_assert!((minus - analytic_minus).norm() < 1e-10 * scale);
        prop_assert!((plus - analytic_plus).norm() < 1e-10 * scale);
        let derivative = w.derivative_at(point).unwrap();
        prop_assert!((plus - minus - derivative * 2.0).norm() < 1e-10 * scale);
    }

    #[test]
    fn deformation_solves_bernoulli(re in -1.5f64..1.5, im in -1.5f64..1.5, x in 0.1f64..1.5) {
        prop_assume!(re.hypot(im) > 0.2);
        let amplitude = c(re, im);
        let closed = deformation_closed_form(amplitude, c(0.0, 0.0)).unwrap();
        let point = c(x, 0.0);
        let h = 1e-4;
        let z = amplitude * point;
        prop_assume!(z.sinh().norm() > 0.1 && (amplitude * (point + h)).sinh().norm() > 0.1);
        let g = closed.eval_at(point).unwrap();
        let dg = (closed.eval_at(point + h).unwrap() - closed.eval_at(point - h).unwrap()) / (2.0 * h);
        let lhs = dg;
        let rhs = g * g + amplitude * g * 2.0;
        prop_assert!((lhs - rhs).norm() < 1e-5 * (1.0 + rhs.norm()), "{} vs {}", lhs, rhs);
    }
}
