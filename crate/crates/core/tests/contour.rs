//! Spectra of `2csc²x - 1` posed on the lifted line `Im x = η` with
//! Dirichlet walls at `Re x = 0, π`.

use std::f64::consts::PI;

use num_complex::Complex64;
use ptwell::spectral::{discretize, eigenpairs};
use ptwell::{Grid64, Potential64};

fn lowest(eta: f64, k: usize) -> Vec<Complex64> {
    let v = Potential64::generalized_pt(1.0, 1.0, 0.0, Complex64::new(0.0, 0.0));
    let grid = Grid64::dirichlet(0.0, PI, 2001, eta).unwrap();
    eigenpairs(&discretize(&v, &grid).unwrap(), k, false).unwrap().eigenvalues
}

#[test]
fn lifted_contour_keeps_lowest_three_levels() {
    for (e, exact) in lowest(0.4, 3).iter().zip([3.0, 8.0, 15.0]) {
        assert!((e - exact).norm() / exact < 5e-3, "{e} vs {exact}");
    }
}

#[test]
fn lifted_contour_levels_are_partner_box_levels_plus_one_extra() {
    // The walls at Re x = 0, π no longer sit on poles once η ≠ 0. The integer
    // levels k² - 1 survive and one extra real level csch²η appears.
    for eta in [0.3f64, 0.4, 0.6] {
        let extra = 1.0 / eta.sinh().powi(2);
        let mut expected: Vec<f64> = (2..8).map(|k: i32| f64::from(k * k - 1)).collect();
        expected.push(extra);
        expected.sort_by(f64::total_cmp);
        expected.truncate(5);
        for (e, exact) in lowest(eta, 5).iter().zip(&expected) {
            assert!((e - exact).norm() < 5e-3 * exact, "η = {eta}: {e} vs {exact}");
            assert!(e.im.abs() < 1e-6);
        }
    }
}

#[test]
fn real_contour_has_no_extra_level() {
    for (e, k) in lowest(0.0, 4).iter().zip(2..) {
        let exact = f64::from(k * k - 1);
        assert!((e - exact).norm() / exact < 5e-3, "{e} vs {exact}");
    }
}
