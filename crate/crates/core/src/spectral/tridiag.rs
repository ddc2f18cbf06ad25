//! Complex-symmetric tridiagonal eigensolver.
//!
//! Implicit QL with complex orthogonal rotations (`c² + s² = 1`), which keep
//! the matrix complex-symmetric and tridiagonal, so every sweep costs O(n).
//! Unlike the Hermitian case the rotations are not unitary and a sweep can
//! break down when `f² + g²` vanishes for nonzero `f`, `g`; that is reported
//! as non-convergence so callers can fall back to the dense solver.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{real, Real};

const MAX_SWEEPS_PER_EIGENVALUE: usize = 60;

/// `sqrt(f² + g²)` with scaling against overflow.
fn hypot_complex<T: Real>(f: Complex<T>, g: Complex<T>) -> Complex<T> {
    let scale = f.norm().max(g.norm());
    if scale == T::zero() {
        return real(T::zero());
    }
    let (fs, gs) = (f / scale, g / scale);
    (fs * fs + gs * gs).sqrt() * scale
}

/// All eigenvalues of the complex-symmetric tridiagonal matrix with diagonal
/// `diag` and off-diagonal `off` (`off[i]` couples rows `i` and `i + 1`).
pub fn tridiagonal_eigenvalues<T: Real>(diag: &[Complex<T>], off: &[Complex<T>]) -> Result<Vec<Complex<T>>> {
    let n = diag.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    if off.len() + 1 != n {
        return Err(Error::InvalidParameter(format!(
            "off-diagonal length {} does not match order {n}",
            off.len()
        )));
    }
    let mut d = diag.to_vec();
    let mut e: Vec<Complex<T>> = off.to_vec();
    e.push(real(T::zero()));
    let eps = T::epsilon();
    let two = T::lit(2.0);

    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].norm() + d[m + 1].norm();
                if e[m].norm() <= eps * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > MAX_SWEEPS_PER_EIGENVALUE {
                return Err(Error::NoConvergence(format!(
                    "tridiagonal QL: eigenvalue {l} of {n} unconverged after {MAX_SWEEPS_PER_EIGENVALUE} sweeps, |e| = {:e}",
                    e[l].norm().as_f64()
                )));
            }
            // Wilkinson-type shift from the leading 2x2 block
            let mut g = (d[l + 1] - d[l]) / (e[l] * two);
            let mut r = hypot_complex(g, real(T::one()));
            let signed = if (g.conj() * r).re >= T::zero() { r } else { -r };
            if sweeps % 10 == 0 {
                // exceptional shift to break cycles
                g = d[m] - d[l] + e[l] / (g + signed) * T::lit(1.5);
            } else {
                g = d[m] - d[l] + e[l] / (g + signed);
            }
            let (mut s, mut c, mut p) = (real(T::one()), real(T::one()), real(T::zero()));
            let mut i = m;
            let mut deflated_early = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = hypot_complex(f, g);
                e[i + 1] = r;
                let scale = f.norm() + g.norm();
                if r.norm() <= eps * scale {
                    if scale <= T::min_positive_value() {
                        d[i + 1] = d[i + 1] - p;
                        e[m] = real(T::zero());
                        deflated_early = true;
                        break;
                    }
                    return Err(Error::NoConvergence(format!(
                        "tridiagonal QL: isotropic rotation (f² + g² = 0) at row {i}"
                    )));
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + c * b * two;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated_early {
                continue;
            }
            d[l] = d[l] - p;
            e[l] = g;
            e[m] = real(T::zero());
        }
    }
    if d.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
        return Err(Error::NoConvergence("tridiagonal QL produced non-finite eigenvalues".into()));
    }
    Ok(d)
}

/// Eigenvector of the tridiagonal matrix for the (approximate) eigenvalue
/// `lambda` by inverse iteration with partial pivoting.
///
/// Returns the vector with unit Euclidean norm.
pub fn inverse_iteration<T: Real>(
    diag: &[Complex<T>],
    off: &[Complex<T>],
    lambda: Complex<T>,
    iterations: usize,
) -> Vec<Complex<T>> {
    let n = diag.len();
    let scale = diag.iter().map(|z| z.norm()).fold(T::zero(), T::max)
        + off.iter().map(|z| z.norm()).fold(T::zero(), T::max) * T::lit(2.0);
    let floor = T::epsilon() * scale.max(T::one());
    let lu = TridiagonalLu::factor(diag, off, lambda, floor);
    // deterministic start vector with no special symmetry
    let mut x: Vec<Complex<T>> = (0..n)
        .map(|i| real(T::one() + T::lit(0.5) * (T::from_count(i) * T::lit(0.618_034)).sin()))
        .collect();
    normalize(&mut x);
    for _ in 0..iterations.max(1) {
        x = lu.solve(&x);
        normalize(&mut x);
    }
    x
}

fn normalize<T: Real>(x: &mut [Complex<T>]) {
    let norm = x.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr()).sqrt();
    if norm > T::zero() && norm.is_finite() {
        for z in x.iter_mut() {
            *z = *z / norm;
        }
    }
}

/// LU factors of `T - λI` with row interchanges (LAPACK `gttrf` layout).
struct TridiagonalLu<T> {
    dl: Vec<Complex<T>>,
    d: Vec<Complex<T>>,
    du: Vec<Complex<T>>,
    du2: Vec<Complex<T>>,
    swapped: Vec<bool>,
}

impl<T: Real> TridiagonalLu<T> {
    fn factor(diag: &[Complex<T>], off: &[Complex<T>], lambda: Complex<T>, floor: T) -> Self {
        let n = diag.len();
        let mut d: Vec<Complex<T>> = diag.iter().map(|&z| z - lambda).collect();
        let mut dl = off.to_vec();
        let mut du = off.to_vec();
        let mut du2 = vec![real(T::zero()); n.saturating_sub(2)];
        let mut swapped = vec![false; n.saturating_sub(1)];
        for i in 0..n.saturating_sub(1) {
            if d[i].norm() >= dl[i].norm() {
                if d[i].norm() < floor {
                    d[i] = real(floor);
                }
                let fact = dl[i] / d[i];
                dl[i] = fact;
                d[i + 1] = d[i + 1] - fact * du[i];
            } else {
                let fact = d[i] / dl[i];
                d[i] = dl[i];
                dl[i] = fact;
                let temp = du[i];
                du[i] = d[i + 1];
                d[i + 1] = temp - fact * d[i + 1];
                if i + 2 < n {
                    du2[i] = du[i + 1];
                    du[i + 1] = -fact * du[i + 1];
                }
                swapped[i] = true;
            }
        }
        if n > 0 && d[n - 1].norm() < floor {
            d[n - 1] = real(floor);
        }
        Self { dl, d, du, du2, swapped }
    }

    fn solve(&self, b: &[Complex<T>]) -> Vec<Complex<T>> {
        let n = self.d.len();
        let mut x = b.to_vec();
        for i in 0..n.saturating_sub(1) {
            if self.swapped[i] {
                let temp = x[i];
                x[i] = x[i + 1];
                x[i + 1] = temp - self.dl[i] * x[i];
            } else {
                x[i + 1] = x[i + 1] - self.dl[i] * x[i];
            }
        }
        for i in (0..n).rev() {
            let mut acc = x[i];
            if i + 1 < n {
                acc = acc - self.du[i] * x[i + 1];
            }
            if i + 2 < n {
                acc = acc - self.du2[i] * x[i + 2];
            }
            x[i] = acc / self.d[i];
        }
        x
    }
}
