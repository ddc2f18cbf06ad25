//! Dense general complex eigenvalues: Householder reduction to upper
//! Hessenberg form followed by single-shift QR with Wilkinson shifts and
//! Givens rotations.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{real, Real};

const MAX_ITERATIONS_PER_EIGENVALUE: usize = 40;

/// Reduces a square row-major matrix to upper Hessenberg form in place.
pub fn hessenberg_reduce<T: Real>(a: &mut [Vec<Complex<T>>]) {
    let n = a.len();
    for k in 0..n.saturating_sub(2) {
        let alpha_norm = (k + 1..n).fold(T::zero(), |acc, i| acc + a[i][k].norm_sqr()).sqrt();
        if alpha_norm == T::zero() {
            continue;
        }
        let x0 = a[k + 1][k];
        let phase = if x0.norm() > T::zero() { x0 / x0.norm() } else { real(T::one()) };
        // v = x + e^{iθ}‖x‖ e_1
        let mut v: Vec<Complex<T>> = (k + 1..n).map(|i| a[i][k]).collect();
        v[0] = v[0] + phase * alpha_norm;
        let v_norm_sq = v.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr());
        if v_norm_sq == T::zero() {
            continue;
        }
        let two = T::lit(2.0);
        // A <- (I - 2vv*/v*v) A
        for j in 0..n {
            let dot = v
                .iter()
                .enumerate()
                .fold(real(T::zero()), |acc, (r, vr)| acc + vr.conj() * a[k + 1 + r][j]);
            let f = dot * (two / v_norm_sq);
            for (r, vr) in v.iter().enumerate() {
                a[k + 1 + r][j] = a[k + 1 + r][j] - *vr * f;
            }
        }
        // A <- A (I - 2vv*/v*v)
        for row in a.iter_mut() {
            let dot = v
                .iter()
                .enumerate()
                .fold(real(T::zero()), |acc, (r, vr)| acc + row[k + 1 + r] * *vr);
            let f = dot * (two / v_norm_sq);
            for (r, vr) in v.iter().enumerate() {
                row[k + 1 + r] = row[k + 1 + r] - f * vr.conj();
            }
        }
        for row in a.iter_mut().skip(k + 2) {
            row[k] = real(T::zero());
        }
    }
}

/// Eigenvalue of the 2x2 block `[[a, b], [c, d]]` closest to `d`.
fn wilkinson_shift<T: Real>(a: Complex<T>, b: Complex<T>, c: Complex<T>, d: Complex<T>) -> Complex<T> {
    let half = T::lit(0.5);
    let mean = (a + d) * half;
    let disc = (((a - d) * half) * ((a - d) * half) + b * c).sqrt();
    let (l1, l2) = (mean + disc, mean - disc);
    if (l1 - d).norm() <= (l2 - d).norm() {
        l1
    } else {
        l2
    }
}

/// All eigenvalues of a general complex matrix (row-major, consumed).
pub fn dense_eigenvalues<T: Real>(mut a: Vec<Vec<Complex<T>>>) -> Result<Vec<Complex<T>>> {
    let n = a.len();
    if a.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidParameter("dense eigensolver needs a square matrix".into()));
    }
    hessenberg_reduce(&mut a);
    let eps = T::epsilon();
    let mut eig = vec![real(T::zero()); n];
    if n == 0 {
        return Ok(eig);
    }
    let mut hi = n - 1;
    let mut iterations = 0usize;
    loop {
        if hi == 0 {
            eig[0] = a[0][0];
            break;
        }
        // locate the start of the unreduced block ending at `hi`
        let mut lo = hi;
        while lo > 0 {
            let scale = a[lo - 1][lo - 1].norm() + a[lo][lo].norm();
            let scale = if scale == T::zero() { T::one() } else { scale };
            if a[lo][lo - 1].norm() <= eps * scale {
                a[lo][lo - 1] = real(T::zero());
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            eig[hi] = a[hi][hi];
            hi -= 1;
            iterations = 0;
            continue;
        }
        iterations += 1;
        if iterations > MAX_ITERATIONS_PER_EIGENVALUE {
            return Err(Error::NoConvergence(format!(
                "dense QR: eigenvalue {hi} of {n} unconverged after {MAX_ITERATIONS_PER_EIGENVALUE} iterations, |subdiag| = {:e}",
                a[hi][hi - 1].norm().as_f64()
            )));
        }
        let shift = if iterations.is_multiple_of(11) {
            // exceptional shift
            a[hi][hi] + real(a[hi][hi - 1].norm() * T::lit(0.75))
        } else {
            wilkinson_shift(a[hi - 1][hi - 1], a[hi - 1][hi], a[hi][hi - 1], a[hi][hi])
        };
        qr_step(&mut a, lo, hi, shift);
    }
    Ok(eig)
}

/// One shifted QR step `H - σI = QR, H <- RQ + σI` on the window `lo..=hi`.
fn qr_step<T: Real>(a: &mut [Vec<Complex<T>>], lo: usize, hi: usize, shift: Complex<T>) {
    for i in lo..=hi {
        a[i][i] = a[i][i] - shift;
    }
    let mut rotations = Vec::with_capacity(hi - lo);
    for k in lo..hi {
        let (x, y) = (a[k][k], a[k + 1][k]);
        let r = (x.norm_sqr() + y.norm_sqr()).sqrt();
        let (c, s) = if r == T::zero() {
            (real(T::one()), real(T::zero()))
        } else {
            (x / r, y / r)
        };
        for j in k..=hi {
            let (p, q) = (a[k][j], a[k + 1][j]);
            a[k][j] = c.conj() * p + s.conj() * q;
            a[k + 1][j] = -s * p + c * q;
        }
        rotations.push((c, s));
    }
    for (offset, (c, s)) in rotations.into_iter().enumerate() {
        let k = lo + offset;
        for row in a.iter_mut().take((k + 2).min(hi) + 1).skip(lo) {
            let (p, q) = (row[k], row[k + 1]);
            row[k] = p * c + q * s;
            row[k + 1] = -p * s.conj() + q * c.conj();
        }
    }
    for i in lo..=hi {
        a[i][i] = a[i][i] + shift;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn sorted(mut v: Vec<Complex<f64>>) -> Vec<Complex<f64>> {
        v.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap().then(a.im.partial_cmp(&b.im).unwrap()));
        v
    }

    #[test]
    fn triangular_matrix_eigenvalues_are_diagonal() {
        let a = vec![
            vec![c(1.0, 1.0), c(2.0, 0.0), c(3.0, -1.0)],
            vec![c(0.0, 0.0), c(-1.0, 0.5), c(0.5, 0.5)],
            vec![c(0.0, 0.0), c(0.0, 0.0), c(4.0, 0.0)],
        ];
        let eig = sorted(dense_eigenvalues(a).unwrap());
        let expect = sorted(vec![c(1.0, 1.0), c(-1.0, 0.5), c(4.0, 0.0)]);
        for (x, y) in eig.iter().zip(&expect) {
            assert!((x - y).norm() < 1e-13);
        }
    }

    #[test]
    fn rotation_generator_has_imaginary_pair() {
        let a = vec![vec![c(0.0, 0.0), c(-1.0, 0.0)], vec![c(1.0, 0.0), c(0.0, 0.0)]];
        let eig = sorted(dense_eigenvalues(a).unwrap());
        assert!((eig[0] - c(0.0, -1.0)).norm() < 1e-14);
        assert!((eig[1] - c(0.0, 1.0)).norm() < 1e-14);
    }

    #[test]
    fn trace_and_hessenberg_shape_preserved() {
        let n = 12;
        let a: Vec<Vec<Complex<f64>>> = (0..n)
            .map(|i| (0..n).map(|j| c(((i * 7 + j * 3) % 11) as f64 - 5.0, ((i + 2 * j) % 5) as f64 - 2.0)).collect())
            .collect();
        let trace: Complex<f64> = (0..n).map(|i| a[i][i]).sum();
        let mut h = a.clone();
        hessenberg_reduce(&mut h);
        for (i, row) in h.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if i > j + 1 {
                    assert!(v.norm() < 1e-12);
                }
            }
        }
        let eig = dense_eigenvalues(a).unwrap();
        let sum: Complex<f64> = eig.iter().sum();
        assert!((sum - trace).norm() < 1e-10);
    }
}
