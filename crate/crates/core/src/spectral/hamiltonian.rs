use num_complex::Complex;

use crate::error::Result;
use crate::grid::Grid1D;
use crate::potential::PotentialSpec;
use crate::scalar::{real, Real};

/// Second-order finite-difference `H = -d²/dx² + V` on a Dirichlet grid.
///
/// Tridiagonal with constant off-diagonal `-1/h²` and diagonal
/// `2/h² + V(x_i + iη)`; complex-symmetric, generally non-Hermitian.
#[derive(Debug, Clone, PartialEq)]
pub struct HamiltonianMatrix<T> {
    diag: Vec<Complex<T>>,
    offdiag: T,
    h: T,
    grid: Grid1D<T>,
}

/// Assembles the FD Hamiltonian of `v` on `grid`.
///
/// Only interior nodes are sampled, so poles sitting exactly at excluded
/// endpoints are allowed; a pole at any node is an error.
pub fn discretize<T: Real>(v: &PotentialSpec<T>, grid: &Grid1D<T>) -> Result<HamiltonianMatrix<T>> {
    let h = grid.spacing();
    let kinetic = T::lit(2.0) / (h * h);
    let diag = grid
        .points()
        .map(|x| v.eval_at(x).map(|value| value + kinetic))
        .collect::<Result<Vec<_>>>()?;
    Ok(HamiltonianMatrix {
        diag,
        offdiag: -(h * h).recip(),
        h,
        grid: *grid,
    })
}

impl<T: Real> HamiltonianMatrix<T> {
    pub fn n(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[Complex<T>] {
        &self.diag
    }

    pub fn offdiag(&self) -> T {
        self.offdiag
    }

    pub fn h(&self) -> T {
        self.h
    }

    pub fn grid(&self) -> &Grid1D<T> {
        &self.grid
    }

    /// `y = H x`.
    pub fn apply(&self, x: &[Complex<T>]) -> Vec<Complex<T>> {
        let n = self.n();
        assert_eq!(x.len(), n, "vector length must match matrix order");
        (0..n)
            .map(|i| {
                let mut acc = self.diag[i] * x[i];
                if i > 0 {
                    acc = acc + x[i - 1] * self.offdiag;
                }
                if i + 1 < n {
                    acc = acc + x[i + 1] * self.offdiag;
                }
                acc
            })
            .collect()
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> T {
        let n = self.n();
        (0..n)
            .map(|i| {
                let neighbours = usize::from(i > 0) + usize::from(i + 1 < n);
                self.diag[i].norm() + self.offdiag.abs() * T::from_count(neighbours)
            })
            .fold(T::zero(), T::max)
    }

    /// Element `(i, j)` of the matrix.
    pub fn entry(&self, i: usize, j: usize) -> Complex<T> {
        if i == j {
            self.diag[i]
        } else if i.abs_diff(j) == 1 {
            real(self.offdiag)
        } else {
            real(T::zero())
        }
    }

    /// Row-major dense copy.
    pub fn to_dense(&self) -> Vec<Vec<Complex<T>>> {
        let n = self.n();
        (0..n).map(|i| (0..n).map(|j| self.entry(i, j)).collect()).collect()
    }

    /// `M == Mᵀ` compared bitwise on the stored entries.
    pub fn is_complex_symmetric(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| {
            (i + 1..(i + 2).min(n)).all(|j| {
                let (a, b) = (self.entry(i, j), self.entry(j, i));
                a.re.to_bits_eq(b.re) && a.im.to_bits_eq(b.im)
            })
        })
    }
}

trait BitsEq {
    fn to_bits_eq(self, other: Self) -> bool;
}

impl<T: Real> BitsEq for T {
    fn to_bits_eq(self, other: Self) -> bool {
        // both operands share one type, so identical decoding means identical bits
        self.integer_decode() == other.integer_decode()
    }
}
