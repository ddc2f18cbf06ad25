//! Unit convention.
//!
//! Every formula in the crate uses `hbar / sqrt(2 m) = 1`, so the Schrödinger
//! operator reads `H = -d²/dx² + V(x)` and energies carry units of inverse
//! length squared. Restoring units amounts to rescaling `x -> x / lambda`.

use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitConvention<T> {
    lambda: T,
}

impl<T: Real> UnitConvention<T> {
    pub fn natural() -> Self {
        Self { lambda: T::one() }
    }

    /// The constant `hbar / sqrt(2 m)`; always one.
    pub fn lambda(&self) -> T {
        self.lambda
    }
}

impl<T: Real> Default for UnitConvention<T> {
    fn default() -> Self {
        Self::natural()
    }
}
