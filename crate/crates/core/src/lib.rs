//! Isospectral deformation of the infinite well into PT-symmetric
//! `csc²`/`cot` potentials, with a finite-difference spectral solver for the
//! resulting non-Hermitian Hamiltonians.
//!
//! All numerics are generic over [`Real`]; the `*64` and `*32` aliases at the
//! crate root fix the scalar type.

pub mod coord;
pub mod error;
pub mod grid;
pub mod poles;
pub mod potential;
pub mod pt;
pub mod scalar;
pub mod scan;
pub mod spectral;
pub mod superpotential;
pub mod susy;
pub mod units;
pub mod verify;
pub mod wavefunction;
pub mod well;

pub use coord::ComplexCoordinate;
pub use error::{Error, Result};
pub use grid::{Grid1D, GridSignature};
pub use poles::{PoleLattice, POLE_TOLERANCE};
pub use potential::{PotentialFamily, PotentialSpec, SampledPotential};
pub use pt::{PTClassification, Phase};
pub use scalar::Real;
pub use scan::{PhaseMapRecord, ScanConfig, ScanDomain};
pub use spectral::{EigenMethod, HamiltonianMatrix, Spectrum};
pub use superpotential::SuperpotentialSpec;
pub use units::UnitConvention;
pub use wavefunction::{NormConvention, SampledWavefunction};
pub use well::{AdmissibilityVerdict, ComplexBox};
pub use susy::{PartnerPair, Intertwiner};

pub type Coordinate64 = ComplexCoordinate<f64>;
pub type Grid64 = Grid1D<f64>;
pub type Potential64 = PotentialSpec<f64>;
pub type Superpotential64 = SuperpotentialSpec<f64>;
pub type Spectrum64 = Spectrum<f64>;
pub type Hamiltonian64 = HamiltonianMatrix<f64>;
pub type Wavefunction64 = SampledWavefunction<f64>;
pub type PhaseMapRecord64 = PhaseMapRecord<f64>;
pub type ScanConfig64 = ScanConfig<f64>;
pub type ComplexBox64 = ComplexBox<f64>;

pub type Coordinate32 = ComplexCoordinate<f32>;
pub type Grid32 = Grid1D<f32>;
pub type Potential32 = PotentialSpec<f32>;
pub type Superpotential32 = SuperpotentialSpec<f32>;
pub type Spectrum32 = Spectrum<f32>;
pub type Hamiltonian32 = HamiltonianMatrix<f32>;
pub type Wavefunction32 = SampledWavefunction<f32>;
pub type PhaseMapRecord32 = PhaseMapRecord<f32>;
pub type ScanConfig32 = ScanConfig<f32>;
pub type ComplexBox32 = ComplexBox<f32>;
