//! Sector-graded quantum state spaces with executable superselection
//! structure.
//!
//! The library represents finite labeled bases split into coherent
//! sectors, distinguishes coherent superpositions (state vectors) from
//! incoherent ones (ensembles), and turns the classic superselection
//! arguments into checkable operations:
//!
//! * phase freedom and the vanishing of cross-sector matrix elements for
//!   every sector-compatible observable ([`observable`]);
//! * the univalence rule from the 2 pi rotation of boson/fermion
//!   superpositions ([`spin`]) and from two-particle exchange
//!   ([`exchange`]);
//! * the mass and particle-number rules from the Galilean identity-loop
//!   phase ([`galilei`]);
//! * the dynamically induced rule of the one-dimensional hydrogen atom,
//!   with analytic eigenfunctions, quadrature and finite-difference
//!   verification, and an independent shooting-method eigenvalue oracle
//!   ([`hydrogen1d`]).
//!
//! Everything numeric is generic over the scalar via [`Scalar`] (`f32` or
//! `f64`); the `*64` aliases below are the concrete types most callers
//! want. All values are immutable after construction and all operations
//! are pure, so everything is `Send + Sync` and safe to verify in
//! parallel.

pub mod ensemble;
pub mod error;
pub mod exchange;
pub mod galilei;
pub mod hydrogen1d;
pub mod linalg;
pub mod observable;
pub mod scalar;
pub mod space;
pub mod spin;
pub mod tol;

mod state;

pub use error::{Error, Result};
pub use scalar::Scalar;
pub use space::{BasisId, SectorLabel, Space};
pub use state::{inner, random_unit, random_unit_in_sector, superpose, StateVector};

pub use ensemble::Ensemble;
pub use observable::{
    cross_sector_element, indistinguishable, is_csv, max_expectation_difference,
    random_hermitian, random_sector_observable, DensityOperator, Observable,
};

/// Concrete `f64` instantiations.
pub type StateVector64 = StateVector<f64>;
pub type Observable64 = Observable<f64>;
pub type DensityOperator64 = DensityOperator<f64>;
pub type Ensemble64 = Ensemble<f64>;
pub type CMatrix64 = linalg::CMatrix<f64>;
pub type TwoParticleState64 = exchange::TwoParticleState<f64>;
pub type MassLabeledState64 = galilei::MassLabeledState<f64>;
pub type GalileiParams64 = galilei::GalileiParams<f64>;
