//! Numerical toolkit for the constraint geometry of quantum state space.
//!
//! The crate is organized around the density matrix as the central object:
//!
//! - [`matrix`] / [`eigen`]: small dense complex matrices and a Hermitian
//!   eigensolver, the numerical substrate everything else runs on.
//! - [`density`]: validation against the defining constraints (Hermitian,
//!   positive semidefinite, unit trace), Hilbert-Schmidt distance, convex
//!   mixing, and rank stratification.
//! - [`ggm`]: generalized Gell-Mann bases for arbitrary dimension and the
//!   structure constants of their product algebra.
//! - [`bloch`]: Bloch-vector coordinates around the maximally mixed state,
//!   pure-state surface conditions, and the qubit ball picture.
//! - [`spin1`]: the complete three-level constraint system: principal-minor
//!   inequalities, the rescaled boundary parameterization, extremal discs,
//!   and rejection sampling of the physical region.
//! - [`sectors`]: basis enumeration for small lattice gauge chains, Gauss-law
//!   filtering, charge/parity sector decomposition, and qubit budgets.
//! - [`vopt`]: projected gradient descent over Bloch vectors, keeping every
//!   iterate inside the physical region.

pub mod bloch;
pub mod density;
pub mod eigen;
pub mod error;
pub mod ggm;
pub mod matrix;
pub mod sample;
pub mod sectors;
pub mod spin1;
pub mod vopt;

pub use bloch::{BlochVector, QubitBallPoint};
pub use density::{DensityMatrix, ValidationReport};
pub use error::{Error, Result};
pub use ggm::{GgmBasis, StructureConstants};
pub use matrix::ComplexMatrix;
pub use sectors::{BasisState, LatticeModel, SectorReport};
pub use spin1::{PrincipalMinorReport, RescaledParams, Spin1Params};
pub use vopt::{Objective, OptConfig, Trajectory};

/// Default absolute tolerance for all constraint checks.
///
/// Double-precision eigensolvers on well-conditioned small matrices achieve
/// roughly 1e-14, so 1e-10 leaves four orders of headroom while still
/// rejecting genuine constraint violations.
pub const DEFAULT_TOL: f64 = 1e-10;
