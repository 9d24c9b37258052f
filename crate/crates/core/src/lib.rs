//! Scattering matrices of 1-D Schrödinger operators and discrete-time
//! quantum walks, computed through three independent routes that cross-check
//! each other: transfer-matrix star products, Feynman path sums over walker
//! trajectories, and direct numerical solution of the stationary equations.
//!
//! The crate is organized around the correspondence between the two models:
//! each potential barrier carries a local scattering matrix (a walk coin),
//! and the walk assembled from those coins reproduces the full quantum
//! scattering matrix. [`barrier_top`] adds the semiclassical machinery that
//! drives the coins to the Hadamard form near a barrier top.

pub mod barrier_top;
pub mod coin_algebra;
pub mod error;
pub mod gamma;
pub mod ode;
pub mod path_sum;
pub mod quad;
pub mod schrodinger;
pub mod walk_engine;

pub use error::Error;
pub use num_complex::Complex64;

/// Tolerance for membership checks in the matrix groups (transfer matrices
/// and coins). Double-precision products of up to a few hundred factors stay
/// well inside this.
pub const TOL_ALG: f64 = 1e-10;

/// Tolerance for the dense stationary-state linear solves.
pub const TOL_LIN: f64 = 1e-11;

/// Default local error tolerance for the ODE integrator.
pub const ODE_TOL: f64 = 1e-10;

/// Tolerance for the numerically computed quantum scattering matrix
/// (accounts for truncation, matching and integration error composition).
pub const TOL_QM: f64 = 1e-7;

/// Relative tolerance for Wronskian conservation checks.
pub const TOL_WRONSKIAN: f64 = 1e-8;

pub type Result<T> = std::result::Result<T, Error>;
