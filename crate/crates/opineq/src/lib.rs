//! Dense complex operator analysis at desk scale.
//!
//! The crate certifies tightest (alpha, beta)-normality constants, computes
//! numerical radii and operator norms, constructs Moore-Penrose
//! pseudo-inverses and Douglas-style factorizations, and numerically
//! verifies a family of operator-norm/numerical-radius inequalities
//! together with the classical vector inequalities underlying them.
//! Everything operates on finite complex matrices, where suprema over the
//! unit sphere are attained maxima.

pub mod certify;
pub mod douglas;
pub mod eig;
pub mod ensemble;
pub mod error;
pub mod matfile;
pub mod matrix;
pub mod report;
pub mod rng;
pub mod pinv;
pub mod profile;
pub mod psd;
pub mod radius;
pub mod subspace;
pub mod suite;
pub mod svd;
pub mod tol;

pub use error::{Error, Result};
pub use matrix::{Matrix, Vector};
pub use tol::Tolerances;
