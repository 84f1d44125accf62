//! Certified per-operator summary.

use serde::{Deserialize, Serialize};

use crate::certify::tightest_alpha_beta;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::radius::numerical_radius;
use crate::subspace::{kernel_basis, subspaces_equal};
use crate::svd::{operator_norm, svd};
use crate::tol::Tolerances;

/// Aggregate of the certified quantities for one operator. The alpha/beta
/// fields are `None` when no finite certificate exists (unequal kernels) or
/// for the zero operator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OperatorProfile {
    pub alpha_sq: Option<f64>,
    pub beta_sq: Option<f64>,
    pub alpha_opt: Option<f64>,
    pub beta_opt: Option<f64>,
    pub numerical_radius: f64,
    pub numerical_radius_of_square: f64,
    pub op_norm: f64,
    pub kernel_dim: usize,
    pub kernels_equal: bool,
    /// Equivalent to `kernels_equal` in finite dimensions.
    pub is_ab_normal: bool,
}

pub fn profile(t: &Matrix, tol: &Tolerances) -> Result<OperatorProfile> {
    t.require_square()?;
    let n = t.rows();
    let w = numerical_radius(t, tol)?;
    // w(T^2) from the explicit product; w is not submultiplicative, so this
    // is never derived from w(T)^2.
    let w_sq = numerical_radius(&t.mul(t), tol)?;
    let op_norm = operator_norm(t);
    let decomp = svd(t, tol)?;
    let kernel_dim = n - decomp.numerical_rank;
    let kernels_equal = subspaces_equal(
        kernel_basis(t, tol)?.as_ref(),
        kernel_basis(&t.adjoint(), tol)?.as_ref(),
        tol,
    );

    let (alpha_sq, beta_sq) = if kernels_equal && decomp.numerical_rank > 0 {
        match tightest_alpha_beta(t, tol) {
            Ok(cert) => (Some(cert.alpha_sq), Some(cert.beta_sq)),
            Err(Error::ZeroOperator) | Err(Error::KernelMismatch) => (None, None),
            Err(e) => return Err(e),
        }
    } else {
        (None, None)
    };

    Ok(OperatorProfile {
        alpha_sq,
        beta_sq,
        alpha_opt: alpha_sq.map(|a| a.max(0.0).sqrt()),
        beta_opt: beta_sq.map(|b| b.max(0.0).sqrt()),
        numerical_radius: w,
        numerical_radius_of_square: w_sq,
        op_norm,
        kernel_dim,
        kernels_equal,
        is_ab_normal: kernels_equal,
    })
}
