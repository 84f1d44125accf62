//! Majorization tests and Douglas-style factorizations.
//!
//! T is majorized by S when ran(T) is contained in ran(S); equivalently
//! TT* <= mu SS* for some finite mu, equivalently T = SR for a bounded R.
//! The minimal-norm factor is `R = S+ T` (with its range inside ran(S*) and
//! ker(R) = ker(T)), and its squared norm equals the Loewner infimum
//! `inf { mu : TT* <= mu SS* }`; the implementation records ||R||, ||R||^2
//! and the bisection infimum side by side so the relationship is part of
//! the report rather than an assumption.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::pinv::pseudo_inverse;
use crate::psd::{loewner_infimum, loewner_supremum};
use crate::subspace::{kernel_basis, range_basis, subspace_contained, subspaces_equal};
use crate::svd::{operator_norm, svd};
use crate::tol::Tolerances;

/// One recovered factor with its certified norm data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FactorizationResult {
    pub factor: Matrix,
    /// Operator-norm residual of the reconstruction against the target.
    pub residual: f64,
    pub factor_norm: f64,
    pub factor_norm_sq: f64,
    /// Optimal majorization constant located by Loewner bisection. For the
    /// left factor S1 this is inf{beta : TT* <= beta T*T}; for the right
    /// factor S2 it is sup{alpha : alpha T*T <= TT*}.
    pub certified_infimum: f64,
    pub kernel_match: bool,
    pub range_containment: bool,
}

/// Range-containment test plus the optimal majorization constant.
///
/// Returns `(contained, inf { mu >= 0 : TT* <= mu SS* })`, with infinity as
/// the sentinel when containment fails. Containment is decided by comparing
/// numerical ranks of `[S | T]` and `S` at a shared singular-value
/// threshold.
pub fn majorizes(t: &Matrix, s: &Matrix, tol: &Tolerances) -> Result<(bool, f64)> {
    if (t.rows(), t.cols()) != (s.rows(), s.cols()) {
        return Err(Error::ShapeMismatch(format!(
            "majorizes needs equal shapes, got {}x{} and {}x{}",
            t.rows(),
            t.cols(),
            s.rows(),
            s.cols()
        )));
    }
    let concat = s.concat_cols(t);
    let svd_concat = svd(&concat, tol)?;
    let svd_s = svd(s, tol)?;
    let shared_threshold = concat.rows().max(concat.cols()) as f64
        * svd_concat.sigma_max()
        * tol.tol_rank_factor;
    let rank_s = svd_s
        .singular_values
        .iter()
        .filter(|&&x| x > shared_threshold)
        .count();
    let rank_concat = svd_concat
        .singular_values
        .iter()
        .filter(|&&x| x > shared_threshold)
        .count();
    if rank_concat != rank_s {
        return Ok((false, f64::INFINITY));
    }

    let tts = t.mul(&t.adjoint());
    let sss = s.mul(&s.adjoint());
    // TT* <= (||T|| / sigma_r(S))^2 SS* holds under containment, which seeds
    // the bracket.
    let hint = match svd_s.sigma_min_positive() {
        Some(sig) => (operator_norm(t) / sig).powi(2) * 1.01 + 1.0,
        None => 1.0, // S numerically zero: containment forces T ~ 0 as well
    };
    let inf = loewner_infimum(&tts, &sss, hint, tol)?;
    Ok((true, inf))
}

/// Minimal-norm solution R of `T = S R`, with
/// ran(R) inside ran(S*) and ker(R) = ker(T).
pub fn douglas_factorization(t: &Matrix, s: &Matrix, tol: &Tolerances) -> Result<FactorizationResult> {
    let (contained, infimum) = majorizes(t, s, tol)?;
    if !contained {
        return Err(Error::NotMajorized);
    }
    let r0 = pseudo_inverse(s, tol)?.mul(t);
    // Both projections are mathematical identities for the minimal-norm
    // solution; applying them pins the stated range/kernel structure.
    let r1 = match range_basis(&s.adjoint(), tol)? {
        Some(w) => w.mul(&w.adjoint()).mul(&r0),
        None => Matrix::zeros(r0.rows(), r0.cols()),
    };
    let factor = match range_basis(&t.adjoint(), tol)? {
        Some(w) => r1.mul(&w.mul(&w.adjoint())),
        None => Matrix::zeros(r1.rows(), r1.cols()),
    };

    let residual = operator_norm(&s.mul(&factor).sub(t));
    let factor_norm = operator_norm(&factor);
    let kernel_match = subspaces_equal(
        kernel_basis(&factor, tol)?.as_ref(),
        kernel_basis(t, tol)?.as_ref(),
        tol,
    );
    let range_containment = subspace_contained(
        range_basis(&factor, tol)?.as_ref(),
        range_basis(&s.adjoint(), tol)?.as_ref(),
        tol,
    );
    Ok(FactorizationResult {
        factor,
        residual,
        factor_norm,
        factor_norm_sq: factor_norm * factor_norm,
        certified_infimum: infimum,
        kernel_match,
        range_containment,
    })
}

/// Factors T = T* S1 and T = S2 T* for an operator with ker(T) = ker(T*).
///
/// `S1 = (T*)+ T` and `S2 = T (T*)+`, compressed to the common range
/// M = ran(T) = ran(T*). The certified constants are
/// `inf{beta : TT* <= beta T*T}` for S1 and `sup{alpha : alpha T*T <= TT*}`
/// for S2, both by Loewner bisection; the factor norms are recorded next to
/// them without assuming either exponent convention.
pub fn construct_s1_s2(
    t: &Matrix,
    tol: &Tolerances,
) -> Result<(FactorizationResult, FactorizationResult)> {
    let cert = crate::certify::tightest_alpha_beta(t, tol)?;
    if cert.alpha_sq <= tol.tol_psd {
        return Err(Error::AlphaZero);
    }
    let t_adj = t.adjoint();
    let t_adj_pinv = pseudo_inverse(&t_adj, tol)?;
    let proj = match range_basis(&t_adj, tol)? {
        Some(w) => w.mul(&w.adjoint()),
        None => return Err(Error::ZeroOperator),
    };

    let tts = t.mul(&t_adj);
    let tst = t_adj.mul(t);

    let s1 = proj.mul(&t_adj_pinv.mul(t)).mul(&proj);
    let s2 = proj.mul(&t.mul(&t_adj_pinv)).mul(&proj);

    let ran_t = range_basis(t, tol)?;
    let ker_t = kernel_basis(t, tol)?;
    let build = |factor: Matrix, residual: f64, certified: f64| -> Result<FactorizationResult> {
        let factor_norm = operator_norm(&factor);
        let kernel_match = subspaces_equal(
            kernel_basis(&factor, tol)?.as_ref(),
            ker_t.as_ref(),
            tol,
        );
        let range_containment = subspace_contained(
            range_basis(&factor, tol)?.as_ref(),
            ran_t.as_ref(),
            tol,
        );
        Ok(FactorizationResult {
            factor,
            residual,
            factor_norm,
            factor_norm_sq: factor_norm * factor_norm,
            certified_infimum: certified,
            kernel_match,
            range_containment,
        })
    };

    let res1 = operator_norm(&t_adj.mul(&s1).sub(t));
    let res2 = operator_norm(&s2.mul(&t_adj).sub(t));
    let beta_inf = loewner_infimum(&tts, &tst, cert.beta_sq * 2.0 + 1.0, tol)?;
    let alpha_sup = loewner_supremum(&tts, &tst, tol)?;

    Ok((build(s1, res1, beta_inf)?, build(s2, res2, alpha_sup)?))
}
