//! Loewner-order primitives: positive-semidefiniteness with declared slack,
//! and bisection for extremal scalars in operator inequalities.

use crate::eig::hermitian_eigenvalues;
use crate::error::Result;
use crate::matrix::Matrix;
use crate::tol::Tolerances;

/// True iff `lambda_min(a) >= -tol_psd * max(1, ||a||)`, with `a` required
/// to be (numerically) Hermitian.
pub fn is_psd(a: &Matrix, tol: &Tolerances) -> Result<bool> {
    let values = hermitian_eigenvalues(a, tol)?;
    let lam_min = values.first().copied().unwrap_or(0.0);
    let lam_abs = values.iter().fold(0.0_f64, |acc, v| acc.max(v.abs()));
    Ok(lam_min >= -tol.tol_psd * lam_abs.max(1.0))
}

pub(crate) fn lambda_min(a: &Matrix, tol: &Tolerances) -> Result<f64> {
    let values = hermitian_eigenvalues(a, tol)?;
    Ok(values.first().copied().unwrap_or(0.0))
}

/// Slack used inside Loewner bisections: fixed per problem instance so the
/// predicate is rigorously monotone in the bisection scalar, and much
/// tighter than `tol_psd` so the located boundary tracks the exact one.
const BISECTION_SLACK: f64 = 1e-12;

/// inf { mu >= 0 : num <= mu * den } in the Loewner order, assuming it is
/// finite (callers establish range containment first). Returns the smallest
/// scalar at which the PSD predicate is certified true; `hint_upper` seeds
/// the upper bracket.
pub(crate) fn loewner_infimum(
    num: &Matrix,
    den: &Matrix,
    hint_upper: f64,
    tol: &Tolerances,
) -> Result<f64> {
    let scale = num.frobenius_norm().max(1.0);
    let slack = BISECTION_SLACK * scale;
    let predicate = |mu: f64| -> Result<bool> {
        let m = den.scale_re(mu).sub(num);
        Ok(lambda_min(&m, tol)? >= -slack)
    };

    if predicate(0.0)? {
        return Ok(0.0);
    }
    let mut hi = hint_upper.max(1.0);
    let mut expansions = 0;
    while !predicate(hi)? {
        hi *= 2.0;
        expansions += 1;
        if expansions > 120 {
            // Containment was certified, so the predicate holds for large mu;
            // reaching this means the hint was pathological. Give up cleanly.
            return Ok(f64::INFINITY);
        }
    }
    let mut lo = 0.0_f64;
    for _ in 0..200 {
        if hi - lo <= 1e-10 * hi.max(1.0) {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if predicate(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// sup { alpha >= 0 : alpha * den <= num } in the Loewner order. Returns the
/// largest scalar at which the PSD predicate is certified true.
pub(crate) fn loewner_supremum(num: &Matrix, den: &Matrix, tol: &Tolerances) -> Result<f64> {
    let scale = num.frobenius_norm().max(1.0);
    let slack = BISECTION_SLACK * scale;
    let predicate = |alpha: f64| -> Result<bool> {
        let m = num.sub(&den.scale_re(alpha));
        Ok(lambda_min(&m, tol)? >= -slack)
    };

    if !predicate(0.0)? {
        return Ok(0.0);
    }
    let mut hi = 2.0_f64;
    let mut expansions = 0;
    while predicate(hi)? {
        hi *= 2.0;
        expansions += 1;
        if expansions > 120 {
            return Ok(f64::INFINITY);
        }
    }
    let mut lo = 0.0_f64;
    for _ in 0..200 {
        if hi - lo <= 1e-10 * hi.max(1.0) {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if predicate(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}
