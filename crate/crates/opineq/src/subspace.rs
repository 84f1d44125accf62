//! Range/kernel bases and principal-angle comparisons between subspaces.
//!
//! A basis is an `Option<Matrix>` with orthonormal columns; `None` encodes
//! the zero-dimensional subspace.

use crate::error::Result;
use crate::matrix::{Matrix, Vector};
use crate::svd::{operator_norm, svd};
use crate::tol::Tolerances;

/// Orthonormal basis of the numerical range (column space).
pub fn range_basis(a: &Matrix, tol: &Tolerances) -> Result<Option<Matrix>> {
    let s = svd(a, tol)?;
    let cols: Vec<Vector> = (0..s.numerical_rank).map(|j| s.u.col(j)).collect();
    Ok(Matrix::from_cols(a.rows(), &cols))
}

/// Orthonormal basis of the numerical kernel (null space).
pub fn kernel_basis(a: &Matrix, tol: &Tolerances) -> Result<Option<Matrix>> {
    let s = svd(a, tol)?;
    let n = a.cols();
    let cols: Vec<Vector> = (s.numerical_rank..n).map(|j| s.v.col(j)).collect();
    Ok(Matrix::from_cols(n, &cols))
}

/// Sine of the largest principal angle from span(sub) to span(sup), i.e.
/// `|| (I - P_sup) B_sub ||_2`. Zero-dimensional `sub` is contained in
/// everything.
pub fn max_principal_angle_sin(sub: Option<&Matrix>, sup: Option<&Matrix>) -> f64 {
    let Some(b) = sub else { return 0.0 };
    let Some(s) = sup else {
        // sup is the zero subspace: any nonzero sub sticks out fully.
        return 1.0;
    };
    // residual = B - S (S* B)
    let coeff = s.adjoint().mul(b);
    let residual = b.sub(&s.mul(&coeff));
    operator_norm(&residual).min(1.0)
}

/// True iff span(sub) is contained in span(sup) up to the angle threshold.
pub fn subspace_contained(sub: Option<&Matrix>, sup: Option<&Matrix>, tol: &Tolerances) -> bool {
    max_principal_angle_sin(sub, sup) <= tol.angle_sin_threshold()
}

/// True iff the two spans have equal dimension and largest principal angle
/// below the threshold derived from `tol_psd`.
pub fn subspaces_equal(b1: Option<&Matrix>, b2: Option<&Matrix>, tol: &Tolerances) -> bool {
    let d1 = b1.map_or(0, |m| m.cols());
    let d2 = b2.map_or(0, |m| m.cols());
    if d1 != d2 {
        return false;
    }
    if d1 == 0 {
        return true;
    }
    max_principal_angle_sin(b1, b2) <= tol.angle_sin_threshold()
}
