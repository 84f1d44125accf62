//! Tightest (alpha, beta)-normality constants.
//!
//! An operator is (alpha, beta)-normal (0 <= alpha <= 1 <= beta) when
//! `alpha^2 T*T <= TT* <= beta^2 T*T` in the Loewner order; in finite
//! dimensions such constants exist iff ker(T) = ker(T*). The tightest
//! squared constants are the extreme values of the Rayleigh ratio
//! `||T*x||^2 / ||Tx||^2` over ran(T*) \ {0}, computed here as the extreme
//! eigenvalues of `C^{-1/2} B C^{-1/2}` where, with W an orthonormal basis
//! of ran(T*), `B = W*(TT*)W` and `C = W*(T*T)W` (C is positive definite on
//! that subspace). The trace identity tr(TT*) = tr(T*T) forces
//! alpha^2 <= 1 <= beta^2.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::eig::hermitian_eig;
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::psd::is_psd;
use crate::subspace::subspaces_equal;
use crate::svd::svd;
use crate::tol::Tolerances;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlphaBetaCertificate {
    pub alpha_sq: f64,
    pub beta_sq: f64,
    /// Unit vector attaining the minimal Rayleigh ratio alpha_sq.
    pub minimizing_vector: Vector,
    /// Unit vector attaining the maximal Rayleigh ratio beta_sq.
    pub maximizing_vector: Vector,
}

impl AlphaBetaCertificate {
    pub fn alpha(&self) -> f64 {
        self.alpha_sq.max(0.0).sqrt()
    }

    pub fn beta(&self) -> f64 {
        self.beta_sq.max(0.0).sqrt()
    }
}

/// Computes the tightest constants, or fails with [`Error::KernelMismatch`]
/// when no finite certificate exists, [`Error::ZeroOperator`] on T = 0.
pub fn tightest_alpha_beta(t: &Matrix, tol: &Tolerances) -> Result<AlphaBetaCertificate> {
    t.require_square()?;
    let n = t.rows();
    let decomp = svd(t, tol)?;
    let rank = decomp.numerical_rank;
    if rank == 0 {
        return Err(Error::ZeroOperator);
    }
    if rank < n {
        let ker_cols: Vec<Vector> = (rank..n).map(|j| decomp.v.col(j)).collect();
        let coker_cols: Vec<Vector> = (rank..n).map(|j| decomp.u.col(j)).collect();
        let ker = Matrix::from_cols(n, &ker_cols);
        let coker = Matrix::from_cols(n, &coker_cols);
        if !subspaces_equal(ker.as_ref(), coker.as_ref(), tol) {
            return Err(Error::KernelMismatch);
        }
    }

    // W: orthonormal basis of ran(T*) = right singular vectors above the
    // rank threshold.
    let w_cols: Vec<Vector> = (0..rank).map(|j| decomp.v.col(j)).collect();
    let w = Matrix::from_cols(n, &w_cols).expect("rank >= 1");

    let tts = t.mul(&t.adjoint());
    let tst = t.adjoint().mul(t);
    let b = w.adjoint().mul(&tts).mul(&w);
    let c = w.adjoint().mul(&tst).mul(&w);

    let c_eig = hermitian_eig(&c, tol)?;
    // C is positive definite on ran(T*): its smallest eigenvalue is the
    // squared smallest retained singular value.
    let floor = (decomp.rank_threshold * decomp.rank_threshold).max(f64::MIN_POSITIVE);
    let inv_sqrt: Vec<Complex64> = c_eig
        .values
        .iter()
        .map(|&lam| Complex64::new(1.0 / lam.max(floor).sqrt(), 0.0))
        .collect();
    let c_inv_half = c_eig
        .vectors
        .mul(&Matrix::diag(&inv_sqrt))
        .mul(&c_eig.vectors.adjoint());

    let m = c_inv_half.mul(&b).mul(&c_inv_half).hermitian_part();
    let m_eig = hermitian_eig(&m, tol)?;
    let alpha_sq = m_eig.values[0];
    let beta_sq = m_eig.values[rank - 1];

    let lift = |z: Vector| -> Vector {
        let y = c_inv_half.mul(&Matrix::from_cols(rank, &[z]).expect("one column"));
        let x = w.mul(&y).col(0);
        x.normalized().expect("nonzero by construction")
    };
    let minimizing_vector = lift(m_eig.vectors.col(0));
    let maximizing_vector = lift(m_eig.vectors.col(rank - 1));

    Ok(AlphaBetaCertificate {
        alpha_sq,
        beta_sq,
        minimizing_vector,
        maximizing_vector,
    })
}

/// Loewner-order test of (alpha, beta)-normality at given constants:
/// `is_psd(TT* - alpha^2 T*T) && is_psd(beta^2 T*T - TT*)`.
pub fn is_ab_normal(t: &Matrix, alpha: f64, beta: f64, tol: &Tolerances) -> Result<bool> {
    t.require_square()?;
    if !(0.0..=1.0).contains(&alpha) || beta < 1.0 {
        return Err(Error::BadParams(format!(
            "need 0 <= alpha <= 1 <= beta, got alpha={alpha}, beta={beta}"
        )));
    }
    let tts = t.mul(&t.adjoint());
    let tst = t.adjoint().mul(t);
    let lower = tts.sub(&tst.scale_re(alpha * alpha));
    let upper = tst.scale_re(beta * beta).sub(&tts);
    Ok(is_psd(&lower, tol)? && is_psd(&upper, tol)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rayleigh_ratio(t: &Matrix, x: &Vector) -> f64 {
        let num = t.adjoint().apply(x).norm().powi(2);
        let den = t.apply(x).norm().powi(2);
        num / den
    }

    #[test]
    fn lower_triangular_ones_certificate() {
        let t = Matrix::from_real_rows(&[&[1.0, 0.0], &[1.0, 1.0]]);
        let tol = Tolerances::default();
        let cert = tightest_alpha_beta(&t, &tol).unwrap();
        let lo = (3.0 - 5.0_f64.sqrt()) / 2.0;
        let hi = (3.0 + 5.0_f64.sqrt()) / 2.0;
        assert!((cert.alpha_sq - lo).abs() < 1e-12, "alpha_sq {}", cert.alpha_sq);
        assert!((cert.beta_sq - hi).abs() < 1e-12, "beta_sq {}", cert.beta_sq);
        // The witnesses attain the extreme Rayleigh ratios.
        assert!((rayleigh_ratio(&t, &cert.minimizing_vector) - lo).abs() < 1e-10);
        assert!((rayleigh_ratio(&t, &cert.maximizing_vector) - hi).abs() < 1e-10);
    }

    #[test]
    fn normal_matrix_has_unit_certificate() {
        let d = Matrix::diag(&[Complex64::new(1.0, 0.0), Complex64::new(0.0, 2.0)]);
        let cert = tightest_alpha_beta(&d, &Tolerances::default()).unwrap();
        assert!((cert.alpha_sq - 1.0).abs() < 1e-12);
        assert!((cert.beta_sq - 1.0).abs() < 1e-12);
    }

    #[test]
    fn nilpotent_shift_has_no_certificate() {
        let t = Matrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]);
        assert_eq!(
            tightest_alpha_beta(&t, &Tolerances::default()).unwrap_err(),
            Error::KernelMismatch
        );
    }

    #[test]
    fn zero_operator_rejected() {
        assert_eq!(
            tightest_alpha_beta(&Matrix::zeros(2, 2), &Tolerances::default()).unwrap_err(),
            Error::ZeroOperator
        );
    }

    #[test]
    fn rank_deficient_with_equal_kernels_straddles_one() {
        // blockdiag(C, 0) with C = [[1,0],[1,1]]: kernels coincide.
        let t = Matrix::from_real_rows(&[
            &[1.0, 0.0, 0.0],
            &[1.0, 1.0, 0.0],
            &[0.0, 0.0, 0.0],
        ]);
        let cert = tightest_alpha_beta(&t, &Tolerances::default()).unwrap();
        assert!(cert.alpha_sq <= 1.0 + 1e-12 && cert.beta_sq >= 1.0 - 1e-12);
        let lo = (3.0 - 5.0_f64.sqrt()) / 2.0;
        assert!((cert.alpha_sq - lo).abs() < 1e-10);
    }

    #[test]
    fn loewner_test_matches_certificate() {
        let t = Matrix::from_real_rows(&[&[1.0, 0.0], &[1.0, 1.0]]);
        let tol = Tolerances::default();
        let alpha = ((3.0 - 5.0_f64.sqrt()) / 2.0).sqrt();
        let beta = ((3.0 + 5.0_f64.sqrt()) / 2.0).sqrt();
        assert!(is_ab_normal(&t, alpha, beta, &tol).unwrap());
        // The matrix is not normal, so (1, 1) fails.
        assert!(!is_ab_normal(&t, 1.0, 1.0, &tol).unwrap());
        assert!(is_ab_normal(&Matrix::identity(2), 1.0, 1.0, &tol).unwrap());
        // Slightly inside the tight constants fails on both sides.
        assert!(!is_ab_normal(&t, alpha + 1e-3, beta, &tol).unwrap());
        assert!(!is_ab_normal(&t, alpha, (beta * beta - 1e-3).sqrt(), &tol).unwrap());
    }
}
