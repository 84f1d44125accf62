//! Hermitian eigendecomposition by cyclic Jacobi with complex rotations.
//!
//! Each pivot (p,q) is annihilated by the unitary plane rotation
//! `V = [[c, -s e^{i phi}], [s e^{-i phi}, c]]` where `a_pq = |a_pq| e^{i phi}`
//! and `t = tan(theta)` is the smaller-magnitude root of
//! `t^2 - 2 tau t - 1 = 0`, `tau = (a_qq - a_pp) / (2 |a_pq|)`.
//! Sweeps stop once the off-diagonal Frobenius mass drops below
//! `tol_eig * ||A||_F`, with a hard cap of [`MAX_SWEEPS`] sweeps.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::tol::Tolerances;

pub const MAX_SWEEPS: usize = 100;

/// Eigenvalues ascending; eigenvectors as the columns of a unitary matrix.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: Matrix,
}

/// Full eigendecomposition of a (numerically) Hermitian matrix.
///
/// The input is symmetrized to (A + A*)/2 before solving; inputs whose
/// deviation from the adjoint exceeds `tol_eig * ||A||_F` are rejected.
pub fn hermitian_eig(a: &Matrix, tol: &Tolerances) -> Result<HermitianEigen> {
    check_hermitian(a, tol)?;
    let h = a.hermitian_part();
    let (values, vectors) = jacobi(&h, tol.tol_eig, true)?;
    Ok(HermitianEigen {
        values,
        vectors: vectors.expect("vectors requested"),
    })
}

/// Eigenvalues only (ascending); cheaper, no accumulation of rotations.
pub fn hermitian_eigenvalues(a: &Matrix, tol: &Tolerances) -> Result<Vec<f64>> {
    check_hermitian(a, tol)?;
    let h = a.hermitian_part();
    let (values, _) = jacobi(&h, tol.tol_eig, false)?;
    Ok(values)
}

/// Largest eigenvalue of a Hermitian matrix the caller trusts; used in the
/// hot path of the numerical-radius sweep where the combination
/// (e^{i theta} T + e^{-i theta} T*)/2 is Hermitian by construction.
pub(crate) fn lambda_max_trusted(h: &Matrix, tol_eig: f64) -> Result<f64> {
    let (values, _) = jacobi(h, tol_eig, false)?;
    Ok(*values.last().expect("nonempty"))
}

fn check_hermitian(a: &Matrix, tol: &Tolerances) -> Result<()> {
    a.require_square()?;
    let scale = a.frobenius_norm();
    let deviation = a.sub(&a.adjoint()).frobenius_norm();
    let allowed = tol.tol_eig * scale.max(1e-300);
    if deviation > allowed && scale > 0.0 {
        return Err(Error::NotHermitian { deviation, allowed });
    }
    Ok(())
}

fn off_diagonal_mass(a: &Matrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

fn jacobi(h: &Matrix, tol_eig: f64, with_vectors: bool) -> Result<(Vec<f64>, Option<Matrix>)> {
    let n = h.rows();
    let mut a = h.clone();
    let mut q = if with_vectors {
        Some(Matrix::identity(n))
    } else {
        None
    };
    let scale = h.frobenius_norm();
    let target = tol_eig * scale;

    let mut converged = scale == 0.0 || n == 1;
    if !converged {
        for _sweep in 0..MAX_SWEEPS {
            if off_diagonal_mass(&a) <= target {
                converged = true;
                break;
            }
            for p in 0..n - 1 {
                for r in p + 1..n {
                    rotate(&mut a, q.as_mut(), p, r);
                }
            }
        }
        if !converged && off_diagonal_mass(&a) <= target {
            converged = true;
        }
    }
    if !converged {
        return Err(Error::NoConvergence(MAX_SWEEPS));
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    order.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).expect("finite"));
    let values: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let vectors = q.map(|qm| {
        let mut sorted = Matrix::zeros(n, n);
        for (new_j, &old_j) in order.iter().enumerate() {
            for i in 0..n {
                sorted[(i, new_j)] = qm[(i, old_j)];
            }
        }
        sorted
    });
    Ok((values, vectors))
}

fn rotate(a: &mut Matrix, q: Option<&mut Matrix>, p: usize, r: usize) {
    let apr = a[(p, r)];
    let mag = apr.norm();
    if mag == 0.0 {
        return;
    }
    let phase = apr / mag; // e^{i phi}
    let alpha = a[(p, p)].re;
    let gamma = a[(r, r)].re;
    let tau = (gamma - alpha) / (2.0 * mag);
    // Smaller-magnitude root of t^2 - 2 tau t - 1 = 0.
    let t = if tau >= 0.0 {
        -1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = c * t;

    let n = a.rows();
    // A <- V* A (rows p, r).
    for j in 0..n {
        let apj = a[(p, j)];
        let arj = a[(r, j)];
        a[(p, j)] = c * apj + s * phase * arj;
        a[(r, j)] = -s * phase.conj() * apj + c * arj;
    }
    // A <- A V (columns p, r).
    for i in 0..n {
        let aip = a[(i, p)];
        let air = a[(i, r)];
        a[(i, p)] = c * aip + s * phase.conj() * air;
        a[(i, r)] = -s * phase * aip + c * air;
    }
    // The pivot is annihilated exactly; diagonals are real by construction.
    a[(p, r)] = Complex64::new(0.0, 0.0);
    a[(r, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(r, r)] = Complex64::new(a[(r, r)].re, 0.0);

    if let Some(q) = q {
        for i in 0..n {
            let qip = q[(i, p)];
            let qir = q[(i, r)];
            q[(i, p)] = c * qip + s * phase.conj() * qir;
            q[(i, r)] = -s * phase * qip + c * qir;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn residuals(a: &Matrix, eig: &HermitianEigen) -> (f64, f64) {
        let n = a.rows();
        let q = &eig.vectors;
        let lam = Matrix::diag(
            &eig.values
                .iter()
                .map(|&v| Complex64::new(v, 0.0))
                .collect::<Vec<_>>(),
        );
        let recon = q.mul(&lam).mul(&q.adjoint());
        let r1 = a.sub(&recon).frobenius_norm();
        let r2 = q.adjoint().mul(q).sub(&Matrix::identity(n)).frobenius_norm();
        (r1, r2)
    }

    #[test]
    fn diagonal_matrix_eigenvalues_ascend() {
        let a = Matrix::from_real_rows(&[&[3.0, 0.0], &[0.0, 1.0]]);
        let eig = hermitian_eig(&a, &Tolerances::default()).unwrap();
        assert_eq!(eig.values, vec![1.0, 3.0]);
    }

    #[test]
    fn gram_matrix_of_lower_triangular_ones() {
        // Eigenvalues of [[2,1],[1,1]] are the roots of x^2 - 3x + 1.
        let a = Matrix::from_real_rows(&[&[2.0, 1.0], &[1.0, 1.0]]);
        let eig = hermitian_eig(&a, &Tolerances::default()).unwrap();
        let lo = (3.0 - 5.0_f64.sqrt()) / 2.0;
        let hi = (3.0 + 5.0_f64.sqrt()) / 2.0;
        assert!((eig.values[0] - lo).abs() < 1e-14);
        assert!((eig.values[1] - hi).abs() < 1e-14);
        let (r1, r2) = residuals(&a, &eig);
        assert!(r1 < 1e-14 && r2 < 1e-14, "residuals {r1} {r2}");
    }

    #[test]
    fn symmetric_swap_has_plus_minus_one() {
        let a = Matrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]);
        let eig = hermitian_eig(&a, &Tolerances::default()).unwrap();
        assert!((eig.values[0] + 1.0).abs() < 1e-14);
        assert!((eig.values[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn complex_hermitian_pauli_y() {
        let a = Matrix::new(
            2,
            2,
            vec![
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, -1.0),
                Complex64::new(0.0, 1.0),
                Complex64::new(0.0, 0.0),
            ],
        )
        .unwrap();
        let eig = hermitian_eig(&a, &Tolerances::default()).unwrap();
        assert!((eig.values[0] + 1.0).abs() < 1e-14);
        assert!((eig.values[1] - 1.0).abs() < 1e-14);
        let (r1, r2) = residuals(&a, &eig);
        assert!(r1 < 1e-14 && r2 < 1e-14);
    }

    #[test]
    fn rejects_non_hermitian_input() {
        let a = Matrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]);
        assert!(matches!(
            hermitian_eig(&a, &Tolerances::default()),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn zero_matrix_converges_immediately() {
        let a = Matrix::zeros(3, 3);
        let eig = hermitian_eig(&a, &Tolerances::default()).unwrap();
        assert_eq!(eig.values, vec![0.0; 3]);
        assert_eq!(eig.vectors, Matrix::identity(3));
    }
}
