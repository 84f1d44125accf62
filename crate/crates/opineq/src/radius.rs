//! Numerical radius via the support-function sweep
//! `w(T) = max_theta lambda_max((e^{i theta} T + e^{-i theta} T*)/2)`.
//!
//! A 720-point uniform theta grid locates the best bracket; golden-section
//! refinement narrows it to width 1e-12. The objective is continuous in
//! theta, and the grid is fine enough at desk scale (n <= 32).

use num_complex::Complex64;

use crate::eig::{hermitian_eig, lambda_max_trusted};
use crate::error::Result;
use crate::matrix::{Matrix, Vector};
use crate::tol::Tolerances;

const GRID_POINTS: usize = 720;
const BRACKET_WIDTH: f64 = 1e-12;

fn rotated_hermitian_part(t: &Matrix, t_adj: &Matrix, theta: f64) -> Matrix {
    let phase = Complex64::from_polar(0.5, theta);
    t.scale(phase).add(&t_adj.scale(phase.conj()))
}

/// w(T) = sup { |<Tx, x>| : ||x|| = 1 }.
pub fn numerical_radius(t: &Matrix, tol: &Tolerances) -> Result<f64> {
    let (w, _theta) = sweep_maximum(t, tol)?;
    Ok(w)
}

/// As [`numerical_radius`], also returning the maximizing direction: a unit
/// vector x with |<Tx, x>| = w(T), taken as the top eigenvector at the
/// winning angle.
pub fn numerical_radius_with_vector(t: &Matrix, tol: &Tolerances) -> Result<(f64, Vector)> {
    let (w, theta) = sweep_maximum(t, tol)?;
    let h = rotated_hermitian_part(t, &t.adjoint(), theta);
    let eig = hermitian_eig(&h, tol)?;
    let x = eig.vectors.col(t.rows() - 1);
    Ok((w, x))
}

fn sweep_maximum(t: &Matrix, tol: &Tolerances) -> Result<(f64, f64)> {
    t.require_square()?;
    let t_adj = t.adjoint();
    let objective = |theta: f64| -> Result<f64> {
        lambda_max_trusted(&rotated_hermitian_part(t, &t_adj, theta), tol.tol_eig)
    };

    let step = 2.0 * std::f64::consts::PI / GRID_POINTS as f64;
    let mut best_k = 0usize;
    let mut best = f64::NEG_INFINITY;
    for k in 0..GRID_POINTS {
        let f = objective(k as f64 * step)?;
        if f > best {
            best = f;
            best_k = k;
        }
    }

    // Golden-section refinement on the winning bracket.
    let center = best_k as f64 * step;
    let (mut a, mut b) = (center - step, center + step);
    let invphi = (5.0_f64.sqrt() - 1.0) / 2.0;
    let mut c = b - invphi * (b - a);
    let mut d = a + invphi * (b - a);
    let mut fc = objective(c)?;
    let mut fd = objective(d)?;
    let mut best_theta = center;
    while b - a > BRACKET_WIDTH {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = objective(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = objective(d)?;
        }
    }
    for (theta, f) in [(c, fc), (d, fd)] {
        if f > best {
            best = f;
            best_theta = theta;
        }
    }
    Ok((best, best_theta))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_radius_one() {
        let w = numerical_radius(&Matrix::identity(3), &Tolerances::default()).unwrap();
        assert!((w - 1.0).abs() < 1e-12);
    }

    #[test]
    fn lower_shift_has_radius_half() {
        // |<Tx,x>| = |x1 x2| <= 1/2 with equality on the diagonal circle.
        let t = Matrix::from_real_rows(&[&[0.0, 0.0], &[1.0, 0.0]]);
        let w = numerical_radius(&t, &Tolerances::default()).unwrap();
        assert!((w - 0.5).abs() < 1e-9, "w = {w}");
    }

    #[test]
    fn lower_triangular_ones_has_radius_three_halves() {
        // The field of values is the disk of radius 1/2 centered at 1.
        let t = Matrix::from_real_rows(&[&[1.0, 0.0], &[1.0, 1.0]]);
        let tol = Tolerances::default();
        let w = numerical_radius(&t, &tol).unwrap();
        assert!((w - 1.5).abs() < 1e-9, "w = {w}");

        // Its square has field of values the disk of radius 1 centered at 1.
        let w2 = numerical_radius(&t.mul(&t), &tol).unwrap();
        assert!((w2 - 2.0).abs() < 1e-9, "w2 = {w2}");
    }

    #[test]
    fn maximizer_attains_the_radius() {
        let t = Matrix::from_real_rows(&[&[1.0, 0.0], &[1.0, 1.0]]);
        let tol = Tolerances::default();
        let (w, x) = numerical_radius_with_vector(&t, &tol).unwrap();
        assert!((x.norm() - 1.0).abs() < 1e-12);
        let form = t.apply(&x).inner(&x).norm();
        assert!((form - w).abs() < 1e-9, "form = {form}, w = {w}");
    }

    #[test]
    fn zero_matrix_has_radius_zero() {
        let w = numerical_radius(&Matrix::zeros(2, 2), &Tolerances::default()).unwrap();
        assert_eq!(w, 0.0);
    }

    #[test]
    fn rectangular_input_rejected() {
        let t = Matrix::zeros(2, 3);
        assert!(numerical_radius(&t, &Tolerances::default()).is_err());
    }
}
