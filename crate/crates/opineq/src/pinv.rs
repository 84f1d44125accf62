//! Moore-Penrose pseudo-inverse from the SVD: `T+ = V Sigma+ U*` with
//! reciprocals taken only above the numerical-rank threshold.

use num_complex::Complex64;

use crate::error::Result;
use crate::matrix::Matrix;
use crate::svd::svd;
use crate::tol::Tolerances;

pub fn pseudo_inverse(t: &Matrix, tol: &Tolerances) -> Result<Matrix> {
    let s = svd(t, tol)?;
    let m = t.rows();
    let n = t.cols();
    let mut out = Matrix::zeros(n, m);
    for idx in 0..s.numerical_rank {
        let inv_sigma = 1.0 / s.singular_values[idx];
        let u = s.u.col(idx);
        let v = s.v.col(idx);
        for i in 0..n {
            for j in 0..m {
                out[(i, j)] += Complex64::new(inv_sigma, 0.0) * v.0[i] * u.0[j].conj();
            }
        }
    }
    Ok(out)
}
