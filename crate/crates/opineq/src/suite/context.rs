//! Per-operator evaluation context with cached certified quantities and a
//! deterministic unit-vector search set.

use std::cell::OnceCell;

use crate::certify::{tightest_alpha_beta, AlphaBetaCertificate};
use crate::eig::hermitian_eig;
use crate::error::Result;
use crate::matrix::{Matrix, Vector};
use crate::radius::numerical_radius_with_vector;
use crate::rng::SplitMix64;
use crate::svd::{operator_norm, svd};
use crate::tol::Tolerances;

/// Number of seeded random unit vectors in the pointwise search set, on top
/// of the structured candidates (radius maximizers, singular vectors,
/// eigenvectors of the Hermitian and skew parts, standard basis).
pub const SEARCH_SET_RANDOM: usize = 10_000;

/// Fixed seed for the random part of the search set, so reports are
/// reproducible run to run.
const SEARCH_SEED: u64 = 0x5EED_0CA5_7001_9E3A;

/// A unit vector with the operator images cached for pointwise evaluation.
#[derive(Debug, Clone)]
pub struct Sample {
    pub x: Vector,
    /// T x
    pub tx: Vector,
    /// T* x
    pub tax: Vector,
    pub norm_tx: f64,
    pub norm_tax: f64,
    /// |<T x, x>|
    pub txx_abs: f64,
    /// |<T^2 x, x>|
    pub t2xx_abs: f64,
}

impl Sample {
    fn new(t: &Matrix, t_adj: &Matrix, x: Vector) -> Sample {
        let tx = t.apply(&x);
        let tax = t_adj.apply(&x);
        let t2x = t.apply(&tx);
        Sample {
            norm_tx: tx.norm(),
            norm_tax: tax.norm(),
            txx_abs: tx.inner(&x).norm(),
            t2xx_abs: t2x.inner(&x).norm(),
            x,
            tx,
            tax,
        }
    }
}

pub struct OperatorContext {
    pub t: Matrix,
    pub t_adj: Matrix,
    pub t_sq: Matrix,
    pub tol: Tolerances,
    search_random: usize,
    cert: OnceCell<Result<AlphaBetaCertificate>>,
    op_norm: OnceCell<f64>,
    radius: OnceCell<Result<(f64, Vector)>>,
    radius_sq: OnceCell<Result<(f64, Vector)>>,
    sigma_min: OnceCell<Result<f64>>,
    norm_sum: OnceCell<f64>,
    norm_diff: OnceCell<f64>,
    samples: OnceCell<Result<Vec<Sample>>>,
}

impl OperatorContext {
    pub fn new(t: Matrix, tol: Tolerances) -> Result<Self> {
        t.require_square()?;
        t.check_finite()?;
        Ok(OperatorContext {
            t_adj: t.adjoint(),
            t_sq: t.mul(&t),
            t,
            tol,
            search_random: SEARCH_SET_RANDOM,
            cert: OnceCell::new(),
            op_norm: OnceCell::new(),
            radius: OnceCell::new(),
            radius_sq: OnceCell::new(),
            sigma_min: OnceCell::new(),
            norm_sum: OnceCell::new(),
            norm_diff: OnceCell::new(),
            samples: OnceCell::new(),
        })
    }

    /// Smaller random search set; tests use this to keep runtimes down.
    pub fn with_search_size(mut self, n: usize) -> Self {
        self.search_random = n;
        self
    }

    pub fn dim(&self) -> usize {
        self.t.rows()
    }

    pub fn certificate(&self) -> Result<&AlphaBetaCertificate> {
        self.cert
            .get_or_init(|| tightest_alpha_beta(&self.t, &self.tol))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn op_norm(&self) -> f64 {
        *self.op_norm.get_or_init(|| operator_norm(&self.t))
    }

    pub fn radius(&self) -> Result<f64> {
        self.radius
            .get_or_init(|| numerical_radius_with_vector(&self.t, &self.tol))
            .as_ref()
            .map(|(w, _)| *w)
            .map_err(Clone::clone)
    }

    pub fn radius_of_square(&self) -> Result<f64> {
        self.radius_sq
            .get_or_init(|| numerical_radius_with_vector(&self.t_sq, &self.tol))
            .as_ref()
            .map(|(w, _)| *w)
            .map_err(Clone::clone)
    }

    /// Smallest singular value of T (equals that of T*).
    pub fn sigma_min(&self) -> Result<f64> {
        self.sigma_min
            .get_or_init(|| {
                svd(&self.t, &self.tol)
                    .map(|s| s.singular_values.last().copied().unwrap_or(0.0))
            })
            .clone()
    }

    /// ||T + T*||
    pub fn norm_sum(&self) -> f64 {
        *self
            .norm_sum
            .get_or_init(|| operator_norm(&self.t.add(&self.t_adj)))
    }

    /// ||T - T*||
    pub fn norm_diff(&self) -> f64 {
        *self
            .norm_diff
            .get_or_init(|| operator_norm(&self.t.sub(&self.t_adj)))
    }

    /// Deterministic unit-vector search set with cached operator images.
    pub fn samples(&self) -> Result<&[Sample]> {
        self.samples
            .get_or_init(|| self.build_samples())
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    fn build_samples(&self) -> Result<Vec<Sample>> {
        let n = self.dim();
        let mut xs: Vec<Vector> = Vec::new();

        if let Ok((_, x)) = self
            .radius
            .get_or_init(|| numerical_radius_with_vector(&self.t, &self.tol))
        {
            xs.push(x.clone());
        }
        if let Ok((_, x)) = self
            .radius_sq
            .get_or_init(|| numerical_radius_with_vector(&self.t_sq, &self.tol))
        {
            xs.push(x.clone());
        }

        let decomp = svd(&self.t, &self.tol)?;
        for j in 0..n {
            xs.push(decomp.u.col(j));
            xs.push(decomp.v.col(j));
        }
        let herm_eig = hermitian_eig(&self.t.hermitian_part(), &self.tol)?;
        // Skew part mapped to a Hermitian matrix: (T - T*) / (2i).
        let skew = self
            .t
            .sub(&self.t_adj)
            .scale(num_complex::Complex64::new(0.0, -0.5));
        let skew_eig = hermitian_eig(&skew, &self.tol)?;
        for j in 0..n {
            xs.push(herm_eig.vectors.col(j));
            xs.push(skew_eig.vectors.col(j));
        }
        for k in 0..n {
            xs.push(Vector::basis(n, k));
        }
        let mut rng = SplitMix64::new(SEARCH_SEED);
        for _ in 0..self.search_random {
            xs.push(rng.unit_vector(n));
        }

        Ok(xs
            .into_iter()
            .map(|x| Sample::new(&self.t, &self.t_adj, x))
            .collect())
    }
}
