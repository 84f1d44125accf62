//! Seeded, reproducible operator ensembles.
//!
//! Each ensemble kind is a strategy behind [`EnsembleKind`], registered by
//! name and selectable at runtime (CLI `--kind`). Generation is a pure
//! function of (kind, dim, count, seed, scale): item `i` draws from the
//! SplitMix64 substream `(seed, i)`, so sequences are reproducible and
//! items are independent.
//!
//! There is deliberately no hyponormal kind: in finite dimensions
//! tr(TT* - T*T) = 0 forces hyponormal operators to be normal, so the class
//! collapses into `normal`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::rng::SplitMix64;
use crate::svd::svd;
use crate::tol::Tolerances;

/// Description of a seeded random-matrix ensemble.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnsembleSpec {
    pub kind: Kind,
    pub dim: usize,
    pub count: usize,
    pub seed: u64,
    #[serde(default = "default_scale")]
    pub scale: f64,
}

fn default_scale() -> f64 {
    1.0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Gaussian,
    Normal,
    Unitary,
    Invertible,
    RankDeficient,
    Diagonal,
}

impl Kind {
    pub fn strategy(self) -> &'static dyn EnsembleKind {
        match self {
            Kind::Gaussian => &GaussianDense,
            Kind::Normal => &NormalKind,
            Kind::Unitary => &UnitaryKind,
            Kind::Invertible => &InvertibleKind,
            Kind::RankDeficient => &RankDeficientEqualKernels,
            Kind::Diagonal => &DiagonalKind,
        }
    }

    pub fn name(self) -> &'static str {
        self.strategy().name()
    }
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// One interchangeable generation strategy.
pub trait EnsembleKind: Sync {
    fn name(&self) -> &'static str;
    /// Draws one operator from the given substream.
    fn generate_one(&self, dim: usize, scale: f64, rng: &mut SplitMix64) -> Matrix;
    fn validate(&self, spec: &EnsembleSpec) -> Result<()> {
        let _ = spec;
        Ok(())
    }
}

pub const KIND_REGISTRY: [Kind; 6] = [
    Kind::Gaussian,
    Kind::Normal,
    Kind::Unitary,
    Kind::Invertible,
    Kind::RankDeficient,
    Kind::Diagonal,
];

pub fn kind_by_name(name: &str) -> Option<Kind> {
    KIND_REGISTRY.iter().copied().find(|k| k.name() == name)
}

/// i.i.d. standard complex Gaussian entries.
struct GaussianDense;
impl EnsembleKind for GaussianDense {
    fn name(&self) -> &'static str {
        "gaussian"
    }
    fn generate_one(&self, dim: usize, scale: f64, rng: &mut SplitMix64) -> Matrix {
        rng.gaussian_matrix(dim, dim, scale)
    }
}

/// U D U* with Haar-like U and complex Gaussian diagonal D.
struct NormalKind;
impl EnsembleKind for NormalKind {
    fn name(&self) -> &'static str {
        "normal"
    }
    fn generate_one(&self, dim: usize, scale: f64, rng: &mut SplitMix64) -> Matrix {
        let u = haar_unitary(dim, rng);
        let d = Matrix::diag(
            &(0..dim)
                .map(|_| rng.next_complex_gaussian() * scale)
                .collect::<Vec<_>>(),
        );
        u.mul(&d).mul(&u.adjoint())
    }
}

/// QR of a Ginibre draw with the R-diagonal phases folded into Q.
struct UnitaryKind;
impl EnsembleKind for UnitaryKind {
    fn name(&self) -> &'static str {
        "unitary"
    }
    fn generate_one(&self, dim: usize, _scale: f64, rng: &mut SplitMix64) -> Matrix {
        haar_unitary(dim, rng)
    }
}

/// Gaussian draws resampled until sigma_min > 1e-3 sigma_max.
struct InvertibleKind;
impl EnsembleKind for InvertibleKind {
    fn name(&self) -> &'static str {
        "invertible"
    }
    fn generate_one(&self, dim: usize, scale: f64, rng: &mut SplitMix64) -> Matrix {
        let tol = Tolerances::default();
        loop {
            let m = rng.gaussian_matrix(dim, dim, scale);
            let s = svd(&m, &tol).expect("gaussian draw is finite");
            let smax = s.sigma_max();
            let smin = s.singular_values.last().copied().unwrap_or(0.0);
            if smax > 0.0 && smin > 1e-3 * smax {
                return m;
            }
        }
    }
}

/// U blockdiag(C, 0) U* with invertible Gaussian C; this forces
/// ker(T) = ker(T*) by construction.
struct RankDeficientEqualKernels;
impl EnsembleKind for RankDeficientEqualKernels {
    fn name(&self) -> &'static str {
        "rank-deficient"
    }
    fn generate_one(&self, dim: usize, scale: f64, rng: &mut SplitMix64) -> Matrix {
        if dim == 1 {
            return Matrix::zeros(1, 1);
        }
        let rank = 1 + rng.next_index(dim - 1);
        let c = InvertibleKind.generate_one(rank, scale, rng);
        let mut block = Matrix::zeros(dim, dim);
        for i in 0..rank {
            for j in 0..rank {
                block[(i, j)] = c[(i, j)];
            }
        }
        let u = haar_unitary(dim, rng);
        u.mul(&block).mul(&u.adjoint())
    }
}

/// Random complex diagonal (normal by construction).
struct DiagonalKind;
impl EnsembleKind for DiagonalKind {
    fn name(&self) -> &'static str {
        "diagonal"
    }
    fn generate_one(&self, dim: usize, scale: f64, rng: &mut SplitMix64) -> Matrix {
        Matrix::diag(
            &(0..dim)
                .map(|_| rng.next_complex_gaussian() * scale)
                .collect::<Vec<_>>(),
        )
    }
}

/// Haar-like unitary: modified Gram-Schmidt QR of a Ginibre matrix with a
/// second orthogonalization pass, columns rescaled so the R diagonal is
/// positive.
fn haar_unitary(dim: usize, rng: &mut SplitMix64) -> Matrix {
    loop {
        let g = rng.gaussian_matrix(dim, dim, 1.0);
        let mut cols: Vec<Vector> = Vec::with_capacity(dim);
        let mut phases: Vec<Complex64> = Vec::with_capacity(dim);
        let mut ok = true;
        for j in 0..dim {
            let mut w = g.col(j);
            for _ in 0..2 {
                for c in &cols {
                    let coeff = w.inner(c);
                    w = w.sub(&c.scale(coeff));
                }
            }
            // Diagonal R entry before normalization: <g_j, q_j>; its phase
            // is folded into the column for Haar distribution.
            let norm = w.norm();
            if norm < 1e-10 {
                ok = false;
                break;
            }
            let q = w.scale_re(1.0 / norm);
            let r_jj = g.col(j).inner(&q);
            let phase = if r_jj.norm() > 0.0 {
                r_jj / r_jj.norm()
            } else {
                Complex64::new(1.0, 0.0)
            };
            phases.push(phase);
            cols.push(q);
        }
        if !ok {
            continue;
        }
        let mut u = Matrix::from_cols(dim, &cols).expect("dim >= 1");
        for j in 0..dim {
            let ph = phases[j];
            for i in 0..dim {
                u[(i, j)] *= ph;
            }
        }
        return u;
    }
}

/// Deterministic generation: item `i` uses the substream `(seed, i)`.
pub fn generate(spec: &EnsembleSpec) -> Result<Vec<Matrix>> {
    validate_spec(spec)?;
    let strategy = spec.kind.strategy();
    Ok((0..spec.count)
        .map(|i| {
            let mut rng = SplitMix64::substream(spec.seed, i as u64);
            strategy.generate_one(spec.dim, spec.scale, &mut rng)
        })
        .collect())
}

fn validate_spec(spec: &EnsembleSpec) -> Result<()> {
    if spec.dim < 1 {
        return Err(Error::BadSpec("dim must be >= 1".into()));
    }
    if spec.count < 1 {
        return Err(Error::BadSpec("count must be >= 1".into()));
    }
    if !(spec.scale > 0.0 && spec.scale.is_finite()) {
        return Err(Error::BadSpec(format!(
            "scale must be positive and finite, got {}",
            spec.scale
        )));
    }
    spec.kind.strategy().validate(spec)
}

/// Deterministic unit vectors: item `i` draws from substream `(seed, i)`.
pub fn random_unit_vectors(dim: usize, count: usize, seed: u64) -> Result<Vec<Vector>> {
    if dim < 1 {
        return Err(Error::BadSpec("dim must be >= 1".into()));
    }
    Ok((0..count)
        .map(|i| SplitMix64::substream(seed, i as u64).unit_vector(dim))
        .collect())
}
