use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Numeric policy for all floating-point decisions.
///
/// The inequalities under test are exact statements; every comparison made in
/// floating point therefore carries an explicit slack from this struct.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Eigensolver / decomposition residual scale (relative).
    pub tol_eig: f64,
    /// Allowed negative part in positive-semidefiniteness tests (relative).
    pub tol_psd: f64,
    /// Numerical-rank cutoff factor: sigma > max(rows,cols) * sigma_max * tol_rank_factor.
    pub tol_rank_factor: f64,
    /// Allowed negative slack when an inequality check is declared passed.
    pub tol_slack: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            tol_eig: 1e-12,
            tol_psd: 1e-10,
            tol_rank_factor: 1e-12,
            tol_slack: 1e-8,
        }
    }
}

impl Tolerances {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("tol_eig", self.tol_eig),
            ("tol_psd", self.tol_psd),
            ("tol_rank_factor", self.tol_rank_factor),
            ("tol_slack", self.tol_slack),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::BadParams(format!(
                    "{name} must be strictly positive and finite, got {v}"
                )));
            }
        }
        Ok(())
    }

    /// Largest principal angle (as a sine) below which two subspaces are
    /// considered equal; derived from the PSD slack.
    pub fn angle_sin_threshold(&self) -> f64 {
        self.tol_psd.sqrt()
    }
}
