//! Verification suite for the operator-norm / numerical-radius inequality
//! family and the classical vector inequalities underlying it.
//!
//! Every check is a strategy object registered by name: theorem verifiers
//! behind [`TheoremVerifier`], vector lemmas behind [`LemmaCheck`]. Each
//! verifier evaluates in one of two modes: `printed` is the inequality as
//! commonly stated; `corrected` is the reading that the pointwise argument
//! behind it actually supports. For most checks the two coincide; where
//! they differ, both are available so a report can show which form holds.

mod context;
mod lemmas;
mod sweep;
mod theorems;

pub use context::{OperatorContext, Sample};
pub use lemmas::{check_vector_lemma, lemma_by_name, lemma_registry, LemmaCheck};
pub use sweep::{default_sweep_items, sweep, Summary, SweepItem};
pub use theorems::{
    theorem_by_name, theorem_registry, verify_theorem, verify_theorem_in_ctx, TheoremVerifier,
};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Vector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    GrcPower,
    BuzanoRadius,
    DunklWilliams,
    QuadReverse,
    SchwarzRevQuad,
    SchwarzRevLin,
    ParallelogramPower,
    HalfSumNorm,
    DsLower,
}

pub const ALL_THEOREMS: [TheoremId; 9] = [
    TheoremId::GrcPower,
    TheoremId::BuzanoRadius,
    TheoremId::DunklWilliams,
    TheoremId::QuadReverse,
    TheoremId::SchwarzRevQuad,
    TheoremId::SchwarzRevLin,
    TheoremId::ParallelogramPower,
    TheoremId::HalfSumNorm,
    TheoremId::DsLower,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaId {
    GrcVec,
    Buzano,
    DunklWilliamsVec,
    DragomirQuad,
    DragomirR,
    DragomirRrr,
    DsUpper,
    DsLowerVec,
    PowerMean,
}

pub const ALL_LEMMAS: [LemmaId; 9] = [
    LemmaId::GrcVec,
    LemmaId::Buzano,
    LemmaId::DunklWilliamsVec,
    LemmaId::DragomirQuad,
    LemmaId::DragomirR,
    LemmaId::DragomirRrr,
    LemmaId::DsUpper,
    LemmaId::DsLowerVec,
    LemmaId::PowerMean,
];

/// Identifier of a check inside a report; serialized as the kebab-case name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CheckId {
    Theorem(TheoremId),
    Lemma(LemmaId),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Printed,
    Corrected,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Printed => "printed",
            Mode::Corrected => "corrected",
        })
    }
}

/// Scalar parameters of a check. Theorems use the subset they need; absent
/// required values are `BadParams`, except `r` for the conditional reverse
/// Schwarz checks, where a missing `r` resolves to the minimal admissible
/// value `||lambda T* - T||`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct InequalityParams {
    pub r: Option<f64>,
    pub lambda: Option<Complex64>,
    pub mu: Option<Complex64>,
    pub p: Option<f64>,
}

impl InequalityParams {
    pub fn with_r(r: f64) -> Self {
        InequalityParams {
            r: Some(r),
            ..Default::default()
        }
    }

    pub fn with_p(p: f64) -> Self {
        InequalityParams {
            p: Some(p),
            ..Default::default()
        }
    }

    pub fn with_lambda(lambda: Complex64) -> Self {
        InequalityParams {
            lambda: Some(lambda),
            ..Default::default()
        }
    }

    pub(crate) fn req_r(&self) -> Result<f64> {
        match self.r {
            Some(r) if r.is_finite() => Ok(r),
            _ => Err(Error::BadParams("parameter r is required".into())),
        }
    }

    pub(crate) fn req_lambda(&self) -> Result<Complex64> {
        match self.lambda {
            Some(l) if l.re.is_finite() && l.im.is_finite() => Ok(l),
            _ => Err(Error::BadParams("parameter lambda is required".into())),
        }
    }

    pub(crate) fn req_nonzero_lambda(&self) -> Result<Complex64> {
        let l = self.req_lambda()?;
        if l.norm() == 0.0 {
            return Err(Error::BadParams("lambda must be nonzero".into()));
        }
        Ok(l)
    }

    pub(crate) fn req_mu(&self) -> Result<Complex64> {
        match self.mu {
            Some(m) if m.re.is_finite() && m.im.is_finite() => Ok(m),
            _ => Err(Error::BadParams("parameter mu is required".into())),
        }
    }

    pub(crate) fn req_p(&self) -> Result<f64> {
        match self.p {
            Some(p) if p.is_finite() => Ok(p),
            _ => Err(Error::BadParams("parameter p is required".into())),
        }
    }

    /// Compact human-readable form for log lines.
    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        if let Some(r) = self.r {
            parts.push(format!("r={r}"));
        }
        if let Some(l) = self.lambda {
            parts.push(format!("lambda={}", fmt_complex(l)));
        }
        if let Some(m) = self.mu {
            parts.push(format!("mu={}", fmt_complex(m)));
        }
        if let Some(p) = self.p {
            parts.push(format!("p={p}"));
        }
        if parts.is_empty() {
            "-".to_string()
        } else {
            parts.join(" ")
        }
    }
}

pub fn fmt_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.re == 0.0 {
        format!("{}i", z.im)
    } else if z.im < 0.0 {
        format!("{}{}i", z.re, z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

/// Outcome of one inequality check.
///
/// `slack = rhs - lhs`; the check passes when `slack >= -tol_slack`, or
/// vacuously when its preconditions fail (`preconditions_met = false`, in
/// which case `passed` is true but the item counts as vacuous, not passed,
/// in summaries). A witness is attached only to genuine violations for
/// which a unit vector violating the pointwise ancestor inequality was
/// found.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub id: CheckId,
    pub mode: Mode,
    pub params: InequalityParams,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub passed: bool,
    pub preconditions_met: bool,
    pub witness: Option<Vector>,
    pub note: Option<String>,
    pub operator_index: Option<usize>,
}

impl InequalityReport {
    pub(crate) fn evaluated(
        id: CheckId,
        mode: Mode,
        params: InequalityParams,
        lhs: f64,
        rhs: f64,
        preconditions_met: bool,
        tol_slack: f64,
    ) -> Self {
        let slack = rhs - lhs;
        InequalityReport {
            id,
            mode,
            params,
            lhs,
            rhs,
            slack,
            passed: slack >= -tol_slack || !preconditions_met,
            preconditions_met,
            witness: None,
            note: None,
            operator_index: None,
        }
    }

    /// Genuine violation: non-vacuous and negative slack beyond tolerance.
    pub fn is_violation(&self) -> bool {
        self.preconditions_met && !self.passed
    }

    pub fn is_vacuous(&self) -> bool {
        !self.preconditions_met
    }
}
