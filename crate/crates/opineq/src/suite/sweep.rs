//! Batch evaluation of theorem checks over seeded ensembles.

use serde::{Deserialize, Serialize};

use crate::ensemble::{generate, EnsembleSpec};
use crate::error::Result;
use crate::tol::Tolerances;

use super::context::OperatorContext;
use super::theorems::verify_theorem_in_ctx;
use super::{CheckId, InequalityParams, InequalityReport, Mode, TheoremId};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepItem {
    pub theorem: TheoremId,
    pub params: InequalityParams,
    pub mode: Mode,
}

/// Expands the per-theorem default parameter grids into sweep items.
pub fn default_sweep_items(theorems: &[TheoremId], mode: Mode) -> Vec<SweepItem> {
    let mut items = Vec::new();
    for &theorem in theorems {
        for params in theorem.verifier().default_grid() {
            items.push(SweepItem {
                theorem,
                params,
                mode,
            });
        }
    }
    items
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub vacuous: usize,
}

impl Summary {
    pub fn tally(reports: &[InequalityReport]) -> Summary {
        let mut s = Summary {
            passed: 0,
            failed: 0,
            vacuous: 0,
        };
        for r in reports {
            if r.is_vacuous() {
                s.vacuous += 1;
            } else if r.passed {
                s.passed += 1;
            } else {
                s.failed += 1;
            }
        }
        s
    }

    pub fn has_violation(&self) -> bool {
        self.failed > 0
    }
}

/// One report per (operator, item) pair, ordered by operator then item.
/// Per-item evaluation errors become failed reports carrying the error text;
/// the batch never aborts.
pub fn sweep(
    spec: &EnsembleSpec,
    items: &[SweepItem],
    tol: &Tolerances,
) -> Result<Vec<InequalityReport>> {
    let operators = generate(spec)?;
    let mut reports = Vec::with_capacity(operators.len() * items.len());
    for (index, operator) in operators.into_iter().enumerate() {
        let ctx = OperatorContext::new(operator, *tol)?;
        for item in items {
            let mut report =
                match verify_theorem_in_ctx(item.theorem, &ctx, &item.params, item.mode) {
                    Ok(rep) => rep,
                    Err(e) => {
                        let mut rep = InequalityReport::evaluated(
                            CheckId::Theorem(item.theorem),
                            item.mode,
                            item.params,
                            0.0,
                            0.0,
                            true,
                            tol.tol_slack,
                        );
                        rep.passed = false;
                        rep.note = Some(format!("error: {e}"));
                        rep
                    }
                };
            report.operator_index = Some(index);
            reports.push(report);
        }
    }
    Ok(reports)
}
