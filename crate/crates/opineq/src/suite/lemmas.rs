//! Classical vector-level inequalities used in the operator proofs.
//!
//! Every check reports lhs, rhs and slack like the operator verifiers.
//! Data-dependent hypotheses (norm ordering, closeness bounds, nonzero
//! vectors) are enforced and recorded: a tuple that misses a hypothesis is
//! a vacuous pass, never an error; malformed parameters (p out of range,
//! lambda = 0) are `BadParams`.

use crate::error::{Error, Result};
use crate::matrix::Vector;
use crate::tol::Tolerances;

use super::{CheckId, InequalityParams, InequalityReport, LemmaId, Mode};

/// Norms below this are treated as the zero vector by hypothesis guards.
const ZERO_NORM: f64 = 1e-300;

pub trait LemmaCheck: Sync {
    fn id(&self) -> LemmaId;
    fn name(&self) -> &'static str;
    /// Evaluates the lemma at the pair (a, b); `e` is the extra unit vector
    /// required by the Buzano check and ignored elsewhere.
    fn evaluate(
        &self,
        a: &Vector,
        b: &Vector,
        e: Option<&Vector>,
        params: &InequalityParams,
        tol: &Tolerances,
    ) -> Result<InequalityReport>;
}

static GRC_VEC: GrcVec = GrcVec;
static BUZANO: Buzano = Buzano;
static DUNKL_WILLIAMS_VEC: DunklWilliamsVec = DunklWilliamsVec;
static DRAGOMIR_QUAD: DragomirQuad = DragomirQuad;
static DRAGOMIR_R: DragomirR = DragomirR;
static DRAGOMIR_RRR: DragomirRrr = DragomirRrr;
static DS_UPPER: DsUpper = DsUpper;
static DS_LOWER_VEC: DsLowerVec = DsLowerVec;
static POWER_MEAN: PowerMean = PowerMean;

static REGISTRY: [&dyn LemmaCheck; 9] = [
    &GRC_VEC,
    &BUZANO,
    &DUNKL_WILLIAMS_VEC,
    &DRAGOMIR_QUAD,
    &DRAGOMIR_R,
    &DRAGOMIR_RRR,
    &DS_UPPER,
    &DS_LOWER_VEC,
    &POWER_MEAN,
];

pub fn lemma_registry() -> &'static [&'static dyn LemmaCheck] {
    &REGISTRY
}

pub fn lemma_by_name(name: &str) -> Option<&'static dyn LemmaCheck> {
    lemma_registry().iter().copied().find(|l| l.name() == name)
}

impl LemmaId {
    pub fn check(self) -> &'static dyn LemmaCheck {
        lemma_registry()
            .iter()
            .copied()
            .find(|l| l.id() == self)
            .expect("all ids registered")
    }

    pub fn name(self) -> &'static str {
        self.check().name()
    }
}

impl std::fmt::Display for LemmaId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Evaluates one vector lemma. Vectors must share a dimension.
pub fn check_vector_lemma(
    id: LemmaId,
    a: &Vector,
    b: &Vector,
    e: Option<&Vector>,
    params: &InequalityParams,
    tol: &Tolerances,
) -> Result<InequalityReport> {
    if a.dim() != b.dim() {
        return Err(Error::ShapeMismatch(format!(
            "vector dimensions differ: {} vs {}",
            a.dim(),
            b.dim()
        )));
    }
    if let Some(e) = e {
        if e.dim() != a.dim() {
            return Err(Error::ShapeMismatch(format!(
                "vector dimensions differ: {} vs {}",
                a.dim(),
                e.dim()
            )));
        }
    }
    id.check().evaluate(a, b, e, params, tol)
}

fn report(id: LemmaId, params: InequalityParams, lhs: f64, rhs: f64, tol: &Tolerances) -> InequalityReport {
    InequalityReport::evaluated(
        CheckId::Lemma(id),
        Mode::Printed,
        params,
        lhs,
        rhs,
        true,
        tol.tol_slack,
    )
}

fn vacuous(id: LemmaId, params: InequalityParams, why: &str) -> InequalityReport {
    let mut rep = InequalityReport::evaluated(
        CheckId::Lemma(id),
        Mode::Printed,
        params,
        0.0,
        0.0,
        false,
        f64::INFINITY,
    );
    rep.note = Some(format!("hypothesis failed: {why}"));
    rep
}

// ---------------------------------------------------------------------------
// grc-vec (r real, ||a|| >= ||b|| > 0):
//   ||a||^{2r} + ||b||^{2r} - 2 (||a|| ||b||)^{r-1} Re<a,b>
//     <= r^2 ||a||^{2r-2} ||a-b||^2   (r >= 1)
//     <=     ||b||^{2r-2} ||a-b||^2   (r < 1)
// ---------------------------------------------------------------------------
struct GrcVec;

impl LemmaCheck for GrcVec {
    fn id(&self) -> LemmaId {
        LemmaId::GrcVec
    }
    fn name(&self) -> &'static str {
        "grc-vec"
    }
    fn evaluate(
        &self,
        a: &Vector,
        b: &Vector,
        _e: Option<&Vector>,
        params: &InequalityParams,
        tol: &Tolerances,
    ) -> Result<InequalityReport> {
        let r = params.req_r()?;
        let (na, nb) = (a.norm(), b.norm());
        if na <= ZERO_NORM || nb <= ZERO_NORM {
            return Ok(vacuous(self.id(), *params, "nonzero vectors required"));
        }
        if na < nb {
            return Ok(vacuous(self.id(), *params, "||a|| >= ||b|| required"));
        }
        let lhs = na.powf(2.0 * r) + nb.powf(2.0 * r)
            - 2.0 * (na * nb).powf(r - 1.0) * a.inner(b).re;
        let dist_sq = a.sub(b).norm().powi(2);
        let rhs = if r >= 1.0 {
            r * r * na.powf(2.0 * r - 2.0) * dist_sq
        } else {
            nb.powf(2.0 * r - 2.0) * dist_sq
        };
        Ok(report(self.id(), *params, lhs, rhs, tol))
    }
}

// ---------------------------------------------------------------------------
// buzano (||e|| = 1): |<a,e><e,b>| <= (||a|| ||b|| + |<a,b>|) / 2.
// ---------------------------------------------------------------------------
struct Buzano;

impl LemmaCheck for Buzano {
    fn id(&self) -> LemmaId {
        LemmaId::Buzano
    }
    fn name(&self) -> &'static str {
        "buzano"
    }
    fn evaluate(
        &self,
        a: &Vector,
        b: &Vector,
        e: Option<&Vector>,
        params: &InequalityParams,
        tol: &Tolerances,
    ) -> Result<InequalityReport> {
        let Some(e) = e else {
            return Err(Error::BadParams(
                "buzano requires a third unit vector e".into(),
            ));
        };
        if (e.norm() - 1.0).abs() > 1e-6 {
            return Ok(vacuous(self.id(), *params, "||e|| = 1 required"));
        }
        let lhs = (a.inner(e) * e.inner(b)).norm();
        let rhs = 0.5 * (a.norm() * b.norm() + a.inner(b).norm());
        Ok(report(self.id(), *params, lhs, rhs, tol))
    }
}

// ---------------------------------------------------------------------------
// dunkl-williams-vec (a, b != 0):
//   (||a|| + ||b||) / 2 * || a/||a|| - b/||b|| || <= ||a - b||.
// ---------------------------------------------------------------------------
struct DunklWilliamsVec;

impl LemmaCheck for DunklWilliamsVec {
    fn id(&self) -> LemmaId {
        LemmaId::DunklWilliamsVec
    }
    fn name(&self) -> &'static str {
        "dunkl-williams-vec"
    }
    fn evaluate(
        &self,
        a: &Vector,
        b: &Vector,
        _e: Option<&Vector>,
        params: &InequalityParams,
        tol: &Tolerances,
    ) -> Result<InequalityReport> {
        let (na, nb) = (a.norm(), b.norm());
        if na <= ZERO_NORM || nb <= ZERO_NORM {
            return Ok(vacuous(self.id(), *params, "nonzero vectors required"));
        }
        let unit_gap = a.scale_re(1.0 / na).sub(&b.scale_re(1.0 / nb)).norm();
        let lhs = 0.5 * (na + nb) * unit_gap;
        let rhs = a.sub(b).norm();
        Ok(report(self.id(), *params, lhs, rhs, tol))
    }
}

// ---------------------------------------------------------------------------
// dragomir-quad (lambda != 0):
//   ||a||^2 ||b||^2 - |<a,b>|^2 <= ||a||^2 ||a - lambda b||^2 / |lambda|^2.
// ---------------------------------------------------------------------------
struct DragomirQuad;

impl LemmaCheck for DragomirQuad {
    fn id(&self) -> LemmaId {
        LemmaId::DragomirQuad
    }
    fn name(&self) -> &'static str {
        "dragomir-quad"
    }
    fn evaluate(
        &self,
        a: &Vector,
        b: &Vector,
        _e: Option<&Vector>,
        params: &InequalityParams,
        tol: &Tolerances,
    ) -> Result<InequalityReport> {
        let lambda = params.req_nonzero_lambda()?;
        let na_sq = a.norm().powi(2);
        let lhs = na_sq * b.norm().powi(2) - a.inner(b).norm_sqr();
        let rhs = na_sq * a.sub(&b.scale(lambda)).norm().powi(2) / lambda.norm_sqr();
        Ok(report(self.id(), *params, lhs, rhs, tol))
    }
}

// ---------------------------------------------------------------------------
// dragomir-r (||y - a|| <= r <= ||a||, first argument plays y, second a):
//   ||y||^2 ||a||^2 - [Re<y,a>]^2 <= r^2 ||y||^2.
// ---------------------------------------------------------------------------
struct DragomirR;

impl LemmaCheck for DragomirR {
    fn id(&self) -> LemmaId {
        LemmaId::DragomirR
    }
    fn name(&self) -> &'static str {
        "dragomir-r"
    }
    fn evaluate(
        &self,
        a: &Vector,
        b: &Vector,
        _e: Option<&Vector>,
        params: &InequalityParams,
        tol: &Tolerances,
    ) -> Result<InequalityReport> {
        let r = params.req_r()?;
        if r < 0.0 {
            return Err(Error::BadParams(format!("r must be >= 0, got {r}")));
        }
        let (y, target) = (a, b);
        let closeness = y.sub(target).norm();
        if closeness > r || r > target.norm() {
            return Ok(vacuous(self.id(), *params, "||y - a|| <= r <= ||a|| required"));
        }
        let lhs = y.norm().powi(2) * target.norm().powi(2) - y.inner(target).re.powi(2);
        let rhs = r * r * y.norm().powi(2);
        Ok(report(self.id(), *params, lhs, rhs, tol))
    }
}

// ---------------------------------------------------------------------------
// dragomir-rrr (||y - a|| <= r): ||y|| ||a|| - Re<y,a> <= r^2 / 2.
// ---------------------------------------------------------------------------
struct DragomirRrr;

impl LemmaCheck for DragomirRrr {
    fn id(&self) -> LemmaId {
        LemmaId::DragomirRrr
    }
    fn name(&self) -> &'static str {
        "dragomir-rrr"
    }
    fn evaluate(
        &self,
        a: &Vector,
        b: &Vector,
        _e: Option<&Vector>,
        params: &InequalityParams,
        tol: &Tolerances,
    ) -> Result<InequalityReport> {
        let r = params.req_r()?;
        if r < 0.0 {
            return Err(Error::BadParams(format!("r must be >= 0, got {r}")));
        }
        let (y, target) = (a, b);
        if y.sub(target).norm() > r {
            return Ok(vacuous(self.id(), *params, "||y - a|| <= r required"));
        }
        let lhs = y.norm() * target.norm() - y.inner(target).re;
        let rhs = 0.5 * r * r;
        Ok(report(self.id(), *params, lhs, rhs, tol))
    }
}

// ---------------------------------------------------------------------------
// ds-upper (p >= 2): 2 (||a||^p + ||b||^p) <= ||a+b||^p + ||a-b||^p.
// ---------------------------------------------------------------------------
struct DsUpper;

impl LemmaCheck for DsUpper {
    fn id(&self) -> LemmaId {
        LemmaId::DsUpper
    }
    fn name(&self) -> &'static str {
        "ds-upper"
    }
    fn evaluate(
        &self,
        a: &Vector,
        b: &Vector,
        _e: Option<&Vector>,
        params: &InequalityParams,
        tol: &Tolerances,
    ) -> Result<InequalityReport> {
        let p = params.req_p()?;
        if p < 2.0 {
            return Err(Error::BadParams(format!("p must be >= 2, got {p}")));
        }
        let lhs = 2.0 * (a.norm().powf(p) + b.norm().powf(p));
        let rhs = a.add(b).norm().powf(p) + a.sub(b).norm().powf(p);
        Ok(report(self.id(), *params, lhs, rhs, tol))
    }
}

// ---------------------------------------------------------------------------
// ds-lower-vec (p in (1,2)):
//   (||a|| + ||b||)^p + | ||a|| - ||b|| |^p <= ||a+b||^p + ||a-b||^p.
// ---------------------------------------------------------------------------
struct DsLowerVec;

impl LemmaCheck for DsLowerVec {
    fn id(&self) -> LemmaId {
        LemmaId::DsLowerVec
    }
    fn name(&self) -> &'static str {
        "ds-lower-vec"
    }
    fn evaluate(
        &self,
        a: &Vector,
        b: &Vector,
        _e: Option<&Vector>,
        params: &InequalityParams,
        tol: &Tolerances,
    ) -> Result<InequalityReport> {
        let p = params.req_p()?;
        if !(p > 1.0 && p < 2.0) {
            return Err(Error::BadParams(format!("p must lie in (1, 2), got {p}")));
        }
        let (na, nb) = (a.norm(), b.norm());
        let lhs = (na + nb).powf(p) + (na - nb).abs().powf(p);
        let rhs = a.add(b).norm().powf(p) + a.sub(b).norm().powf(p);
        Ok(report(self.id(), *params, lhs, rhs, tol))
    }
}

// ---------------------------------------------------------------------------
// power-mean (q = p/2 >= 1, applied to the squared norms):
//   2^{1 - p/2} (||a||^2 + ||b||^2)^{p/2} <= ||a||^p + ||b||^p.
// ---------------------------------------------------------------------------
struct PowerMean;

impl LemmaCheck for PowerMean {
    fn id(&self) -> LemmaId {
        LemmaId::PowerMean
    }
    fn name(&self) -> &'static str {
        "power-mean"
    }
    fn evaluate(
        &self,
        a: &Vector,
        b: &Vector,
        _e: Option<&Vector>,
        params: &InequalityParams,
        tol: &Tolerances,
    ) -> Result<InequalityReport> {
        let p = params.req_p()?;
        if p < 2.0 {
            return Err(Error::BadParams(format!("p must be >= 2, got {p}")));
        }
        let (na, nb) = (a.norm(), b.norm());
        let lhs = 2.0_f64.powf(1.0 - p / 2.0) * (na * na + nb * nb).powf(p / 2.0);
        let rhs = na.powf(p) + nb.powf(p);
        Ok(report(self.id(), *params, lhs, rhs, tol))
    }
}
