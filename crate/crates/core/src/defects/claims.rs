//! Claim registry: every continuity equation and component identity evaluated
//! as an exact residual `LHS − RHS`.

use super::eqs::{self, Ctx};
use super::TheoryParams;
use crate::exterior::{basis, TensorForm};
use crate::field::{is_zero, FieldError, ZeroTestConfig};
use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Report,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Report => "REPORT",
            Status::Skip => "SKIP",
        })
    }
}

/// One nonzero residual component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub indices: String,
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimResult {
    pub claim_id: String,
    pub title: String,
    pub status: Status,
    pub nonzero: usize,
    pub discrepancy: Vec<Term>,
    #[serde(skip)]
    pub residual: Option<TensorForm>,
}

impl ClaimResult {
    pub fn line(&self) -> String {
        format!("CLAIM {} STATUS={} NONZERO={}", self.claim_id, self.status, self.nonzero)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Suite {
    Bianchi,
    RcwContinuity,
    SemiMetric,
    MetricCompatible,
    Linear,
    Covariant,
    Algebraic,
    Gt,
}

pub const SUITES: [Suite; 8] = [
    Suite::Bianchi,
    Suite::RcwContinuity,
    Suite::SemiMetric,
    Suite::MetricCompatible,
    Suite::Linear,
    Suite::Covariant,
    Suite::Algebraic,
    Suite::Gt,
];

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Bianchi => "bianchi",
            Suite::RcwContinuity => "rcw-continuity",
            Suite::SemiMetric => "semi-metric",
            Suite::MetricCompatible => "metric-compatible",
            Suite::Linear => "linear",
            Suite::Covariant => "covariant",
            Suite::Algebraic => "algebraic",
            Suite::Gt => "gt",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        SUITES.into_iter().find(|x| x.name() == s)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Geometry-class requirement of a claim; unmet requirements give SKIP.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Pre {
    None,
    /// `Q_ab = ⅓δ_abQ` and `ζ_ab^c = ⅓δ_abζ^c`
    Conformal,
    QZero,
    RZero,
    QZeroRZero,
    /// `R = 0` and `Q` in the image of the disclination map
    Admissible,
    /// `Q = 0` with a flat Levi-Civita connection
    FlatMetricQZero,
}

pub(crate) enum Outcome {
    Symbolic(TensorForm),
    Numeric { pass: bool, terms: Vec<Term> },
}

pub(crate) struct ClaimSpec {
    pub id: &'static str,
    pub suite: Suite,
    pub title: &'static str,
    /// Printed form contradicted by re-derivation: nonzero residual is REPORT.
    pub report: bool,
    pub pre: Pre,
    pub eval: fn(&Ctx) -> Result<Outcome, FieldError>,
}

macro_rules! claim {
    ($id:expr, $suite:ident, $pre:ident, $report:expr, $f:path, $title:expr) => {
        ClaimSpec { id: $id, suite: Suite::$suite, title: $title, report: $report, pre: Pre::$pre, eval: $f }
    };
}

pub(crate) fn registry() -> Vec<ClaimSpec> {
    vec![
        claim!("B1", Bianchi, None, false, eqs::b1, "DQ_ab = R_(ab)"),
        claim!("B2", Bianchi, None, false, eqs::b2, "DT^a = R^a_b ∧ e^b"),
        claim!("B3", Bianchi, None, false, eqs::b3, "DR^a_b = 0"),
        claim!("CC1", RcwContinuity, None, false, eqs::cc1, "continuity of the dislocation density"),
        claim!("CC1-ORACLE", RcwContinuity, None, false, eqs::cc1_oracle, "D(α^{ba}*e_b) = R^a_b ∧ e^b"),
        claim!("CC2", RcwContinuity, None, false, eqs::cc2, "continuity of the rotational disclination density"),
        claim!("CC2-ORACLE", RcwContinuity, None, false, eqs::cc2_oracle, "DR_[ab] = −Q^c_a∧R_cb + Q^c_b∧R_ca"),
        claim!("CC3", RcwContinuity, None, false, eqs::cc3, "continuity of the metrical disclination density"),
        claim!("CC3-ORACLE", RcwContinuity, None, false, eqs::cc3_oracle, "DR_(ab) = −Q^c_a∧R_cb − Q^c_b∧R_ca"),
        claim!("CC4", RcwContinuity, None, false, eqs::cc4, "continuity of the metric-anomaly density"),
        claim!("CC4-ORACLE", RcwContinuity, None, false, eqs::cc4_oracle, "D(Q_abc e^c) = ζ_ab^c*e_c"),
        claim!("SM1", SemiMetric, Conformal, false, eqs::sm1, "semi-metric dislocation continuity"),
        claim!("SM2", SemiMetric, Conformal, false, eqs::sm2, "semi-metric rotational disclination continuity"),
        claim!("SM3", SemiMetric, Conformal, false, eqs::sm3, "semi-metric metrical disclination continuity"),
        claim!("SM4", SemiMetric, Conformal, false, eqs::sm4, "semi-metric metric-anomaly continuity"),
        claim!("MC1", MetricCompatible, QZero, false, eqs::mc1, "metric-compatible dislocation continuity"),
        claim!("MC2", MetricCompatible, QZero, false, eqs::mc2, "metric-compatible disclination continuity"),
        claim!("LIN1", Linear, FlatMetricQZero, false, eqs::lin1, "linearized dislocation continuity, quadratic remainder"),
        claim!("LIN2", Linear, FlatMetricQZero, false, eqs::lin2, "linearized disclination continuity, quadratic remainder"),
        claim!("APPA-1", Covariant, None, true, eqs::appa1, "component form of DQ^{abc}"),
        claim!("APPA-1-ORACLE", Covariant, None, false, eqs::appa1_oracle, "(DQ_abc)∧e^c + Q_abc T^c = R_(ab)"),
        claim!("APPA-2", Covariant, None, true, eqs::appa2, "component form of DQ_c"),
        claim!("APPA-2-ORACLE", Covariant, None, false, eqs::appa2_oracle, "(DQ_c)∧e^c + Q_c T^c = δ^{ab}R_(ab)"),
        claim!("APPA-3", Covariant, None, true, eqs::appa3, "component form of DT^a_pk"),
        claim!("APPA-3-ORACLE", Covariant, None, false, eqs::appa3_oracle, "½(DT^a_bc)∧e^{bc} + T^a_bc T^b∧e^c = R^a_b∧e^b"),
        claim!("APPA-4", Covariant, None, false, eqs::appa4, "component form of Dε^{abc}"),
        claim!("APPA-4-ORACLE", Covariant, None, false, eqs::appa4_oracle, "ε_abc Dε^{abc} + ε^{abc} Dε_abc = 0"),
        claim!("APPA-5", Covariant, None, true, eqs::appa5, "D*Q_ab"),
        claim!("APPA-5-ORACLE", Covariant, None, false, eqs::appa5_oracle, "D*Q_ab by the Leibniz rule"),
        claim!("APPA-6", Covariant, None, true, eqs::appa6, "D*T^a"),
        claim!("APPA-6-ORACLE", Covariant, None, false, eqs::appa6_oracle, "D*T^a by the Leibniz rule"),
        claim!("APPA-7", Covariant, None, true, eqs::appa7, "D*R^a_b"),
        claim!("APPA-7-ORACLE", Covariant, None, false, eqs::appa7_oracle, "D*R^a_b by the Leibniz rule"),
        claim!("ALG-1", Algebraic, None, false, eqs::alg1, "D*e_a = −Q∧*e_a + *e_ab∧T^b"),
        claim!("ALG-2", Algebraic, None, false, eqs::alg2, "D*e_ab = −Q∧*e_ab + *e_abc∧T^c"),
        claim!("ALG-3", Algebraic, None, false, eqs::alg3, "D*e_abc = −Q∧*e_abc"),
        claim!("GT-ALPHA-OMEGA", Gt, None, false, eqs::gt_alpha_omega, "*(Ω^{bc}∧e_c^a) = *(e^a∧T^b) − *(Q^{bc}∧e_c^a)"),
        claim!("GT-ALPHA-ROUTES", Gt, Admissible, false, eqs::gt_alpha_routes, "both dislocation routes agree"),
        claim!("GT-THETA-TRACE", Gt, None, false, eqs::gt_theta_trace, "δ_ab θ^{ab} = 0"),
        claim!("GT-P", Gt, None, false, eqs::gt_p, "second trace of the non-metricity image vanishes"),
        claim!("GT-TORSION-ROUNDTRIP", Gt, None, false, eqs::gt_torsion_roundtrip, "torsion rebuilt from (α, θ)"),
        claim!("GT-TELEPARALLEL-THETA", Gt, RZero, false, eqs::gt_teleparallel_theta, "R = 0 ⇒ review θ = 0"),
        claim!("GT-TELEPARALLEL-ZETA", Gt, RZero, false, eqs::gt_teleparallel_zeta, "R = 0 ⇒ review ζ = 0"),
        claim!("GT-DTHETA-A", Gt, RZero, true, eqs::gt_dtheta_a, "Dθ^{ab} expansion, bracket closed before θ^d_f"),
        claim!("GT-DTHETA-B", Gt, RZero, true, eqs::gt_dtheta_b, "Dθ^{ab} expansion, bracket read as a θ^d_d term"),
        claim!("GT-DTHETA-L1", Gt, None, false, eqs::gt_dtheta_l1, "Dθ^{ab} by the Leibniz rule"),
        claim!("GT-DALPHA", Gt, RZero, true, eqs::gt_dalpha, "Dα^{ab} expansion"),
        claim!("GT-DALPHA-L1", Gt, None, false, eqs::gt_dalpha_l1, "Dα^{ab} by the Leibniz rule"),
        claim!("GT-DIVTHETA", Gt, RZero, true, eqs::gt_divtheta, "D_aθ^{ab} as printed"),
        claim!("GT-DIVALPHA", Gt, RZero, true, eqs::gt_divalpha, "D_aα^{ab} as printed"),
        claim!("GT-DIVTHETA-T0", Gt, QZeroRZero, false, eqs::gt_divtheta_t0, "D_aθ^{ab} = 0 when Q = 0"),
        claim!("GT-DIVALPHA-T0", Gt, QZeroRZero, false, eqs::gt_divalpha_t0, "D_aα^{ab} = ε_cda α^{ab}α^{cd} when Q = 0"),
    ]
}

/// Every claim id in report order.
pub fn claim_ids() -> Vec<&'static str> {
    let mut ids: Vec<_> = registry().iter().map(|c| c.id).collect();
    ids.sort_unstable();
    ids
}

/// Claim ids of one suite in report order.
pub fn suite_claims(suite: Suite) -> Vec<&'static str> {
    let mut ids: Vec<_> = registry().iter().filter(|c| c.suite == suite).map(|c| c.id).collect();
    ids.sort_unstable();
    ids
}

fn indices_text(idx: &[usize], degree: usize, k: usize) -> String {
    let mut s = if idx.is_empty() {
        "-".to_string()
    } else {
        idx.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(".")
    };
    if degree > 0 {
        s.push(':');
        s.push_str(&crate::exterior::basis_name(basis(degree)[k], "dx"));
    }
    s
}

fn judge(spec: &ClaimSpec, outcome: Outcome, cfg: &ZeroTestConfig) -> Result<ClaimResult, FieldError> {
    match outcome {
        Outcome::Symbolic(res) => residual_result(spec.id, spec.title, spec.report, res, cfg),
        Outcome::Numeric { pass, terms } => Ok(numeric_result(spec.id, spec.title, spec.report, pass, terms)),
    }
}

/// PASS iff every coefficient of `res` is zero; otherwise FAIL, or REPORT
/// when `report` is set, with one term per nonzero coefficient.
pub fn residual_result(
    id: &str,
    title: &str,
    report: bool,
    res: TensorForm,
    cfg: &ZeroTestConfig,
) -> Result<ClaimResult, FieldError> {
    let mut terms = Vec::new();
    for (idx, k, c) in res.nonzero_terms() {
        if !is_zero(c, cfg)? {
            terms.push(Term { indices: indices_text(&idx, res.degree(), k), residual: c.to_string() });
        }
    }
    let mut r = numeric_result(id, title, report, terms.is_empty(), terms);
    r.residual = Some(res);
    Ok(r)
}

pub fn numeric_result(id: &str, title: &str, report: bool, pass: bool, terms: Vec<Term>) -> ClaimResult {
    let status = match (pass, report) {
        (true, _) => Status::Pass,
        (false, true) => Status::Report,
        (false, false) => Status::Fail,
    };
    ClaimResult {
        claim_id: id.to_string(),
        title: title.to_string(),
        status,
        nonzero: if pass { 0 } else { terms.len() },
        discrepancy: if pass { Vec::new() } else { terms },
        residual: None,
    }
}

fn skipped(spec: &ClaimSpec) -> ClaimResult {
    ClaimResult { status: Status::Skip, ..numeric_result(spec.id, spec.title, false, true, Vec::new()) }
}

/// Evaluates every claim of `suites` on `geom`, ordered by claim id.
pub fn run_claims(
    geom: &crate::geometry::Geometry,
    suites: &[Suite],
    p: &TheoryParams,
    cfg: &ZeroTestConfig,
) -> Result<Vec<ClaimResult>, FieldError> {
    let ctx = Ctx::new(geom, p.clone(), *cfg);
    let mut specs: Vec<ClaimSpec> = registry().into_iter().filter(|c| suites.contains(&c.suite)).collect();
    specs.sort_by_key(|c| c.id);
    let results: Vec<Result<ClaimResult, FieldError>> = std::thread::scope(|s| {
        let handles: Vec<_> = specs
            .iter()
            .map(|spec| {
                let ctx = &ctx;
                s.spawn(move || {
                    if !ctx.holds(spec.pre)? {
                        return Ok(skipped(spec));
                    }
                    judge(spec, (spec.eval)(ctx)?, cfg)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("claim evaluation panicked")).collect()
    });
    results.into_iter().collect()
}

/// Claim lines plus indented term lines for every non-PASS claim.
pub fn format_report(results: &[ClaimResult]) -> String {
    let mut out = String::new();
    for r in results {
        out.push_str(&r.line());
        out.push('\n');
        for t in &r.discrepancy {
            out.push_str(&format!("  TERM {} RESIDUAL {}\n", t.indices, t.residual));
        }
    }
    out
}
