//! Command execution and report assembly.

use super::scenario::Scenario;
use crate::defects::{
    gt_alpha, gt_q_from_theta, gt_theta, gt_torsion_from_densities, numeric_result, rcw_components, rcw_densities,
    rcw_reconstruct, residual_result, run_claims, traces, ClaimResult, Mat3, Status, Suite, Term, TheoryParams, SUITES,
};
use crate::exterior::{d_coord, eps, Basis, Form, Slot, TensorForm};
use crate::field::{FieldError, ScalarField, ZeroTestConfig};
use crate::geometry::{
    classify, coframe_tensor, connection_split, curvature_split_with, levi_civita, tensor_is_zero, Connection, Geometry, DD, UD,
    UU,
};
use crate::irreducible::{
    nonmetricity_certificates, nonmetricity_pieces, piece_ranks, torsion_certificates, torsion_pieces, NONMETRICITY_COUNTS,
    TORSION_COUNTS,
};
use crate::transport::{
    burgers_frank, line_integral, parallel_transport, product_drift, surface_integral, FrameVector, TransportError,
};
use serde::Serialize;
use std::fmt::Write as _;

const DRIFT_TOL: f64 = 1e-6;
const FLAT_TOL: f64 = 1e-8;
const STOKES_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Identities,
    Decompose,
    Defects,
    Continuity,
    Holonomy,
    All,
}

impl Command {
    pub const EACH: [Command; 5] =
        [Command::Identities, Command::Decompose, Command::Defects, Command::Continuity, Command::Holonomy];

    pub fn name(self) -> &'static str {
        match self {
            Command::Identities => "identities",
            Command::Decompose => "decompose",
            Command::Defects => "defects",
            Command::Continuity => "continuity",
            Command::Holonomy => "holonomy",
            Command::All => "all",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Options {
    /// claim-registry suites for `continuity`; all when empty
    pub suites: Vec<Suite>,
    pub strict_report: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Value {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Entry {
    #[serde(flatten)]
    pub result: ClaimResult,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub values: Vec<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Section {
    pub command: Command,
    pub entries: Vec<Entry>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub report: usize,
    pub skip: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub scenario: String,
    pub class: String,
    pub sections: Vec<Section>,
    pub summary: Summary,
}

impl Report {
    pub fn exit_code(&self, strict_report: bool) -> i32 {
        i32::from(self.summary.fail > 0 || (strict_report && self.summary.report > 0))
    }

    pub fn text(&self) -> String {
        let mut out = format!("SCENARIO {}\nCLASS {}\n", self.scenario, self.class);
        for s in &self.sections {
            let _ = writeln!(out, "SECTION {}", s.command.name());
            for e in &s.entries {
                let _ = writeln!(out, "{}", e.result.line());
                for v in &e.values {
                    let _ = writeln!(out, "  VALUE {} = {}", v.name, v.value);
                }
                for t in &e.result.discrepancy {
                    let _ = writeln!(out, "  TERM {} RESIDUAL {}", t.indices, t.residual);
                }
            }
        }
        let m = &self.summary;
        let _ = writeln!(out, "SUMMARY PASS={} FAIL={} REPORT={} SKIP={}", m.pass, m.fail, m.report, m.skip);
        out
    }

    pub fn json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

fn entry(result: ClaimResult) -> Entry {
    Entry { result, values: Vec::new() }
}

fn skip(id: &str, title: &str) -> Entry {
    entry(ClaimResult { status: Status::Skip, ..numeric_result(id, title, false, true, Vec::new()) })
}

fn val(name: impl Into<String>, value: impl ToString) -> Value {
    Value { name: name.into(), value: value.to_string() }
}

fn num(x: f64) -> String {
    format!("{x:.9e}")
}

fn coord(slots: &[Slot], degree: usize, f: impl FnMut(&[usize]) -> Form) -> TensorForm {
    TensorForm::from_fn(slots, degree, Basis::Coordinate, f)
}

fn mat_tensor(m: &Mat3) -> TensorForm {
    TensorForm::from_scalars(&UU, Basis::Coordinate, |i| m[i[0]][i[1]].clone())
}

fn mat_values(prefix: &str, m: &Mat3, out: &mut Vec<Value>) {
    for (a, row) in m.iter().enumerate() {
        for (b, x) in row.iter().enumerate() {
            if !x.is_exact_zero() {
                out.push(val(format!("{prefix}.{}.{}", a + 1, b + 1), x));
            }
        }
    }
}

/// `½(t_ab + t_ba)`
fn sym_part(t: &TensorForm, i: &[usize]) -> Form {
    (t.get(&[i[0], i[1]]) + t.get(&[i[1], i[0]])).scale_rat(&crate::field::rational::rat(1, 2))
}

fn identities(g: &Geometry, cfg: &ZeroTestConfig) -> Result<Vec<Entry>, FieldError> {
    let frame = g.frame();
    let e = coframe_tensor(frame);
    let kron = |slots: &[Slot]| TensorForm::from_scalars(slots, Basis::Coordinate, |i| ScalarField::int(i64::from(i[0] == i[1])));
    let lc = levi_civita(frame);
    let split = connection_split(g);
    let curv = curvature_split_with(g, &split);
    let de = d_coord(&e);
    let checks: Vec<(&str, &str, TensorForm)> = vec![
        ("ID-DD-OMEGA", "d(dω^a_b) = 0", d_coord(&d_coord(g.omega()))),
        ("ID-DD-COFRAME", "d(de^a) = 0", d_coord(&de)),
        ("ID-DDELTA-MIXED", "Dδ^a_b = 0", g.cov_d(&kron(&UD))),
        ("ID-DDELTA", "Dδ_ab = −2Q_ab", g.cov_d(&kron(&DD)).add(&g.q().scale_rat(&crate::field::rational::int(2)))),
        (
            "ID-LC-TORSIONFREE",
            "ω̃^a_b∧e^b = −de^a",
            coord(&[Slot::Up], 2, |i| {
                (0..3).fold(de.get(i).clone(), |acc, b| &acc + &lc.get(i[0], b).wedge(e.get(&[b])))
            }),
        ),
        ("ID-LC-ANTISYM", "ω̃_ab = −ω̃_ba", coord(&DD, 1, |i| lc.get(i[0], i[1]) + lc.get(i[1], i[0]))),
        (
            "ID-SPLIT-SUM",
            "ω̃ + L = ω",
            coord(&UD, 1, |i| &(lc.get(i[0], i[1]) + split.defect_one_form.get(i)) - g.omega().get(i)),
        ),
        ("ID-SPLIT-SYM", "L_(ab) = Q_ab", coord(&DD, 1, |i| &sym_part(&split.defect_one_form, i) - g.q().get(i))),
        (
            "ID-CONTORTION-ANTISYM",
            "K_ab = −K_ba",
            coord(&DD, 1, |i| split.contortion.get(&[i[0], i[1]]) + split.contortion.get(&[i[1], i[0]])),
        ),
        (
            "ID-CURVATURE-SYMSPLIT",
            "R_[ab] + R_(ab) = R_ab",
            coord(&DD, 2, |i| &(curv.r_antisym.get(i) + curv.r_sym.get(i)) - g.r().get(i)),
        ),
        (
            "ID-CURVATURE-RIEMANNSPLIT",
            "R̃ + (D̃L + L∧L) = R",
            coord(&UD, 2, |i| &(curv.r_riemannian.get(i) + curv.r_nonriemannian.get(i)) - g.r().get(i)),
        ),
    ];
    let mut out = Vec::new();
    for (id, title, res) in checks {
        out.push(entry(residual_result(id, title, false, res, cfg)?));
    }
    let p = TheoryParams::unit();
    out.extend(run_claims(g, &[Suite::Bianchi], &p, cfg)?.into_iter().map(entry));
    Ok(out)
}

fn decompose(g: &Geometry, cfg: &ZeroTestConfig) -> Result<Vec<Entry>, FieldError> {
    let frame = g.frame();
    let mut out = Vec::new();
    let td = torsion_pieces(g);
    for c in torsion_certificates(g.t(), &td, frame, cfg)? {
        let id = format!("IRR-T-{}", c.name.to_uppercase());
        out.push(entry(numeric_result(&id, &format!("torsion certificate {}", c.name), false, c.holds, Vec::new())));
    }
    let nd = nonmetricity_pieces(g);
    for c in nonmetricity_certificates(g.q(), &nd, frame, cfg)? {
        let id = format!("IRR-Q-{}", c.name.to_uppercase());
        out.push(entry(numeric_result(&id, &format!("non-metricity certificate {}", c.name), false, c.holds, Vec::new())));
    }
    let point = [crate::field::rational::rat(1, 3), crate::field::rational::rat(1, 5), crate::field::rational::rat(1, 7)];
    match piece_ranks(frame, &point) {
        Some((t, q)) => {
            let show = |r: &[usize]| r.iter().map(usize::to_string).collect::<Vec<_>>().join("+");
            let mut e = entry(numeric_result("IRR-T-RANKS", "torsion piece ranks 5+3+1", false, t == TORSION_COUNTS, Vec::new()));
            e.values.push(val("ranks", show(&t)));
            out.push(e);
            let mut e = entry(numeric_result(
                "IRR-Q-RANKS",
                "non-metricity piece ranks 3+9+3+3",
                true,
                q == NONMETRICITY_COUNTS,
                vec![Term { indices: "ranks".into(), residual: show(&q) }],
            ));
            e.values.push(val("ranks", show(&q)));
            out.push(e);
        }
        None => {
            out.push(skip("IRR-T-RANKS", "torsion piece ranks 5+3+1"));
            out.push(skip("IRR-Q-RANKS", "non-metricity piece ranks 3+9+3+3"));
        }
    }
    Ok(out)
}

fn defects(sc: &Scenario, g: &Geometry, p: &TheoryParams, cfg: &ZeroTestConfig) -> Result<Vec<Entry>, FieldError> {
    let frame = g.frame();
    let d = rcw_densities(g);
    let comp = rcw_components(g);
    let zeta = |z: &crate::defects::Arr3| {
        TensorForm::from_scalars(&[Slot::Down, Slot::Down, Slot::Up], Basis::Coordinate, |i| z[i[0]][i[1]][i[2]].clone())
    };
    let mut out = Vec::new();
    let mut e = entry(residual_result(
        "DEF-RCW-ALPHA-ROUTES",
        "dislocation density: forms vs components",
        false,
        mat_tensor(&d.alpha).sub(&mat_tensor(&comp.alpha)),
        cfg,
    )?);
    mat_values("rcw.alpha", &d.alpha, &mut e.values);
    out.push(e);
    let mut e = entry(residual_result(
        "DEF-RCW-THETA-ROUTES",
        "disclination density: forms vs components",
        false,
        mat_tensor(&d.theta).sub(&mat_tensor(&comp.theta)),
        cfg,
    )?);
    mat_values("rcw.theta", &d.theta, &mut e.values);
    out.push(e);
    out.push(entry(residual_result(
        "DEF-RCW-ZETA-ROUTES",
        "metrical disclination density: forms vs components",
        false,
        zeta(&d.zeta).sub(&zeta(&comp.zeta)),
        cfg,
    )?));
    let rec = rcw_reconstruct(&d, frame);
    out.push(entry(residual_result("DEF-RCW-ROUNDTRIP-T", "torsion rebuilt from densities", false, rec.torsion.sub(g.t()), cfg)?));
    out.push(entry(residual_result(
        "DEF-RCW-ROUNDTRIP-R",
        "curvature rebuilt from densities",
        false,
        rec.curvature().sub(g.r()),
        cfg,
    )?));
    let theta = gt_theta(g, p);
    let alpha = gt_alpha(g, p);
    let t = gt_torsion_from_densities(&alpha, &theta, p, frame);
    let mut e = entry(residual_result("DEF-GT-ROUNDTRIP", "torsion rebuilt from (α, θ)", false, t.sub(g.t()), cfg)?);
    mat_values("gt.alpha", &alpha, &mut e.values);
    mat_values("gt.theta", &theta, &mut e.values);
    out.push(e);
    if tensor_is_zero(g.q(), cfg)? {
        out.push(entry(residual_result(
            "DEF-GT-QZERO-REDUCTION",
            "Q = 0 ⇒ both dislocation densities agree",
            false,
            mat_tensor(&alpha).sub(&mat_tensor(&d.alpha)),
            cfg,
        )?));
    } else {
        out.push(skip("DEF-GT-QZERO-REDUCTION", "Q = 0 ⇒ both dislocation densities agree"));
    }
    if let Some(th) = &sc.theta {
        let q = gt_q_from_theta(th, p, frame).expect("traceless checked when parsed");
        let image = Geometry::new(frame.clone(), Connection::new(q.with_slots(&UD)).expect("1-form"));
        out.push(entry(residual_result(
            "DEF-THETA-IMAGE",
            "θ → Q → θ",
            false,
            mat_tensor(&gt_theta(&image, p)).sub(&mat_tensor(th)),
            cfg,
        )?));
        let pt = traces(&image).second_trace;
        out.push(entry(residual_result(
            "DEF-THETA-IMAGE-P",
            "second trace of the image vanishes",
            false,
            TensorForm::from_scalars(&[Slot::Down], Basis::Coordinate, |i| pt[i[0]].clone()),
            cfg,
        )?));
    }
    Ok(out)
}

fn transport_failure(id: &str, title: &str, err: &TransportError) -> Entry {
    entry(numeric_result(id, title, false, false, vec![Term { indices: "-".into(), residual: err.to_string() }]))
}

fn holonomy(sc: &Scenario, g: &Geometry, cfg: &ZeroTestConfig) -> Result<Vec<Entry>, FieldError> {
    let ncfg = &sc.numeric;
    let (u, v) = sc.vectors();
    let flat = tensor_is_zero(g.r(), cfg)?;
    let mut out = Vec::new();
    for name in sc.curves.keys() {
        let curve = sc.curve(name).expect("validated when parsed");
        let drift_id = format!("HOL-DRIFT-{name}");
        let flat_id = format!("HOL-FLAT-{name}");
        let drift_title = "U·V drift equals −2∮Q(γ̇)U·V";
        let flat_title = "R = 0 ⇒ trivial holonomy";
        if !curve.is_closed() {
            out.push(skip(&drift_id, drift_title));
            out.push(skip(&flat_id, flat_title));
            continue;
        }
        match product_drift(g, &curve, u, v, ncfg) {
            Ok(d) => {
                let pass = (d.drift - d.line_prediction).abs() <= DRIFT_TOL;
                let terms = vec![Term { indices: "-".into(), residual: num(d.drift - d.line_prediction) }];
                let mut e = entry(numeric_result(&drift_id, drift_title, false, pass, terms));
                e.values.push(val("drift", num(d.drift)));
                e.values.push(val("line_prediction", num(d.line_prediction)));
                out.push(e);
            }
            Err(err) => out.push(transport_failure(&drift_id, drift_title, &err)),
        }
        if !flat {
            out.push(skip(&flat_id, flat_title));
            continue;
        }
        let moved = |w: FrameVector| parallel_transport(g, &curve, w, ncfg).map(|x| x.distance(&w));
        match moved(u).and_then(|du| moved(v).map(|dv| du.max(dv))) {
            Ok(dist) => {
                let terms = vec![Term { indices: "-".into(), residual: num(dist) }];
                let mut e = entry(numeric_result(&flat_id, flat_title, false, dist <= FLAT_TOL, terms));
                e.values.push(val("displacement", num(dist)));
                out.push(e);
            }
            Err(err) => out.push(transport_failure(&flat_id, flat_title, &err)),
        }
    }
    for name in sc.patches.keys() {
        let patch = sc.patch(name);
        let boundary = patch.boundary();
        let stokes_id = format!("HOL-STOKES-{name}");
        let stokes_title = "∮ω^a_b over the boundary equals ∬dω^a_b";
        let mut terms = Vec::new();
        let mut error = None;
        for a in 0..3 {
            for b in 0..3 {
                let w = TensorForm::from_form(g.conn().get(a, b).clone(), Basis::Coordinate);
                let dw = TensorForm::from_form(g.conn().get(a, b).d(), Basis::Coordinate);
                match (line_integral(&w, &boundary, ncfg), surface_integral(&dw, &patch, ncfg)) {
                    (Ok(l), Ok(s)) if (l - s).abs() > STOKES_TOL => {
                        terms.push(Term { indices: format!("{}.{}", a + 1, b + 1), residual: num(l - s) })
                    }
                    (Ok(_), Ok(_)) => {}
                    (Err(e), _) | (_, Err(e)) => error = Some(e),
                }
            }
        }
        match error {
            Some(err) => out.push(transport_failure(&stokes_id, stokes_title, &err)),
            None => out.push(entry(numeric_result(&stokes_id, stokes_title, false, terms.is_empty(), terms))),
        }
        out.push(flux(g, &patch, name, ncfg));
    }
    Ok(out)
}

/// Burgers and Frank vectors from the densities against the same fluxes of
/// `T^a` and `½ε^{qab}R_[ab]`.
fn flux(g: &Geometry, patch: &crate::transport::Patch, name: &str, ncfg: &crate::transport::NumericConfig) -> Entry {
    let id = format!("HOL-FLUX-{name}");
    let title = "Burgers and Frank fluxes match the torsion and curvature fluxes";
    let bf = match burgers_frank(g, &rcw_densities(g), patch, ncfg) {
        Ok(bf) => bf,
        Err(TransportError::NonIdentityFrame) => return skip(&id, title),
        Err(err) => return transport_failure(&id, title, &err),
    };
    let half = crate::field::rational::rat(1, 2);
    let mut terms = Vec::new();
    for l in 0..3 {
        let t = TensorForm::from_form(g.t().get(&[l]).clone(), Basis::Coordinate);
        let r = (0..3).fold(Form::zero(2), |acc, a| {
            (0..3).fold(acc, |acc, b| {
                let s = eps(l, a, b);
                if s == 0 {
                    acc
                } else {
                    let anti = (g.r().get(&[a, b]) - g.r().get(&[b, a])).scale_rat(&half);
                    &acc + &anti.scale_rat(&(crate::field::rational::int(s) * &half))
                }
            })
        });
        let r = TensorForm::from_form(r, Basis::Coordinate);
        match (surface_integral(&t, patch, ncfg), surface_integral(&r, patch, ncfg)) {
            (Ok(bt), Ok(fr)) => {
                if (bt - bf.burgers[l]).abs() > STOKES_TOL {
                    terms.push(Term { indices: format!("burgers.{}", l + 1), residual: num(bf.burgers[l] - bt) });
                }
                if (fr - bf.frank[l]).abs() > STOKES_TOL {
                    terms.push(Term { indices: format!("frank.{}", l + 1), residual: num(bf.frank[l] - fr) });
                }
            }
            (Err(err), _) | (_, Err(err)) => return transport_failure(&id, title, &err),
        }
    }
    let mut e = entry(numeric_result(&id, title, false, terms.is_empty(), terms));
    for l in 0..3 {
        e.values.push(val(format!("burgers.{}", l + 1), num(bf.burgers[l])));
    }
    for l in 0..3 {
        e.values.push(val(format!("frank.{}", l + 1), num(bf.frank[l])));
    }
    e
}

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Runs `command` on `sc`; `label` names the scenario in the report header.
pub fn run(command: Command, sc: &Scenario, label: &str, opts: &Options) -> Result<Report, RunError> {
    let cfg = &sc.zero;
    let g = sc.geometry();
    let p = sc.params();
    let class = classify(&g, cfg)?.to_string();
    let commands: Vec<Command> = if command == Command::All { Command::EACH.to_vec() } else { vec![command] };
    let mut sections = Vec::new();
    for c in commands {
        let mut entries = match c {
            Command::Identities => identities(&g, cfg)?,
            Command::Decompose => decompose(&g, cfg)?,
            Command::Defects => defects(sc, &g, &p, cfg)?,
            Command::Continuity => {
                let suites = if opts.suites.is_empty() { SUITES.to_vec() } else { opts.suites.clone() };
                run_claims(&g, &suites, &p, cfg)?.into_iter().map(entry).collect()
            }
            Command::Holonomy => holonomy(sc, &g, cfg)?,
            Command::All => unreachable!("expanded above"),
        };
        entries.sort_by(|a, b| a.result.claim_id.cmp(&b.result.claim_id));
        sections.push(Section { command: c, entries });
    }
    let mut summary = Summary::default();
    for e in sections.iter().flat_map(|s| &s.entries) {
        match e.result.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::Report => summary.report += 1,
            Status::Skip => summary.skip += 1,
        }
    }
    Ok(Report { scenario: label.to_string(), class, sections, summary })
}
