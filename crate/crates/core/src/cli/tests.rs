use super::*;
use crate::defects::Status;
use crate::field::parse_form;
use crate::geometry::fixtures::{by_name, NAMES};
use proptest::prelude::*;

fn fixture(name: &str) -> String {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/");
    std::fs::read_to_string(format!("{path}{name}.scn")).unwrap()
}

fn err(text: &str) -> ScenarioError {
    parse_scenario(text).unwrap_err()
}

#[test]
fn shipped_fixtures_build_the_named_geometries() {
    for name in NAMES {
        let sc = parse_scenario(&fixture(name)).unwrap();
        let g = sc.geometry();
        let want = by_name(name).unwrap();
        assert_eq!(g.frame(), want.frame(), "{name}");
        assert_eq!(g.conn(), want.conn(), "{name}");
    }
}

#[test]
fn explicit_connection() {
    let sc = parse_scenario("[geometry]\nkind = explicit\nomega.1.2 = x * dx1\n").unwrap();
    let g = sc.geometry();
    assert_eq!(g.conn().get(0, 1), &parse_form("x*dx1").unwrap());
    for k in 0..9 {
        if k != 1 {
            assert!(g.conn().get(k / 3, k % 3).is_exact_zero());
        }
    }
    assert_eq!(sc.c, crate::field::rational::rat(1, 1));
}

#[test]
fn semantic_errors() {
    let singular = "[geometry]\nkind = gauge\nlambda.1.1 = 0\nlambda.2.2 = 0\nlambda.3.3 = 0\n";
    assert!(matches!(err(singular), ScenarioError::Semantic { ref msg, .. } if msg.contains("singular")));
    let skew = "[geometry]\nkind = cayley\ns.1.2 = z\n";
    assert!(matches!(err(skew), ScenarioError::Semantic { ref msg, .. } if msg.contains("antisymmetric")));
    let trace = "[geometry]\nkind = gauge\n[theory]\ntheta.1.1 = x\n";
    assert!(matches!(err(trace), ScenarioError::Semantic { ref msg, .. } if msg.contains("traceless")));
    let frame = "[geometry]\nkind = symmetric\nframe.1.1 = 2\n";
    assert!(matches!(err(frame), ScenarioError::Semantic { .. }));
    let two_form = "[geometry]\nkind = explicit\nomega.1.1 = dx1^dx2\n";
    assert!(matches!(err(two_form), ScenarioError::Semantic { ref msg, .. } if msg.contains("1-form")));
    assert!(matches!(err("[geometry]\nkind = gauge\n[theory]\nC = 0\n"), ScenarioError::Semantic { .. }));
    assert!(matches!(err("[geometry]\nkind = gauge\n[theory]\nC = x\n"), ScenarioError::Semantic { .. }));
    let dangling = "[geometry]\nkind = gauge\n[curve c]\nboundary = nowhere\n";
    assert_eq!(err(dangling), ScenarioError::Semantic { line: 3, msg: "curve `c` refers to unknown patch `nowhere`".into() });
    let gap = "[geometry]\nkind = gauge\n[curve c]\nsegment = (t, 0, 0)\nsegment = (0, t, 0)\n";
    assert!(matches!(err(gap), ScenarioError::Semantic { .. }));
    assert!(matches!(err("[vectors]\nU = 1, 0, 0\n"), ScenarioError::Semantic { .. }));
    assert!(matches!(err("[geometry]\nkind = conformal\n"), ScenarioError::Semantic { .. }));
    assert!(matches!(err("[geometry]\nkind = gauge\n[config]\node_steps = 4\n"), ScenarioError::Semantic { .. }));
}

#[test]
fn syntax_errors_carry_locations() {
    assert_eq!(
        err("[geometry]\nkind = gauge\nlamda.1.2 = x\n"),
        ScenarioError::Syntax { line: 3, col: 1, msg: "unknown key `lamda.1.2` in [geometry]".into() }
    );
    assert!(matches!(err("[geometry]\nkind = gauge\nlambda.4.1 = x\n"), ScenarioError::Syntax { line: 3, .. }));
    match err("[geometry]\nkind = gauge\nlambda.1.2 = x + * y\n") {
        ScenarioError::Syntax { line: 3, col, .. } => assert_eq!(col, 18),
        other => panic!("{other:?}"),
    }
    assert!(matches!(err("kind = gauge\n"), ScenarioError::Syntax { line: 1, .. }));
    assert!(matches!(err("[geometry\n"), ScenarioError::Syntax { line: 1, .. }));
    assert!(matches!(err("[geometry]\nkind = gauge\nkind = cayley\n"), ScenarioError::Syntax { line: 3, .. }));
    assert!(matches!(err("[geometry]\nkind = torus\n"), ScenarioError::Syntax { line: 2, .. }));
    assert!(matches!(err("[geometry]\nkind = gauge\n[extra]\n"), ScenarioError::Syntax { line: 3, .. }));
    assert!(matches!(err("[geometry]\nkind = gauge\n[curve]\n"), ScenarioError::Syntax { line: 3, .. }));
    assert!(matches!(err("[geometry]\nkind = gauge\n[vectors]\nU = 1, 2\n"), ScenarioError::Syntax { line: 4, .. }));
    assert!(matches!(err("[geometry]\nkind = gauge\n[config]\npoints = many\n"), ScenarioError::Syntax { line: 4, .. }));
}

#[test]
fn comments_and_parenthesized_triples() {
    let sc = parse_scenario("# header\n[geometry] # trailing\nkind = gauge # gauge\n[vectors]\nU = (1), 0, (2)\nV = (0, 1/2, 0)\n").unwrap();
    assert_eq!(sc.u[2], crate::field::rational::rat(2, 1));
    assert_eq!(sc.v[1], crate::field::rational::rat(1, 2));
}

#[test]
fn serialization_round_trips() {
    for name in NAMES {
        let sc = parse_scenario(&fixture(name)).unwrap();
        let text = serialize_scenario(&sc);
        assert_eq!(parse_scenario(&text).unwrap(), sc, "{name}\n{text}");
    }
    let sc = parse_scenario(
        "[geometry]\nkind = explicit\nomega.2.3 = (x - 1)/(1 + y^2)*dx3 - z*dx1\nframe.1.1 = 2 + x^2\n[config]\ntol = 0.000125\n",
    )
    .unwrap();
    assert_eq!(parse_scenario(&serialize_scenario(&sc)).unwrap(), sc);
}

fn opts() -> Options {
    Options::default()
}

#[test]
fn continuity_on_q_zero_fixture() {
    let sc = parse_scenario(&fixture("g2")).unwrap();
    let r = run(Command::Continuity, &sc, "g2.scn", &opts()).unwrap();
    let status = |id: &str| r.sections[0].entries.iter().find(|e| e.result.claim_id == id).unwrap().result.status;
    for id in ["MC1", "MC2", "GT-DIVTHETA", "GT-DIVTHETA-T0", "GT-DIVALPHA-T0"] {
        assert_eq!(status(id), Status::Pass, "{id}");
    }
    assert_eq!(r.summary.fail, 0);
    assert!(r.text().contains("FAIL=0"));
    assert_eq!(r.exit_code(false), 0);
}

#[test]
fn reports_are_deterministic_and_ordered() {
    let sc = parse_scenario(&fixture("g1")).unwrap();
    let a = run(Command::All, &sc, "g1.scn", &opts()).unwrap();
    let b = run(Command::All, &sc, "g1.scn", &opts()).unwrap();
    assert_eq!(a.text(), b.text());
    assert_eq!(a.json(), b.json());
    for s in &a.sections {
        let ids: Vec<_> = s.entries.iter().map(|e| e.result.claim_id.clone()).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);
    }
    let names: Vec<_> = a.sections.iter().map(|s| s.command.name()).collect();
    assert_eq!(names, ["identities", "decompose", "defects", "continuity", "holonomy"]);
    assert!(a.summary.report > 0);
    assert_eq!((a.exit_code(false), a.exit_code(true)), (0, 1));
    let json: serde_json::Value = serde_json::from_str(&a.json()).unwrap();
    assert_eq!(json["summary"]["fail"], 0);
    assert_eq!(json["class"], "GeneralTeleparallel");
}

#[test]
fn g1_report_values() {
    let sc = parse_scenario(&fixture("g1")).unwrap();
    let r = run(Command::Defects, &sc, "g1", &opts()).unwrap();
    let text = r.text();
    for line in [
        "  VALUE rcw.alpha.3.1 = 1\n",
        "  VALUE gt.alpha.3.1 = 1/3\n",
        "  VALUE gt.alpha.1.3 = 1/6\n",
        "  VALUE gt.theta.3.1 = -1/6\n",
        "CLAIM DEF-THETA-IMAGE STATUS=PASS NONZERO=0\n",
        "CLAIM DEF-GT-QZERO-REDUCTION STATUS=SKIP NONZERO=0\n",
    ] {
        assert!(text.contains(line), "{line}\n{text}");
    }
    let h = run(Command::Holonomy, &sc, "g1", &opts()).unwrap();
    assert!(h.sections[0].entries.iter().all(|e| e.result.status == Status::Pass), "{}", h.text());
}

#[test]
fn suite_filter_and_pole_failures() {
    let sc = parse_scenario(&fixture("g0")).unwrap();
    let o = Options { suites: vec![crate::defects::Suite::Bianchi], ..opts() };
    let r = run(Command::Continuity, &sc, "g0", &o).unwrap();
    let ids: Vec<_> = r.sections[0].entries.iter().map(|e| e.result.claim_id.as_str()).collect();
    assert_eq!(ids, ["B1", "B2", "B3"]);
    let pole = "[geometry]\nkind = explicit\nomega.1.2 = 1/x*dx2\n[curve c]\nsegment = (t, 0, 0)\nsegment = (1 - t, 0, 0)\n";
    let sc = parse_scenario(pole).unwrap();
    let r = run(Command::Holonomy, &sc, "pole", &opts()).unwrap();
    assert_eq!(r.summary.fail, 1, "{}", r.text());
    assert_eq!(r.exit_code(false), 1);
}

fn poly_text() -> impl Strategy<Value = String> {
    (-3i64..4, 0u32..3, -3i64..4).prop_map(|(a, e, b)| format!("{a}*t^{e} + {b}"))
}

fn field_text() -> impl Strategy<Value = String> {
    (-4i64..5, 1i64..4, 0u32..3, prop::sample::select(vec!["x", "y", "z"]))
        .prop_map(|(n, d, e, v)| format!("{n}/{d}*{v}^{e} + 1"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn random_scenarios_round_trip(
        f in field_text(),
        g in field_text(),
        p in poly_text(),
        q in poly_text(),
        u in (-5i64..6, 1i64..5),
        seed in 0u64..1000,
    ) {
        let text = format!(
            "[geometry]\nkind = gauge\nlambda.1.2 = {f}\nframe.3.3 = {g}\n[vectors]\nU = {}/{}, 0, 1\n\
             [curve a]\nsegment = ({p}, {q}, t)\n[patch b]\nmap = (u*v, {p}, v)\n[config]\nseed = {seed}\n",
            u.0, u.1
        );
        if let Ok(sc) = parse_scenario(&text) {
            let back = parse_scenario(&serialize_scenario(&sc)).unwrap();
            prop_assert_eq!(back, sc);
        }
    }
}
