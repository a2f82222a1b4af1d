//! Acceptance criteria 1–15, one line per criterion.

use defectforms::cli::{parse_scenario, run, serialize_scenario, Command, Options};
use defectforms::defects::*;
use defectforms::exterior::{basis, d_coord, delta, eps, Basis, Coframe, Form, Slot, TensorForm};
use defectforms::field::rational::{int, rat};
use defectforms::field::{is_zero, Point, Rational, ScalarField, ZeroTestConfig};
use defectforms::geometry::fixtures::*;
use defectforms::geometry::*;
use defectforms::irreducible::*;
use defectforms::random;
use defectforms::transport::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command as Process;
use std::time::Instant;

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn cfg() -> ZeroTestConfig {
    ZeroTestConfig::default()
}

fn zero(t: &TensorForm) -> bool {
    tensor_is_zero(t, &cfg()).unwrap()
}

fn form_zero(f: &Form) -> bool {
    f.coeffs().iter().all(|c| is_zero(c, &cfg()).unwrap())
}

fn coord(slots: &[Slot], degree: usize, f: impl FnMut(&[usize]) -> Form) -> TensorForm {
    TensorForm::from_fn(slots, degree, Basis::Coordinate, f)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn c1_epsilon() -> Check {
    let mut full = 0;
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                full += eps(a, b, c) * eps(a, b, c);
            }
        }
    }
    ensure!(full == 6, "ε_abc ε^abc = {full}");
    for c in 0..3 {
        for m in 0..3 {
            let s: i64 = (0..9).map(|k| eps(k / 3, k % 3, c) * eps(k / 3, k % 3, m)).sum();
            ensure!(s == 2 * delta(c, m), "double contraction at ({c},{m})");
        }
    }
    for idx in 0..81usize {
        let (b, c, l, m) = (idx % 3, idx / 3 % 3, idx / 9 % 3, idx / 27);
        let s: i64 = (0..3).map(|a| eps(a, b, c) * eps(a, l, m)).sum();
        ensure!(s == delta(b, l) * delta(c, m) - delta(c, l) * delta(b, m), "single contraction at {idx}");
    }
    for idx in 0..729usize {
        let d: Vec<usize> = (0..6).map(|k| idx / 3usize.pow(k) % 3).collect();
        let (a, b, c, k, l, m) = (d[0], d[1], d[2], d[3], d[4], d[5]);
        let det = delta(a, k) * (delta(b, l) * delta(c, m) - delta(b, m) * delta(c, l))
            - delta(a, l) * (delta(b, k) * delta(c, m) - delta(b, m) * delta(c, k))
            + delta(a, m) * (delta(b, k) * delta(c, l) - delta(b, l) * delta(c, k));
        ensure!(eps(a, b, c) * eps(k, l, m) == det, "determinant rule at {idx}");
    }
    Ok(())
}

fn c2_hodge_interior() -> Check {
    let mut r = rng(2);
    let f = random::coframe(&mut r, 1);
    let e = |a: usize| f.one_form(a);
    let vol = f.hodge(&Form::constant(1));
    for k in 0..20 {
        let p = k % 4;
        let l = random::form(&mut r, p, 2, 3);
        let g = random::form(&mut r, p, 2, 3);
        let sym = &l.wedge(&f.hodge(&g)) - &g.wedge(&f.hodge(&l));
        ensure!(form_zero(&sym), "Λ∧*Γ = Γ∧*Λ, form {k}");
        if p < 3 {
            for a in 0..3 {
                let res = &f.iota(a, &f.hodge(&l)).unwrap() - &f.hodge(&l.wedge(&e(a)));
                ensure!(form_zero(&res), "ι_a*Λ = *(Λ∧e_a), form {k}");
            }
        }
        if p > 0 {
            let n = (0..3).fold(Form::zero(p), |acc, a| &acc + &e(a).wedge(&f.iota(a, &l).unwrap()));
            ensure!(form_zero(&(&n - &l.scale_int(p as i64))), "e^a∧ι_aΛ = pΛ, form {k}");
        }
        if k < 3 {
            ensure!(l.wedge(&f.hodge(&g)) == g.wedge(&f.hodge(&l)), "expanded symmetry, form {k}");
        }
    }
    for a in 0..3 {
        for b in 0..3 {
            ensure!(form_zero(&(&e(a).wedge(&f.hodge(&e(b))) - &vol.scale_int(delta(a, b)))), "e_a∧*e_b");
            for c in 0..3 {
                let lhs = e(a).wedge(&f.hodge(&e(b).wedge(&e(c))));
                let rhs = &f.hodge(&e(c)).scale_int(-delta(a, b)) + &f.hodge(&e(b)).scale_int(delta(a, c));
                ensure!(form_zero(&(&lhs - &rhs)), "e_a∧*e_bc at ({a},{b},{c})");
                ensure!(form_zero(&(&e(a).wedge(&e(b)).wedge(&e(c)) - &vol.scale_int(eps(a, b, c)))), "e^abc");
                let lhs = f.hodge(&e(a)).wedge(&f.hodge(&e(b).wedge(&e(c))));
                ensure!(form_zero(&(&lhs - &vol.scale_int(eps(a, b, c)))), "*e_a∧*e_bc");
            }
        }
    }
    Ok(())
}

fn c3_dd_bianchi() -> Check {
    for seed in 0..20 {
        let g = random_metric_affine(seed, 2);
        ensure!(d_coord(&d_coord(g.omega())).is_exact_zero(), "ddω, seed {seed}");
        ensure!(d_coord(&d_coord(&coframe_tensor(g.frame()))).is_exact_zero(), "dde, seed {seed}");
        let b = bianchi_residuals(&g);
        ensure!(zero(&b.res1) && zero(&b.res2) && zero(&b.res3), "Bianchi, seed {seed}");
    }
    Ok(())
}

fn c4_connection_split() -> Check {
    for seed in 0..20 {
        let g = random_metric_affine(100 + seed, 1);
        let s = connection_split(&g);
        let lc = &s.levi_civita;
        let e = coframe_tensor(g.frame());
        let sum = coord(&UD, 1, |i| &(lc.get(i[0], i[1]) + s.defect_one_form.get(i)) - g.omega().get(i));
        ensure!(zero(&sum), "ω̃ + L = ω, seed {seed}");
        ensure!(zero(&coord(&DD, 1, |i| lc.get(i[0], i[1]) + lc.get(i[1], i[0]))), "ω̃ antisymmetric, seed {seed}");
        ensure!(
            zero(&coord(&DD, 1, |i| s.contortion.get(&[i[0], i[1]]) + s.contortion.get(&[i[1], i[0]]))),
            "K antisymmetric, seed {seed}"
        );
        let tf = coord(&[Slot::Up], 2, |i| {
            (0..3).fold(e.get(i).d(), |acc, b| &acc + &lc.get(i[0], b).wedge(e.get(&[b])))
        });
        ensure!(zero(&tf), "ω̃∧e = −de, seed {seed}");
        let lsym = coord(&DD, 1, |i| {
            &(s.defect_one_form.get(&[i[0], i[1]]) + s.defect_one_form.get(&[i[1], i[0]])).scale_rat(&rat(1, 2)) - g.q().get(i)
        });
        ensure!(zero(&lsym), "L_(ab) = Q_ab, seed {seed}");
    }
    Ok(())
}

fn c5_curvature_split() -> Check {
    for seed in 0..20 {
        let g = random_metric_affine(200 + seed, 1);
        let c = curvature_split(&g);
        let a = coord(&DD, 2, |i| &(c.r_antisym.get(i) + c.r_sym.get(i)) - g.r().get(i));
        ensure!(zero(&a), "R_[ab] + R_(ab) = R_ab, seed {seed}");
        let b = coord(&UD, 2, |i| &(c.r_riemannian.get(i) + c.r_nonriemannian.get(i)) - g.r().get(i));
        ensure!(zero(&b), "R̃ + R_nonriemannian = R, seed {seed}");
    }
    for seed in 0..5 {
        let g = random_riemann_cartan(seed);
        ensure!(zero(&curvature_split(&g).r_sym), "R_(ab) = 0 when Q = 0, seed {seed}");
    }
    Ok(())
}

fn c6_generators() -> Check {
    for seed in 0..10 {
        let g = random_general_teleparallel(seed);
        ensure!(zero(g.r()), "gauge: R = 0, seed {seed}");
        let g = random_metric_teleparallel(seed);
        ensure!(zero(g.r()) && zero(g.q()), "Cayley: R = Q = 0, seed {seed}");
        let g = random_symmetric_teleparallel(seed);
        ensure!(zero(g.r()) && zero(g.t()), "symmetric: R = T = 0, seed {seed}");
        let g = random_conformal(seed);
        ensure!(zero(g.r()), "conformal: R = 0, seed {seed}");
        ensure!(zero(&nonmetricity_pieces(&g).tracefree), "conformal: trace-free Q = 0, seed {seed}");
    }
    Ok(())
}

fn c7_irreducible() -> Check {
    for seed in 0..20 {
        let g = random_metric_affine(300 + seed, 1);
        let td = torsion_pieces(&g);
        for c in torsion_certificates(g.t(), &td, g.frame(), &cfg()).unwrap() {
            ensure!(c.holds, "torsion {} fails, seed {seed}", c.name);
        }
        let qd = nonmetricity_pieces(&g);
        for c in nonmetricity_certificates(g.q(), &qd, g.frame(), &cfg()).unwrap() {
            ensure!(c.holds, "non-metricity {} fails, seed {seed}", c.name);
        }
    }
    let frame = random::coframe(&mut rng(7), 1);
    let (t, q) = piece_ranks(&frame, &[rat(3, 1), rat(-2, 7), rat(5, 11)]).ok_or("pole at the rank point")?;
    ensure!(t == TORSION_COUNTS, "torsion ranks {t:?}, expected {TORSION_COUNTS:?}");
    ensure!(q == NONMETRICITY_COUNTS, "non-metricity ranks {q:?}, expected {NONMETRICITY_COUNTS:?}");
    Ok(())
}

fn random_theta(r: &mut ChaCha8Rng) -> Mat3 {
    let mut m: Mat3 = std::array::from_fn(|_| std::array::from_fn(|_| random::scalar(r, 1, 2)));
    m[2][2] = -&(&m[0][0] + &m[1][1]);
    m
}

fn mats_equal(x: &Mat3, y: &Mat3) -> bool {
    (0..9).all(|k| is_zero(&(&x[k / 3][k % 3] - &y[k / 3][k % 3]), &cfg()).unwrap())
}

fn c8_constants_and_image() -> Check {
    for c in [rat(1, 1), rat(2, 3), rat(-3, 1)] {
        let p = solve_constants(c.clone()).unwrap();
        ensure!(p.a == int(1) / (int(3) * &c), "A for C = {c}");
        ensure!(p.b == int(-1) / (int(15) * &c), "B for C = {c}");
        ensure!(p.k == c, "K for C = {c}");
    }
    let mut r = rng(8);
    for k in 0..20 {
        let p = solve_constants([rat(1, 1), rat(2, 3), rat(-3, 1)][k % 3].clone()).unwrap();
        let frame = if k % 2 == 0 { Coframe::identity() } else { random::coframe(&mut r, 1) };
        let th = random_theta(&mut r);
        let q = gt_q_from_theta(&th, &p, &frame).unwrap();
        let image = Geometry::new(frame, Connection::new(q.with_slots(&UD)).unwrap());
        ensure!(mats_equal(&gt_theta(&image, &p), &th), "θ → Q → θ, case {k}");
        let tr = traces(&image);
        for b in 0..3 {
            ensure!(is_zero(&tr.second_trace[b], &cfg()).unwrap(), "P^{} ≠ 0, case {k}", b + 1);
            let mut axial = ScalarField::zero();
            for m in 0..3 {
                for n in 0..3 {
                    axial = &axial + &th[m][n].scale(&Rational::from(eps(b, m, n)));
                }
            }
            let res = &tr.weyl_components[b] - &axial.scale(&(int(5) * &p.c));
            ensure!(is_zero(&res, &cfg()).unwrap(), "Q^d = 5Cε^d_mnθ^mn, case {k}");
        }
    }
    Ok(())
}

fn c9_round_trips() -> Check {
    for seed in 0..10 {
        let g = random_metric_affine(400 + seed, 1);
        let rec = rcw_reconstruct(&rcw_densities(&g), g.frame());
        ensure!(zero(&rec.torsion.sub(g.t())) && zero(&rec.curvature().sub(g.r())), "RCW round trip, seed {seed}");
    }
    let p = solve_constants(rat(2, 3)).unwrap();
    for seed in 0..10 {
        let g = random_general_teleparallel(500 + seed);
        let t = gt_torsion_from_densities(&gt_alpha(&g, &p), &gt_theta(&g, &p), &p, g.frame());
        ensure!(zero(&t.sub(g.t())), "GT round trip, seed {seed}");
    }
    for seed in 0..5 {
        let g = random_metric_teleparallel(seed);
        ensure!(mats_equal(&gt_alpha(&g, &p), &rcw_densities(&g).alpha), "Q = 0 reduction, seed {seed}");
    }
    Ok(())
}

/// Brute-force index loops over component arrays of an identity-coframe geometry.
fn oracle(g: &Geometry, c: &Rational) -> (Mat3, Mat3, Mat3) {
    let q = |a: usize, b: usize, d: usize| g.q().get(&[a, b]).coeff(d).clone();
    let t = |b: usize, m: usize, n: usize| {
        if m == n {
            return ScalarField::zero();
        }
        let (lo, hi, s) = if m < n { (m, n, 1) } else { (n, m, -1) };
        let k = basis(2).iter().position(|ix| ix[..] == [lo, hi]).unwrap();
        g.t().get(&[b]).coeff(k).scale(&Rational::from(s))
    };
    let (a_c, b_c) = (int(1) / (int(3) * c), int(-1) / (int(15) * c));
    let zero3 = || -> Mat3 { std::array::from_fn(|_| std::array::from_fn(|_| ScalarField::zero())) };
    let (mut theta, mut tors, mut alpha) = (zero3(), zero3(), zero3());
    for a in 0..3 {
        for b in 0..3 {
            for x in 0..3 {
                for y in 0..3 {
                    let e = Rational::from(eps(a, x, y));
                    theta[a][b] = &theta[a][b] + &q(b, x, y).scale(&(&e * &a_c));
                    tors[a][b] = &tors[a][b] + &t(b, x, y).scale(&(&e * &rat(1, 2)));
                    let trace = (0..3).fold(ScalarField::zero(), |acc, k| &acc + &q(k, k, y));
                    if x == 0 {
                        let e2 = Rational::from(eps(a, b, y));
                        theta[a][b] = &theta[a][b] + &trace.scale(&(&e2 * &b_c));
                    }
                }
            }
        }
    }
    for a in 0..3 {
        for b in 0..3 {
            alpha[a][b] = &(&tors[a][b] + &theta[a][b].scale(&(int(4) * c))) - &theta[b][a].scale(c);
        }
    }
    (tors, theta, alpha)
}

fn c10_g1_regressions() -> Check {
    let g = g1();
    let p = TheoryParams::unit();
    let (rcw_alpha, theta, alpha) = oracle(&g, &p.c);
    ensure!(mats_equal(&rcw_alpha, &rcw_densities(&g).alpha), "oracle vs library RCW α");
    ensure!(mats_equal(&theta, &gt_theta(&g, &p)), "oracle vs library GT θ");
    ensure!(mats_equal(&alpha, &gt_alpha(&g, &p)), "oracle vs library GT α");
    let k = |n, d| ScalarField::constant(rat(n, d));
    ensure!(g.t().get(&[0]) == &defectforms::field::parse_form("dx1^dx2").unwrap(), "T^1 = dx1∧dx2");
    ensure!(g.q().get(&[0, 1]) == &defectforms::field::parse_form("1/2*dx1").unwrap(), "Q_12 = ½dx1");
    ensure!(rcw_alpha[2][0] == k(1, 1), "RCW α^31 = 1");
    ensure!(theta[2][0] == k(-1, 6), "GT θ^31 = −1/6");
    ensure!(alpha[2][0] == k(1, 3) && alpha[0][2] == k(1, 6), "GT α^31 = 1/3, α^13 = 1/6");
    Ok(())
}

fn statuses(g: &Geometry, suites: &[Suite]) -> Vec<ClaimResult> {
    run_claims(g, suites, &TheoryParams::unit(), &cfg()).unwrap()
}

fn c11_claim_registry() -> Check {
    let groups: Vec<(Vec<&str>, Vec<Geometry>)> = vec![
        (vec!["B1", "B2", "B3", "CC1", "CC2", "CC3", "CC4"], vec![g1(), g4(), random_metric_affine(1, 1), random_metric_affine(2, 1)]),
        (vec!["SM1", "SM2", "SM3", "SM4"], vec![g4(), random_semi_metric(1), random_semi_metric(2), random_semi_metric(3)]),
        (vec!["MC1", "MC2"], vec![g2(), random_riemann_cartan(1), random_metric_teleparallel(2)]),
    ];
    for (ids, geoms) in &groups {
        for (k, g) in geoms.iter().enumerate() {
            let res = statuses(g, &SUITES);
            for id in ids {
                let r = res.iter().find(|r| r.claim_id == *id).unwrap();
                ensure!(r.status == Status::Pass, "{id} on fixture {k}: {}", r.status);
            }
        }
    }
    for (k, g) in [g1(), g4(), random_metric_affine(1, 1)].iter().enumerate() {
        let res = statuses(g, &[Suite::Covariant]);
        for n in 1..=7 {
            let id = format!("APPA-{n}");
            let r = res.iter().find(|r| r.claim_id == id).unwrap();
            let o = res.iter().find(|r| r.claim_id == format!("{id}-ORACLE")).unwrap();
            ensure!(r.status != Status::Fail, "{id} FAIL on fixture {k}");
            ensure!(o.status == Status::Pass, "{id}-ORACLE {} on fixture {k}", o.status);
            if r.status == Status::Report {
                ensure!(!r.discrepancy.is_empty(), "{id} REPORT without terms on fixture {k}");
            }
        }
    }
    Ok(())
}

fn c12_gt_claims() -> Check {
    for (k, g) in [g2(), random_metric_teleparallel(1), random_metric_teleparallel(4)].iter().enumerate() {
        let res = statuses(g, &[Suite::Gt]);
        for id in ["GT-DIVTHETA-T0", "GT-DIVALPHA-T0"] {
            let r = res.iter().find(|r| r.claim_id == id).unwrap();
            ensure!(r.status == Status::Pass, "{id} {} on Q = 0 fixture {k}", r.status);
        }
    }
    for (k, g) in [g1(), g5(), admissible_rotated()].iter().enumerate() {
        let a = format_report(&statuses(g, &[Suite::Gt]));
        let b = format_report(&statuses(g, &[Suite::Gt]));
        ensure!(a == b, "GT report differs across runs on fixture {k}");
        ensure!(!a.contains("STATUS=FAIL"), "GT FAIL on fixture {k}");
        ensure!(a.contains("STATUS=REPORT") && a.contains("  TERM "), "no term-level REPORT on fixture {k}");
    }
    Ok(())
}

fn c13_linear_limit() -> Check {
    let pt = Point::new(rat(1, 3), rat(1, 5), rat(1, 7));
    for seed in 1..=5 {
        let lr = linearized_continuity(&random_flat_riemann_cartan(seed), &rat(1, 32), &pt).unwrap();
        for r in lr.ratios() {
            ensure!((r - 4.0).abs() <= 1.0, "ratio {r} on seed {seed}");
        }
    }
    let lr = linearized_continuity(&linear_fixture(), &rat(1, 32), &pt).unwrap();
    ensure!(lr.res1.iter().chain(&lr.res2).all(|r| *r <= 1e-10), "linear fixture residuals {lr:?}");
    Ok(())
}

fn c14_numerics() -> Check {
    let ncfg = NumericConfig::default();
    let square = Patch::unit_square(0, 1);
    let mut r = rng(14);
    for k in 0..20 {
        let f = random::form(&mut r, 1, 3, 4);
        let lhs = line_integral(&TensorForm::from_form(f.clone(), Basis::Coordinate), &square.boundary(), &ncfg).unwrap();
        let rhs = surface_integral(&TensorForm::from_form(f.d(), Basis::Coordinate), &square, &ncfg).unwrap();
        ensure!((lhs - rhs).abs() <= 1e-8, "Stokes on form {k}: {lhs} vs {rhs}");
    }
    let seg = PiecewiseCurve::new(vec![Segment::line(&[rat(0, 1), rat(0, 1), rat(0, 1)], &[rat(1, 1), rat(1, 1), rat(1, 1)])]).unwrap();
    let u = FrameVector([0.3, -1.0, 2.0]);
    let ratio = rk4_order_ratio(&g2(), &seg, u, &NumericConfig { ode_steps: 16, ..ncfg }).unwrap();
    ensure!((ratio - 16.0).abs() <= 0.3 * 16.0, "RK4 order ratio {ratio}");
    let fine = NumericConfig { ode_steps: 4096, ..ncfg };
    let v = FrameVector([0.0, 1.0, 2.0]);
    for (k, g) in [g1(), g2(), g3(), g4(), g5()].iter().enumerate() {
        for lp in [PiecewiseCurve::unit_square(0, 1), PiecewiseCurve::unit_square(1, 2)] {
            let d = product_drift(g, &lp, u, v, &fine).unwrap();
            ensure!(d.drift.abs() <= 1e-8, "teleparallel drift {} on fixture {}", d.drift, k + 1);
            if k == 0 {
                ensure!((d.drift - d.line_prediction).abs() <= 1e-6, "G1 drift vs line prediction {d:?}");
            }
        }
    }
    let th = rat(3, 2);
    let mut d = DefectDensities::zero(Theory::Rcw);
    for q in 0..3 {
        d.theta[2][q] = ScalarField::constant(&th * Rational::from(q as u32 + 1));
        d.alpha[q][q] = ScalarField::constant(rat(q as i64 + 1, 4));
    }
    let bf = burgers_frank(&g0(), &d, &square, &ncfg).unwrap();
    let t = |q: usize| 1.5 * (q as f64 + 1.0);
    let want_b = [-t(2) * 0.5, t(2) * 0.5, t(0) * 0.5 - t(1) * 0.5 + 0.75];
    for l in 0..3 {
        ensure!((bf.frank[l] - t(l)).abs() <= 1e-12, "Frank {l}: {}", bf.frank[l]);
        ensure!((bf.burgers[l] - want_b[l]).abs() <= 1e-12, "Burgers {l}: {} vs {}", bf.burgers[l], want_b[l]);
    }
    Ok(())
}

fn fixture_path(name: &str) -> String {
    format!("{}/fixtures/{name}.scn", env!("CARGO_MANIFEST_DIR"))
}

fn cli(args: &[&str]) -> (i32, String) {
    let out = Process::new(env!("CARGO_BIN_EXE_defectforms")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap() + &String::from_utf8(out.stderr).unwrap())
}

fn c15_cli() -> Check {
    for name in NAMES {
        let path = fixture_path(name);
        let sc = parse_scenario(&std::fs::read_to_string(&path).unwrap()).map_err(|e| e.to_string())?;
        ensure!(parse_scenario(&serialize_scenario(&sc)).unwrap() == sc, "{name}: parse/serialize round trip");
        let lib = run(Command::All, &sc, &path, &Options::default()).unwrap();
        let (code, a) = cli(&["all", &path, "--seed", "7"]);
        let (_, b) = cli(&["all", &path, "--seed", "7"]);
        ensure!(code == 0, "{name}: exit {code}");
        ensure!(a == b, "{name}: reports differ across runs");
        ensure!(a.ends_with(&format!("SUMMARY PASS={} FAIL=0 REPORT={} SKIP={}\n", lib.summary.pass, lib.summary.report, lib.summary.skip)), "{name}: summary line");
        let (_, j1) = cli(&["identities", &path, "--json"]);
        let (_, j2) = cli(&["identities", &path, "--json"]);
        ensure!(j1 == j2 && j1.starts_with('{'), "{name}: JSON report not byte-identical");
        let (strict, _) = cli(&["all", &path, "--strict-report"]);
        ensure!(strict == i32::from(lib.summary.report > 0), "{name}: --strict-report exit {strict}");
    }
    let (code, text) = cli(&["continuity", &fixture_path("g2")]);
    ensure!(code == 0 && text.contains("CLAIM MC1 STATUS=PASS") && text.contains("CLAIM GT-DIVTHETA STATUS=PASS") && text.contains("FAIL=0"), "g2 continuity");
    let (code, text) = cli(&["all", "missing.scn"]);
    ensure!(code == 2 && text.contains("file not found"), "missing file: exit {code}");
    let (code, _) = cli(&["frobnicate", &fixture_path("g0")]);
    ensure!(code == 2, "unknown command: exit {code}");
    let dir = std::env::temp_dir().join(format!("defectforms-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.scn");
    std::fs::write(&bad, "[geometry]\nkind = gauge\nlamda.1.2 = x\n").unwrap();
    let (code, text) = cli(&["all", bad.to_str().unwrap()]);
    ensure!(code == 2 && text.contains("line 3"), "parse error: exit {code}");
    let pole = dir.join("pole.scn");
    std::fs::write(&pole, "[geometry]\nkind = explicit\nomega.1.2 = 1/x*dx2\n[curve c]\nsegment = (t, 0, 0)\nsegment = (1 - t, 0, 0)\n").unwrap();
    let (code, text) = cli(&["holonomy", pole.to_str().unwrap()]);
    ensure!(code == 1 && text.contains("FAIL=1"), "failing claim: exit {code}");
    std::fs::remove_dir_all(&dir).ok();
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 15] = [
        ("epsilon contraction identities", c1_epsilon),
        ("Hodge and interior identities", c2_hodge_interior),
        ("d∘d = 0 and Bianchi identities", c3_dd_bianchi),
        ("connection decomposition", c4_connection_split),
        ("curvature splits", c5_curvature_split),
        ("flat-connection generators", c6_generators),
        ("irreducible decompositions and piece counts", c7_irreducible),
        ("constant solver and disclination image map", c8_constants_and_image),
        ("defect-map round trips", c9_round_trips),
        ("G1 regressions against the index-loop oracle", c10_g1_regressions),
        ("claim registry", c11_claim_registry),
        ("general-teleparallel continuity claims", c12_gt_claims),
        ("linear limit", c13_linear_limit),
        ("numerics: Stokes, RK4, drift, fluxes", c14_numerics),
        ("CLI determinism, round trip and exit codes", c15_cli),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let start = Instant::now();
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = match catch_unwind(AssertUnwindSafe(f)) {
            Ok(r) => r,
            Err(p) => Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into())),
        };
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2} PASS  {name} ({secs:.1}s)", k + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.1}s): {msg}", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed in {:.1}s", criteria.len() - failed, start.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
