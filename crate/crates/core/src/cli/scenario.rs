//! Scenario files: a line-based `[section]` / `key = value` format.

use crate::defects::{solve_constants, Mat3, TheoryParams};
use crate::exterior::{Coframe, ExteriorError, Form, Matrix};
use crate::field::rational::rat;
use crate::field::{parse_form, parse_param_poly, parse_scalar, MultiPoly, ParseError, Rational, ScalarField, Vars, ZeroTestConfig};
use crate::geometry::{cayley_rotation, conformal_gauge, gauge_connection, symmetric_coframe, Connection, GaugeField, Geometry};
use crate::transport::{FrameVector, NumericConfig, Patch, PiecewiseCurve, Segment};
use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use thiserror::Error;

const MAX_BYTES: usize = 1 << 20;
const MAX_SEGMENTS: usize = 64;
const MAX_SECTIONS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScenarioError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}: {msg}")]
    Semantic { line: usize, msg: String },
}

impl ScenarioError {
    fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Self {
        ScenarioError::Syntax { line, col, msg: msg.into() }
    }

    fn semantic(line: usize, msg: impl Into<String>) -> Self {
        ScenarioError::Semantic { line, msg: msg.into() }
    }
}

type Result<T> = std::result::Result<T, ScenarioError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeometryKind {
    Gauge,
    Cayley,
    Symmetric,
    Conformal,
    Explicit,
}

impl GeometryKind {
    fn name(self) -> &'static str {
        match self {
            GeometryKind::Gauge => "gauge",
            GeometryKind::Cayley => "cayley",
            GeometryKind::Symmetric => "symmetric",
            GeometryKind::Conformal => "conformal",
            GeometryKind::Explicit => "explicit",
        }
    }

    fn from_name(s: &str) -> Option<Self> {
        [Self::Gauge, Self::Cayley, Self::Symmetric, Self::Conformal, Self::Explicit].into_iter().find(|k| k.name() == s)
    }
}

/// Every field a geometry kind may use; keys a kind does not use are rejected
/// at parse time, so unused fields hold their defaults.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometrySpec {
    pub kind: GeometryKind,
    /// `Λ^a_b` (gauge, symmetric); identity by default
    pub lambda: Matrix,
    /// antisymmetric `S` (cayley, conformal); zero by default
    pub s: Matrix,
    /// conformal factor
    pub f: ScalarField,
    /// `F^a` (symmetric); the coordinates by default
    pub map: [ScalarField; 3],
    /// coframe matrix `e^a = frame[a][i] dx^i`; identity by default
    pub frame: Matrix,
    /// `ω^a_b` (explicit)
    pub omega: Vec<Form>,
}

impl GeometrySpec {
    pub fn new(kind: GeometryKind) -> Self {
        GeometrySpec {
            kind,
            lambda: Matrix::identity(3),
            s: Matrix::zero(3),
            f: ScalarField::one(),
            map: std::array::from_fn(ScalarField::var),
            frame: Matrix::identity(3),
            omega: vec![Form::zero(1); 9],
        }
    }

    fn allows(&self, key: &str) -> bool {
        use GeometryKind::*;
        match key {
            "lambda" => matches!(self.kind, Gauge | Symmetric),
            "s" => matches!(self.kind, Cayley | Conformal),
            "f" => self.kind == Conformal,
            "map" => self.kind == Symmetric,
            "frame" => self.kind != Symmetric,
            "omega" => self.kind == Explicit,
            _ => false,
        }
    }

    pub fn build(&self) -> std::result::Result<Geometry, ExteriorError> {
        let frame = || Coframe::new(self.frame.clone());
        Ok(match self.kind {
            GeometryKind::Gauge => Geometry::new(frame()?, gauge_connection(&GaugeField::new(self.lambda.clone())?)),
            GeometryKind::Cayley => Geometry::new(frame()?, gauge_connection(&cayley_rotation(&self.s)?)),
            GeometryKind::Symmetric => {
                let g = GaugeField::new(self.lambda.clone())?;
                Geometry::new(symmetric_coframe(&g, &self.map)?, gauge_connection(&g))
            }
            GeometryKind::Conformal => Geometry::new(frame()?, gauge_connection(&conformal_gauge(&self.f, &self.s)?)),
            GeometryKind::Explicit => Geometry::new(frame()?, Connection::from_fn(|i| self.omega[i[0] * 3 + i[1]].clone())),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurveSpec {
    Segments(Vec<[MultiPoly; 3]>),
    /// boundary of a named patch
    Boundary(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Scenario {
    pub geometry: GeometrySpec,
    pub c: Rational,
    /// optional disclination input for the image-map round trip
    pub theta: Option<Mat3>,
    pub u: [Rational; 3],
    pub v: [Rational; 3],
    pub curves: BTreeMap<String, CurveSpec>,
    pub patches: BTreeMap<String, [MultiPoly; 3]>,
    pub zero: ZeroTestConfig,
    pub numeric: NumericConfig,
}

impl Scenario {
    pub fn new(geometry: GeometrySpec) -> Self {
        Scenario {
            geometry,
            c: rat(1, 1),
            theta: None,
            u: [rat(1, 1), rat(0, 1), rat(0, 1)],
            v: [rat(0, 1), rat(1, 1), rat(0, 1)],
            curves: BTreeMap::new(),
            patches: BTreeMap::new(),
            zero: ZeroTestConfig::default(),
            numeric: NumericConfig::default(),
        }
    }

    pub fn geometry(&self) -> Geometry {
        self.geometry.build().expect("validated when parsed")
    }

    pub fn params(&self) -> TheoryParams {
        solve_constants(self.c.clone()).expect("validated when parsed")
    }

    pub fn vectors(&self) -> (FrameVector, FrameVector) {
        let f = |v: &[Rational; 3]| FrameVector(std::array::from_fn(|i| crate::field::rational::to_f64(&v[i])));
        (f(&self.u), f(&self.v))
    }

    pub fn patch(&self, name: &str) -> Patch {
        Patch::new(self.patches[name].clone())
    }

    pub fn curve(&self, name: &str) -> std::result::Result<PiecewiseCurve, crate::transport::TransportError> {
        match &self.curves[name] {
            CurveSpec::Segments(segs) => PiecewiseCurve::new(segs.iter().cloned().map(Segment::new).collect()),
            CurveSpec::Boundary(p) => Ok(self.patch(p).boundary()),
        }
    }
}

#[derive(Clone, Debug)]
struct Entry {
    key: String,
    value: String,
    line: usize,
    /// column of the first value character
    col: usize,
}

impl Entry {
    fn lift(&self, e: ParseError) -> ScenarioError {
        let col = if e.line == 1 { self.col + e.col - 1 } else { e.col };
        ScenarioError::syntax(self.line, col, format!("{}: {}", self.key, e.msg))
    }

    fn scalar(&self) -> Result<ScalarField> {
        parse_scalar(&self.value).map_err(|e| self.lift(e))
    }

    fn constant(&self) -> Result<Rational> {
        let s = self.scalar()?;
        s.constant_value().ok_or_else(|| ScenarioError::semantic(self.line, format!("{} must be a constant", self.key)))
    }

    fn number<T: std::str::FromStr>(&self) -> Result<T> {
        self.value.parse().map_err(|_| ScenarioError::syntax(self.line, self.col, format!("{}: expected a number", self.key)))
    }

    /// Splits `(a, b, c)` or `a, b, c` into exactly three parts.
    fn triple(&self) -> Result<[String; 3]> {
        let v = self.value.trim();
        let inner = if v.starts_with('(') && v.ends_with(')') && outer_parens(v) { &v[1..v.len() - 1] } else { v };
        let mut parts = Vec::new();
        let mut depth = 0i32;
        let mut cur = String::new();
        for ch in inner.chars() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                ',' if depth == 0 => {
                    parts.push(std::mem::take(&mut cur));
                    continue;
                }
                _ => {}
            }
            cur.push(ch);
        }
        parts.push(cur);
        <[String; 3]>::try_from(parts)
            .map_err(|p| ScenarioError::syntax(self.line, self.col, format!("{}: expected 3 comma-separated entries, found {}", self.key, p.len())))
    }

    fn polys(&self, vars: Vars) -> Result<[MultiPoly; 3]> {
        let [a, b, c] = self.triple()?;
        let p = |s: &str| parse_param_poly(s, vars).map_err(|e| ScenarioError::syntax(self.line, self.col, format!("{}: {}", self.key, e.msg)));
        Ok([p(&a)?, p(&b)?, p(&c)?])
    }

    fn constants(&self) -> Result<[Rational; 3]> {
        let [a, b, c] = self.triple()?;
        let k = |s: &str| {
            let f = parse_scalar(s).map_err(|e| ScenarioError::syntax(self.line, self.col, format!("{}: {}", self.key, e.msg)))?;
            f.constant_value().ok_or_else(|| ScenarioError::semantic(self.line, format!("{} entries must be constants", self.key)))
        };
        Ok([k(&a)?, k(&b)?, k(&c)?])
    }
}

/// True when the opening parenthesis of `v` closes at its last character.
fn outer_parens(v: &str) -> bool {
    let mut depth = 0i32;
    for (i, ch) in v.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth == 0 {
            return i == v.len() - 1;
        }
    }
    false
}

#[derive(Clone, Debug)]
struct Section {
    name: String,
    arg: Option<String>,
    line: usize,
    entries: Vec<Entry>,
}

fn is_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

fn lex(text: &str) -> Result<Vec<Section>> {
    if text.len() > MAX_BYTES {
        return Err(ScenarioError::syntax(1, 1, format!("scenario exceeds {MAX_BYTES} bytes")));
    }
    let mut out: Vec<Section> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap_or("");
        let trimmed = body.trim();
        if trimmed.is_empty() {
            continue;
        }
        let indent = body.len() - body.trim_start().len();
        if let Some(h) = trimmed.strip_prefix('[') {
            let h = h.strip_suffix(']').ok_or_else(|| ScenarioError::syntax(line, indent + 1, "unterminated section header"))?;
            let mut words = h.split_whitespace();
            let name = words.next().unwrap_or("").to_string();
            let arg = words.next().map(str::to_string);
            if words.next().is_some() {
                return Err(ScenarioError::syntax(line, indent + 1, "section header has too many words"));
            }
            if out.len() >= MAX_SECTIONS {
                return Err(ScenarioError::syntax(line, 1, format!("more than {MAX_SECTIONS} sections")));
            }
            out.push(Section { name, arg, line, entries: Vec::new() });
            continue;
        }
        let eq = body.find('=').ok_or_else(|| ScenarioError::syntax(line, indent + 1, "expected `key = value`"))?;
        let key = body[..eq].trim().to_string();
        let after = &body[eq + 1..];
        let value = after.trim().to_string();
        let col = eq + 2 + (after.len() - after.trim_start().len());
        if key.is_empty() {
            return Err(ScenarioError::syntax(line, indent + 1, "missing key"));
        }
        if value.is_empty() {
            return Err(ScenarioError::syntax(line, col, format!("{key}: missing value")));
        }
        let sec = out.last_mut().ok_or_else(|| ScenarioError::syntax(line, indent + 1, "entry before the first section header"))?;
        sec.entries.push(Entry { key, value, line, col });
    }
    Ok(out)
}

/// `name.i.j` with 1-based indices; returns `(name, [i, j])` 0-based.
fn dotted(key: &str) -> Option<(&str, Vec<usize>)> {
    let mut parts = key.split('.');
    let name = parts.next()?;
    let idx: Option<Vec<usize>> = parts.map(|p| p.parse::<usize>().ok().filter(|i| (1..=3).contains(i)).map(|i| i - 1)).collect();
    Some((name, idx?))
}

fn unknown(e: &Entry, section: &str) -> ScenarioError {
    ScenarioError::syntax(e.line, 1, format!("unknown key `{}` in [{section}]", e.key))
}

fn no_duplicates(sec: &Section) -> Result<()> {
    let mut seen = BTreeMap::new();
    for e in &sec.entries {
        if e.key == "segment" {
            continue;
        }
        if let Some(first) = seen.insert(e.key.as_str(), e.line) {
            return Err(ScenarioError::syntax(e.line, 1, format!("duplicate key `{}` (first set on line {first})", e.key)));
        }
    }
    Ok(())
}

fn geometry_section(sec: &Section) -> Result<GeometrySpec> {
    let kind_entry = sec.entries.iter().find(|e| e.key == "kind").ok_or_else(|| ScenarioError::semantic(sec.line, "[geometry] needs a `kind`"))?;
    let kind = GeometryKind::from_name(&kind_entry.value).ok_or_else(|| {
        ScenarioError::syntax(kind_entry.line, kind_entry.col, format!("unknown geometry kind `{}`", kind_entry.value))
    })?;
    let mut g = GeometrySpec::new(kind);
    for e in &sec.entries {
        if e.key == "kind" {
            continue;
        }
        let (name, idx) = dotted(&e.key).ok_or_else(|| unknown(e, "geometry"))?;
        let arity = match name {
            "lambda" | "s" | "frame" | "omega" => 2,
            "map" => 1,
            "f" => 0,
            _ => return Err(unknown(e, "geometry")),
        };
        if idx.len() != arity {
            return Err(unknown(e, "geometry"));
        }
        if !g.allows(name) {
            return Err(ScenarioError::semantic(e.line, format!("`{}` is not used by kind {}", e.key, kind.name())));
        }
        match name {
            "lambda" => g.lambda.set(idx[0], idx[1], e.scalar()?),
            "s" => g.s.set(idx[0], idx[1], e.scalar()?),
            "frame" => g.frame.set(idx[0], idx[1], e.scalar()?),
            "f" => g.f = e.scalar()?,
            "map" => g.map[idx[0]] = e.scalar()?,
            _ => {
                let f = parse_form(&e.value).map_err(|err| e.lift(err))?;
                let f = match f.degree() {
                    1 => f,
                    0 if f.is_exact_zero() => Form::zero(1),
                    d => return Err(ScenarioError::semantic(e.line, format!("{} must be a 1-form, found a {d}-form", e.key))),
                };
                g.omega[idx[0] * 3 + idx[1]] = f;
            }
        }
    }
    if kind == GeometryKind::Conformal && !sec.entries.iter().any(|e| e.key == "f") {
        return Err(ScenarioError::semantic(sec.line, "kind conformal needs a factor `f`"));
    }
    g.build().map_err(|err| {
        let what = match err {
            ExteriorError::DegenerateGauge => "gauge matrix is singular".to_string(),
            ExteriorError::NotAntisymmetric => "`s` is not antisymmetric".to_string(),
            ExteriorError::DegenerateCoframe => "coframe is degenerate".to_string(),
            other => other.to_string(),
        };
        ScenarioError::semantic(sec.line, what)
    })?;
    Ok(g)
}

pub fn parse_scenario(text: &str) -> Result<Scenario> {
    let sections = lex(text)?;
    let mut geometry = None;
    let mut seen = BTreeMap::new();
    for sec in &sections {
        let label = match &sec.arg {
            Some(a) => format!("{} {a}", sec.name),
            None => sec.name.clone(),
        };
        if let Some(first) = seen.insert(label.clone(), sec.line) {
            return Err(ScenarioError::syntax(sec.line, 1, format!("duplicate section [{label}] (first on line {first})")));
        }
        let takes_arg = matches!(sec.name.as_str(), "curve" | "patch");
        match (&sec.arg, takes_arg) {
            (None, true) => return Err(ScenarioError::syntax(sec.line, 1, format!("[{}] needs a name", sec.name))),
            (Some(a), true) if !is_name(a) => return Err(ScenarioError::syntax(sec.line, 1, format!("invalid name `{a}`"))),
            (Some(_), false) => return Err(ScenarioError::syntax(sec.line, 1, format!("[{}] takes no name", sec.name))),
            _ => {}
        }
        no_duplicates(sec)?;
        if sec.name == "geometry" {
            geometry = Some(geometry_section(sec)?);
        }
    }
    let first_line = sections.first().map_or(1, |s| s.line);
    let mut sc = Scenario::new(geometry.ok_or_else(|| ScenarioError::semantic(first_line, "missing [geometry] section"))?);
    for sec in &sections {
        match sec.name.as_str() {
            "geometry" => {}
            "theory" => theory_section(sec, &mut sc)?,
            "vectors" => {
                for e in &sec.entries {
                    match e.key.as_str() {
                        "U" => sc.u = e.constants()?,
                        "V" => sc.v = e.constants()?,
                        _ => return Err(unknown(e, "vectors")),
                    }
                }
            }
            "curve" => {
                let name = sec.arg.clone().expect("checked");
                let mut segs = Vec::new();
                let mut boundary = None;
                for e in &sec.entries {
                    match e.key.as_str() {
                        "segment" => segs.push(e.polys(Vars::Curve)?),
                        "boundary" if is_name(&e.value) => boundary = Some(e.value.clone()),
                        "boundary" => return Err(ScenarioError::syntax(e.line, e.col, format!("invalid name `{}`", e.value))),
                        _ => return Err(unknown(e, "curve")),
                    }
                }
                if segs.len() > MAX_SEGMENTS {
                    return Err(ScenarioError::semantic(sec.line, format!("curve `{name}` has more than {MAX_SEGMENTS} segments")));
                }
                let spec = match (boundary, segs.is_empty()) {
                    (Some(b), true) => CurveSpec::Boundary(b),
                    (None, false) => CurveSpec::Segments(segs),
                    (Some(_), false) => return Err(ScenarioError::semantic(sec.line, format!("curve `{name}` has both segments and a boundary"))),
                    (None, true) => return Err(ScenarioError::semantic(sec.line, format!("curve `{name}` is empty"))),
                };
                sc.curves.insert(name, spec);
            }
            "patch" => {
                let name = sec.arg.clone().expect("checked");
                let mut map = None;
                for e in &sec.entries {
                    match e.key.as_str() {
                        "map" => map = Some(e.polys(Vars::Patch)?),
                        _ => return Err(unknown(e, "patch")),
                    }
                }
                let map = map.ok_or_else(|| ScenarioError::semantic(sec.line, format!("patch `{name}` needs a `map`")))?;
                sc.patches.insert(name, map);
            }
            "config" => config_section(sec, &mut sc)?,
            other => return Err(ScenarioError::syntax(sec.line, 1, format!("unknown section [{other}]"))),
        }
    }
    for sec in sections.iter().filter(|s| s.name == "curve") {
        let name = sec.arg.as_deref().expect("checked");
        if let CurveSpec::Boundary(p) = &sc.curves[name] {
            if !sc.patches.contains_key(p) {
                return Err(ScenarioError::semantic(sec.line, format!("curve `{name}` refers to unknown patch `{p}`")));
            }
        }
        if let Err(e) = sc.curve(name) {
            return Err(ScenarioError::semantic(sec.line, format!("curve `{name}`: {e}")));
        }
    }
    Ok(sc)
}

fn theory_section(sec: &Section, sc: &mut Scenario) -> Result<()> {
    let mut theta: Option<Mat3> = None;
    for e in &sec.entries {
        if e.key == "C" {
            sc.c = e.constant()?;
            if solve_constants(sc.c.clone()).is_err() {
                return Err(ScenarioError::semantic(e.line, "C must be nonzero"));
            }
            continue;
        }
        match dotted(&e.key) {
            Some(("theta", idx)) if idx.len() == 2 => {
                let m = theta.get_or_insert_with(|| std::array::from_fn(|_| std::array::from_fn(|_| ScalarField::zero())));
                m[idx[0]][idx[1]] = e.scalar()?;
            }
            _ => return Err(unknown(e, "theory")),
        }
    }
    if let Some(m) = &theta {
        let tr = &(&m[0][0] + &m[1][1]) + &m[2][2];
        if !tr.is_exact_zero() {
            return Err(ScenarioError::semantic(sec.line, format!("theta is not traceless (trace {tr})")));
        }
    }
    sc.theta = theta;
    Ok(())
}

fn config_section(sec: &Section, sc: &mut Scenario) -> Result<()> {
    for e in &sec.entries {
        match e.key.as_str() {
            "seed" => sc.zero.seed = e.number()?,
            "points" => sc.zero.num_points = e.number()?,
            "coord_bound" => sc.zero.coord_bound = e.number()?,
            "max_expand_degree" => sc.zero.max_expand_degree = e.number()?,
            "ode_steps" => sc.numeric.ode_steps = e.number()?,
            "quad_order" => sc.numeric.quad_order = e.number()?,
            "tol" => sc.numeric.tol = e.number()?,
            _ => return Err(unknown(e, "config")),
        }
    }
    if let Err(err) = sc.zero.validate() {
        return Err(ScenarioError::semantic(sec.line, err.to_string()));
    }
    if let Err(err) = sc.numeric.validate() {
        return Err(ScenarioError::semantic(sec.line, err.to_string()));
    }
    if sc.numeric.quad_order > 128 || sc.numeric.ode_steps > 1 << 16 {
        return Err(ScenarioError::semantic(sec.line, "quad_order is capped at 128 and ode_steps at 65536"));
    }
    Ok(())
}

fn matrix_entries(out: &mut String, name: &str, m: &Matrix, default: &Matrix) {
    for i in 0..3 {
        for j in 0..3 {
            if m.get(i, j) != default.get(i, j) {
                let _ = writeln!(out, "{name}.{}.{} = {}", i + 1, j + 1, m.get(i, j));
            }
        }
    }
}

fn triple_text(p: &[MultiPoly; 3], names: &[&str; 3]) -> String {
    format!("({}, {}, {})", p[0].display_with(names), p[1].display_with(names), p[2].display_with(names))
}

/// Canonical text; `parse_scenario` of the output equals `sc`.
pub fn serialize_scenario(sc: &Scenario) -> String {
    let g = &sc.geometry;
    let d = GeometrySpec::new(g.kind);
    let mut out = String::new();
    let _ = writeln!(out, "[geometry]\nkind = {}", g.kind.name());
    matrix_entries(&mut out, "lambda", &g.lambda, &d.lambda);
    matrix_entries(&mut out, "s", &g.s, &d.s);
    if g.kind == GeometryKind::Conformal {
        let _ = writeln!(out, "f = {}", g.f);
    }
    for a in 0..3 {
        if g.map[a] != d.map[a] {
            let _ = writeln!(out, "map.{} = {}", a + 1, g.map[a]);
        }
    }
    matrix_entries(&mut out, "frame", &g.frame, &d.frame);
    for (k, f) in g.omega.iter().enumerate() {
        if !f.is_exact_zero() {
            let _ = writeln!(out, "omega.{}.{} = {f}", k / 3 + 1, k % 3 + 1);
        }
    }
    let _ = writeln!(out, "\n[theory]\nC = {}", sc.c);
    if let Some(th) = &sc.theta {
        for (a, row) in th.iter().enumerate() {
            for (b, x) in row.iter().enumerate() {
                if !x.is_exact_zero() {
                    let _ = writeln!(out, "theta.{}.{} = {x}", a + 1, b + 1);
                }
            }
        }
    }
    let v = |r: &[Rational; 3]| format!("{}, {}, {}", r[0], r[1], r[2]);
    let _ = writeln!(out, "\n[vectors]\nU = {}\nV = {}", v(&sc.u), v(&sc.v));
    for (name, spec) in &sc.curves {
        let _ = writeln!(out, "\n[curve {name}]");
        match spec {
            CurveSpec::Segments(segs) => {
                for s in segs {
                    let _ = writeln!(out, "segment = {}", triple_text(s, &Vars::Curve.names()));
                }
            }
            CurveSpec::Boundary(p) => {
                let _ = writeln!(out, "boundary = {p}");
            }
        }
    }
    for (name, map) in &sc.patches {
        let _ = writeln!(out, "\n[patch {name}]\nmap = {}", triple_text(map, &Vars::Patch.names()));
    }
    let (z, n) = (&sc.zero, &sc.numeric);
    let _ = write!(
        out,
        "\n[config]\nseed = {}\npoints = {}\ncoord_bound = {}\nmax_expand_degree = {}\node_steps = {}\nquad_order = {}\ntol = {:e}\n",
        z.seed, z.num_points, z.coord_bound, z.max_expand_degree, n.ode_steps, n.quad_order, n.tol
    );
    out
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_scenario(self))
    }
}
