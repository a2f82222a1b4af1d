//! Floating-point evaluation, Gauss–Legendre quadrature over polynomial curves
//! and patches, RK4 parallel transport and the defect flux integrals.

use crate::defects::DefectDensities;
use crate::exterior::{basis, Coframe, Form, Matrix, TensorForm};
use crate::field::{MultiPoly, Rational, ScalarField};
use crate::geometry::Geometry;
use gauss_quad::GaussLegendre;
use serde::Serialize;
use std::num::NonZeroUsize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TransportError {
    #[error("pole near point ({0}, {1}, {2})")]
    Pole(f64, f64, f64),
    #[error("coframe orientation flips near point ({0}, {1}, {2})")]
    OrientationFlip(f64, f64, f64),
    #[error("curve is not closed")]
    NotClosed,
    #[error("segment {0} does not start where segment {1} ends")]
    Disconnected(usize, usize),
    #[error("curve has no segments")]
    Empty,
    #[error("expected a scalar-valued {0}-form")]
    WrongShape(usize),
    #[error("flux integrals need the identity coframe")]
    NonIdentityFrame,
    #[error("invalid numeric configuration: {0}")]
    Config(String),
}

type Result<T> = std::result::Result<T, TransportError>;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct NumericConfig {
    pub ode_steps: usize,
    pub quad_order: usize,
    pub tol: f64,
}

impl Default for NumericConfig {
    fn default() -> Self {
        NumericConfig { ode_steps: 1024, quad_order: 16, tol: 1e-9 }
    }
}

impl NumericConfig {
    pub fn validate(&self) -> Result<()> {
        if self.ode_steps < 16 {
            return Err(TransportError::Config(format!("ode_steps = {} < 16", self.ode_steps)));
        }
        if self.quad_order < 4 {
            return Err(TransportError::Config(format!("quad_order = {} < 4", self.quad_order)));
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(TransportError::Config(format!("tol = {} is not a positive number", self.tol)));
        }
        Ok(())
    }

    /// Gauss–Legendre nodes and weights mapped to `[0, 1]`.
    fn rule(&self) -> Vec<(f64, f64)> {
        let g = GaussLegendre::new(NonZeroUsize::new(self.quad_order).expect("validated"));
        g.as_node_weight_pairs().iter().map(|&(x, w)| (0.5 * (x + 1.0), 0.5 * w)).collect()
    }
}

/// Frame components `U^a`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FrameVector(pub [f64; 3]);

impl FrameVector {
    pub fn dot(&self, o: &FrameVector) -> f64 {
        (0..3).map(|a| self.0[a] * o.0[a]).sum()
    }

    pub fn distance(&self, o: &FrameVector) -> f64 {
        (0..3).map(|a| (self.0[a] - o.0[a]).powi(2)).sum::<f64>().sqrt()
    }
}

/// Substitutes `subs[i]` for the variable `x_{i+1}`.
pub fn compose(p: &MultiPoly, subs: &[MultiPoly; 3]) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for (m, c) in p.terms() {
        let mut t = MultiPoly::constant(c.clone());
        for (axis, e) in m.exps().into_iter().enumerate() {
            if e > 0 {
                t = &t * &subs[axis].pow(e);
            }
        }
        out = &out + &t;
    }
    out
}

fn exact_at(p: &[MultiPoly; 3], at: [Rational; 3]) -> [Rational; 3] {
    std::array::from_fn(|i| p[i].eval(&at))
}

fn eval3(p: &[MultiPoly; 3], at: [f64; 3]) -> [f64; 3] {
    std::array::from_fn(|i| p[i].eval_f64(at))
}

fn zero_r() -> Rational {
    Rational::from(0u32)
}

/// A polynomial map `[0,1] → R³` in the variable `x1` (read as `t`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    map: [MultiPoly; 3],
    vel: [MultiPoly; 3],
}

impl Segment {
    pub fn new(map: [MultiPoly; 3]) -> Self {
        let vel = std::array::from_fn(|i| map[i].derivative(0));
        Segment { map, vel }
    }

    /// Straight segment from `a` to `b`.
    pub fn line(a: &[Rational; 3], b: &[Rational; 3]) -> Self {
        let t = MultiPoly::var(0);
        Segment::new(std::array::from_fn(|i| &MultiPoly::constant(a[i].clone()) + &t.scale(&(&b[i] - &a[i]))))
    }

    pub fn map(&self) -> &[MultiPoly; 3] {
        &self.map
    }

    pub fn start(&self) -> [Rational; 3] {
        exact_at(&self.map, [zero_r(), zero_r(), zero_r()])
    }

    pub fn end(&self) -> [Rational; 3] {
        exact_at(&self.map, [Rational::from(1u32), zero_r(), zero_r()])
    }

    pub fn point(&self, t: f64) -> [f64; 3] {
        eval3(&self.map, [t, 0.0, 0.0])
    }

    pub fn velocity(&self, t: f64) -> [f64; 3] {
        eval3(&self.vel, [t, 0.0, 0.0])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewiseCurve {
    segments: Vec<Segment>,
    closed: bool,
}

impl PiecewiseCurve {
    /// Chains the segments; endpoints must coincide exactly.
    pub fn new(segments: Vec<Segment>) -> Result<Self> {
        if segments.is_empty() {
            return Err(TransportError::Empty);
        }
        for i in 1..segments.len() {
            if segments[i].start() != segments[i - 1].end() {
                return Err(TransportError::Disconnected(i, i - 1));
            }
        }
        let closed = segments[segments.len() - 1].end() == segments[0].start();
        Ok(PiecewiseCurve { segments, closed })
    }

    /// Straight segments through the vertices, closed back to the first.
    pub fn polygon(vertices: &[[Rational; 3]]) -> Result<Self> {
        let n = vertices.len();
        PiecewiseCurve::new((0..n).map(|i| Segment::line(&vertices[i], &vertices[(i + 1) % n])).collect())
    }

    /// Counter-clockwise unit square in the plane of axes `i`, `j`.
    pub fn unit_square(i: usize, j: usize) -> Self {
        let v = |a: u32, b: u32| {
            let mut p = [zero_r(), zero_r(), zero_r()];
            p[i] = Rational::from(a);
            p[j] = Rational::from(b);
            p
        };
        PiecewiseCurve::polygon(&[v(0, 0), v(1, 0), v(1, 1), v(0, 1)]).expect("closed polygon")
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }
}

/// A polynomial map `[0,1]² → R³` in the variables `x1`, `x2` (read as `u`, `v`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Patch {
    map: [MultiPoly; 3],
    du: [MultiPoly; 3],
    dv: [MultiPoly; 3],
}

impl Patch {
    pub fn new(map: [MultiPoly; 3]) -> Self {
        let du = std::array::from_fn(|i| map[i].derivative(0));
        let dv = std::array::from_fn(|i| map[i].derivative(1));
        Patch { map, du, dv }
    }

    /// `(u, v) ↦ u·e_i + v·e_j`.
    pub fn unit_square(i: usize, j: usize) -> Self {
        let mut m = [MultiPoly::zero(), MultiPoly::zero(), MultiPoly::zero()];
        m[i] = MultiPoly::var(0);
        m[j] = MultiPoly::var(1);
        Patch::new(m)
    }

    pub fn map(&self) -> &[MultiPoly; 3] {
        &self.map
    }

    /// The boundary loop, oriented with the patch.
    pub fn boundary(&self) -> PiecewiseCurve {
        let t = MultiPoly::var(0);
        let one = MultiPoly::one();
        let z = MultiPoly::zero();
        let rev = &one - &t;
        let edges = [[t.clone(), z.clone()], [one.clone(), t.clone()], [rev.clone(), one.clone()], [z, rev]];
        let segs = edges
            .into_iter()
            .map(|[u, v]| {
                let subs = [u, v, MultiPoly::zero()];
                Segment::new(std::array::from_fn(|i| compose(&self.map[i], &subs)))
            })
            .collect();
        PiecewiseCurve::new(segs).expect("patch boundary is closed")
    }
}

fn near_pole(f: &ScalarField, p: [f64; 3], tol: f64) -> bool {
    f.denominator_factors().any(|(d, _)| d.eval_f64(p).abs() < tol)
}

fn pole(p: [f64; 3]) -> TransportError {
    TransportError::Pole(p[0], p[1], p[2])
}

pub fn eval_scalar(f: &ScalarField, p: [f64; 3], tol: f64) -> Result<f64> {
    if near_pole(f, p, tol) {
        return Err(pole(p));
    }
    Ok(f.eval_f64(p))
}

/// Coefficients of every component form at `p`, component-major.
pub fn eval_form(a: &TensorForm, p: [f64; 3], tol: f64) -> Result<Vec<Vec<f64>>> {
    a.comps().iter().map(|f| f.coeffs().iter().map(|c| eval_scalar(c, p, tol)).collect()).collect()
}

/// Rejects points where `det e` is not positive.
pub fn check_orientation(frame: &Coframe, p: [f64; 3], tol: f64) -> Result<()> {
    let det = eval_scalar(frame.det(), p, tol)?;
    if det <= tol {
        return Err(TransportError::OrientationFlip(p[0], p[1], p[2]));
    }
    Ok(())
}

fn scalar_form(a: &TensorForm, degree: usize) -> Result<&Form> {
    if a.rank() != 0 || a.degree() != degree {
        return Err(TransportError::WrongShape(degree));
    }
    Ok(a.form())
}

fn pair1(f: &Form, p: [f64; 3], v: [f64; 3], tol: f64) -> Result<f64> {
    let mut s = 0.0;
    for (i, vi) in v.iter().enumerate() {
        s += eval_scalar(f.coeff(i), p, tol)? * vi;
    }
    Ok(s)
}

pub fn line_integral(a: &TensorForm, c: &PiecewiseCurve, cfg: &NumericConfig) -> Result<f64> {
    cfg.validate()?;
    let f = scalar_form(a, 1)?;
    let rule = cfg.rule();
    let mut total = 0.0;
    for seg in c.segments() {
        for &(t, w) in &rule {
            total += w * pair1(f, seg.point(t), seg.velocity(t), cfg.tol)?;
        }
    }
    Ok(total)
}

pub fn surface_integral(a: &TensorForm, s: &Patch, cfg: &NumericConfig) -> Result<f64> {
    cfg.validate()?;
    let f = scalar_form(a, 2)?;
    let rule = cfg.rule();
    let mut total = 0.0;
    for &(u, wu) in &rule {
        for &(v, wv) in &rule {
            let at = [u, v, 0.0];
            let p = eval3(&s.map, at);
            let (xu, xv) = (eval3(&s.du, at), eval3(&s.dv, at));
            let mut acc = 0.0;
            for (k, idx) in basis(2).iter().enumerate() {
                let (i, j) = (idx[0], idx[1]);
                acc += eval_scalar(f.coeff(k), p, cfg.tol)? * (xu[i] * xv[j] - xu[j] * xv[i]);
            }
            total += wu * wv * acc;
        }
    }
    Ok(total)
}

/// `ω^a_b(γ̇)` at a curve point.
fn connection_matrix(geom: &Geometry, p: [f64; 3], v: [f64; 3], tol: f64) -> Result<[[f64; 3]; 3]> {
    let mut m = [[0.0; 3]; 3];
    for (a, row) in m.iter_mut().enumerate() {
        for (b, x) in row.iter_mut().enumerate() {
            *x = pair1(geom.conn().get(a, b), p, v, tol)?;
        }
    }
    Ok(m)
}

fn rhs(m: &[[f64; 3]; 3], u: [f64; 3]) -> [f64; 3] {
    std::array::from_fn(|a| -(0..3).map(|b| m[a][b] * u[b]).sum::<f64>())
}

fn axpy(u: [f64; 3], h: f64, k: [f64; 3]) -> [f64; 3] {
    std::array::from_fn(|i| u[i] + h * k[i])
}

/// RK4 nodes `(segment, t, U)` of `dU^a/dt = −ω^a_b(γ̇)U^b`, including the start.
fn transport_path(geom: &Geometry, c: &PiecewiseCurve, u0: FrameVector, cfg: &NumericConfig) -> Result<Vec<(usize, f64, [f64; 3])>> {
    cfg.validate()?;
    let n = cfg.ode_steps;
    let h = 1.0 / n as f64;
    let mut u = u0.0;
    let mut out = vec![(0, 0.0, u)];
    for (si, seg) in c.segments().iter().enumerate() {
        let at = |t: f64| connection_matrix(geom, seg.point(t), seg.velocity(t), cfg.tol);
        let mut m0 = at(0.0)?;
        for k in 0..n {
            let t = k as f64 * h;
            let mh = at(t + 0.5 * h)?;
            let m1 = at(t + h)?;
            let k1 = rhs(&m0, u);
            let k2 = rhs(&mh, axpy(u, 0.5 * h, k1));
            let k3 = rhs(&mh, axpy(u, 0.5 * h, k2));
            let k4 = rhs(&m1, axpy(u, h, k3));
            u = std::array::from_fn(|i| u[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]));
            out.push((si, t + h, u));
            m0 = m1;
        }
    }
    Ok(out)
}

pub fn parallel_transport(geom: &Geometry, c: &PiecewiseCurve, u0: FrameVector, cfg: &NumericConfig) -> Result<FrameVector> {
    let path = transport_path(geom, c, u0, cfg)?;
    Ok(FrameVector(path.last().expect("nonempty").2))
}

/// Endpoint error ratio `|U_n − U*| / |U_2n − U*|` with `U*` the Richardson
/// extrapolation of `U_4n` and `U_8n`; ≈ 16 for a fourth-order method.
pub fn rk4_order_ratio(geom: &Geometry, c: &PiecewiseCurve, u0: FrameVector, cfg: &NumericConfig) -> Result<f64> {
    let run = |k: usize| parallel_transport(geom, c, u0, &NumericConfig { ode_steps: cfg.ode_steps * k, ..*cfg });
    let (u1, u2, u4, u8) = (run(1)?, run(2)?, run(4)?, run(8)?);
    let reference = FrameVector(std::array::from_fn(|i| u8.0[i] + (u8.0[i] - u4.0[i]) / 15.0));
    Ok(u1.distance(&reference) / u2.distance(&reference))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Drift {
    /// `δ_ab U^aV^b` at the end minus at the start
    pub drift: f64,
    /// `−2∮Q_ab U^aV^b` along the transported solutions
    pub line_prediction: f64,
}

/// Composite Simpson weights on `n` equal steps of width `h` (trapezoid on a leftover step).
fn simpson(vals: &[f64], h: f64) -> f64 {
    let n = vals.len() - 1;
    let even = n - n % 2;
    let mut s = 0.0;
    for k in (0..even).step_by(2) {
        s += h / 3.0 * (vals[k] + 4.0 * vals[k + 1] + vals[k + 2]);
    }
    if even < n {
        s += 0.5 * h * (vals[n - 1] + vals[n]);
    }
    s
}

pub fn product_drift(
    geom: &Geometry,
    lp: &PiecewiseCurve,
    u0: FrameVector,
    v0: FrameVector,
    cfg: &NumericConfig,
) -> Result<Drift> {
    if !lp.is_closed() {
        return Err(TransportError::NotClosed);
    }
    let pu = transport_path(geom, lp, u0, cfg)?;
    let pv = transport_path(geom, lp, v0, cfg)?;
    let (ue, ve) = (FrameVector(pu.last().expect("nonempty").2), FrameVector(pv.last().expect("nonempty").2));
    let drift = ue.dot(&ve) - u0.dot(&v0);
    let n = cfg.ode_steps;
    let h = 1.0 / n as f64;
    let mut line = 0.0;
    for (si, seg) in lp.segments().iter().enumerate() {
        let mut vals = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let idx = si * n + k;
            let t = k as f64 * h;
            let (p, v) = (seg.point(t), seg.velocity(t));
            let (u, w) = (pu[idx].2, pv[idx].2);
            let mut acc = 0.0;
            for a in 0..3 {
                for b in 0..3 {
                    acc += pair1(geom.q().get(&[a, b]), p, v, cfg.tol)? * u[a] * w[b];
                }
            }
            vals.push(-2.0 * acc);
        }
        line += simpson(&vals, h);
    }
    Ok(Drift { drift, line_prediction: line })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BurgersFrank {
    pub burgers: [f64; 3],
    pub frank: [f64; 3],
}

/// `B^l = ∬(α^{pl} + ε^l_qr θ^{pq} x^r)*e_p` and `Ω^q = ∬θ^{pq}*e_p` in Cartesian coordinates.
pub fn burgers_frank(geom: &Geometry, d: &DefectDensities, s: &Patch, cfg: &NumericConfig) -> Result<BurgersFrank> {
    let frame = geom.frame();
    if frame.matrix() != &Matrix::identity(3) {
        return Err(TransportError::NonIdentityFrame);
    }
    let se: Vec<Form> = (0..3).map(|p| frame.hodge(&frame.one_form(p))).collect();
    let flux = |coeff: &dyn Fn(usize) -> ScalarField| {
        let f = (0..3).fold(Form::zero(2), |acc, p| &acc + &se[p].scale(&coeff(p)));
        surface_integral(&TensorForm::from_form(f, crate::exterior::Basis::Coordinate), s, cfg)
    };
    let mut burgers = [0.0; 3];
    let mut frank = [0.0; 3];
    for l in 0..3 {
        burgers[l] = flux(&|p| {
            let mut acc = d.alpha[p][l].clone();
            for q in 0..3 {
                for r in 0..3 {
                    let e = crate::exterior::eps(l, q, r);
                    if e != 0 {
                        acc = &acc + &(&d.theta[p][q] * &ScalarField::var(r)).scale(&Rational::from(e));
                    }
                }
            }
            acc
        })?;
        frank[l] = flux(&|p| d.theta[p][l].clone())?;
    }
    Ok(BurgersFrank { burgers, frank })
}
