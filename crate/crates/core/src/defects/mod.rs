//! Defect densities: the review theory built on curvature and torsion, the
//! general-teleparallel theory built on non-metricity, and the claim registry.

mod claims;
mod eqs;
mod gt;
mod linear;
mod rcw;

use crate::exterior::{Basis, Coframe, Form, Slot, TensorForm};
use crate::field::rational::{is_zero, rat};
use crate::field::{Rational, ScalarField};
use crate::geometry::Geometry;
use serde::Serialize;
use thiserror::Error;

pub use claims::{
    claim_ids, format_report, numeric_result, residual_result, run_claims, suite_claims, ClaimResult, Status, Suite, Term, SUITES,
};
pub use gt::{
    gt_admissibility, gt_alpha, gt_alpha_omega_route, gt_alpha_torsion_route, gt_q_components, gt_q_from_theta,
    gt_theta, gt_torsion_from_densities, Admissibility,
};
pub use linear::{linearized_continuity, LinearResiduals};
pub use rcw::{rcw_components, rcw_densities, rcw_reconstruct, Reconstruction};

pub type Mat3 = [[ScalarField; 3]; 3];
pub type Arr3 = [[[ScalarField; 3]; 3]; 3];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DefectError {
    #[error("the unit-conversion constant C must be nonzero")]
    ZeroConstant,
    #[error("disclination density is not traceless")]
    NotTraceless,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Theory {
    Rcw,
    Gt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefectDensities {
    /// `α^{ab}`
    pub alpha: Mat3,
    /// `θ^{ab}`
    pub theta: Mat3,
    /// `ζ_ab^c`, stored as `zeta[a][b][c]`
    pub zeta: Arr3,
    pub theory: Theory,
}

impl DefectDensities {
    pub fn zero(theory: Theory) -> Self {
        DefectDensities { alpha: mat3(|_, _| ScalarField::zero()), theta: mat3(|_, _| ScalarField::zero()), zeta: arr3(|_, _, _| ScalarField::zero()), theory }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoryParams {
    pub c: Rational,
    pub a: Rational,
    pub b: Rational,
    pub k: Rational,
}

impl TheoryParams {
    pub fn unit() -> Self {
        solve_constants(Rational::from(1u32)).expect("nonzero")
    }
}

/// Solves `3AC = 1`, `5AC + 10BC = 1` and `K = C` (vanishing second trace).
pub fn solve_constants(c: Rational) -> Result<TheoryParams, DefectError> {
    if is_zero(&c) {
        return Err(DefectError::ZeroConstant);
    }
    // [3C 0; 5C 10C] (A, B) = (1, 1), by elimination.
    let a = Rational::from(1u32) / (Rational::from(3u32) * &c);
    let b = (Rational::from(1u32) - Rational::from(5u32) * &a * &c) / (Rational::from(10u32) * &c);
    Ok(TheoryParams { k: c.clone(), c, a, b })
}

/// `Q_c = δ^{ab}Q_abc` and `P_a = Q_ab^b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Traces {
    pub weyl_components: [ScalarField; 3],
    pub second_trace: [ScalarField; 3],
}

pub fn traces(geom: &Geometry) -> Traces {
    let q = nonmetricity_components(geom);
    Traces {
        weyl_components: std::array::from_fn(|c| sum(|a| q[a][a][c].clone())),
        second_trace: std::array::from_fn(|a| sum(|b| q[a][b][b].clone())),
    }
}

pub(crate) fn mat3(f: impl Fn(usize, usize) -> ScalarField) -> Mat3 {
    std::array::from_fn(|a| std::array::from_fn(|b| f(a, b)))
}

pub(crate) fn arr3(f: impl Fn(usize, usize, usize) -> ScalarField) -> Arr3 {
    std::array::from_fn(|a| std::array::from_fn(|b| std::array::from_fn(|c| f(a, b, c))))
}

pub(crate) fn sum(f: impl Fn(usize) -> ScalarField) -> ScalarField {
    (0..3).fold(ScalarField::zero(), |acc, k| &acc + &f(k))
}

pub(crate) fn sum_form(degree: usize, f: impl Fn(usize) -> Form) -> Form {
    (0..3).fold(Form::zero(degree), |acc, k| &acc + &f(k))
}

pub(crate) fn times(n: i64, s: &ScalarField) -> ScalarField {
    match n {
        0 => ScalarField::zero(),
        1 => s.clone(),
        -1 => -s,
        _ => s.scale(&Rational::from(n)),
    }
}

pub(crate) fn half() -> Rational {
    rat(1, 2)
}

/// Frame components `f_a` of a coordinate 1-form.
pub(crate) fn comp1(frame: &Coframe, f: &Form) -> [ScalarField; 3] {
    let g = frame.to_frame(f);
    std::array::from_fn(|a| g.coeff(a).clone())
}

/// Frame components `f_ab` of a coordinate 2-form, `f = ½f_ab e^{ab}`.
pub(crate) fn comp2(frame: &Coframe, f: &Form) -> Mat3 {
    let g = frame.to_frame(f);
    let at = |a: usize, b: usize| match (a, b) {
        (0, 1) => g.coeff(0).clone(),
        (0, 2) => g.coeff(1).clone(),
        (1, 2) => g.coeff(2).clone(),
        _ => ScalarField::zero(),
    };
    mat3(|a, b| if a < b { at(a, b) } else { -&at(b, a) })
}

/// `*f` of a 3-form as a scalar.
pub(crate) fn star3(frame: &Coframe, f: &Form) -> ScalarField {
    frame.hodge(f).coeff(0).clone()
}

/// `Q_abc = ι_cQ_ab`.
pub fn nonmetricity_components(geom: &Geometry) -> Arr3 {
    let f = geom.frame();
    let rows: Vec<Vec<[ScalarField; 3]>> =
        (0..3).map(|a| (0..3).map(|b| comp1(f, geom.q().get(&[a, b]))).collect()).collect();
    arr3(|a, b, c| rows[a][b][c].clone())
}

/// `T^a_bc`, with `T^a = ½T^a_bc e^{bc}`.
pub fn torsion_components(geom: &Geometry) -> Arr3 {
    let f = geom.frame();
    let rows: Vec<Mat3> = (0..3).map(|a| comp2(f, geom.t().get(&[a]))).collect();
    arr3(|a, b, c| rows[a][b][c].clone())
}

/// `R^a_bcd`, with `R^a_b = ½R^a_bcd e^{cd}`.
pub fn curvature_components(geom: &Geometry) -> [[Mat3; 3]; 3] {
    let f = geom.frame();
    std::array::from_fn(|a| std::array::from_fn(|b| comp2(f, geom.r().get(&[a, b]))))
}

pub(crate) fn tensor0(slots: &[Slot], f: impl Fn(&[usize]) -> ScalarField) -> TensorForm {
    TensorForm::from_scalars(slots, Basis::Coordinate, f)
}

pub(crate) fn mat_tensor(m: &Mat3, slots: &[Slot]) -> TensorForm {
    tensor0(slots, |i| m[i[0]][i[1]].clone())
}

pub(crate) fn arr_tensor(m: &Arr3, slots: &[Slot]) -> TensorForm {
    tensor0(slots, |i| m[i[0]][i[1]][i[2]].clone())
}

#[cfg(test)]
mod tests;
