//! The general-teleparallel theory: disclination from non-metricity and
//! dislocation from the antisymmetric part of the defect 1-form.

use super::{arr3, mat3, nonmetricity_components, star3, sum, sum_form, times, torsion_components, traces};
use super::{Arr3, DefectError, Mat3, TheoryParams};
use crate::exterior::{eps, Basis, Coframe, Form, Slot, TensorForm};
use crate::field::{FieldError, Rational, ScalarField, ZeroTestConfig};
use crate::geometry::{connection_split, tensor_is_zero, Geometry, DD};
use serde::Serialize;

fn rs(r: &Rational) -> ScalarField {
    ScalarField::constant(r.clone())
}

/// `θ^{ab} = A ε^a_cd Q^{bcd} + B ε^{abc} Q_c`.
pub fn gt_theta(geom: &Geometry, p: &TheoryParams) -> Mat3 {
    let q = nonmetricity_components(geom);
    let qc = traces(geom).weyl_components;
    mat3(|a, b| {
        let mut first = ScalarField::zero();
        for c in 0..3 {
            for d in 0..3 {
                first = &first + &times(eps(a, c, d), &q[b][c][d]);
            }
        }
        let second = sum(|c| times(eps(a, b, c), &qc[c]));
        &first.scale(&p.a) + &second.scale(&p.b)
    })
}

/// `Q^{bcd} = C(ε_k^{cd}θ^{kb} + ε_k^{bd}θ^{kc}) + K δ^{bc} ε^d_mn θ^{mn}`, by index loops.
pub fn gt_q_components(theta: &Mat3, p: &TheoryParams) -> Arr3 {
    let axial: [ScalarField; 3] = std::array::from_fn(|d| {
        let mut acc = ScalarField::zero();
        for m in 0..3 {
            for n in 0..3 {
                acc = &acc + &times(eps(d, m, n), &theta[m][n]);
            }
        }
        acc
    });
    arr3(|b, c, d| {
        let s = sum(|k| &times(eps(k, c, d), &theta[k][b]) + &times(eps(k, b, d), &theta[k][c]));
        let mut out = s.scale(&p.c);
        if b == c {
            out = &out + &axial[d].scale(&p.k);
        }
        out
    })
}

fn trace(m: &Mat3) -> ScalarField {
    sum(|a| m[a][a].clone())
}

/// `Q^{bc} = C(θ^{kb}*e_k^c + θ^{kc}*e_k^b + δ^{bc}θ^{mn}*e_mn)`; rejects a
/// disclination density with nonzero trace.
pub fn gt_q_from_theta(theta: &Mat3, p: &TheoryParams, frame: &Coframe) -> Result<TensorForm, DefectError> {
    if !trace(theta).is_exact_zero() {
        return Err(DefectError::NotTraceless);
    }
    let e = |a: usize| frame.one_form(a);
    let se2: Vec<Vec<Form>> = (0..3).map(|k| (0..3).map(|c| frame.hodge(&e(k).wedge(&e(c)))).collect()).collect();
    let mut tr = Form::zero(1);
    for m in 0..3 {
        for n in 0..3 {
            tr = &tr + &se2[m][n].scale(&theta[m][n]);
        }
    }
    let c = rs(&p.c);
    Ok(TensorForm::from_fn(&DD, 1, Basis::Coordinate, |i| {
        let (b, cc) = (i[0], i[1]);
        let mut acc = sum_form(1, |k| &se2[k][cc].scale(&theta[k][b]) + &se2[k][b].scale(&theta[k][cc]));
        if b == cc {
            acc = &acc + &tr;
        }
        acc.scale(&c)
    }))
}

/// `α^{ab} = ½ε^{amn}T^b_mn + 4Cθ^{ab} − Cθ^{ba}` with `θ` from [`gt_theta`].
pub fn gt_alpha(geom: &Geometry, p: &TheoryParams) -> Mat3 {
    let t = torsion_components(geom);
    let theta = gt_theta(geom, p);
    let four_c = Rational::from(4u32) * &p.c;
    mat3(|a, b| {
        let mut acc = ScalarField::zero();
        for m in 0..3 {
            for n in 0..3 {
                acc = &acc + &times(eps(a, m, n), &t[b][m][n]);
            }
        }
        &(&acc.scale(&super::half()) + &theta[a][b].scale(&four_c)) - &theta[b][a].scale(&p.c)
    })
}

/// `α^{ab} = *(Ω^{bc}∧e_c^a)` with `Ω_bc` the antisymmetric part of the defect 1-form.
pub fn gt_alpha_omega_route(geom: &Geometry) -> Mat3 {
    let frame = geom.frame();
    let l = connection_split(geom).defect_one_form;
    let h = super::half();
    let omega = |b: usize, c: usize| (l.get(&[b, c]) - l.get(&[c, b])).scale_rat(&h);
    let e = |a: usize| frame.one_form(a);
    mat3(|a, b| {
        let f = sum_form(3, |c| omega(b, c).wedge(&e(c).wedge(&e(a))));
        star3(frame, &f)
    })
}

/// `α^{ab} = *(e^a∧T^b) − *(Q^{bc}∧e_c^a)`.
pub fn gt_alpha_torsion_route(geom: &Geometry) -> Mat3 {
    let frame = geom.frame();
    let e = |a: usize| frame.one_form(a);
    mat3(|a, b| {
        let f = &e(a).wedge(geom.t().get(&[b])) - &sum_form(3, |c| geom.q().get(&[b, c]).wedge(&e(c).wedge(&e(a))));
        star3(frame, &f)
    })
}

/// `T^a = (α^{ba} − 4Cθ^{ba} + Cθ^{ab})*e_b`.
pub fn gt_torsion_from_densities(alpha: &Mat3, theta: &Mat3, p: &TheoryParams, frame: &Coframe) -> TensorForm {
    let four_c = Rational::from(4u32) * &p.c;
    TensorForm::from_fn(&[Slot::Up], 2, Basis::Coordinate, |i| {
        let a = i[0];
        sum_form(2, |b| {
            let coeff = &(&alpha[b][a] - &theta[b][a].scale(&four_c)) + &theta[a][b].scale(&p.c);
            frame.hodge(&frame.one_form(b)).scale(&coeff)
        })
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Admissibility {
    pub p_zero: bool,
    pub q_in_image: bool,
    pub r_zero: bool,
}

/// Whether the geometry's non-metricity lies in the image of the
/// disclination-to-non-metricity map, and the related vanishing checks.
pub fn gt_admissibility(geom: &Geometry, p: &TheoryParams, cfg: &ZeroTestConfig) -> Result<Admissibility, FieldError> {
    let tr = traces(geom);
    let mut p_zero = true;
    for s in &tr.second_trace {
        p_zero &= crate::field::is_zero(s, cfg)?;
    }
    let theta = gt_theta(geom, p);
    let image = gt_q_from_theta(&theta, p, geom.frame()).expect("gt_theta is traceless");
    let q_in_image = tensor_is_zero(&geom.q().sub(&image), cfg)?;
    let r_zero = tensor_is_zero(geom.r(), cfg)?;
    Ok(Admissibility { p_zero, q_in_image, r_zero })
}
