//! Densities paired with torsion and with the two curvature parts.

use super::{arr3, curvature_components, half, mat3, star3, sum, sum_form, times, torsion_components};
use super::{DefectDensities, Theory};
use crate::exterior::{eps, Basis, Coframe, Form, Slot, TensorForm};
use crate::field::rational::rat;
use crate::field::ScalarField;
use crate::geometry::{Geometry, DD};

/// `R_[ab]` and `R_(ab)` as frame-index 2-forms.
fn curvature_parts(geom: &Geometry) -> (TensorForm, TensorForm) {
    let r = geom.r();
    let hf = half();
    let anti = TensorForm::from_fn(&DD, 2, Basis::Coordinate, |i| {
        (r.get(&[i[0], i[1]]) - r.get(&[i[1], i[0]])).scale_rat(&hf)
    });
    let sym = TensorForm::from_fn(&DD, 2, Basis::Coordinate, |i| {
        (r.get(&[i[0], i[1]]) + r.get(&[i[1], i[0]])).scale_rat(&hf)
    });
    (anti, sym)
}

/// Densities from the exterior-form pairings.
pub fn rcw_densities(geom: &Geometry) -> DefectDensities {
    let frame = geom.frame();
    let e = |a: usize| frame.one_form(a);
    let t = geom.t();
    let (anti, sym) = curvature_parts(geom);
    let alpha = mat3(|a, b| star3(frame, &e(a).wedge(t.get(&[b]))));
    let ea_ranti: Vec<Vec<Vec<_>>> = (0..3)
        .map(|a| (0..3).map(|c| (0..3).map(|d| star3(frame, &e(a).wedge(anti.get(&[c, d])))).collect()).collect())
        .collect();
    let theta = mat3(|a, b| {
        let mut acc = ScalarField::zero();
        for c in 0..3 {
            for d in 0..3 {
                acc = &acc + &times(eps(b, c, d), &ea_ranti[a][c][d]);
            }
        }
        acc.scale(&half())
    });
    let zeta = arr3(|a, b, c| star3(frame, &sym.get(&[a, b]).wedge(&e(c))));
    DefectDensities { alpha, theta, zeta, theory: Theory::Rcw }
}

/// The same densities from frame components of `T` and `R`, by index loops.
pub fn rcw_components(geom: &Geometry) -> DefectDensities {
    let t = torsion_components(geom);
    let r = curvature_components(geom);
    let ranti = |k: usize, l: usize, m: usize, n: usize| (&r[k][l][m][n] - &r[l][k][m][n]).scale(&half());
    let rsym = |a: usize, b: usize, k: usize, l: usize| (&r[a][b][k][l] + &r[b][a][k][l]).scale(&half());
    let alpha = mat3(|a, b| {
        let mut acc = ScalarField::zero();
        for c in 0..3 {
            for d in 0..3 {
                acc = &acc + &times(eps(a, c, d), &t[b][c][d]);
            }
        }
        acc.scale(&half())
    });
    let theta = mat3(|a, b| {
        let mut acc = ScalarField::zero();
        for m in 0..3 {
            for n in 0..3 {
                for k in 0..3 {
                    for l in 0..3 {
                        let s = eps(a, m, n) * eps(b, k, l);
                        if s != 0 {
                            acc = &acc + &times(s, &ranti(k, l, m, n));
                        }
                    }
                }
            }
        }
        acc.scale(&rat(1, 4))
    });
    let zeta = arr3(|a, b, c| {
        let mut acc = ScalarField::zero();
        for k in 0..3 {
            for l in 0..3 {
                acc = &acc + &times(eps(c, k, l), &rsym(a, b, k, l));
            }
        }
        acc.scale(&half())
    });
    DefectDensities { alpha, theta, zeta, theory: Theory::Rcw }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reconstruction {
    /// `T^a = α^{ba}*e_b`
    pub torsion: TensorForm,
    /// `R_[ab] = ε_abc θ^{dc}*e_d`
    pub r_antisym: TensorForm,
    /// `R_(ab) = ζ_ab^c*e_c`
    pub r_sym: TensorForm,
}

impl Reconstruction {
    /// `R^a_b = R_[ab] + R_(ab)`.
    pub fn curvature(&self) -> TensorForm {
        self.r_antisym.add(&self.r_sym).with_slots(&crate::geometry::UD)
    }
}

pub fn rcw_reconstruct(d: &DefectDensities, frame: &Coframe) -> Reconstruction {
    let se: Vec<Form> = (0..3).map(|a| frame.hodge(&frame.one_form(a))).collect();
    let torsion =
        TensorForm::from_fn(&[Slot::Up], 2, Basis::Coordinate, |i| sum_form(2, |b| se[b].scale(&d.alpha[b][i[0]])));
    let r_antisym = TensorForm::from_fn(&DD, 2, Basis::Coordinate, |i| {
        let (a, b) = (i[0], i[1]);
        sum_form(2, |dd| {
            let s = sum(|c| times(eps(a, b, c), &d.theta[dd][c]));
            se[dd].scale(&s)
        })
    });
    let r_sym = TensorForm::from_fn(&DD, 2, Basis::Coordinate, |i| sum_form(2, |c| se[c].scale(&d.zeta[i[0]][i[1]][c])));
    Reconstruction { torsion, r_antisym, r_sym }
}
