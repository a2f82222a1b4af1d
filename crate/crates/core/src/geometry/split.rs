//! Riemannian / non-Riemannian splits of the connection and the curvature.

use super::{cov_d_with, Connection, Geometry, DD, UD};
use crate::exterior::{Basis, Coframe, Form, TensorForm};
use crate::field::rational::rat;

/// `ω̃_ab = ½[−ι_a de_b + ι_b de_a + (ι_aι_b de_c) e^c]`.
pub fn levi_civita(frame: &Coframe) -> Connection {
    let de: Vec<Form> = (0..3).map(|a| frame.one_form(a).d()).collect();
    let iota = |a: usize, f: &Form| frame.iota(a, f).expect("positive degree");
    let ide: Vec<Vec<Form>> = (0..3).map(|a| de.iter().map(|f| iota(a, f)).collect()).collect();
    let half = rat(1, 2);
    Connection::from_fn(|i| {
        let (a, b) = (i[0], i[1]);
        let mut acc = &ide[b][a] - &ide[a][b];
        for (c, row) in ide[b].iter().enumerate() {
            let s = iota(a, row);
            acc = &acc + &frame.one_form(c).scale(s.coeff(0));
        }
        acc.scale_rat(&half)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionSplit {
    pub levi_civita: Connection,
    /// `K_ab`
    pub contortion: TensorForm,
    /// `(ι_bQ_ac − ι_aQ_bc)e^c + Q_ab`
    pub disformation: TensorForm,
    /// `L_ab = K_ab + disformation`
    pub defect_one_form: TensorForm,
    /// `Ω_ab = ω_[ab]`
    pub antisym_part: TensorForm,
}

pub fn connection_split(geom: &Geometry) -> ConnectionSplit {
    let frame = geom.frame();
    let c = geom.cartan();
    let half = rat(1, 2);
    let iota = |a: usize, f: &Form| geom.iota(a, f);

    let it: Vec<Vec<Form>> = (0..3).map(|a| (0..3).map(|b| iota(a, c.t.get(&[b]))).collect()).collect();
    let contortion = TensorForm::from_fn(&DD, 1, Basis::Coordinate, |i| {
        let (a, b) = (i[0], i[1]);
        let mut acc = &it[a][b] - &it[b][a];
        for (k, f) in it[b].iter().enumerate() {
            let s = iota(a, f);
            acc = &acc - &frame.one_form(k).scale(s.coeff(0));
        }
        acc.scale_rat(&half)
    });

    let iq = |a: usize, b: usize, k: usize| iota(a, c.q.get(&[b, k])).coeff(0).clone();
    let disformation = TensorForm::from_fn(&DD, 1, Basis::Coordinate, |i| {
        let (a, b) = (i[0], i[1]);
        let mut acc = c.q.get(&[a, b]).clone();
        for k in 0..3 {
            let s = &iq(b, a, k) - &iq(a, b, k);
            acc = &acc + &frame.one_form(k).scale(&s);
        }
        acc
    });
    let defect_one_form = contortion.add(&disformation).with_slots(&UD);
    let w = geom.omega();
    let antisym_part = TensorForm::from_fn(&DD, 1, Basis::Coordinate, |i| {
        (w.get(&[i[0], i[1]]) - w.get(&[i[1], i[0]])).scale_rat(&half)
    });
    ConnectionSplit { levi_civita: levi_civita(frame), contortion, disformation, defect_one_form, antisym_part }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureSplit {
    /// `R_[ab] = dΩ_ab + Ω_ac∧Ω^c_b + Q_ac∧Q^c_b`
    pub r_antisym: TensorForm,
    /// `R_(ab) = dQ_ab + Ω_ac∧Q^c_b + Q_ac∧Ω^c_b`
    pub r_sym: TensorForm,
    /// `R̃ = dω̃ + ω̃∧ω̃`
    pub r_riemannian: TensorForm,
    /// `D̃L + L∧L`
    pub r_nonriemannian: TensorForm,
}

fn matrix_square(a: &TensorForm, b: &TensorForm, i: &[usize]) -> Form {
    (0..3).fold(Form::zero(2), |acc, c| &acc + &a.get(&[i[0], c]).wedge(b.get(&[c, i[1]])))
}

pub fn curvature_split(geom: &Geometry) -> CurvatureSplit {
    let split = connection_split(geom);
    curvature_split_with(geom, &split)
}

pub fn curvature_split_with(geom: &Geometry, split: &ConnectionSplit) -> CurvatureSplit {
    let q = geom.q();
    let om = &split.antisym_part;
    let r_antisym = TensorForm::from_fn(&DD, 2, Basis::Coordinate, |i| {
        &(&om.get(i).d() + &matrix_square(om, om, i)) + &matrix_square(q, q, i)
    });
    let r_sym = TensorForm::from_fn(&DD, 2, Basis::Coordinate, |i| {
        &(&q.get(i).d() + &matrix_square(om, q, i)) + &matrix_square(q, om, i)
    });
    let lc = split.levi_civita.omega();
    let r_riemannian =
        TensorForm::from_fn(&UD, 2, Basis::Coordinate, |i| &lc.get(i).d() + &matrix_square(lc, lc, i));
    let l = &split.defect_one_form;
    let dl = cov_d_with(lc, l);
    let r_nonriemannian = TensorForm::from_fn(&UD, 2, Basis::Coordinate, |i| dl.get(i) + &matrix_square(l, l, i));
    CurvatureSplit { r_antisym, r_sym, r_riemannian, r_nonriemannian }
}
