//! SO(3)-irreducible pieces of torsion and non-metricity.

mod rank;

use crate::exterior::{Basis, Coframe, Form, Slot, TensorForm};
use crate::field::rational::rat;
use crate::field::{FieldError, Rational, ScalarField, ZeroTestConfig};
use crate::geometry::{tensor_is_zero, Geometry, DD};

pub use rank::{exact_rank, piece_ranks};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionDecomposition {
    /// `T = ι_a T^a`
    pub trace_one_form: Form,
    /// `σ = e_a ∧ T^a`
    pub sigma: Form,
    pub piece1: TensorForm,
    pub piece2: TensorForm,
    pub piece3: TensorForm,
}

impl TorsionDecomposition {
    pub fn pieces(&self) -> [&TensorForm; 3] {
        [&self.piece1, &self.piece2, &self.piece3]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonmetricityDecomposition {
    /// `Q̸_ab`
    pub tracefree: TensorForm,
    /// `Q = δ^{ab} Q_ab`
    pub weyl: Form,
    /// `Θ_a = *(Q̸_ab ∧ e^b)`
    pub theta_a: TensorForm,
    /// `Θ = e^a ∧ Θ_a`
    pub theta: Form,
    /// `Ω_a = Θ_a − ½ι_aΘ` (unrelated to the antisymmetric connection part)
    pub omega_a: TensorForm,
    /// `Λ_a = ι^b Q̸_ab` (unrelated to gauge matrices)
    pub lambda_a: TensorForm,
    /// `Λ = Λ_a e^a`
    pub lambda: Form,
    pub piece1: TensorForm,
    pub piece2: TensorForm,
    pub piece3: TensorForm,
    pub piece4: TensorForm,
    /// `P_a = ι^b Q_ab`
    pub second_trace: TensorForm,
}

impl NonmetricityDecomposition {
    pub fn pieces(&self) -> [&TensorForm; 4] {
        [&self.piece1, &self.piece2, &self.piece3, &self.piece4]
    }
}

fn iota(frame: &Coframe, a: usize, f: &Form) -> Form {
    frame.iota(a, f).expect("positive degree")
}

fn sum3(degree: usize, f: impl Fn(usize) -> Form) -> Form {
    (0..3).fold(Form::zero(degree), |acc, k| &acc + &f(k))
}

/// Torsion pieces of any (1,0) 2-form with respect to `frame`.
pub fn decompose_torsion(t: &TensorForm, frame: &Coframe) -> TorsionDecomposition {
    let e = |a: usize| frame.one_form(a);
    let trace = sum3(1, |a| iota(frame, a, t.get(&[a])));
    let sigma = sum3(3, |a| e(a).wedge(t.get(&[a])));
    let up = [Slot::Up];
    let piece2 = TensorForm::from_fn(&up, 2, Basis::Coordinate, |i| e(i[0]).wedge(&trace).scale_rat(&rat(1, 2)));
    let piece3 = TensorForm::from_fn(&up, 2, Basis::Coordinate, |i| iota(frame, i[0], &sigma).scale_rat(&rat(1, 3)));
    let piece1 = t.sub(&piece2).sub(&piece3);
    TorsionDecomposition { trace_one_form: trace, sigma, piece1, piece2, piece3 }
}

/// Non-metricity pieces of any symmetric (0,2) 1-form with respect to `frame`.
pub fn decompose_nonmetricity(q: &TensorForm, frame: &Coframe) -> NonmetricityDecomposition {
    let e = |a: usize| frame.one_form(a);
    let third = rat(1, 3);
    let weyl = sum3(1, |a| q.get(&[a, a]).clone());
    let delta_weyl = |a: usize, b: usize| if a == b { weyl.scale_rat(&third) } else { Form::zero(1) };
    let tracefree = TensorForm::from_fn(&DD, 1, Basis::Coordinate, |i| q.get(i) - &delta_weyl(i[0], i[1]));
    let down = [Slot::Down];
    let theta_a = TensorForm::from_fn(&down, 1, Basis::Coordinate, |i| {
        frame.hodge(&sum3(2, |b| tracefree.get(&[i[0], b]).wedge(&e(b))))
    });
    let theta = sum3(2, |a| e(a).wedge(theta_a.get(&[a])));
    let omega_a = TensorForm::from_fn(&down, 1, Basis::Coordinate, |i| {
        theta_a.get(i) - &iota(frame, i[0], &theta).scale_rat(&rat(1, 2))
    });
    let lambda_a = TensorForm::from_fn(&down, 0, Basis::Coordinate, |i| {
        sum3(0, |b| iota(frame, b, tracefree.get(&[i[0], b])))
    });
    let la = |a: usize| lambda_a.get(&[a]).coeff(0).clone();
    let lambda = sum3(1, |a| e(a).scale(&la(a)));
    let piece2 = TensorForm::from_fn(&DD, 1, Basis::Coordinate, |i| {
        let (a, b) = (i[0], i[1]);
        frame.hodge(&(&e(a).wedge(omega_a.get(&[b])) + &e(b).wedge(omega_a.get(&[a])))).scale_rat(&third)
    });
    let piece3 = TensorForm::from_fn(&DD, 1, Basis::Coordinate, |i| {
        let (a, b) = (i[0], i[1]);
        let mut acc = &e(b).scale(&la(a)) + &e(a).scale(&la(b));
        if a == b {
            acc = &acc - &lambda.scale_rat(&rat(2, 3));
        }
        acc.scale_rat(&rat(3, 10))
    });
    let piece4 = TensorForm::from_fn(&DD, 1, Basis::Coordinate, |i| delta_weyl(i[0], i[1]));
    let piece1 = q.sub(&piece2).sub(&piece3).sub(&piece4);
    let second_trace = TensorForm::from_fn(&down, 0, Basis::Coordinate, |i| {
        sum3(0, |b| iota(frame, b, q.get(&[i[0], b])))
    });
    NonmetricityDecomposition {
        tracefree,
        weyl,
        theta_a,
        theta,
        omega_a,
        lambda_a,
        lambda,
        piece1,
        piece2,
        piece3,
        piece4,
        second_trace,
    }
}

pub fn torsion_pieces(geom: &Geometry) -> TorsionDecomposition {
    decompose_torsion(geom.t(), geom.frame())
}

pub fn nonmetricity_pieces(geom: &Geometry) -> NonmetricityDecomposition {
    decompose_nonmetricity(geom.q(), geom.frame())
}

/// `Σ_a X^a ∧ *Y_a`, a 3-form.
pub fn torsion_pairing(x: &TensorForm, y: &TensorForm, frame: &Coframe) -> Form {
    sum3(3, |a| x.get(&[a]).wedge(&frame.hodge(y.get(&[a]))))
}

/// `Σ_ab X^{ab} ∧ *Y_ab`, a 3-form.
pub fn nonmetricity_pairing(x: &TensorForm, y: &TensorForm, frame: &Coframe) -> Form {
    (0..9).fold(Form::zero(3), |acc, k| {
        let i = [k / 3, k % 3];
        &acc + &x.get(&i).wedge(&frame.hodge(y.get(&i)))
    })
}

/// One named certificate and whether it held.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub name: String,
    pub holds: bool,
}

fn cert(name: impl Into<String>, holds: bool) -> Certificate {
    Certificate { name: name.into(), holds }
}

fn form_zero(f: &Form, cfg: &ZeroTestConfig) -> Result<bool, FieldError> {
    tensor_is_zero(&TensorForm::from_form(f.clone(), Basis::Coordinate), cfg)
}

/// Sum, trace and cross-orthogonality certificates for the torsion pieces.
pub fn torsion_certificates(
    t: &TensorForm,
    d: &TorsionDecomposition,
    frame: &Coframe,
    cfg: &ZeroTestConfig,
) -> Result<Vec<Certificate>, FieldError> {
    let e = |a: usize| frame.one_form(a);
    let mut out = Vec::new();
    let sum = d.piece1.add(&d.piece2).add(&d.piece3);
    out.push(cert("sum", tensor_is_zero(&sum.sub(t), cfg)?));
    for (k, p) in [(1, &d.piece1), (3, &d.piece3)] {
        let tr = sum3(1, |a| iota(frame, a, p.get(&[a])));
        out.push(cert(format!("trace({k})"), form_zero(&tr, cfg)?));
    }
    for (k, p) in [(1, &d.piece1), (2, &d.piece2)] {
        let s = sum3(3, |a| e(a).wedge(p.get(&[a])));
        out.push(cert(format!("axial({k})"), form_zero(&s, cfg)?));
    }
    let pieces = d.pieces();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                let pr = torsion_pairing(pieces[i], pieces[j], frame);
                out.push(cert(format!("orthogonal({},{})", i + 1, j + 1), form_zero(&pr, cfg)?));
            }
        }
    }
    Ok(out)
}

/// Sum, trace and cross-orthogonality certificates for the non-metricity pieces.
pub fn nonmetricity_certificates(
    q: &TensorForm,
    d: &NonmetricityDecomposition,
    frame: &Coframe,
    cfg: &ZeroTestConfig,
) -> Result<Vec<Certificate>, FieldError> {
    let mut out = Vec::new();
    let sum = d.piece1.add(&d.piece2).add(&d.piece3).add(&d.piece4);
    out.push(cert("sum", tensor_is_zero(&sum.sub(q), cfg)?));
    for (k, p) in [(1, &d.piece1), (2, &d.piece2), (3, &d.piece3)] {
        let tr = sum3(1, |a| p.get(&[a, a]).clone());
        out.push(cert(format!("trace({k})"), form_zero(&tr, cfg)?));
    }
    for (k, p) in [(1, &d.piece1), (2, &d.piece2)] {
        let mut ok = true;
        for b in 0..3 {
            let s = sum3(0, |a| iota(frame, a, p.get(&[a, b])));
            ok &= form_zero(&s, cfg)?;
        }
        out.push(cert(format!("second-trace({k})"), ok));
    }
    let mut ok = true;
    for b in 0..3 {
        let s = sum3(2, |a| frame.one_form(a).wedge(d.piece1.get(&[a, b])));
        ok &= form_zero(&s, cfg)?;
    }
    out.push(cert("wedge(1)", ok));
    let pieces = d.pieces();
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                let pr = nonmetricity_pairing(pieces[i], pieces[j], frame);
                out.push(cert(format!("orthogonal({},{})", i + 1, j + 1), form_zero(&pr, cfg)?));
            }
        }
    }
    Ok(out)
}

/// Expected component counts of the pieces.
pub const TORSION_COUNTS: [usize; 3] = [5, 3, 1];
pub const NONMETRICITY_COUNTS: [usize; 4] = [3, 9, 3, 3];

pub(crate) fn scalar_rat(c: &ScalarField, p: &[Rational; 3]) -> Option<Rational> {
    c.eval_at(p)
}

#[cfg(test)]
mod tests;
