//! Flat connections from gauge matrices, and coframes adapted to them.

use super::Connection;
use crate::exterior::{Coframe, ExteriorError, Form, Matrix};
use crate::field::ScalarField;

/// Invertible matrix field `Λ^a_b` with its exact inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugeField {
    lambda: Matrix,
    inv: Matrix,
}

impl GaugeField {
    pub fn new(lambda: Matrix) -> Result<Self, ExteriorError> {
        assert_eq!(lambda.size(), 3);
        let inv = lambda.inverse().ok_or(ExteriorError::DegenerateGauge)?;
        Ok(GaugeField { lambda, inv })
    }

    pub fn identity() -> Self {
        GaugeField { lambda: Matrix::identity(3), inv: Matrix::identity(3) }
    }

    pub fn lambda(&self) -> &Matrix {
        &self.lambda
    }

    pub fn inverse(&self) -> &Matrix {
        &self.inv
    }
}

fn grad(f: &ScalarField) -> Form {
    Form::scalar(f.clone()).d()
}

/// `ω = Λ^{-1} dΛ`.
pub fn gauge_connection(g: &GaugeField) -> Connection {
    let dl: Vec<Form> = (0..9).map(|k| grad(g.lambda.get(k / 3, k % 3))).collect();
    Connection::from_fn(|i| {
        let (a, b) = (i[0], i[1]);
        (0..3).fold(Form::zero(1), |acc, c| {
            let m = g.inv.get(a, c);
            if m.is_exact_zero() {
                acc
            } else {
                &acc + &dl[c * 3 + b].scale(m)
            }
        })
    })
}

/// `Λ = (I − S)(I + S)^{-1}` for antisymmetric `S`.
pub fn cayley_rotation(s: &Matrix) -> Result<GaugeField, ExteriorError> {
    for i in 0..3 {
        for j in 0..3 {
            if !(s.get(i, j) + s.get(j, i)).is_exact_zero() {
                return Err(ExteriorError::NotAntisymmetric);
            }
        }
    }
    let id = Matrix::identity(3);
    let plus = id.add(s);
    let minus = id.sub(s);
    let plus_inv = plus.inverse().ok_or(ExteriorError::DegenerateGauge)?;
    let lambda = minus.mul(&plus_inv);
    let inv = plus.mul(&minus.inverse().ok_or(ExteriorError::DegenerateGauge)?);
    Ok(GaugeField { lambda, inv })
}

/// `e^a = (Λ^{-1})^a_b dF^b`.
pub fn symmetric_coframe(g: &GaugeField, f: &[ScalarField; 3]) -> Result<Coframe, ExteriorError> {
    let df: Vec<Form> = f.iter().map(grad).collect();
    let forms: [Form; 3] = std::array::from_fn(|a| {
        (0..3).fold(Form::zero(1), |acc, b| &acc + &df[b].scale(g.inv.get(a, b)))
    });
    Coframe::from_one_forms(&forms)
}

/// `Λ = f · cayley_rotation(S)`.
pub fn conformal_gauge(f: &ScalarField, s: &Matrix) -> Result<GaugeField, ExteriorError> {
    if f.is_exact_zero() {
        return Err(ExteriorError::DegenerateGauge);
    }
    let r = cayley_rotation(s)?;
    let finv = &ScalarField::one() / f;
    Ok(GaugeField { lambda: r.lambda.scale(f), inv: r.inv.scale(&finv) })
}
