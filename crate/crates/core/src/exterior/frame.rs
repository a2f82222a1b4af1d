//! Orthonormal coframes and the basis conversions and Hodge map they induce.

use super::form::{basis, complement, Form, VectorField};
use super::matrix::Matrix;
use super::ExteriorError;
use crate::field::ScalarField;
use std::fmt;
use std::sync::OnceLock;

type Table = Vec<Vec<ScalarField>>;

struct Tables {
    /// `to_frame[p][J][I]`: frame coefficient J from coordinate coefficient I.
    to_frame: [Table; 4],
    /// `to_coord[p][I][J]`: coordinate coefficient I from frame coefficient J.
    to_coord: [Table; 4],
    /// `hodge[p][J][I]`: coordinate (3-p)-coefficient J of `*dx^I`.
    hodge: [Table; 4],
}

/// Coframe `e^a = e^a_i dx^i`, declared orthonormal. Row `a` of `e` holds
/// `e^a_i`; the inverse `E^i_a` gives the frame vectors `X_a = E^i_a ∂_i`.
pub struct Coframe {
    e: Matrix,
    inv: Matrix,
    det: ScalarField,
    tables: OnceLock<Tables>,
}

impl Clone for Coframe {
    fn clone(&self) -> Self {
        Coframe { e: self.e.clone(), inv: self.inv.clone(), det: self.det.clone(), tables: OnceLock::new() }
    }
}

impl PartialEq for Coframe {
    fn eq(&self, other: &Self) -> bool {
        self.e == other.e
    }
}

impl fmt::Debug for Coframe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Coframe").field("e", &self.e).finish()
    }
}

fn apply(table: &Table, coeffs: &[ScalarField]) -> Vec<ScalarField> {
    table
        .iter()
        .map(|row| {
            row.iter()
                .zip(coeffs)
                .filter(|(m, c)| !m.is_exact_zero() && !c.is_exact_zero())
                .map(|(m, c)| m * c)
                .sum()
        })
        .collect()
}

impl Coframe {
    pub fn new(e: Matrix) -> Result<Self, ExteriorError> {
        assert_eq!(e.size(), 3, "a coframe is a 3x3 matrix");
        let det = e.det();
        let inv = e.inverse().ok_or(ExteriorError::DegenerateCoframe)?;
        debug_assert_eq!(e.mul(&inv), Matrix::identity(3));
        Ok(Coframe { e, inv, det, tables: OnceLock::new() })
    }

    pub fn identity() -> Self {
        Self::new(Matrix::identity(3)).expect("identity is invertible")
    }

    /// Coframe from three coordinate 1-forms.
    pub fn from_one_forms(forms: &[Form; 3]) -> Result<Self, ExteriorError> {
        for f in forms {
            if f.degree() != 1 {
                return Err(ExteriorError::Degree { expected: 1, found: f.degree() });
            }
        }
        Self::new(Matrix::from_fn(3, |a, i| forms[a].coeff(i).clone()))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.e
    }

    pub fn inverse(&self) -> &Matrix {
        &self.inv
    }

    pub fn det(&self) -> &ScalarField {
        &self.det
    }

    /// `e^a` as a coordinate 1-form.
    pub fn one_form(&self, a: usize) -> Form {
        Form::from_coeffs(1, (0..3).map(|i| self.e.get(a, i).clone()).collect())
    }

    /// `X_a`, dual to `e^a`.
    pub fn vector(&self, a: usize) -> VectorField {
        VectorField::new(std::array::from_fn(|i| self.inv.get(i, a).clone()))
    }

    /// `e^I` as a coordinate form for a strictly increasing frame multi-index.
    pub fn basis_form(&self, idx: &[usize]) -> Form {
        idx.iter().fold(Form::constant(1), |acc, &a| acc.wedge(&self.one_form(a)))
    }

    fn tables(&self) -> &Tables {
        self.tables.get_or_init(|| {
            let to_frame: [Table; 4] = std::array::from_fn(|p| {
                basis(p)
                    .iter()
                    .map(|j| basis(p).iter().map(|i| self.inv.minor(i, j)).collect())
                    .collect()
            });
            let to_coord: [Table; 4] = std::array::from_fn(|p| {
                basis(p)
                    .iter()
                    .map(|i| basis(p).iter().map(|j| self.e.minor(j, i)).collect())
                    .collect()
            });
            let hodge: [Table; 4] = std::array::from_fn(|p| {
                let q = 3 - p;
                let mut h: Table = vec![vec![ScalarField::zero(); basis(p).len()]; basis(q).len()];
                for (kpos, k) in basis(p).iter().enumerate() {
                    let (kc, sign) = complement(k);
                    let kc_pos = super::form::index_of(&kc);
                    for (jpos, row) in h.iter_mut().enumerate() {
                        let n = &to_coord[q][jpos][kc_pos];
                        if n.is_exact_zero() {
                            continue;
                        }
                        for (ipos, cell) in row.iter_mut().enumerate() {
                            let m = &to_frame[p][kpos][ipos];
                            if m.is_exact_zero() {
                                continue;
                            }
                            let t = n * m;
                            *cell = if sign > 0 { &*cell + &t } else { &*cell - &t };
                        }
                    }
                }
                h
            });
            Tables { to_frame, to_coord, hodge }
        })
    }

    /// Coordinate-basis coefficients to frame-basis coefficients.
    pub fn to_frame(&self, f: &Form) -> Form {
        let p = f.degree();
        if p > 3 {
            return f.clone();
        }
        Form::from_coeffs(p, apply(&self.tables().to_frame[p], f.coeffs()))
    }

    /// Frame-basis coefficients to coordinate-basis coefficients.
    pub fn to_coordinate(&self, f: &Form) -> Form {
        let p = f.degree();
        if p > 3 {
            return f.clone();
        }
        Form::from_coeffs(p, apply(&self.tables().to_coord[p], f.coeffs()))
    }

    /// Hodge dual of a coordinate-basis form.
    pub fn hodge(&self, f: &Form) -> Form {
        let p = f.degree();
        if p > 3 {
            return Form::zero(p);
        }
        Form::from_coeffs(3 - p, apply(&self.tables().hodge[p], f.coeffs()))
    }

    /// `ι_a` of a coordinate-basis form; `None` for 0-forms.
    pub fn iota(&self, a: usize, f: &Form) -> Option<Form> {
        f.interior(&self.vector(a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::parse_form;

    fn pf(s: &str) -> Form {
        parse_form(s).unwrap()
    }

    fn sheared() -> Coframe {
        Coframe::from_one_forms(&[pf("dx1"), pf("dx2"), pf("dx3 + x*dx2")]).unwrap()
    }

    #[test]
    fn identity_hodge() {
        let id = Coframe::identity();
        assert_eq!(id.hodge(&Form::constant(1)), pf("dx1^dx2^dx3"));
        assert_eq!(id.hodge(&pf("dx1")), pf("dx2^dx3"));
        assert_eq!(id.hodge(&pf("dx2")), pf("-dx1^dx3"));
        assert_eq!(id.hodge(&pf("dx1^dx3")), pf("-dx2"));
    }

    #[test]
    fn sheared_change_of_basis() {
        let f = sheared();
        assert_eq!(f.to_frame(&pf("dx2")), pf("dx2"));
        assert_eq!(f.to_frame(&pf("dx3")), pf("dx3 - x*dx2"));
        let g = pf("x*dx1^dx3 + y*dx2^dx3");
        assert_eq!(f.to_coordinate(&f.to_frame(&g)), g);
    }

    #[test]
    fn hodge_is_an_involution() {
        let f = Coframe::from_one_forms(&[pf("dx1 + y*dx3"), pf("2*dx2"), pf("dx3 + x*dx2")]).unwrap();
        for s in ["x*y", "dx1 + z*dx3", "x*dx1^dx2 - dx2^dx3", "y*dx1^dx2^dx3"] {
            let a = pf(s);
            assert_eq!(f.hodge(&f.hodge(&a)), a, "{s}");
        }
    }

    #[test]
    fn frame_vectors_are_dual() {
        let f = sheared();
        for a in 0..3 {
            for b in 0..3 {
                let v = f.iota(a, &f.one_form(b)).unwrap();
                let expect = if a == b { Form::constant(1) } else { Form::constant(0) };
                assert_eq!(v, expect);
            }
        }
    }

    #[test]
    fn degenerate_coframe_is_rejected() {
        assert!(Coframe::from_one_forms(&[pf("dx1"), pf("x*dx1"), pf("dx3")]).is_err());
    }
}
