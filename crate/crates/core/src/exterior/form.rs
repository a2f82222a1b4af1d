//! Scalar-valued differential forms on R³ with rational-function coefficients.

use crate::field::{Rational, ScalarField};
use std::fmt;
use std::ops::{Add, Neg, Sub};

static BASIS0: [&[usize]; 1] = [&[]];
static BASIS1: [&[usize]; 3] = [&[0], &[1], &[2]];
static BASIS2: [&[usize]; 3] = [&[0, 1], &[0, 2], &[1, 2]];
static BASIS3: [&[usize]; 1] = [&[0, 1, 2]];

/// Strictly increasing multi-indices of degree `p`, in storage order.
pub fn basis(p: usize) -> &'static [&'static [usize]] {
    match p {
        0 => &BASIS0,
        1 => &BASIS1,
        2 => &BASIS2,
        3 => &BASIS3,
        _ => &[],
    }
}

pub fn basis_len(p: usize) -> usize {
    basis(p).len()
}

/// Storage position of a strictly increasing multi-index.
pub fn index_of(idx: &[usize]) -> usize {
    match idx {
        [] => 0,
        [i] => *i,
        [0, 1] => 0,
        [0, 2] => 1,
        [1, 2] => 2,
        [0, 1, 2] => 0,
        _ => panic!("not a strictly increasing multi-index: {idx:?}"),
    }
}

/// `dx^I ∧ dx^J = sign · dx^K`, or `None` when the indices overlap.
pub fn wedge_indices(i: &[usize], j: &[usize]) -> Option<(usize, i32)> {
    if i.iter().any(|a| j.contains(a)) {
        return None;
    }
    let mut inversions = 0;
    for a in i {
        for b in j {
            if a > b {
                inversions += 1;
            }
        }
    }
    let mut k: Vec<usize> = i.iter().chain(j.iter()).copied().collect();
    k.sort_unstable();
    Some((index_of(&k), if inversions % 2 == 0 { 1 } else { -1 }))
}

/// Complement of a multi-index in {0,1,2} and the sign of the permutation (I, Iᶜ).
pub fn complement(i: &[usize]) -> (Vec<usize>, i32) {
    let c: Vec<usize> = (0..3).filter(|a| !i.contains(a)).collect();
    let (_, s) = wedge_indices(i, &c).expect("complement is disjoint");
    (c, s)
}

/// A p-form `Σ_I c_I dx^I` (or `Σ_I c_I e^I` when held in a frame basis by a
/// tensor form). Degrees above 3 are represented by an empty coefficient list.
#[derive(Clone, PartialEq, Eq)]
pub struct Form {
    degree: usize,
    coeffs: Vec<ScalarField>,
}

impl Form {
    pub fn zero(degree: usize) -> Self {
        Form { degree, coeffs: vec![ScalarField::zero(); basis_len(degree)] }
    }

    pub fn scalar(f: ScalarField) -> Self {
        Form { degree: 0, coeffs: vec![f] }
    }

    pub fn constant(c: i64) -> Self {
        Self::scalar(ScalarField::int(c))
    }

    pub fn dx(axis: usize) -> Self {
        let mut f = Self::zero(1);
        f.coeffs[axis] = ScalarField::one();
        f
    }

    /// The basis form for a strictly increasing multi-index.
    pub fn basis_form(idx: &[usize]) -> Self {
        let mut f = Self::zero(idx.len());
        f.coeffs[index_of(idx)] = ScalarField::one();
        f
    }

    pub fn from_coeffs(degree: usize, coeffs: Vec<ScalarField>) -> Self {
        assert_eq!(coeffs.len(), basis_len(degree), "wrong number of coefficients for a {degree}-form");
        Form { degree, coeffs }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[ScalarField] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &ScalarField {
        &self.coeffs[k]
    }

    pub fn coeff_at(&self, idx: &[usize]) -> &ScalarField {
        &self.coeffs[index_of(idx)]
    }

    pub fn into_coeffs(self) -> Vec<ScalarField> {
        self.coeffs
    }

    pub fn is_exact_zero(&self) -> bool {
        self.coeffs.iter().all(ScalarField::is_exact_zero)
    }

    pub fn map(&self, f: impl Fn(&ScalarField) -> ScalarField) -> Self {
        Form { degree: self.degree, coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn scale(&self, c: &ScalarField) -> Self {
        if c.is_exact_zero() {
            return Self::zero(self.degree);
        }
        self.map(|a| a * c)
    }

    pub fn scale_rat(&self, c: &Rational) -> Self {
        self.map(|a| a.scale(c))
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale_rat(&Rational::from(c))
    }

    pub fn wedge(&self, other: &Form) -> Form {
        let degree = self.degree + other.degree;
        let mut out = Form::zero(degree);
        if degree > 3 {
            return out;
        }
        for (ia, a) in basis(self.degree).iter().zip(&self.coeffs) {
            if a.is_exact_zero() {
                continue;
            }
            for (jb, b) in basis(other.degree).iter().zip(&other.coeffs) {
                if b.is_exact_zero() {
                    continue;
                }
                if let Some((k, s)) = wedge_indices(ia, jb) {
                    let prod = a * b;
                    out.coeffs[k] = if s > 0 { &out.coeffs[k] + &prod } else { &out.coeffs[k] - &prod };
                }
            }
        }
        out
    }

    /// Coordinate exterior derivative.
    pub fn d(&self) -> Form {
        let degree = self.degree + 1;
        let mut out = Form::zero(degree);
        if degree > 3 {
            return out;
        }
        for (i, c) in basis(self.degree).iter().zip(&self.coeffs) {
            if c.is_exact_zero() {
                continue;
            }
            for axis in 0..3 {
                if let Some((k, s)) = wedge_indices(&[axis], i) {
                    let dc = c.differentiate(axis);
                    if dc.is_exact_zero() {
                        continue;
                    }
                    out.coeffs[k] = if s > 0 { &out.coeffs[k] + &dc } else { &out.coeffs[k] - &dc };
                }
            }
        }
        out
    }

    /// Interior product with a coordinate-component vector field; `None` on 0-forms.
    pub fn interior(&self, v: &VectorField) -> Option<Form> {
        if self.degree == 0 {
            return None;
        }
        let mut out = Form::zero(self.degree - 1);
        for (i, c) in basis(self.degree).iter().zip(&self.coeffs) {
            if c.is_exact_zero() {
                continue;
            }
            for (pos, axis) in i.iter().enumerate() {
                let vc = &v.comps[*axis];
                if vc.is_exact_zero() {
                    continue;
                }
                let rest: Vec<usize> = i.iter().copied().filter(|a| a != axis).collect();
                let k = index_of(&rest);
                let term = c * vc;
                out.coeffs[k] = if pos % 2 == 0 { &out.coeffs[k] + &term } else { &out.coeffs[k] - &term };
            }
        }
        Some(out)
    }

    pub fn eval_f64(&self, p: [f64; 3]) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.eval_f64(p)).collect()
    }
}

impl Add for &Form {
    type Output = Form;
    fn add(self, rhs: &Form) -> Form {
        assert_eq!(self.degree, rhs.degree, "adding forms of different degree");
        Form { degree: self.degree, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Form {
    type Output = Form;
    fn sub(self, rhs: &Form) -> Form {
        assert_eq!(self.degree, rhs.degree, "subtracting forms of different degree");
        Form { degree: self.degree, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Form {
    type Output = Form;
    fn neg(self) -> Form {
        self.map(|a| -a)
    }
}

impl Add for Form {
    type Output = Form;
    fn add(self, rhs: Form) -> Form {
        &self + &rhs
    }
}

impl Sub for Form {
    type Output = Form;
    fn sub(self, rhs: Form) -> Form {
        &self - &rhs
    }
}

impl Neg for Form {
    type Output = Form;
    fn neg(self) -> Form {
        -&self
    }
}

pub fn basis_name(idx: &[usize], prefix: &str) -> String {
    idx.iter().map(|i| format!("{prefix}{}", i + 1)).collect::<Vec<_>>().join("^")
}

fn needs_parens(s: &str) -> bool {
    s.contains(' ') || s.contains('/')
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree == 0 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut first = true;
        for (i, c) in basis(self.degree).iter().zip(&self.coeffs) {
            if c.is_exact_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let name = basis_name(i, "dx");
            let text = c.to_string();
            if text == "1" {
                f.write_str(&name)?;
            } else if needs_parens(&text) || text.starts_with('-') {
                write!(f, "({text})*{name}")?;
            } else {
                write!(f, "{text}*{name}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form<{}>({self})", self.degree)
    }
}

/// A vector field by its coordinate components v^i.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VectorField {
    pub comps: [ScalarField; 3],
}

impl VectorField {
    pub fn new(comps: [ScalarField; 3]) -> Self {
        VectorField { comps }
    }

    /// The coordinate vector ∂_axis.
    pub fn coordinate(axis: usize) -> Self {
        let mut comps: [ScalarField; 3] = Default::default();
        comps[axis] = ScalarField::one();
        VectorField { comps }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::parse_form;

    fn pf(s: &str) -> Form {
        parse_form(s).unwrap()
    }

    #[test]
    fn wedge_examples() {
        assert_eq!(Form::dx(0).wedge(&Form::dx(1)), Form::basis_form(&[0, 1]));
        assert!(Form::dx(0).wedge(&Form::dx(0)).is_exact_zero());
        assert_eq!(pf("x*dx2").wedge(&pf("y*dx3")), pf("x*y*dx2^dx3"));
        assert_eq!(pf("dx2").wedge(&pf("dx1")), pf("-dx1^dx2"));
        assert_eq!(pf("dx1^dx2").wedge(&pf("dx3")).degree(), 3);
        assert_eq!(pf("dx1^dx2").wedge(&pf("dx1^dx3")).degree(), 4);
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(pf("x^2*y").d(), pf("2*x*y*dx1 + x^2*dx2"));
        assert_eq!(pf("x*dx2").d(), pf("dx1^dx2"));
        assert!(pf("dx1^dx2").d().is_exact_zero());
        assert!(pf("x*y*z*dx1^dx2^dx3").d().is_exact_zero());
    }

    #[test]
    fn interior_examples() {
        let v1 = VectorField::coordinate(0);
        assert_eq!(pf("dx1^dx2").interior(&v1).unwrap(), pf("dx2"));
        let v3 = VectorField::coordinate(2);
        assert_eq!(pf("dx2^dx3").interior(&v3).unwrap(), pf("-dx2"));
        assert!(pf("x").interior(&v3).is_none());
    }

    #[test]
    fn display_round_trips() {
        for s in ["x*dx1 + (x2 + 1)*dx3", "dx1^dx2^dx3", "(-x1)*dx3", "x1/(x3 + 1)*dx2"] {
            let f = parse_form(s).unwrap();
            let back = parse_form(&f.to_string()).unwrap();
            assert_eq!(f, back, "{s} -> {f}");
        }
    }
}
