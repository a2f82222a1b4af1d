//! Tensor-valued forms: a form for every index tuple.

use super::form::Form;
use crate::field::{Rational, ScalarField};
use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Slot {
    Up,
    Down,
}

/// Whether the form parts are expanded on dx^I or on e^I.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Basis {
    Coordinate,
    Frame,
}

#[derive(Clone, PartialEq, Eq)]
pub struct TensorForm {
    slots: Vec<Slot>,
    degree: usize,
    basis: Basis,
    comps: Vec<Form>,
}

pub(crate) fn tuple_of(mut flat: usize, rank: usize) -> Vec<usize> {
    let mut idx = vec![0; rank];
    for k in (0..rank).rev() {
        idx[k] = flat % 3;
        flat /= 3;
    }
    idx
}

pub(crate) fn flat_of(idx: &[usize]) -> usize {
    idx.iter().fold(0, |acc, &i| {
        debug_assert!(i < 3);
        acc * 3 + i
    })
}

/// Every index tuple of the given rank, in row-major order.
pub fn index_tuples(rank: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..3usize.pow(rank as u32)).map(move |k| tuple_of(k, rank))
}

impl TensorForm {
    pub fn zero(slots: &[Slot], degree: usize, basis: Basis) -> Self {
        let n = 3usize.pow(slots.len() as u32);
        TensorForm { slots: slots.to_vec(), degree, basis, comps: vec![Form::zero(degree); n] }
    }

    pub fn from_fn(slots: &[Slot], degree: usize, basis: Basis, mut f: impl FnMut(&[usize]) -> Form) -> Self {
        let comps: Vec<Form> = index_tuples(slots.len())
            .map(|idx| {
                let c = f(&idx);
                assert_eq!(c.degree(), degree, "component {idx:?} has the wrong degree");
                c
            })
            .collect();
        TensorForm { slots: slots.to_vec(), degree, basis, comps }
    }

    /// Degree-0 tensor from scalar components.
    pub fn from_scalars(slots: &[Slot], basis: Basis, mut f: impl FnMut(&[usize]) -> ScalarField) -> Self {
        Self::from_fn(slots, 0, basis, |idx| Form::scalar(f(idx)))
    }

    /// A rank-0 tensor holding a single form.
    pub fn from_form(form: Form, basis: Basis) -> Self {
        TensorForm { slots: Vec::new(), degree: form.degree(), basis, comps: vec![form] }
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn rank(&self) -> usize {
        self.slots.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn comps(&self) -> &[Form] {
        &self.comps
    }

    pub fn get(&self, idx: &[usize]) -> &Form {
        assert_eq!(idx.len(), self.rank(), "index arity does not match tensor rank");
        &self.comps[flat_of(idx)]
    }

    pub fn set(&mut self, idx: &[usize], f: Form) {
        assert_eq!(f.degree(), self.degree);
        let k = flat_of(idx);
        self.comps[k] = f;
    }

    /// The scalar component of a degree-0 tensor.
    pub fn scalar(&self, idx: &[usize]) -> &ScalarField {
        assert_eq!(self.degree, 0, "scalar access on a tensor of positive degree");
        self.get(idx).coeff(0)
    }

    /// The single form of a rank-0 tensor.
    pub fn form(&self) -> &Form {
        assert_eq!(self.rank(), 0);
        &self.comps[0]
    }

    pub fn index_tuples(&self) -> impl Iterator<Item = Vec<usize>> {
        index_tuples(self.rank())
    }

    pub fn is_exact_zero(&self) -> bool {
        self.comps.iter().all(Form::is_exact_zero)
    }

    pub fn map_forms(&self, f: impl Fn(&Form) -> Form) -> Self {
        let comps: Vec<Form> = self.comps.iter().map(f).collect();
        let degree = comps.first().map_or(self.degree, Form::degree);
        TensorForm { slots: self.slots.clone(), degree, basis: self.basis, comps }
    }

    pub fn with_basis(mut self, basis: Basis) -> Self {
        self.basis = basis;
        self
    }

    pub fn with_slots(mut self, slots: &[Slot]) -> Self {
        assert_eq!(slots.len(), self.slots.len());
        self.slots = slots.to_vec();
        self
    }

    pub fn scale(&self, c: &ScalarField) -> Self {
        self.map_forms(|f| f.scale(c))
    }

    pub fn scale_rat(&self, c: &Rational) -> Self {
        self.map_forms(|f| f.scale_rat(c))
    }

    fn check_compatible(&self, rhs: &TensorForm) {
        assert_eq!(self.slots, rhs.slots, "tensor slot mismatch");
        assert_eq!(self.degree, rhs.degree, "tensor degree mismatch");
        assert_eq!(self.basis, rhs.basis, "tensor basis mismatch");
    }

    pub fn add(&self, rhs: &TensorForm) -> Self {
        self.check_compatible(rhs);
        let comps = self.comps.iter().zip(&rhs.comps).map(|(a, b)| a + b).collect();
        TensorForm { comps, ..self.clone_shape() }
    }

    pub fn sub(&self, rhs: &TensorForm) -> Self {
        self.check_compatible(rhs);
        let comps = self.comps.iter().zip(&rhs.comps).map(|(a, b)| a - b).collect();
        TensorForm { comps, ..self.clone_shape() }
    }

    pub fn neg(&self) -> Self {
        self.map_forms(|f| -f)
    }

    fn clone_shape(&self) -> Self {
        TensorForm { slots: self.slots.clone(), degree: self.degree, basis: self.basis, comps: Vec::new() }
    }

    /// Components with a nonzero coefficient: (index tuple, basis position, coefficient).
    pub fn nonzero_terms(&self) -> Vec<(Vec<usize>, usize, &ScalarField)> {
        let mut out = Vec::new();
        for (k, f) in self.comps.iter().enumerate() {
            for (j, c) in f.coeffs().iter().enumerate() {
                if !c.is_exact_zero() {
                    out.push((tuple_of(k, self.rank()), j, c));
                }
            }
        }
        out
    }
}

impl fmt::Debug for TensorForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorForm<{:?}, {}, {:?}> {{", self.slots, self.degree, self.basis)?;
        for (k, c) in self.comps.iter().enumerate() {
            if !c.is_exact_zero() {
                write!(f, " {:?}: {c};", tuple_of(k, self.rank()))?;
            }
        }
        f.write_str(" }")
    }
}
