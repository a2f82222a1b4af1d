//! Tensor-valued differential forms in three Euclidean dimensions.

mod epsilon;
mod form;
mod frame;
mod matrix;
mod tensor;

use thiserror::Error;

pub use epsilon::{delta, eps, EpsilonSymbol};
pub use form::{basis, basis_len, basis_name, complement, index_of, wedge_indices, Form, VectorField};
pub use frame::Coframe;
pub use matrix::Matrix;
pub use tensor::{index_tuples, Basis, Slot, TensorForm};


#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExteriorError {
    #[error("coframe determinant is identically zero")]
    DegenerateCoframe,
    #[error("interior product of a 0-form")]
    InteriorOfZeroForm,
    #[error("expected a {expected}-form, found a {found}-form")]
    Degree { expected: usize, found: usize },
    #[error("operands are held in different bases")]
    BasisMismatch,
    #[error("gauge matrix is not invertible")]
    DegenerateGauge,
    #[error("matrix is not antisymmetric")]
    NotAntisymmetric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    ToFrame,
    ToCoordinate,
}

/// Slot lists concatenate and degrees add.
pub fn wedge(a: &TensorForm, b: &TensorForm) -> Result<TensorForm, ExteriorError> {
    if a.basis() != b.basis() {
        return Err(ExteriorError::BasisMismatch);
    }
    let slots: Vec<Slot> = a.slots().iter().chain(b.slots()).copied().collect();
    let rb = b.rank();
    Ok(TensorForm::from_fn(&slots, a.degree() + b.degree(), a.basis(), |idx| {
        a.get(&idx[..idx.len() - rb]).wedge(b.get(&idx[idx.len() - rb..]))
    }))
}

/// Componentwise exterior derivative; the input is converted to the
/// coordinate basis first when it is held in a frame basis.
pub fn d(a: &TensorForm, frame: &Coframe) -> TensorForm {
    let a = change_basis(a, frame, Direction::ToCoordinate);
    a.map_forms(Form::d)
}

/// Componentwise exterior derivative of a coordinate-basis tensor.
pub fn d_coord(a: &TensorForm) -> TensorForm {
    assert_eq!(a.basis(), Basis::Coordinate, "d_coord needs coordinate-basis input");
    a.map_forms(Form::d)
}

pub fn hodge(a: &TensorForm, frame: &Coframe) -> TensorForm {
    match a.basis() {
        Basis::Coordinate => a.map_forms(|f| frame.hodge(f)),
        Basis::Frame => {
            let c = change_basis(a, frame, Direction::ToCoordinate).map_forms(|f| frame.hodge(f));
            change_basis(&c, frame, Direction::ToFrame)
        }
    }
}

/// Interior product on the form part of every component.
pub fn interior(v: &VectorField, a: &TensorForm, frame: &Coframe) -> Result<TensorForm, ExteriorError> {
    if a.degree() == 0 {
        return Err(ExteriorError::InteriorOfZeroForm);
    }
    let basis = a.basis();
    let c = change_basis(a, frame, Direction::ToCoordinate);
    let out = c.map_forms(|f| f.interior(v).expect("degree checked"));
    Ok(match basis {
        Basis::Coordinate => out,
        Basis::Frame => change_basis(&out, frame, Direction::ToFrame),
    })
}

/// `ι_a` with the frame vector `X_a`.
pub fn iota(a: usize, t: &TensorForm, frame: &Coframe) -> Result<TensorForm, ExteriorError> {
    interior(&frame.vector(a), t, frame)
}

pub fn change_basis(a: &TensorForm, frame: &Coframe, direction: Direction) -> TensorForm {
    match (a.basis(), direction) {
        (Basis::Coordinate, Direction::ToCoordinate) | (Basis::Frame, Direction::ToFrame) => a.clone(),
        (Basis::Coordinate, Direction::ToFrame) => a.map_forms(|f| frame.to_frame(f)).with_basis(Basis::Frame),
        (Basis::Frame, Direction::ToCoordinate) => {
            a.map_forms(|f| frame.to_coordinate(f)).with_basis(Basis::Coordinate)
        }
    }
}

#[cfg(test)]
mod tests;
