//! Metric-affine geometries: coframe plus connection, Cartan tensors, the
//! covariant exterior derivative and the Bianchi residuals.

mod generators;
mod split;

pub mod fixtures;

use crate::exterior::{Basis, ExteriorError, Form, Slot, TensorForm};
use crate::field::{is_zero, FieldError, ZeroTestConfig};
use serde::Serialize;
use std::fmt;
use std::sync::OnceLock;

pub use crate::exterior::Coframe;
pub use generators::{cayley_rotation, conformal_gauge, gauge_connection, symmetric_coframe, GaugeField};
pub use split::{connection_split, curvature_split, curvature_split_with, levi_civita, ConnectionSplit, CurvatureSplit};

pub const UD: [Slot; 2] = [Slot::Up, Slot::Down];
pub const DD: [Slot; 2] = [Slot::Down, Slot::Down];
pub const UU: [Slot; 2] = [Slot::Up, Slot::Up];

/// `ω^a_b`, a (1,1) 1-form in the coordinate basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connection {
    omega: TensorForm,
}

impl Connection {
    pub fn new(omega: TensorForm) -> Result<Self, ExteriorError> {
        if omega.degree() != 1 {
            return Err(ExteriorError::Degree { expected: 1, found: omega.degree() });
        }
        assert_eq!(omega.rank(), 2, "a connection has two frame indices");
        assert_eq!(omega.basis(), Basis::Coordinate);
        Ok(Connection { omega: omega.with_slots(&UD) })
    }

    pub fn zero() -> Self {
        Connection { omega: TensorForm::zero(&UD, 1, Basis::Coordinate) }
    }

    pub fn from_fn(f: impl FnMut(&[usize]) -> Form) -> Self {
        Connection { omega: TensorForm::from_fn(&UD, 1, Basis::Coordinate, f) }
    }

    pub fn omega(&self) -> &TensorForm {
        &self.omega
    }

    pub fn get(&self, a: usize, b: usize) -> &Form {
        self.omega.get(&[a, b])
    }
}

/// Non-metricity `Q_ab`, torsion `T^a` and curvature `R^a_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cartan {
    pub q: TensorForm,
    pub t: TensorForm,
    pub r: TensorForm,
}

#[derive(Clone, Debug)]
pub struct Geometry {
    frame: Coframe,
    conn: Connection,
    cartan: OnceLock<Cartan>,
}

impl Geometry {
    pub fn new(frame: Coframe, conn: Connection) -> Self {
        Geometry { frame, conn, cartan: OnceLock::new() }
    }

    pub fn frame(&self) -> &Coframe {
        &self.frame
    }

    pub fn conn(&self) -> &Connection {
        &self.conn
    }

    pub fn omega(&self) -> &TensorForm {
        &self.conn.omega
    }

    /// `e^a` as a (1,0) 1-form.
    pub fn e(&self) -> TensorForm {
        coframe_tensor(&self.frame)
    }

    pub fn cartan(&self) -> &Cartan {
        self.cartan.get_or_init(|| compute_cartan(&self.frame, &self.conn))
    }

    pub fn q(&self) -> &TensorForm {
        &self.cartan().q
    }

    pub fn t(&self) -> &TensorForm {
        &self.cartan().t
    }

    pub fn r(&self) -> &TensorForm {
        &self.cartan().r
    }

    pub fn cov_d(&self, a: &TensorForm) -> TensorForm {
        cov_d_with(&self.conn.omega, a)
    }

    /// `ι_a` on a coordinate-basis form of positive degree.
    pub fn iota(&self, a: usize, f: &Form) -> Form {
        self.frame.iota(a, f).expect("interior product of a 0-form")
    }

    pub fn hodge(&self, f: &Form) -> Form {
        self.frame.hodge(f)
    }
}

pub fn coframe_tensor(frame: &Coframe) -> TensorForm {
    TensorForm::from_fn(&[Slot::Up], 1, Basis::Coordinate, |i| frame.one_form(i[0]))
}

fn compute_cartan(frame: &Coframe, conn: &Connection) -> Cartan {
    let w = &conn.omega;
    let q = TensorForm::from_fn(&DD, 1, Basis::Coordinate, |i| {
        (w.get(&[i[0], i[1]]) + w.get(&[i[1], i[0]])).scale_rat(&crate::field::rational::rat(1, 2))
    });
    let e = coframe_tensor(frame);
    let t = cov_d_with(w, &e);
    let r = TensorForm::from_fn(&UD, 2, Basis::Coordinate, |i| {
        let mut acc = w.get(i).d();
        for c in 0..3 {
            acc = &acc + &w.get(&[i[0], c]).wedge(w.get(&[c, i[1]]));
        }
        acc
    });
    Cartan { q, t, r }
}

/// Cartan tensors of a geometry (memoized).
pub fn cartan_tensors(geom: &Geometry) -> &Cartan {
    geom.cartan()
}

/// `DA = dA + Σ_up ω^a_c ∧ A^{..c..} − Σ_down ω^c_b ∧ A_{..c..}` for the
/// connection `omega`, honouring each slot's variance.
pub fn cov_d_with(omega: &TensorForm, a: &TensorForm) -> TensorForm {
    assert_eq!(a.basis(), Basis::Coordinate, "covariant derivative needs coordinate-basis input");
    TensorForm::from_fn(a.slots(), a.degree() + 1, Basis::Coordinate, |idx| {
        let mut acc = a.get(idx).d();
        let mut j = idx.to_vec();
        for (k, slot) in a.slots().iter().enumerate() {
            for c in 0..3 {
                j[k] = c;
                let comp = a.get(&j);
                if comp.is_exact_zero() {
                    continue;
                }
                match slot {
                    Slot::Up => acc = &acc + &omega.get(&[idx[k], c]).wedge(comp),
                    Slot::Down => acc = &acc - &omega.get(&[c, idx[k]]).wedge(comp),
                }
            }
            j[k] = idx[k];
        }
        acc
    })
}

pub fn cov_d(geom: &Geometry, a: &TensorForm) -> TensorForm {
    geom.cov_d(a)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BianchiResiduals {
    /// `DQ_ab − R_(ab)`
    pub res1: TensorForm,
    /// `DT^a − R^a_b ∧ e^b`
    pub res2: TensorForm,
    /// `DR^a_b`
    pub res3: TensorForm,
}

pub fn bianchi_residuals(geom: &Geometry) -> BianchiResiduals {
    let c = geom.cartan();
    let half = crate::field::rational::rat(1, 2);
    let rsym = TensorForm::from_fn(&DD, 2, Basis::Coordinate, |i| {
        (c.r.get(&[i[0], i[1]]) + c.r.get(&[i[1], i[0]])).scale_rat(&half)
    });
    let res1 = geom.cov_d(&c.q).sub(&rsym);
    let e = geom.e();
    let re = TensorForm::from_fn(&[Slot::Up], 3, Basis::Coordinate, |i| {
        (0..3).fold(Form::zero(3), |acc, b| &acc + &c.r.get(&[i[0], b]).wedge(e.get(&[b])))
    });
    let res2 = geom.cov_d(&c.t).sub(&re);
    let res3 = geom.cov_d(&c.r);
    BianchiResiduals { res1, res2, res3 }
}

/// Zero test of every coefficient of a tensor form.
pub fn tensor_is_zero(t: &TensorForm, cfg: &ZeroTestConfig) -> Result<bool, FieldError> {
    for f in t.comps() {
        for c in f.coeffs() {
            if !is_zero(c, cfg)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GeometryClass {
    Minkowski,
    Riemann,
    MetricTeleparallel,
    SymmetricTeleparallel,
    RiemannCartan,
    RiemannWeyl,
    GeneralTeleparallel,
    MetricAffine,
}

impl GeometryClass {
    /// Table lookup on (Q = 0, T = 0, R = 0).
    pub fn from_vanishing(q0: bool, t0: bool, r0: bool) -> Self {
        match (q0, t0, r0) {
            (true, true, true) => GeometryClass::Minkowski,
            (true, true, false) => GeometryClass::Riemann,
            (true, false, true) => GeometryClass::MetricTeleparallel,
            (false, true, true) => GeometryClass::SymmetricTeleparallel,
            (true, false, false) => GeometryClass::RiemannCartan,
            (false, true, false) => GeometryClass::RiemannWeyl,
            (false, false, true) => GeometryClass::GeneralTeleparallel,
            (false, false, false) => GeometryClass::MetricAffine,
        }
    }
}

impl fmt::Display for GeometryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GeometryClass::Minkowski => "Minkowski",
            GeometryClass::Riemann => "Riemann",
            GeometryClass::MetricTeleparallel => "MetricTeleparallel",
            GeometryClass::SymmetricTeleparallel => "SymmetricTeleparallel",
            GeometryClass::RiemannCartan => "RiemannCartan",
            GeometryClass::RiemannWeyl => "RiemannWeyl",
            GeometryClass::GeneralTeleparallel => "GeneralTeleparallel",
            GeometryClass::MetricAffine => "MetricAffine",
        };
        f.write_str(s)
    }
}

pub fn classify(geom: &Geometry, cfg: &ZeroTestConfig) -> Result<GeometryClass, FieldError> {
    let c = geom.cartan();
    Ok(GeometryClass::from_vanishing(tensor_is_zero(&c.q, cfg)?, tensor_is_zero(&c.t, cfg)?, tensor_is_zero(&c.r, cfg)?))
}
