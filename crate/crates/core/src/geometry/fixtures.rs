//! Named fixture geometries and seeded random geometries of each class.

use super::{cayley_rotation, conformal_gauge, gauge_connection, symmetric_coframe, Connection, GaugeField, Geometry};
use crate::exterior::{Coframe, Matrix};
use crate::field::rational::rat;
use crate::field::{Rational, ScalarField};
use crate::random;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn x(axis: usize) -> ScalarField {
    ScalarField::var(axis)
}

/// `I + f·E_ij`.
pub fn elementary(i: usize, j: usize, f: ScalarField) -> Matrix {
    let mut m = Matrix::identity(3);
    m.set(i, j, &m.get(i, j).clone() + &f);
    m
}

/// `f·(E_ij − E_ji)`.
pub fn rotation_generator(i: usize, j: usize, f: ScalarField) -> Matrix {
    let mut m = Matrix::zero(3);
    m.set(j, i, -&f);
    m.set(i, j, f);
    m
}

pub fn coordinates() -> [ScalarField; 3] {
    [x(0), x(1), x(2)]
}

/// Identity coframe, zero connection.
pub fn g0() -> Geometry {
    Geometry::new(Coframe::identity(), Connection::zero())
}

/// Identity coframe, shear gauge `Λ = I + x·E_12`.
pub fn g1() -> Geometry {
    let g = GaugeField::new(elementary(0, 1, x(0))).expect("unipotent");
    Geometry::new(Coframe::identity(), gauge_connection(&g))
}

/// Identity coframe, Cayley gauge `S = z(E_12 − E_21)`.
pub fn g2() -> Geometry {
    let g = cayley_rotation(&rotation_generator(0, 1, x(2))).expect("admissible");
    Geometry::new(Coframe::identity(), gauge_connection(&g))
}

/// Symmetric teleparallel: shear gauge with the adapted coframe.
pub fn g3() -> Geometry {
    let g = GaugeField::new(elementary(0, 1, x(0))).expect("unipotent");
    let frame = symmetric_coframe(&g, &coordinates()).expect("invertible");
    Geometry::new(frame, gauge_connection(&g))
}

/// Conformal gauge `f = 1 + x`, `S = z(E_12 − E_21)`, identity coframe.
pub fn g4() -> Geometry {
    let f = &ScalarField::one() + &x(0);
    let g = conformal_gauge(&f, &rotation_generator(0, 1, x(2))).expect("admissible");
    Geometry::new(Coframe::identity(), gauge_connection(&g))
}

/// General teleparallel: shear gauge on a sheared coframe `e^3 = dx3 + x·dx2`.
pub fn g5() -> Geometry {
    let g = GaugeField::new(elementary(0, 1, x(0))).expect("unipotent");
    let mut e = Matrix::identity(3);
    e.set(2, 1, x(0));
    Geometry::new(Coframe::new(e).expect("unipotent"), gauge_connection(&g))
}

pub fn by_name(name: &str) -> Option<Geometry> {
    match name.to_ascii_lowercase().as_str() {
        "g0" => Some(g0()),
        "g1" => Some(g1()),
        "g2" => Some(g2()),
        "g3" => Some(g3()),
        "g4" => Some(g4()),
        "g5" => Some(g5()),
        _ => None,
    }
}

pub const NAMES: [&str; 6] = ["g0", "g1", "g2", "g3", "g4", "g5"];

/// Random coframe and random polynomial connection, entries of degree ≤ `deg`.
pub fn random_metric_affine(seed: u64, deg: u32) -> Geometry {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let frame = random::coframe(&mut rng, deg);
    let conn = Connection::from_fn(|_| {
        if rng.gen_bool(0.6) {
            random::form(&mut rng, 1, deg, 2)
        } else {
            random::form(&mut rng, 1, 0, 0)
        }
    });
    Geometry::new(frame, conn)
}

/// Random invertible gauge matrix: unit diagonal constants plus sparse polynomial entries.
pub fn random_gauge<R: Rng>(rng: &mut R, deg: u32) -> GaugeField {
    loop {
        let m = Matrix::from_fn(3, |a, b| {
            if a == b {
                &ScalarField::int(rng.gen_range(1..=2)) + &random::scalar(rng, deg, 1)
            } else if rng.gen_bool(0.5) {
                random::scalar(rng, deg, 1)
            } else {
                ScalarField::zero()
            }
        });
        if let Ok(g) = GaugeField::new(m) {
            return g;
        }
    }
}

/// Random antisymmetric matrix with linear entries.
pub fn random_antisymmetric<R: Rng>(rng: &mut R) -> Matrix {
    let mut m = Matrix::zero(3);
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        if rng.gen_bool(0.7) {
            let f = random::scalar(rng, 1, 2);
            m.set(j, i, -&f);
            m.set(i, j, f);
        }
    }
    m
}

pub fn random_general_teleparallel(seed: u64) -> Geometry {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = random_gauge(&mut rng, 1);
    let frame = random::coframe(&mut rng, 1);
    Geometry::new(frame, gauge_connection(&g))
}

pub fn random_metric_teleparallel(seed: u64) -> Geometry {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let s = random_antisymmetric(&mut rng);
        if let Ok(g) = cayley_rotation(&s) {
            let frame = random::coframe(&mut rng, 1);
            return Geometry::new(frame, gauge_connection(&g));
        }
    }
}

pub fn random_symmetric_teleparallel(seed: u64) -> Geometry {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let g = random_gauge(&mut rng, 1);
        let f: [ScalarField; 3] = std::array::from_fn(|i| &x(i) + &random::scalar(&mut rng, 2, 1));
        if let Ok(frame) = symmetric_coframe(&g, &f) {
            return Geometry::new(frame, gauge_connection(&g));
        }
    }
}

pub fn random_conformal(seed: u64) -> Geometry {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let f = &ScalarField::int(rng.gen_range(1..=3)) + &random::scalar(&mut rng, 1, 2);
        let s = random_antisymmetric(&mut rng);
        if let Ok(g) = conformal_gauge(&f, &s) {
            return Geometry::new(Coframe::identity(), gauge_connection(&g));
        }
    }
}

/// Riemann–Cartan: random coframe with a random antisymmetric connection.
pub fn random_riemann_cartan(seed: u64) -> Geometry {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let frame = random::coframe(&mut rng, 1);
    let mut w = Connection::zero().omega().clone();
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        let f = random::form(&mut rng, 1, 1, 2);
        w.set(&[b, a], -&f);
        w.set(&[a, b], f);
    }
    Geometry::new(frame, Connection::new(w).expect("degree 1"))
}

/// Identity coframe with the constant connection `ω = (E_12 − E_21)dz`.
pub fn linear_fixture() -> Geometry {
    let dz = crate::exterior::Form::dx(2);
    let mut w = Connection::zero().omega().clone();
    w.set(&[1, 0], -&dz);
    w.set(&[0, 1], dz);
    Geometry::new(Coframe::identity(), Connection::new(w).expect("degree 1"))
}

fn admissible_gauge(s: &Rational) -> Matrix {
    let c = ScalarField::constant(s.clone());
    let mut m = Matrix::identity(3);
    m.set(0, 1, -&(&c * &x(2)));
    m.set(0, 2, &c * &x(1));
    m
}

/// Flat teleparallel geometry whose non-metricity lies in the image of the
/// disclination map: gauge `I + s(−z·E_12 + y·E_13)` on the identity coframe.
pub fn admissible(s: &Rational) -> Geometry {
    let g = GaugeField::new(admissible_gauge(s)).expect("unipotent");
    Geometry::new(Coframe::identity(), gauge_connection(&g))
}

/// [`admissible`] with `s = 1`, rotated by a constant Cayley rotation.
pub fn admissible_rotated() -> Geometry {
    let half = ScalarField::constant(rat(1, 2));
    let third = ScalarField::constant(rat(1, 3));
    let s = rotation_generator(0, 1, half).add(&rotation_generator(1, 2, third));
    let rot = cayley_rotation(&s).expect("constant rotation").lambda().clone();
    let g = GaugeField::new(admissible_gauge(&rat(1, 1)).mul(&rot)).expect("invertible");
    let frame = Coframe::new(rot.transpose()).expect("orthogonal");
    Geometry::new(frame, gauge_connection(&g))
}

/// Random coframe with `ω_ab = A_ab + δ_ab q`, `A` antisymmetric.
pub fn random_semi_metric(seed: u64) -> Geometry {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let frame = random::coframe(&mut rng, 1);
    let q = random::form(&mut rng, 1, 1, 2);
    let mut w = Connection::zero().omega().clone();
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        let f = random::form(&mut rng, 1, 1, 2);
        w.set(&[b, a], -&f);
        w.set(&[a, b], f);
    }
    for a in 0..3 {
        w.set(&[a, a], q.clone());
    }
    Geometry::new(frame, Connection::new(w).expect("degree 1"))
}

/// Identity coframe with a random antisymmetric polynomial connection.
pub fn random_flat_riemann_cartan(seed: u64) -> Geometry {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut w = Connection::zero().omega().clone();
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        let f = random::form(&mut rng, 1, 1, 2);
        w.set(&[b, a], -&f);
        w.set(&[a, b], f);
    }
    Geometry::new(Coframe::identity(), Connection::new(w).expect("degree 1"))
}
