//! Linearized continuity equations under a rescaled defect 1-form.

use super::{comp1, mat_tensor, rcw_densities};
use crate::exterior::eps;
use crate::field::rational::to_f64;
use crate::field::{FieldError, Point, Rational};
use crate::geometry::{connection_split, cov_d_with, Connection, Geometry, UU};

#[derive(Clone, Debug, PartialEq)]
pub struct LinearResiduals {
    pub scales: [Rational; 2],
    /// `|D̃_bα^{ba} − ε^{abc}θ_bc|` at each scale
    pub res1: [f64; 2],
    /// `|D̃_bθ^{ba}|` at each scale
    pub res2: [f64; 2],
}

impl LinearResiduals {
    pub fn ratios(&self) -> [f64; 2] {
        [self.res1[0] / self.res1[1], self.res2[0] / self.res2[1]]
    }
}

/// Rescales `L → s·L` in `ω = ω̃ + L`, recomputes the densities and evaluates
/// the linearized equations at `point`, for `s = scale` and `s = scale/2`.
pub fn linearized_continuity(geom: &Geometry, scale: &Rational, point: &Point) -> Result<LinearResiduals, FieldError> {
    let split = connection_split(geom);
    let lc = split.levi_civita.omega().clone();
    let half_scale = scale / Rational::from(2u32);
    let mut res1 = [0.0; 2];
    let mut res2 = [0.0; 2];
    for (k, s) in [scale, &half_scale].into_iter().enumerate() {
        let w = lc.add(&split.defect_one_form.scale_rat(s));
        let gs = Geometry::new(geom.frame().clone(), Connection::new(w).expect("degree 1"));
        let d = rcw_densities(&gs);
        let da = cov_d_with(&lc, &mat_tensor(&d.alpha, &UU));
        let dt = cov_d_with(&lc, &mat_tensor(&d.theta, &UU));
        let frame = gs.frame();
        let pt = point.coords();
        let at = |f: &crate::field::ScalarField| f.eval_at(&pt).ok_or_else(|| FieldError::Pole(point.to_string()));
        let (mut n1, mut n2) = (0.0, 0.0);
        for a in 0..3 {
            let mut r1 = crate::field::ScalarField::zero();
            let mut r2 = crate::field::ScalarField::zero();
            for b in 0..3 {
                r1 = &r1 + &comp1(frame, da.get(&[b, a]))[b];
                r2 = &r2 + &comp1(frame, dt.get(&[b, a]))[b];
                for c in 0..3 {
                    let e = eps(a, b, c);
                    if e != 0 {
                        r1 = &r1 - &super::times(e, &d.theta[b][c]);
                    }
                }
            }
            n1 += to_f64(&at(&r1)?).powi(2);
            n2 += to_f64(&at(&r2)?).powi(2);
        }
        res1[k] = n1.sqrt();
        res2[k] = n2.sqrt();
    }
    Ok(LinearResiduals { scales: [scale.clone(), half_scale], res1, res2 })
}
