//! Seeded generators for random polynomial fields, forms and coframes.

use crate::exterior::{basis_len, Coframe, Form, Matrix};
use crate::field::{Monomial, MultiPoly, Rational, ScalarField};
use rand::Rng;

/// Sparse random polynomial: up to `max_terms` monomials of total degree at
/// most `max_deg`, with small nonzero integer coefficients.
pub fn poly<R: Rng>(rng: &mut R, max_deg: u32, max_terms: usize) -> MultiPoly {
    let n = rng.gen_range(0..=max_terms);
    let terms = (0..n).map(|_| {
        let deg = rng.gen_range(0..=max_deg);
        let mut e = [0u32; 3];
        for _ in 0..deg {
            e[rng.gen_range(0..3)] += 1;
        }
        let mut c: i64 = rng.gen_range(1..=4);
        if rng.gen_bool(0.5) {
            c = -c;
        }
        (Monomial::new(e), Rational::from(c))
    });
    MultiPoly::from_terms(terms)
}

pub fn scalar<R: Rng>(rng: &mut R, max_deg: u32, max_terms: usize) -> ScalarField {
    ScalarField::from_poly(poly(rng, max_deg, max_terms))
}

pub fn form<R: Rng>(rng: &mut R, degree: usize, max_deg: u32, max_terms: usize) -> Form {
    Form::from_coeffs(degree, (0..basis_len(degree)).map(|_| scalar(rng, max_deg, max_terms)).collect())
}

/// Random invertible coframe: the identity plus sparse polynomial entries
/// off a randomly chosen diagonal pattern, so the determinant stays nonzero.
pub fn coframe<R: Rng>(rng: &mut R, max_deg: u32) -> Coframe {
    loop {
        let m = Matrix::from_fn(3, |a, i| {
            if a == i {
                ScalarField::int(rng.gen_range(1..=2))
            } else if rng.gen_bool(0.4) {
                scalar(rng, max_deg, 2)
            } else {
                ScalarField::zero()
            }
        });
        if let Ok(f) = Coframe::new(m) {
            return f;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_respect_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let p = poly(&mut rng, 3, 4);
            assert!(p.degree_or_zero() <= 3);
            assert!(p.len() <= 4);
        }
        let f = coframe(&mut rng, 2);
        assert!(!f.det().is_exact_zero());
    }
}
