//! Hybrid exact / sampled zero testing.

use super::rational::{self, Rational};
use super::{FieldError, ScalarField};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

const MAX_RESAMPLES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroTestConfig {
    pub seed: u64,
    pub num_points: usize,
    pub coord_bound: u32,
    pub max_expand_degree: u32,
}

impl Default for ZeroTestConfig {
    fn default() -> Self {
        ZeroTestConfig { seed: 0x5eed_0001, num_points: 8, coord_bound: 1000, max_expand_degree: 12 }
    }
}

impl ZeroTestConfig {
    pub fn with_seed(seed: u64) -> Self {
        ZeroTestConfig { seed, ..Self::default() }
    }

    pub fn validate(&self) -> Result<(), FieldError> {
        if self.num_points < 4 {
            return Err(FieldError::Config("num_points must be at least 4".into()));
        }
        if self.coord_bound == 0 {
            return Err(FieldError::Config("coord_bound must be positive".into()));
        }
        Ok(())
    }
}

/// Deterministic stream of rational sample points for one configuration.
pub(crate) struct SamplePoints {
    rng: ChaCha8Rng,
    bound: i64,
}

impl SamplePoints {
    pub(crate) fn new(cfg: &ZeroTestConfig) -> Self {
        SamplePoints { rng: ChaCha8Rng::seed_from_u64(cfg.seed), bound: i64::from(cfg.coord_bound) }
    }

    pub(crate) fn next_point(&mut self) -> [Rational; 3] {
        let b = self.bound;
        std::array::from_fn(|_| {
            let n = self.rng.gen_range(-b..=b);
            let d = self.rng.gen_range(1..=b);
            Rational::from_signeds(n, d)
        })
    }
}

/// Runs `check` at `num_points` sample points; `check` returns `None` at a
/// pole (the point is resampled) and `Some(ok)` otherwise.
pub(crate) fn sample_all(
    cfg: &ZeroTestConfig,
    mut check: impl FnMut(&[Rational; 3]) -> Option<bool>,
) -> Result<bool, FieldError> {
    let mut pts = SamplePoints::new(cfg);
    for _ in 0..cfg.num_points {
        let mut verdict = None;
        for _ in 0..MAX_RESAMPLES {
            let p = pts.next_point();
            if let Some(ok) = check(&p) {
                verdict = Some(ok);
                break;
            }
        }
        match verdict {
            Some(true) => {}
            Some(false) => return Ok(false),
            None => return Err(FieldError::SamplingExhausted(MAX_RESAMPLES)),
        }
    }
    Ok(true)
}

/// Zero test: exact when the numerator degree is at most
/// `cfg.max_expand_degree`, otherwise by evaluation at seeded random points.
pub fn is_zero(f: &ScalarField, cfg: &ZeroTestConfig) -> Result<bool, FieldError> {
    if f.is_exact_zero() {
        return Ok(true);
    }
    if f.numerator_degree() <= cfg.max_expand_degree {
        return Ok(false);
    }
    sample_all(cfg, |p| f.eval_at(p).map(|v| rational::is_zero(&v)))
}

/// `a == b` as rational functions. The cross-multiplied numerator
/// `a.num * b.den - b.num * a.den` is expanded only when its degree is at most
/// `cfg.max_expand_degree`; otherwise both sides are sampled.
pub fn fields_equal(a: &ScalarField, b: &ScalarField, cfg: &ZeroTestConfig) -> Result<bool, FieldError> {
    let cross = (a.numerator_degree() + b.denominator_degree()).max(b.numerator_degree() + a.denominator_degree());
    if cross <= cfg.max_expand_degree {
        return Ok((a - b).is_exact_zero());
    }
    sample_all(cfg, |p| match (a.eval_at(p), b.eval_at(p)) {
        (Some(x), Some(y)) => Some(x == y),
        _ => None,
    })
}
