//! Exact scalar fields: rational functions in x1, x2, x3 over the rationals.

mod monomial;
mod parse;
mod poly;
pub mod rational;
mod scalar;
mod zero;

use std::fmt;
use thiserror::Error;

pub use monomial::Monomial;
pub use parse::{parse_form, parse_param_poly, parse_scalar, ParseError, Vars};
pub use poly::MultiPoly;
pub use rational::Rational;
pub use scalar::ScalarField;
pub use zero::{fields_equal, is_zero, ZeroTestConfig};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("pole at point {0}")]
    Pole(String),
    #[error("division by a polynomial that is identically zero")]
    DivisionByZero,
    #[error("zero test could not find a non-singular sample point after {0} attempts")]
    SamplingExhausted(usize),
    #[error("invalid zero-test configuration: {0}")]
    Config(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    pub x1: Rational,
    pub x2: Rational,
    pub x3: Rational,
}

impl Point {
    pub fn new(x1: Rational, x2: Rational, x3: Rational) -> Self {
        Point { x1, x2, x3 }
    }

    pub fn origin() -> Self {
        let z = Rational::from(0u32);
        Point { x1: z.clone(), x2: z.clone(), x3: z }
    }

    pub fn coords(&self) -> [Rational; 3] {
        [self.x1.clone(), self.x2.clone(), self.x3.clone()]
    }

    pub fn to_f64(&self) -> [f64; 3] {
        [rational::to_f64(&self.x1), rational::to_f64(&self.x2), rational::to_f64(&self.x3)]
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x1, self.x2, self.x3)
    }
}

pub fn differentiate(f: &ScalarField, axis: usize) -> ScalarField {
    f.differentiate(axis)
}

pub fn evaluate(f: &ScalarField, p: &Point) -> Result<Rational, FieldError> {
    f.evaluate(p)
}
