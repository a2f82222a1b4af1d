//! Rational functions in x1, x2, x3.

use super::poly::{MultiPoly, COORD_NAMES};
use super::rational::{self, Rational};
use super::{FieldError, Monomial, Point};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

type Factor = (Arc<MultiPoly>, u32);

/// `numerator / Π factor^exponent`.
///
/// Every denominator factor is a non-constant primitive polynomial with a
/// positive leading coefficient, and the factor list is sorted, so the
/// expanded denominator always has a positive leading coefficient.
/// Numerators are divided by any factor they are found to contain.
#[derive(Clone, Default)]
pub struct ScalarField {
    num: MultiPoly,
    den: Vec<Factor>,
}

impl ScalarField {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_poly(MultiPoly::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(MultiPoly::constant(c))
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Rational::from(n))
    }

    pub fn var(axis: usize) -> Self {
        Self::from_poly(MultiPoly::var(axis))
    }

    pub fn from_poly(num: MultiPoly) -> Self {
        ScalarField { num, den: Vec::new() }
    }

    /// `num / den`; fails when `den` is the zero polynomial.
    pub fn from_ratio(num: MultiPoly, den: &MultiPoly) -> Result<Self, FieldError> {
        Self::from_poly(num).checked_div(&Self::from_poly(den.clone()))
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    /// The expanded denominator.
    pub fn denominator(&self) -> MultiPoly {
        let mut d = MultiPoly::one();
        for (f, e) in &self.den {
            d = &d * &f.pow(*e);
        }
        d
    }

    pub fn denominator_factors(&self) -> impl Iterator<Item = (&MultiPoly, u32)> {
        self.den.iter().map(|(f, e)| (f.as_ref(), *e))
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    /// Exact structural zero test (the numerator is always fully expanded).
    pub fn is_exact_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.den.is_empty() {
            self.num.constant_value()
        } else if self.num.is_zero() {
            Some(Rational::from(0u32))
        } else {
            None
        }
    }

    pub fn numerator_degree(&self) -> u32 {
        self.num.degree_or_zero()
    }

    pub fn denominator_degree(&self) -> u32 {
        self.den.iter().map(|(f, e)| f.degree_or_zero() * e).sum()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if rational::is_zero(c) {
            return Self::zero();
        }
        ScalarField { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn differentiate(&self, axis: usize) -> Self {
        assert!(axis < 3, "axis must be 0, 1 or 2");
        let dnum = self.num.derivative(axis);
        if self.den.is_empty() {
            return Self::from_poly(dnum);
        }
        let moving: Vec<(usize, MultiPoly)> = self
            .den
            .iter()
            .enumerate()
            .filter_map(|(i, (f, _))| {
                let df = f.derivative(axis);
                (!df.is_zero()).then_some((i, df))
            })
            .collect();
        if moving.is_empty() {
            return ScalarField { num: dnum, den: self.den.clone() };
        }
        let prod_all = moving
            .iter()
            .fold(MultiPoly::one(), |acc, (i, _)| &acc * self.den[*i].0.as_ref());
        let mut num = &dnum * &prod_all;
        for (k, (i, df)) in moving.iter().enumerate() {
            let (_, e) = &self.den[*i];
            let mut term = &self.num * df;
            term = term.scale(&Rational::from(*e));
            for (k2, (i2, _)) in moving.iter().enumerate() {
                if k2 != k {
                    term = &term * self.den[*i2].0.as_ref();
                }
            }
            num = &num - &term;
        }
        let mut den = self.den.clone();
        for (i, _) in &moving {
            den[*i].1 += 1;
        }
        let mut out = ScalarField { num, den };
        out.reduce();
        out
    }

    pub fn evaluate(&self, p: &Point) -> Result<Rational, FieldError> {
        let c = p.coords();
        let mut d = Rational::from(1u32);
        for (f, e) in &self.den {
            let v = f.eval(&c);
            if rational::is_zero(&v) {
                return Err(FieldError::Pole(p.to_string()));
            }
            for _ in 0..*e {
                d *= &v;
            }
        }
        Ok(self.num.eval(&c) / d)
    }

    /// Evaluation at a point known to avoid poles; `None` at a pole.
    pub(crate) fn eval_at(&self, c: &[Rational; 3]) -> Option<Rational> {
        let mut d = Rational::from(1u32);
        for (f, e) in &self.den {
            let v = f.eval(c);
            if rational::is_zero(&v) {
                return None;
            }
            for _ in 0..*e {
                d *= &v;
            }
        }
        Some(self.num.eval(c) / d)
    }

    pub fn eval_f64(&self, p: [f64; 3]) -> f64 {
        let mut d = 1.0;
        for (f, e) in &self.den {
            d *= f.eval_f64(p).powi(*e as i32);
        }
        self.num.eval_f64(p) / d
    }

    pub fn checked_div(&self, rhs: &ScalarField) -> Result<ScalarField, FieldError> {
        if rhs.num.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let (content, prim) = rhs.num.primitive_part();
        let mut factors: Vec<Factor> = Vec::new();
        let mono = prim.monomial_gcd();
        let mut rest = if mono.is_one() {
            prim
        } else {
            let ex = mono.exps();
            for (axis, e) in ex.iter().enumerate() {
                if *e > 0 {
                    factors.push((Arc::new(MultiPoly::var(axis)), *e));
                }
            }
            prim.div_exact(&MultiPoly::monomial(mono, Rational::from(1u32))).unwrap()
        };
        if !rest.is_constant() {
            for (f, _) in self.den.iter().chain(rhs.den.iter()) {
                let mut e = 0;
                while let Some(q) = rest.div_exact(f) {
                    rest = q;
                    e += 1;
                }
                if e > 0 {
                    factors.push((f.clone(), e));
                }
                if rest.is_constant() {
                    break;
                }
            }
        }
        let leftover = rest.constant_value().unwrap_or_else(|| Rational::from(1u32));
        if !rest.is_constant() {
            factors.push((Arc::new(rest), 1));
        }
        let inv_num = rhs.denominator().scale(&(Rational::from(1u32) / (content * leftover)));
        let mut inv = ScalarField { num: inv_num, den: Vec::new() };
        for f in factors {
            inv.den = merge_factors(&inv.den, &[f], |a, b| a + b);
        }
        Ok(self * &inv)
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        for (f, e) in self.den.iter_mut() {
            while *e > 0 {
                match self.num.div_exact(f) {
                    Some(q) => {
                        self.num = q;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        self.den.retain(|(_, e)| *e > 0);
    }

    pub fn display_with<'a>(&'a self, names: &'a [&'a str; 3]) -> FieldDisplay<'a> {
        FieldDisplay { field: self, names }
    }
}

fn merge_factors(a: &[Factor], b: &[Factor], combine: impl Fn(u32, u32) -> u32) -> Vec<Factor> {
    let mut out: Vec<Factor> = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ord = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => factor_cmp(&x.0, &y.0),
            (Some(_), None) => std::cmp::Ordering::Less,
            _ => std::cmp::Ordering::Greater,
        };
        match ord {
            std::cmp::Ordering::Less => {
                out.push((a[i].0.clone(), combine(a[i].1, 0)));
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((b[j].0.clone(), combine(0, b[j].1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push((a[i].0.clone(), combine(a[i].1, b[j].1)));
                i += 1;
                j += 1;
            }
        }
    }
    out.retain(|(_, e)| *e > 0);
    out
}

fn factor_cmp(a: &Arc<MultiPoly>, b: &Arc<MultiPoly>) -> std::cmp::Ordering {
    if Arc::ptr_eq(a, b) {
        return std::cmp::Ordering::Equal;
    }
    a.degree().cmp(&b.degree()).then_with(|| a.as_ref().cmp(b.as_ref()))
}

/// `Π f^(e_target - e_have)` over the target factor list.
fn cofactor(target: &[Factor], have: &[Factor]) -> MultiPoly {
    let mut out = MultiPoly::one();
    for (f, e) in target {
        let h = have
            .iter()
            .find(|(g, _)| factor_cmp(f, g).is_eq())
            .map(|(_, e)| *e)
            .unwrap_or(0);
        if *e > h {
            out = &out * &f.pow(e - h);
        }
    }
    out
}

fn add_impl(a: &ScalarField, b: &ScalarField, negate: bool) -> ScalarField {
    if b.num.is_zero() {
        return a.clone();
    }
    if a.num.is_zero() {
        return if negate { -b } else { b.clone() };
    }
    if a.den.is_empty() && b.den.is_empty() {
        let num = if negate { &a.num - &b.num } else { &a.num + &b.num };
        return ScalarField::from_poly(num);
    }
    let den = merge_factors(&a.den, &b.den, |x, y| x.max(y));
    let na = &a.num * &cofactor(&den, &a.den);
    let nb = &b.num * &cofactor(&den, &b.den);
    let num = if negate { &na - &nb } else { &na + &nb };
    let mut out = ScalarField { num, den };
    out.reduce();
    out
}

/// Cancels factors of `den` that divide `num`, returning the reduced pair.
fn cancel(num: &MultiPoly, den: &[Factor]) -> (MultiPoly, Vec<Factor>) {
    let mut num = num.clone();
    let mut den = den.to_vec();
    if num.is_zero() {
        return (num, Vec::new());
    }
    for (f, e) in den.iter_mut() {
        while *e > 0 {
            match num.div_exact(f) {
                Some(q) => {
                    num = q;
                    *e -= 1;
                }
                None => break,
            }
        }
    }
    den.retain(|(_, e)| *e > 0);
    (num, den)
}

fn mul_impl(a: &ScalarField, b: &ScalarField) -> ScalarField {
    if a.num.is_zero() || b.num.is_zero() {
        return ScalarField::zero();
    }
    if a.den.is_empty() && b.den.is_empty() {
        return ScalarField::from_poly(&a.num * &b.num);
    }
    let (na, db) = if b.den.is_empty() { (a.num.clone(), Vec::new()) } else { cancel(&a.num, &b.den) };
    let (nb, da) = if a.den.is_empty() { (b.num.clone(), Vec::new()) } else { cancel(&b.num, &a.den) };
    ScalarField { num: &na * &nb, den: merge_factors(&da, &db, |x, y| x + y) }
}

impl PartialEq for ScalarField {
    fn eq(&self, other: &Self) -> bool {
        (self - other).num.is_zero()
    }
}

impl Eq for ScalarField {}

impl Add for &ScalarField {
    type Output = ScalarField;
    fn add(self, rhs: &ScalarField) -> ScalarField {
        add_impl(self, rhs, false)
    }
}

impl Sub for &ScalarField {
    type Output = ScalarField;
    fn sub(self, rhs: &ScalarField) -> ScalarField {
        add_impl(self, rhs, true)
    }
}

impl Mul for &ScalarField {
    type Output = ScalarField;
    fn mul(self, rhs: &ScalarField) -> ScalarField {
        mul_impl(self, rhs)
    }
}

impl Div for &ScalarField {
    type Output = ScalarField;
    /// Panics on division by the zero field; use `checked_div` otherwise.
    fn div(self, rhs: &ScalarField) -> ScalarField {
        self.checked_div(rhs).expect("division by the zero scalar field")
    }
}

impl Neg for &ScalarField {
    type Output = ScalarField;
    fn neg(self) -> ScalarField {
        ScalarField { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for ScalarField {
            type Output = ScalarField;
            fn $m(self, rhs: ScalarField) -> ScalarField {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&ScalarField> for ScalarField {
            type Output = ScalarField;
            fn $m(self, rhs: &ScalarField) -> ScalarField {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for ScalarField {
    type Output = ScalarField;
    fn neg(self) -> ScalarField {
        -&self
    }
}

impl std::iter::Sum for ScalarField {
    fn sum<I: Iterator<Item = ScalarField>>(iter: I) -> ScalarField {
        iter.fold(ScalarField::zero(), |a, b| &a + &b)
    }
}

impl From<Rational> for ScalarField {
    fn from(c: Rational) -> Self {
        ScalarField::constant(c)
    }
}

impl From<i64> for ScalarField {
    fn from(n: i64) -> Self {
        ScalarField::int(n)
    }
}

impl From<Monomial> for ScalarField {
    fn from(m: Monomial) -> Self {
        ScalarField::from_poly(MultiPoly::monomial(m, Rational::from(1u32)))
    }
}

pub struct FieldDisplay<'a> {
    field: &'a ScalarField,
    names: &'a [&'a str; 3],
}

impl fmt::Display for FieldDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.field.num.display_with(self.names);
        if self.field.den.is_empty() {
            return write!(f, "{num}");
        }
        if self.field.num.len() == 1 {
            write!(f, "{num}")?;
        } else {
            write!(f, "({num})")?;
        }
        f.write_str("/")?;
        let parts: Vec<String> = self
            .field
            .den
            .iter()
            .map(|(p, e)| {
                let body = if p.len() == 1 {
                    p.display_with(self.names).to_string()
                } else {
                    format!("({})", p.display_with(self.names))
                };
                if *e == 1 {
                    body
                } else {
                    format!("{body}^{e}")
                }
            })
            .collect();
        if parts.len() == 1 && self.field.den[0].1 == 1 {
            f.write_str(&parts[0])
        } else {
            write!(f, "({})", parts.join("*"))
        }
    }
}

impl fmt::Display for ScalarField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with(&COORD_NAMES).fmt(f)
    }
}

impl fmt::Debug for ScalarField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ScalarField({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rational::rat;

    fn x() -> ScalarField {
        ScalarField::var(0)
    }
    fn y() -> ScalarField {
        ScalarField::var(1)
    }
    fn z() -> ScalarField {
        ScalarField::var(2)
    }

    #[test]
    fn quotient_rule() {
        let one = ScalarField::one();
        let f = &x() / &(&one + &x());
        let d = f.differentiate(0);
        let expect = &one / &(&(&one + &x()) * &(&one + &x()));
        assert_eq!(d, expect);
        assert!(d.numerator().is_one());
        assert_eq!(d.denominator_degree(), 2);
    }

    #[test]
    fn cancellation_identity() {
        let num = &(&x() * &x()) - &(&y() * &y());
        let q = &num / &(&x() - &y());
        assert!(q.is_polynomial());
        assert_eq!(q, &x() + &y());
    }

    #[test]
    fn canonical_denominator_sign() {
        let f = &ScalarField::one() / &(&ScalarField::int(-2) - &(&z() * &ScalarField::int(4)));
        let den = f.denominator();
        assert!(!rational::is_negative(&den.leading().unwrap().1));
        assert_eq!(f.evaluate(&Point::new(rat(0, 1), rat(0, 1), rat(1, 1))).unwrap(), rat(-1, 6));
    }

    #[test]
    fn pole_is_reported() {
        let f = &ScalarField::one() / &x();
        assert!(matches!(f.evaluate(&Point::origin()), Err(FieldError::Pole(_))));
        let g = &ScalarField::one() / &(&ScalarField::one() + &z());
        let p = Point::new(rat(0, 1), rat(0, 1), rat(1, 1));
        assert_eq!(g.evaluate(&p).unwrap(), rat(1, 2));
    }

    #[test]
    fn sums_over_shared_factors() {
        let one = ScalarField::one();
        let a = &one / &(&one + &x());
        let b = &x() / &(&one + &x());
        assert_eq!(&a + &b, one);
        let c = &a - &a;
        assert!(c.is_exact_zero());
        assert!(c.is_polynomial());
    }

    #[test]
    fn display_reparses_shape() {
        let one = ScalarField::one();
        let f = &x() / &(&one + &z());
        assert_eq!(f.to_string(), "x1/(x3 + 1)");
        let g = &one / &(&x() * &x());
        assert_eq!(g.to_string(), "1/(x1^2)");
    }
}
