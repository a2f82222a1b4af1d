//! Sparse multivariate polynomials with rational coefficients.

use super::monomial::Monomial;
use super::rational::{self, Rational};
use malachite_base::num::arithmetic::traits::{Gcd, Lcm};
use malachite_nz::natural::Natural;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub(crate) const COORD_NAMES: [&str; 3] = ["x1", "x2", "x3"];

/// Terms sorted by ascending graded-lexicographic monomial; no zero
/// coefficients are stored, so the zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MultiPoly {
    terms: Vec<(Monomial, Rational)>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::from(1u32))
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(Monomial::ONE, c)
    }

    pub fn var(axis: usize) -> Self {
        Self::monomial(Monomial::var(axis), Rational::from(1u32))
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        if rational::is_zero(&c) {
            Self::zero()
        } else {
            MultiPoly { terms: vec![(m, c)] }
        }
    }

    /// Collects terms, merging repeated monomials and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(it: I) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in it {
            *acc.entry(m).or_default() += c;
        }
        Self::from_map(acc)
    }

    fn from_map(acc: HashMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !rational::is_zero(c)).collect();
        terms.sort_unstable_by_key(|t| t.0);
        MultiPoly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn coeff(&self, m: Monomial) -> Rational {
        match self.terms.binary_search_by_key(&m, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::from(0u32),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::from(0u32)),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self.terms.as_slice(), [(m, c)] if m.is_one() && rational::is_one(c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|t| t.0.degree())
    }

    pub fn degree_or_zero(&self) -> u32 {
        self.degree().unwrap_or(0)
    }

    pub fn degree_in(&self, axis: usize) -> u32 {
        self.terms.iter().map(|t| t.0.exp(axis)).max().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<&(Monomial, Rational)> {
        self.terms.last()
    }

    pub fn trailing(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if rational::is_zero(c) {
            return Self::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    pub fn mul_term(&self, m: Monomial, c: &Rational) -> Self {
        if rational::is_zero(c) {
            return Self::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect() }
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !rational::is_zero(&c) {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        MultiPoly { terms: out }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, axis: usize) -> Self {
        let mut terms: Vec<(Monomial, Rational)> = self
            .terms
            .iter()
            .filter_map(|(m, c)| m.derive(axis).map(|(e, m2)| (m2, c * Rational::from(e))))
            .collect();
        terms.sort_unstable_by_key(|t| t.0);
        MultiPoly { terms }
    }

    pub fn eval(&self, p: &[Rational; 3]) -> Rational {
        let powers: Vec<Vec<Rational>> = (0..3)
            .map(|axis| {
                let n = self.degree_in(axis) as usize;
                let mut v = Vec::with_capacity(n + 1);
                v.push(Rational::from(1u32));
                for k in 1..=n {
                    let next = &v[k - 1] * &p[axis];
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = Rational::from(0u32);
        for (m, c) in &self.terms {
            let e = m.exps();
            acc += c * &powers[0][e[0] as usize] * &powers[1][e[1] as usize] * &powers[2][e[2] as usize];
        }
        acc
    }

    pub fn eval_f64(&self, p: [f64; 3]) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                let e = m.exps();
                rational::to_f64(c) * p[0].powi(e[0] as i32) * p[1].powi(e[1] as i32) * p[2].powi(e[2] as i32)
            })
            .sum()
    }

    /// Splits `self = content * primitive` where the primitive part has coprime
    /// integer coefficients and a positive leading coefficient.
    pub fn primitive_part(&self) -> (Rational, MultiPoly) {
        if self.is_zero() {
            return (Rational::from(1u32), Self::zero());
        }
        let mut g = Natural::from(0u32);
        let mut l = Natural::from(1u32);
        for (_, c) in &self.terms {
            g = g.gcd(c.numerator_ref());
            l = l.lcm(c.denominator_ref());
        }
        let mut content = Rational::from_naturals(g, l);
        if rational::is_negative(&self.terms.last().unwrap().1) {
            content = -content;
        }
        let inv = Rational::from(1u32) / &content;
        (content, self.scale(&inv))
    }

    /// Largest monomial dividing every term.
    pub fn monomial_gcd(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::ONE,
            Some((m0, _)) => it.fold(*m0, |acc, (m, _)| acc.min(*m)),
        }
    }

    /// Exact quotient `self / d` when `d` divides `self`, else `None`.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        let (ld, lc) = d.leading().expect("division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.terms.len() == 1 {
            if !ld.divides(self.terms[0].0) || !self.terms.iter().all(|(m, _)| ld.divides(*m)) {
                return None;
            }
            let inv = Rational::from(1u32) / lc;
            return Some(MultiPoly {
                terms: self.terms.iter().map(|(m, c)| (ld.div_into(*m), c * &inv)).collect(),
            });
        }
        let (lm, _) = self.leading().unwrap();
        let (tm, _) = self.trailing().unwrap();
        let (td, _) = d.trailing().unwrap();
        if !ld.divides(*lm) || !td.divides(*tm) {
            return None;
        }
        if (0..3).any(|i| d.degree_in(i) > self.degree_in(i)) {
            return None;
        }
        let inv = Rational::from(1u32) / lc;
        let mut r = self.clone();
        let mut q: Vec<(Monomial, Rational)> = Vec::new();
        while let Some((m, c)) = r.leading().cloned() {
            if !ld.divides(m) {
                return None;
            }
            let qm = ld.div_into(m);
            let qc = &c * &inv;
            r = r.merge(&d.mul_term(qm, &qc), true);
            q.push((qm, qc));
        }
        q.reverse();
        Some(MultiPoly { terms: q })
    }

    pub fn display_with<'a>(&'a self, names: &'a [&'a str; 3]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a MultiPoly,
    names: &'a [&'a str; 3],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.poly.terms.iter().rev().enumerate() {
            let neg = rational::is_negative(c);
            let abs = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !rational::is_one(&abs) {
                    write!(f, "{abs}*")?;
                }
                m.fmt_with(f, self.names)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with(&COORD_NAMES).fmt(f)
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.merge(rhs, false)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.merge(rhs, true)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero();
        }
        if rhs.terms.len() == 1 {
            let (m, c) = &rhs.terms[0];
            return self.mul_term(*m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return rhs.mul_term(*m, c);
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * rhs.terms.len() / 2 + 1);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let v = ca * cb;
                match acc.get_mut(&ma.mul(*mb)) {
                    Some(slot) => *slot += v,
                    None => {
                        acc.insert(ma.mul(*mb), v);
                    }
                }
            }
        }
        MultiPoly::from_map(acc)
    }
}
