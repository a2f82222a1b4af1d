//! Recursive-descent parser for scalar and form expressions.
//!
//! One grammar serves both: scalars are 0-forms, `dx1 dx2 dx3` are the basis
//! 1-forms, and `^` is integer power on scalars or the wedge product between
//! forms of positive degree.

use super::{MultiPoly, Rational, ScalarField};
use crate::exterior::Form;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

/// Which identifiers are variables, and which coordinate slot each one fills.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Vars {
    /// `x|x1`, `y|x2`, `z|x3`, plus `dx1 dx2 dx3` when forms are allowed.
    Coords,
    /// `t` for curve segments.
    Curve,
    /// `u`, `v` for surface patches.
    Patch,
}

impl Vars {
    fn slot(self, name: &str) -> Option<usize> {
        match (self, name) {
            (Vars::Coords, "x" | "x1") => Some(0),
            (Vars::Coords, "y" | "x2") => Some(1),
            (Vars::Coords, "z" | "x3") => Some(2),
            (Vars::Curve, "t") => Some(0),
            (Vars::Patch, "u") => Some(0),
            (Vars::Patch, "v") => Some(1),
            _ => None,
        }
    }

    pub fn names(self) -> [&'static str; 3] {
        match self {
            Vars::Coords => ["x1", "x2", "x3"],
            Vars::Curve => ["t", "_", "_"],
            Vars::Patch => ["u", "v", "_"],
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(s) | Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut line = 1;
    let mut col = 1;
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            col += i - start;
            out.push(Spanned { tok: Tok::Int(chars[start..i].iter().collect()), line: l0, col: c0 });
            continue;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            col += i - start;
            out.push(Spanned { tok: Tok::Ident(chars[start..i].iter().collect()), line: l0, col: c0 });
            continue;
        } else {
            match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                other => {
                    return Err(ParseError { line, col, msg: format!("unexpected character {other:?}") })
                }
            }
        };
        out.push(Spanned { tok, line: l0, col: c0 });
        i += 1;
        col += 1;
    }
    out.push(Spanned { tok: Tok::End, line, col });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    vars: Vars,
    forms: bool,
}

const MAX_DEPTH: usize = 200;
const MAX_DEGREE: u32 = 64;
const MAX_TERM_PRODUCT: usize = 2_000_000;

fn degree_of(f: &Form) -> u32 {
    f.coeffs().iter().map(|c| c.numerator_degree().max(c.denominator_degree())).max().unwrap_or(0)
}

fn den_degree_of(f: &Form) -> u32 {
    f.coeffs().iter().map(|c| c.denominator_degree()).max().unwrap_or(0)
}

fn terms_of(f: &Form) -> usize {
    f.coeffs().iter().map(|c| c.numerator().len().max(1)).sum()
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn err_here(&self, msg: impl Into<String>) -> ParseError {
        let t = &self.toks[self.pos];
        ParseError { line: t.line, col: t.col, msg: msg.into() }
    }

    fn err_at(&self, pos: usize, msg: impl Into<String>) -> ParseError {
        let t = &self.toks[pos];
        ParseError { line: t.line, col: t.col, msg: msg.into() }
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self, depth: usize) -> Result<Form, ParseError> {
        if depth > MAX_DEPTH {
            return Err(self.err_here("expression nested too deeply"));
        }
        let mut acc = self.term(depth)?;
        loop {
            let negate = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => return Ok(acc),
            };
            let at = self.pos;
            self.bump();
            let rhs = self.term(depth)?;
            if rhs.degree() != acc.degree() {
                return Err(self.err_at(
                    at,
                    format!("cannot add a {}-form to a {}-form", rhs.degree(), acc.degree()),
                ));
            }
            if den_degree_of(&acc) + den_degree_of(&rhs) > MAX_DEGREE {
                return Err(self.err_at(at, "expression too large"));
            }
            acc = if negate { &acc - &rhs } else { &acc + &rhs };
        }
    }

    fn term(&mut self, depth: usize) -> Result<Form, ParseError> {
        let mut acc = self.unary(depth)?;
        loop {
            match self.peek() {
                Tok::Star => {
                    let at = self.pos;
                    self.bump();
                    let rhs = self.unary(depth)?;
                    if degree_of(&acc) + degree_of(&rhs) > MAX_DEGREE
                        || terms_of(&acc).saturating_mul(terms_of(&rhs)) > MAX_TERM_PRODUCT
                    {
                        return Err(self.err_at(at, "expression too large"));
                    }
                    acc = match (acc.degree(), rhs.degree()) {
                        (0, _) => rhs.scale(acc.coeff(0)),
                        (_, 0) => acc.scale(rhs.coeff(0)),
                        _ => return Err(self.err_at(at, "`*` needs a scalar operand; use `^` for the wedge product")),
                    };
                    self.check_degree(&acc, at)?;
                }
                Tok::Slash => {
                    let at = self.pos;
                    self.bump();
                    let rhs = self.unary(depth)?;
                    if rhs.degree() != 0 {
                        return Err(self.err_at(at, "division by a form of positive degree"));
                    }
                    let den = rhs.coeff(0);
                    if degree_of(&acc) + degree_of(&rhs) > MAX_DEGREE {
                        return Err(self.err_at(at, "expression too large"));
                    }
                    if !self.forms_allowed_division(den) {
                        return Err(self.err_at(at, "parametric maps must be polynomial"));
                    }
                    let inv = ScalarField::one()
                        .checked_div(den)
                        .map_err(|_| self.err_at(at, "division by a polynomial that is identically zero"))?;
                    acc = acc.scale(&inv);
                    self.check_degree(&acc, at)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn check_degree(&self, f: &Form, at: usize) -> Result<(), ParseError> {
        if degree_of(f) > MAX_DEGREE {
            return Err(self.err_at(at, format!("expression degree exceeds {MAX_DEGREE}")));
        }
        Ok(())
    }

    fn forms_allowed_division(&self, den: &ScalarField) -> bool {
        self.vars == Vars::Coords || den.constant_value().is_some()
    }

    fn unary(&mut self, depth: usize) -> Result<Form, ParseError> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(-&self.unary(depth + 1)?)
            }
            Tok::Plus => {
                self.bump();
                self.unary(depth + 1)
            }
            _ => self.wedge(depth),
        }
    }

    fn wedge(&mut self, depth: usize) -> Result<Form, ParseError> {
        let mut acc = self.atom(depth)?;
        while *self.peek() == Tok::Caret {
            let at = self.pos;
            self.bump();
            if let Tok::Int(digits) = self.peek().clone() {
                let e_at = self.pos;
                self.bump();
                if acc.degree() != 0 {
                    return Err(self.err_at(at, "integer power of a form of positive degree"));
                }
                let e: u32 = digits
                    .parse()
                    .ok()
                    .filter(|e| *e <= MAX_DEGREE)
                    .ok_or_else(|| self.err_at(e_at, format!("exponent out of range (at most {MAX_DEGREE})")))?;
                if degree_of(&acc).saturating_mul(e) > MAX_DEGREE {
                    return Err(self.err_at(at, format!("expression degree exceeds {MAX_DEGREE}")));
                }
                acc = Form::scalar(acc.coeff(0).pow(e));
            } else {
                let rhs = self.atom(depth)?;
                if acc.degree() == 0 || rhs.degree() == 0 {
                    return Err(self.err_at(at, "exponent must be a non-negative integer literal"));
                }
                if degree_of(&acc) + degree_of(&rhs) > MAX_DEGREE
                    || terms_of(&acc).saturating_mul(terms_of(&rhs)) > MAX_TERM_PRODUCT
                {
                    return Err(self.err_at(at, "expression too large"));
                }
                acc = acc.wedge(&rhs);
            }
        }
        Ok(acc)
    }

    fn atom(&mut self, depth: usize) -> Result<Form, ParseError> {
        let at = self.pos;
        match self.bump() {
            Tok::Int(digits) => {
                let r = Rational::from_str(&digits).map_err(|_| self.err_at(at, "invalid integer"))?;
                Ok(Form::scalar(ScalarField::constant(r)))
            }
            Tok::Ident(name) => {
                if let Some(slot) = self.vars.slot(&name) {
                    return Ok(Form::scalar(ScalarField::var(slot)));
                }
                if self.forms && self.vars == Vars::Coords {
                    match name.as_str() {
                        "dx1" => return Ok(Form::dx(0)),
                        "dx2" => return Ok(Form::dx(1)),
                        "dx3" => return Ok(Form::dx(2)),
                        _ => {}
                    }
                }
                Err(self.err_at(at, format!("unknown identifier `{name}`")))
            }
            Tok::LParen => {
                let inner = self.expr(depth + 1)?;
                match self.bump() {
                    Tok::RParen => Ok(inner),
                    other => Err(self.err_at(self.pos.saturating_sub(1), format!("expected `)`, found {other}"))),
                }
            }
            other => Err(self.err_at(at, format!("expected a number, variable or `(`, found {other}"))),
        }
    }
}

fn parse_any(text: &str, vars: Vars, forms: bool) -> Result<Form, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, vars, forms };
    let f = p.expr(0)?;
    if *p.peek() != Tok::End {
        return Err(p.err_here(format!("unexpected {}", p.peek())));
    }
    Ok(f)
}

/// Parses a scalar expression in `x|x1`, `y|x2`, `z|x3`.
pub fn parse_scalar(text: &str) -> Result<ScalarField, ParseError> {
    let f = parse_any(text, Vars::Coords, false)?;
    Ok(f.coeff(0).clone())
}

/// Parses a form expression; the result carries whatever degree the text denotes.
pub fn parse_form(text: &str) -> Result<Form, ParseError> {
    parse_any(text, Vars::Coords, true)
}

/// Parses a polynomial in the curve parameter `t` or the patch parameters `u, v`.
pub fn parse_param_poly(text: &str, vars: Vars) -> Result<MultiPoly, ParseError> {
    let f = parse_any(text, vars, false)?;
    let s = f.coeff(0);
    debug_assert!(s.is_polynomial());
    Ok(s.numerator().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Monomial, Rational};

    #[test]
    fn spec_scalar_examples() {
        let f = parse_scalar("1 + x*y^2").unwrap();
        let expect = MultiPoly::from_terms([
            (Monomial::ONE, Rational::from(1u32)),
            (Monomial::new([1, 2, 0]), Rational::from(1u32)),
        ]);
        assert_eq!(f.numerator(), &expect);
        assert!(f.is_polynomial());
        let c = parse_scalar("2/3").unwrap();
        assert_eq!(c.constant_value(), Some(Rational::from_signeds(2, 3)));
        let q = parse_scalar("x / (1 + z)").unwrap();
        assert_eq!(q.numerator().to_string(), "x1");
        assert_eq!(q.denominator().to_string(), "x3 + 1");
    }

    #[test]
    fn aliases_and_precedence() {
        assert_eq!(parse_scalar("x1*x2 - z").unwrap(), parse_scalar("x*y - x3").unwrap());
        assert_eq!(parse_scalar("-x^2").unwrap().to_string(), "-x1^2");
        assert_eq!(parse_scalar("2^3 - 8").unwrap(), ScalarField::zero());
        assert_eq!(parse_scalar("1/2*x").unwrap().to_string(), "1/2*x1");
    }

    #[test]
    fn errors_have_locations() {
        let e = parse_scalar("1 +\n  (x * ").unwrap_err();
        assert_eq!((e.line, e.col), (2, 8));
        let e = parse_scalar("x ^ y").unwrap_err();
        assert!(e.msg.contains("integer literal"), "{e}");
        let e = parse_scalar("1/(x - x)").unwrap_err();
        assert!(e.msg.contains("identically zero"));
        assert!(parse_scalar("w").is_err());
        assert!(parse_scalar("dx1").is_err());
        assert!(parse_scalar("x $ y").is_err());
    }

    #[test]
    fn forms_and_wedge() {
        let f = parse_form("x * dx1 + dx2").unwrap();
        assert_eq!(f.degree(), 1);
        let w = parse_form("dx1 ^ dx2").unwrap();
        assert_eq!(w.degree(), 2);
        assert!(parse_form("dx1 ^ dx1").unwrap().is_exact_zero());
        assert!(parse_form("dx1 + dx1^dx2").is_err());
        assert!(parse_form("dx1 * dx2").is_err());
        assert!(parse_form("dx1 ^ 2").is_err());
    }

    #[test]
    fn parametric_maps() {
        let p = parse_param_poly("t^2 - 1", Vars::Curve).unwrap();
        assert_eq!(p.display_with(&Vars::Curve.names()).to_string(), "t^2 - 1");
        assert!(parse_param_poly("1/t", Vars::Curve).is_err());
        assert!(parse_param_poly("x", Vars::Curve).is_err());
        let q = parse_param_poly("u*v/2", Vars::Patch).unwrap();
        assert_eq!(q.display_with(&Vars::Patch.names()).to_string(), "1/2*u*v");
    }
}
