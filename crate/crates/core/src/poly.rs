//! Bivariate polynomials in `x`, `y` with exact coefficients, plus the text
//! grammar for polynomials and ideal expressions.
//!
//! Canonical term order everywhere is degree-lexicographic with `x > y`;
//! printing lists terms in descending order, so `parse . print` and
//! `print . parse` are identities on canonical forms.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::field::{FieldSpec, Scalar};

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum PolyError {
    #[error("field mismatch between operands")]
    FieldMismatch,
    #[error("ideal generator is zero")]
    ZeroGenerator,
    #[error("ideal generator `{0}` is not homogeneous")]
    NotHomogeneous(String),
    #[error("ideal power must be at least 1, got {0}")]
    PowerTooSmall(u32),
    #[error("empty generator list")]
    NoGenerators,
}

/// Syntax error with a 1-based position into the parsed text.
#[derive(Debug, Error, PartialEq, Eq, Clone)]
#[error("parse error at {line}:{col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

/// A power product `x^a * y^b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub x_exp: u32,
    pub y_exp: u32,
}

impl Monomial {
    pub fn new(x_exp: u32, y_exp: u32) -> Monomial {
        Monomial { x_exp, y_exp }
    }

    pub fn one() -> Monomial {
        Monomial::new(0, 0)
    }

    pub fn degree(&self) -> u32 {
        self.x_exp + self.y_exp
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.x_exp + other.x_exp, self.y_exp + other.y_exp)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.x_exp <= other.x_exp && self.y_exp <= other.y_exp
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial::new(other.x_exp - self.x_exp, other.y_exp - self.y_exp)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.x_exp.max(other.x_exp),
            self.y_exp.max(other.y_exp),
        )
    }

    /// All monomials of total degree `d`, descending (`x^d` first).
    pub fn all_of_degree(d: u32) -> Vec<Monomial> {
        (0..=d).rev().map(|a| Monomial::new(a, d - a)).collect()
    }
}

/// Degree-lexicographic order with `x > y`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.x_exp.cmp(&other.x_exp))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.x_exp, self.y_exp) {
            (0, 0) => write!(f, "1"),
            (a, 0) => write_var(f, 'x', a),
            (0, b) => write_var(f, 'y', b),
            (a, b) => {
                write_var(f, 'x', a)?;
                write!(f, "*")?;
                write_var(f, 'y', b)
            }
        }
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, v: char, e: u32) -> fmt::Result {
    if e == 1 {
        write!(f, "{v}")
    } else {
        write!(f, "{v}^{e}")
    }
}

/// A polynomial in `K[x,y]`: a finite map from monomials to nonzero scalars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly {
    field: FieldSpec,
    terms: BTreeMap<Monomial, Scalar>,
}

impl BiPoly {
    pub fn zero(field: FieldSpec) -> BiPoly {
        BiPoly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: FieldSpec) -> BiPoly {
        BiPoly::term(field, Monomial::one(), field.one())
    }

    pub fn term(field: FieldSpec, m: Monomial, c: Scalar) -> BiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        BiPoly { field, terms }
    }

    pub fn monomial(field: FieldSpec, m: Monomial) -> BiPoly {
        BiPoly::term(field, m, field.one())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// Leading term in deglex; `None` for the zero polynomial.
    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// `Some(d)` when every term has total degree exactly `d`. The zero
    /// polynomial counts as homogeneous of every degree and returns `Some(0)`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let d = match it.next() {
            None => return Some(0),
            Some(m) => m.degree(),
        };
        it.all(|m| m.degree() == d).then_some(d)
    }

    pub fn add(&self, rhs: &BiPoly) -> Result<BiPoly, PolyError> {
        self.combine(rhs, false)
    }

    pub fn sub(&self, rhs: &BiPoly) -> Result<BiPoly, PolyError> {
        self.combine(rhs, true)
    }

    fn combine(&self, rhs: &BiPoly, negate: bool) -> Result<BiPoly, PolyError> {
        if self.field != rhs.field {
            return Err(PolyError::FieldMismatch);
        }
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            let c = if negate { -c } else { c.clone() };
            let merged = match terms.get(m) {
                Some(old) => old + &c,
                None => c,
            };
            if merged.is_zero() {
                terms.remove(m);
            } else {
                terms.insert(*m, merged);
            }
        }
        Ok(BiPoly {
            field: self.field,
            terms,
        })
    }

    pub fn mul(&self, rhs: &BiPoly) -> Result<BiPoly, PolyError> {
        if self.field != rhs.field {
            return Err(PolyError::FieldMismatch);
        }
        let mut acc = BiPoly::zero(self.field);
        for (m, c) in &rhs.terms {
            acc = acc.add(&self.mul_term(m, c))?;
        }
        Ok(acc)
    }

    /// Multiply by a single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero(self.field);
        }
        BiPoly {
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), tc * c))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> BiPoly {
        self.mul_term(&Monomial::one(), c)
    }

    pub fn neg(&self) -> BiPoly {
        BiPoly {
            field: self.field,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    /// The sum of terms of total degree exactly `d`.
    pub fn homogeneous_component(&self, d: u32) -> BiPoly {
        BiPoly {
            field: self.field,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let (sign, mag) = display_parts(c);
            if i == 0 {
                if sign {
                    write!(f, "-")?;
                }
            } else if sign {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if *m == Monomial::one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Split a scalar into (is_negative, magnitude) for printing. Prime-field
/// residues have no sign and always come back unchanged.
fn display_parts(c: &Scalar) -> (bool, Scalar) {
    if c.is_negative() {
        (true, c.negated())
    } else {
        (false, c.clone())
    }
}

/// A list of homogeneous generators of an ideal of `K[x,y]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealGens {
    field: FieldSpec,
    gens: Vec<BiPoly>,
}

impl IdealGens {
    pub fn new(field: FieldSpec, gens: Vec<BiPoly>) -> Result<IdealGens, PolyError> {
        if gens.is_empty() {
            return Err(PolyError::NoGenerators);
        }
        for g in &gens {
            if g.field() != field {
                return Err(PolyError::FieldMismatch);
            }
            if g.is_zero() {
                return Err(PolyError::ZeroGenerator);
            }
            if g.homogeneous_degree().is_none() {
                return Err(PolyError::NotHomogeneous(g.to_string()));
            }
        }
        Ok(IdealGens { field, gens })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn gens(&self) -> &[BiPoly] {
        &self.gens
    }
}

/// The `e+1` monomials `x^e, x^(e-1)*y, ..., y^e` generating `(x,y)^e`.
pub fn expand_power_ideal(field: FieldSpec, e: u32) -> Result<IdealGens, PolyError> {
    if e < 1 {
        return Err(PolyError::PowerTooSmall(e));
    }
    IdealGens::new(
        field,
        Monomial::all_of_degree(e)
            .into_iter()
            .map(|m| BiPoly::monomial(field, m))
            .collect(),
    )
}

/// One summand of an ideal expression: either a power of the maximal ideal
/// or an explicit generator list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealGroup {
    MaxPower(u32),
    Gens(Vec<BiPoly>),
}

/// An unexpanded ideal expression, e.g. `(x, y)^8 + (x^2*y^5, x^4*y^3)`.
/// Kept unexpanded so specifications round-trip through the printer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealExpr {
    pub groups: Vec<IdealGroup>,
}

impl IdealExpr {
    pub fn expand(&self, field: FieldSpec) -> Result<IdealGens, PolyError> {
        let mut gens = Vec::new();
        for g in &self.groups {
            match g {
                IdealGroup::MaxPower(e) => gens.extend(expand_power_ideal(field, *e)?.gens),
                IdealGroup::Gens(ps) => gens.extend(ps.iter().cloned()),
            }
        }
        IdealGens::new(field, gens)
    }
}

impl fmt::Display for IdealExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.groups.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match g {
                IdealGroup::MaxPower(1) => write!(f, "(x, y)")?,
                IdealGroup::MaxPower(e) => write!(f, "(x, y)^{e}")?,
                IdealGroup::Gens(ps) => {
                    write!(f, "(")?;
                    for (j, p) in ps.iter().enumerate() {
                        if j > 0 {
                            write!(f, ", ")?;
                        }
                        write!(f, "{p}")?;
                    }
                    write!(f, ")")?;
                }
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

/// Character cursor with 1-based line/column tracking.
pub struct Cursor<'a> {
    text: &'a str,
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(text: &'a str) -> Cursor<'a> {
        Cursor {
            text,
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    /// Offset the reported positions, for parsing a slice of a larger file.
    pub fn with_origin(text: &'a str, line: usize, col: usize) -> Cursor<'a> {
        Cursor {
            text,
            pos: 0,
            line,
            col,
        }
    }

    pub fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    pub fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    pub fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    pub fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            col: self.col,
            message: message.into(),
        }
    }

    pub fn expect(&mut self, c: char) -> Result<(), ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(got) if got == c => {
                self.bump();
                Ok(())
            }
            Some(got) => Err(self.error(format!("expected `{c}`, found `{got}`"))),
            None => Err(self.error(format!("expected `{c}`, found end of input"))),
        }
    }

    pub fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    pub fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.peek().is_none()
    }

    pub fn parse_uint(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let mut digits = String::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            digits.push(self.bump().unwrap());
        }
        if digits.is_empty() {
            return Err(self.error("expected an integer"));
        }
        digits
            .parse()
            .map_err(|_| self.error("integer out of range"))
    }
}

/// Parse a polynomial per the grammar
/// `poly := term (('+'|'-') term)*`,
/// `term := atom ('*' atom)*`,
/// `atom := coeff | ('x'|'y') ['^' int]`,
/// `coeff := int ['/' int]`.
pub fn parse_poly(text: &str, field: FieldSpec) -> Result<BiPoly, ParseError> {
    let mut cur = Cursor::new(text);
    let p = parse_poly_at(&mut cur, field)?;
    if !cur.at_end() {
        return Err(cur.error("trailing input after polynomial"));
    }
    Ok(p)
}

pub fn parse_poly_at(cur: &mut Cursor<'_>, field: FieldSpec) -> Result<BiPoly, ParseError> {
    let mut acc = BiPoly::zero(field);
    let mut negate = false;
    cur.skip_ws();
    if cur.eat('-') {
        negate = true;
    } else {
        cur.eat('+');
    }
    loop {
        let term = parse_term(cur, field)?;
        acc = acc
            .add(&if negate { term.neg() } else { term })
            .expect("same field");
        cur.skip_ws();
        match cur.peek() {
            Some('+') => {
                cur.bump();
                negate = false;
            }
            Some('-') => {
                cur.bump();
                negate = true;
            }
            _ => return Ok(acc),
        }
    }
}

fn parse_term(cur: &mut Cursor<'_>, field: FieldSpec) -> Result<BiPoly, ParseError> {
    let mut coeff = field.one();
    let mut mono = Monomial::one();
    let mut first = true;
    loop {
        cur.skip_ws();
        match cur.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = cur.parse_uint()? as i64;
                let c = if cur.eat('/') {
                    let den = cur.parse_uint()? as i64;
                    if den == 0 {
                        return Err(cur.error("zero denominator"));
                    }
                    Scalar::from_fraction(field, num, den).expect("nonzero denominator")
                } else {
                    Scalar::from_integer(field, num)
                };
                coeff = &coeff * &c;
            }
            Some('x') | Some('y') => {
                let v = cur.bump().unwrap();
                let e = if cur.eat('^') { cur.parse_uint()? as u32 } else { 1 };
                let m = if v == 'x' {
                    Monomial::new(e, 0)
                } else {
                    Monomial::new(0, e)
                };
                mono = mono.mul(&m);
            }
            _ if first => return Err(cur.error("expected a coefficient or variable")),
            _ => return Err(cur.error("expected a factor after `*`")),
        }
        first = false;
        if !cur.eat('*') {
            return Ok(BiPoly::term(field, mono, coeff));
        }
    }
}

/// Parse an ideal expression: a `+`-separated list of parenthesized
/// generator lists, where only the group `(x, y)` may carry a power.
pub fn parse_ideal_expr(text: &str, field: FieldSpec) -> Result<IdealExpr, ParseError> {
    let mut cur = Cursor::new(text);
    let e = parse_ideal_expr_at(&mut cur, field)?;
    if !cur.at_end() {
        return Err(cur.error("trailing input after ideal expression"));
    }
    Ok(e)
}

pub fn parse_ideal_expr_at(
    cur: &mut Cursor<'_>,
    field: FieldSpec,
) -> Result<IdealExpr, ParseError> {
    let mut groups = Vec::new();
    loop {
        cur.expect('(')?;
        let mut polys = vec![parse_poly_at(cur, field)?];
        while cur.eat(',') {
            polys.push(parse_poly_at(cur, field)?);
        }
        cur.expect(')')?;
        if cur.eat('^') {
            let e = cur.parse_uint()? as u32;
            if e < 1 {
                return Err(cur.error("ideal power must be at least 1"));
            }
            let x = BiPoly::monomial(field, Monomial::new(1, 0));
            let y = BiPoly::monomial(field, Monomial::new(0, 1));
            let is_max = polys.len() == 2
                && ((polys[0] == x && polys[1] == y) || (polys[0] == y && polys[1] == x));
            if !is_max {
                return Err(cur.error("only the group (x, y) may carry a power"));
            }
            groups.push(IdealGroup::MaxPower(e));
        } else {
            groups.push(IdealGroup::Gens(polys));
        }
        if !cur.eat('+') {
            return Ok(IdealExpr { groups });
        }
    }
}
