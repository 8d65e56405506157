//! A small surface language for sums of eta-monomials `q^c * prod f_t^e`.
//!
//! Grammar:
//! ```text
//! expr   := term ('+' term)*
//! term   := factor (('*' | '/') factor)*
//! factor := 'q' ['^' uint] | 'f' uint ['^' uint] | '(' expr ')'
//! ```
//! `/` negates the exponent of the following `f` factor; there is no general
//! division and no subtraction (everything is mod 2). Parenthesized sums are
//! distributed over the enclosing product at parse time, so a [`QExpr`] is
//! always a flat sum of monomials.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::fps_gf2::{eta_power, BitSeries, SeriesError};

pub const MAX_ETA_INDEX: u64 = 1024;
pub const MAX_ETA_EXPONENT: i64 = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: expected {expected}, found {found}")]
    Syntax { offset: usize, expected: &'static str, found: String },
    #[error("at byte {offset}: duplicate eta index f{t} within a monomial")]
    DuplicateBase { offset: usize, t: u64 },
    #[error("at byte {offset}: eta index {t} out of range 1..={MAX_ETA_INDEX}")]
    IndexOutOfRange { offset: usize, t: u64 },
    #[error("at byte {offset}: exponent {e} out of range (nonzero, |e| <= {MAX_ETA_EXPONENT})")]
    ExponentOutOfRange { offset: usize, e: i64 },
}

/// `q^c * prod f_t^{e_t}` with each base `t` appearing at most once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    pub qshift: u64,
    /// `t -> e`, exponents nonzero.
    pub factors: BTreeMap<u64, i64>,
}

impl Monomial {
    fn unit() -> Self {
        Monomial { qshift: 0, factors: BTreeMap::new() }
    }
}

/// A nonempty, order-preserving sum of monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QExpr {
    pub terms: Vec<Monomial>,
}

impl fmt::Display for QExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl QExpr {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        Parser::new(text).parse_all()
    }

    /// Canonical text form; reparses to a structurally equal expression.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, m) in self.terms.iter().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            let mut wrote = false;
            if m.qshift > 0 || m.factors.is_empty() {
                if m.qshift == 1 {
                    out.push('q');
                } else {
                    out.push_str(&format!("q^{}", m.qshift));
                }
                wrote = true;
            }
            for (&t, &e) in &m.factors {
                if e > 0 {
                    if wrote {
                        out.push('*');
                    }
                    if e == 1 {
                        out.push_str(&format!("f{t}"));
                    } else {
                        out.push_str(&format!("f{t}^{e}"));
                    }
                } else {
                    if !wrote {
                        out.push_str("q^0");
                    }
                    if -e == 1 {
                        out.push_str(&format!("/f{t}"));
                    } else {
                        out.push_str(&format!("/f{t}^{}", -e));
                    }
                }
                wrote = true;
            }
        }
        out
    }

    /// Sum over monomials of `q^c * prod (f_t)^e` mod 2, truncated to `n`.
    pub fn evaluate(&self, n: usize) -> Result<BitSeries, SeriesError> {
        let mut acc = BitSeries::zero(n);
        for m in &self.terms {
            let mut prod = BitSeries::one(n);
            for (&t, &e) in &m.factors {
                prod = prod.mul(&eta_power(t as usize, e, n)?)?;
            }
            acc = acc.add(&prod.shift(m.qshift as usize))?;
        }
        Ok(acc)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

enum Factor {
    Q(u64),
    F { t: u64, e: i64, offset: usize },
    Group(Vec<Monomial>),
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { src: text.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn found(&self) -> String {
        match self.src.get(self.pos) {
            Some(&c) => format!("{:?}", c as char),
            None => "end of input".to_string(),
        }
    }

    fn err(&self, expected: &'static str) -> ParseError {
        ParseError::Syntax { offset: self.pos, expected, found: self.found() }
    }

    fn parse_all(&mut self) -> Result<QExpr, ParseError> {
        let terms = self.parse_expr()?;
        if self.peek().is_some() {
            return Err(self.err("'+', '*', '/' or end of input"));
        }
        Ok(QExpr { terms })
    }

    fn parse_expr(&mut self) -> Result<Vec<Monomial>, ParseError> {
        let mut terms = self.parse_term()?;
        while self.peek() == Some(b'+') {
            self.pos += 1;
            terms.extend(self.parse_term()?);
        }
        Ok(terms)
    }

    fn parse_term(&mut self) -> Result<Vec<Monomial>, ParseError> {
        let first = self.next_factor(false)?;
        let mut acc = self.factor_monomials(first)?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.next_factor(false)?;
                    let rhs = self.factor_monomials(f)?;
                    acc = self.cross(acc, rhs)?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let f = self.next_factor(true)?;
                    let rhs = self.factor_monomials(f)?;
                    acc = self.cross(acc, rhs)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn next_factor(&mut self, inverted: bool) -> Result<Factor, ParseError> {
        match self.peek() {
            Some(b'q') if !inverted => {
                self.pos += 1;
                let c = if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.parse_uint()?
                } else {
                    1
                };
                Ok(Factor::Q(c))
            }
            Some(b'f') => {
                self.pos += 1;
                let t_off = self.pos;
                let t = self.parse_uint()?;
                if t == 0 || t > MAX_ETA_INDEX {
                    return Err(ParseError::IndexOutOfRange { offset: t_off, t });
                }
                let e_off = self.pos;
                let e = if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.parse_uint()? as i64
                } else {
                    1
                };
                if e == 0 || e > MAX_ETA_EXPONENT {
                    return Err(ParseError::ExponentOutOfRange { offset: e_off, e });
                }
                Ok(Factor::F { t, e: if inverted { -e } else { e }, offset: t_off })
            }
            Some(b'(') if !inverted => {
                self.pos += 1;
                let terms = self.parse_expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("')'"));
                }
                self.pos += 1;
                Ok(Factor::Group(terms))
            }
            _ => Err(self.err(if inverted { "an f-factor after '/'" } else { "'q', 'f' or '('" })),
        }
    }

    fn parse_uint(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ParseError::Syntax {
                offset: start,
                expected: "an unsigned integer",
                found: self.found(),
            });
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| ParseError::Syntax {
                offset: start,
                expected: "an integer within range",
                found: "overflowing literal".to_string(),
            })
    }

    fn factor_monomials(&self, f: Factor) -> Result<Vec<Monomial>, ParseError> {
        Ok(match f {
            Factor::Q(c) => vec![Monomial { qshift: c, factors: BTreeMap::new() }],
            Factor::F { t, e, offset } => {
                let mut m = Monomial::unit();
                m.factors.insert(t, e);
                let _ = offset;
                vec![m]
            }
            Factor::Group(terms) => terms,
        })
    }

    /// Distribute a product of two monomial sums; duplicate eta bases within
    /// a resulting monomial are rejected.
    fn cross(&self, lhs: Vec<Monomial>, rhs: Vec<Monomial>) -> Result<Vec<Monomial>, ParseError> {
        let mut out = Vec::with_capacity(lhs.len() * rhs.len());
        for a in &lhs {
            for b in &rhs {
                let mut m = a.clone();
                m.qshift += b.qshift;
                for (&t, &e) in &b.factors {
                    if m.factors.contains_key(&t) {
                        return Err(ParseError::DuplicateBase { offset: self.pos, t });
                    }
                    m.factors.insert(t, e);
                }
                out.push(m);
            }
        }
        Ok(out)
    }
}
