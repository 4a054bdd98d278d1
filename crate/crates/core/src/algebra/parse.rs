//! Polynomial expressions in `x`, `y` and the field generator `t`.
//!
//! ```text
//! equation := expr ('=' expr)?
//! expr     := term (('+' | '-') term)*
//! term     := unary (('*' | <juxtaposition>) unary | '/' INT)*
//! unary    := ('-' | '+') unary | power
//! power    := atom ('^' INT)?
//! atom     := INT | LETTER | '(' expr ')'
//! ```
//!
//! Letters other than `x`, `y`, `t` are looked up in a parameter table, so
//! `abx^3` reads as `a·b·x³`.

use super::{AlgebraError, Base, Fe, Field, Form, Poly2};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at offset {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Letter(char),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = s.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let mut j = i;
            while j < chars.len() && chars[j].1.is_ascii_digit() {
                j += 1;
            }
            let digits: String = chars[i..j].iter().map(|p| p.1).collect();
            out.push((pos, Tok::Int(digits.parse().expect("digits"))));
            i = j;
        } else if c.is_ascii_alphabetic() {
            out.push((pos, Tok::Letter(c)));
            i += 1;
        } else if "+-*/^()=".contains(c) {
            out.push((pos, Tok::Op(c)));
            i += 1;
        } else {
            return Err(ParseError { pos, msg: format!("unexpected character {c:?}") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    i: usize,
    end: usize,
    field: &'a Field,
    params: &'a BTreeMap<char, Poly2>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map(|t| t.0).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos: self.pos(), msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<BigInt, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.i += 1;
                Ok(n)
            }
            _ => self.err("expected an integer"),
        }
    }

    fn expr(&mut self) -> Result<Poly2, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Int(_)) | Some(Tok::Letter(_)) | Some(Tok::Op('(')))
    }

    fn term(&mut self) -> Result<Poly2, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat('/') {
                let d = self.int()?;
                if d.is_zero() {
                    return self.err("division by zero");
                }
                let inv = Fe::from_q(self.field, super::Q::new(1.into(), d));
                acc = acc.scale(&inv);
            } else if self.starts_factor() {
                acc = acc.mul(&self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Poly2, ParseError> {
        if self.eat('-') {
            Ok(self.unary()?.neg())
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Poly2, ParseError> {
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.int()?;
            let e = match e.to_u32() {
                Some(e) if e <= 64 => e,
                _ => return self.err("exponent too large"),
            };
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly2, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.i += 1;
                Ok(Poly2::constant(Fe::from_q(self.field, super::Q::from_integer(n))))
            }
            Some(Tok::Letter(c)) => {
                self.i += 1;
                match c {
                    'x' => Ok(Poly2::x(self.field)),
                    'y' => Ok(Poly2::y(self.field)),
                    't' => Ok(Poly2::constant(Fe::generator(self.field))),
                    _ => match self.params.get(&c) {
                        Some(p) => Ok(p.clone()),
                        None => {
                            self.i -= 1;
                            self.err(format!("unknown symbol {c:?}"))
                        }
                    },
                }
            }
            Some(Tok::Op('(')) => {
                self.i += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses an expression or equation (`lhs = rhs` becomes `lhs − rhs`).
pub fn parse_expr(s: &str, field: &Field, params: &BTreeMap<char, Poly2>) -> Result<Poly2, ParseError> {
    let toks = lex(s)?;
    let mut p = Parser { toks, i: 0, end: s.len(), field, params };
    let lhs = p.expr()?;
    let out = if p.eat('=') { lhs.sub(&p.expr()?) } else { lhs };
    if p.i != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

/// Parses an affine expression and (bi)homogenizes it to the declared degree.
pub fn parse_and_homogenize(
    s: &str,
    base: Base,
    degree: (u32, u32),
    field: &Field,
    params: &BTreeMap<char, Poly2>,
) -> Result<Form, AlgebraError> {
    let p = parse_expr(s, field, params)?;
    Form::from_affine(base, &p, degree)
}
