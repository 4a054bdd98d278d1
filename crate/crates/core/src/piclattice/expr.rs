//! Class expressions such as `(5,1) - E[*]`, `3H - 2E[P4] - E'[Q1]` or
//! `K + delta + L`.
//!
//! ```text
//! expr   := ('-')? term (('+' | '-') term)*
//! term   := INT ('*')? factor | factor | INT
//! factor := '(' INT ',' INT ')' | 'H' | 'E' "'"* '[' (NAME | '*') ']'
//!         | NAME | '(' expr ')'
//! ```
//!
//! `E[name]` sums the level-0 slots labelled `name` (all conjugates of a
//! Galois point), `E'[name]` the level-1 slots below it, and `E[*]` every
//! level-0 slot. Other names are looked up in the substitution table.

use super::{DivClass, LatticeError, SurfaceLattice};
use crate::algebra::Base;
use std::collections::BTreeMap;

struct P<'a> {
    s: Vec<char>,
    i: usize,
    lat: &'a SurfaceLattice,
    subs: &'a BTreeMap<String, DivClass>,
}

impl P<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, LatticeError> {
        Err(LatticeError::Expr { pos: self.i, msg: msg.into() })
    }

    fn ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.ws();
        self.s.get(self.i).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Option<i64> {
        self.ws();
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        if start == self.i {
            return None;
        }
        self.s[start..self.i].iter().collect::<String>().parse().ok()
    }

    fn signed_int(&mut self) -> Option<i64> {
        let neg = self.eat('-');
        self.int().map(|v| if neg { -v } else { v })
    }

    fn name(&mut self) -> Option<String> {
        self.ws();
        let start = self.i;
        while self.i < self.s.len() && (self.s[self.i].is_alphanumeric() || self.s[self.i] == '_') {
            self.i += 1;
        }
        (self.i > start).then(|| self.s[start..self.i].iter().collect())
    }

    fn expr(&mut self) -> Result<DivClass, LatticeError> {
        let mut acc = if self.eat('-') { self.term()?.scale(-1) } else { self.term()? };
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

    fn term(&mut self) -> Result<DivClass, LatticeError> {
        if let Some(k) = self.int() {
            self.eat('*');
            return match self.peek() {
                Some(c) if c == '(' || c.is_alphabetic() => Ok(self.factor()?.scale(k)),
                _ if k == 0 => Ok(self.lat.zero()),
                _ => self.err("a bare integer is only allowed for 0"),
            };
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<DivClass, LatticeError> {
        if self.eat('(') {
            let save = self.i;
            if let Some(a) = self.signed_int() {
                if self.eat(',') {
                    let Some(b) = self.signed_int() else { return self.err("expected integer") };
                    if !self.eat(')') {
                        return self.err("expected ')'");
                    }
                    if self.lat.base() != Base::P1xP1 {
                        return self.err("bidegree on a ℙ² lattice");
                    }
                    return Ok(self.lat.base_class((a, b)));
                }
            }
            self.i = save;
            let e = self.expr()?;
            if !self.eat(')') {
                return self.err("expected ')'");
            }
            return Ok(e);
        }
        let start = self.i;
        let Some(name) = self.name() else { return self.err("expected a class") };
        if name == "E" && matches!(self.peek(), Some('\'') | Some('[')) {
            let mut level = 0;
            while self.eat('\'') {
                level += 1;
            }
            if !self.eat('[') {
                return self.err("expected '['");
            }
            let label = if self.eat('*') { None } else { self.name() };
            if !self.eat(']') {
                return self.err("expected ']'");
            }
            let idx: Vec<usize> = match &label {
                None => self.lat.slots().iter().enumerate().filter(|(_, s)| s.level() == level).map(|(i, _)| i).collect(),
                Some(l) => self.lat.slots_named(l, level),
            };
            if idx.is_empty() {
                self.i = start;
                return self.err(format!("no exceptional slot {}[{}]", "E".to_string() + &"'".repeat(level), label.unwrap_or("*".into())));
            }
            return Ok(idx.iter().fold(self.lat.zero(), |acc, &i| acc.add(&self.lat.e(i))));
        }
        if name == "H" && self.lat.base() == Base::P2 && !self.subs.contains_key("H") {
            return Ok(self.lat.base_class((1, 0)));
        }
        match self.subs.get(&name) {
            Some(c) => Ok(self.lat.lift(c)?),
            None => {
                self.i = start;
                self.err(format!("unknown class {name}"))
            }
        }
    }
}

/// Evaluates a class expression in `lat`.
pub fn eval_class_expr(s: &str, lat: &SurfaceLattice, subs: &BTreeMap<String, DivClass>) -> Result<DivClass, LatticeError> {
    let mut p = P { s: s.chars().collect(), i: 0, lat, subs };
    let c = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(c)
}

/// True iff both expressions give the same class.
pub fn verify_class_identity(lhs: &str, rhs: &str, lat: &SurfaceLattice, subs: &BTreeMap<String, DivClass>) -> Result<bool, LatticeError> {
    Ok(eval_class_expr(lhs, lat, subs)? == eval_class_expr(rhs, lat, subs)?)
}
