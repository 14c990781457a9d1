//! Recursive-descent parser for the wire format.
//!
//! Accepts `+ - * / ^`, parentheses, integers, `I`, identifiers and
//! indexed names `w[1]` (read as `w1`). Division only by constants.

use std::sync::Arc;

use super::coeff::Coeff;
use super::poly::{Monomial, Polynomial};
use super::vars::VarTable;
use crate::error::{Error, Result};

pub fn parse(src: &str, vars: &Arc<VarTable>) -> Result<Polynomial> {
    let mut p = Parser { s: src.as_bytes(), pos: 0, vars };
    let r = p.expr()?;
    p.ws();
    if p.pos != p.s.len() {
        return p.err("trailing input");
    }
    r.validate()?;
    Ok(r)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    vars: &'a Arc<VarTable>,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.to_string() })
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = if self.eat(b'-') {
            -self.term()?
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            if self.peek() == Some(b'*') && self.s.get(self.pos + 1) != Some(&b'*') {
                self.pos += 1;
                acc = &acc * &self.unary()?;
            } else if self.eat(b'/') {
                let at = self.pos;
                let d = self.unary()?;
                if !d.is_constant() || d.is_zero() {
                    self.pos = at;
                    return self.err("division by a non-constant");
                }
                acc = acc.scale(&d.constant_term().inv());
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        let caret = if self.eat(b'^') {
            true
        } else if self.peek() == Some(b'*') && self.s.get(self.pos + 1) == Some(&b'*') {
            self.pos += 2;
            true
        } else {
            false
        };
        if !caret {
            return Ok(base);
        }
        let at = self.pos;
        let e = self.exponent()?;
        if e >= 0 {
            return Ok(base.pow(e as u32));
        }
        if base.len() != 1 {
            self.pos = at;
            return self.err("negative power of a non-monomial");
        }
        let (m, c) = base.terms().next().unwrap();
        let inv = Monomial(m.0.iter().map(|x| -x).collect());
        Ok(Polynomial::term(self.vars, inv, c.inv()).pow((-e) as u32))
    }

    fn exponent(&mut self) -> Result<i64> {
        if self.eat(b'(') {
            let neg = self.eat(b'-');
            let v = self.integer()?;
            if !self.eat(b')') {
                return self.err("expected `)`");
            }
            return Ok(if neg { -v } else { v });
        }
        if self.eat(b'-') {
            return Ok(-self.integer()?);
        }
        self.integer()
    }

    fn integer(&mut self) -> Result<i64> {
        self.ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let t = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        t.parse::<i64>().map_err(|_| Error::Parse { pos: start, msg: "integer too large".into() })
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let t = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                let n: num_bigint::BigInt = t.parse().unwrap();
                Ok(Polynomial::constant(self.vars, Coeff::from_rational(num_rational::BigRational::from_integer(n))))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let mut name = std::str::from_utf8(&self.s[start..self.pos]).unwrap().to_string();
                if self.pos < self.s.len() && self.s[self.pos] == b'[' {
                    self.pos += 1;
                    let i = self.integer()?;
                    if !self.eat(b']') {
                        return self.err("expected `]`");
                    }
                    name.push_str(&i.to_string());
                }
                if name == "I" && self.vars.index("I").is_none() {
                    return Ok(Polynomial::constant(self.vars, Coeff::i()));
                }
                match self.vars.index(&name) {
                    Some(i) => Ok(Polynomial::var_index(self.vars, i)),
                    None => Err(Error::UnknownVariable(name)),
                }
            }
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parse with the zero polynomial for empty input.
pub fn parse_or_zero(src: &str, vars: &Arc<VarTable>) -> Result<Polynomial> {
    if src.trim().is_empty() {
        Ok(Polynomial::zero(vars))
    } else {
        parse(src, vars)
    }
}
