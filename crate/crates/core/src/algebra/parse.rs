//! Recursive-descent parser for matrix entry expressions.
//!
//! ```text
//! EXPR   := TERM (('+'|'-') TERM)*
//! TERM   := FACTOR ('*' FACTOR)*
//! FACTOR := INT | INT '/' UINT | IDENT ['^' UINT] | '(' EXPR ')' ['^' UINT] | '-' FACTOR
//! IDENT  := [A-Za-z][A-Za-z0-9_]*
//! ```
//!
//! Whitespace between tokens is ignored.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::{Poly, Rational};
use crate::error::{Error, Result};

pub fn parse_entry(text: &str) -> Result<Poly> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

impl FromStr for Poly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Poly> {
        parse_entry(s)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.to_string() }
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc += &self.term()?;
            } else if self.eat(b'-') {
                acc -= &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        match self.peek() {
            None => Err(self.err("unexpected end of input")),
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.power(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.uint()?;
                if self.eat(b'/') {
                    self.skip_ws();
                    let at = self.pos;
                    let den = self.uint()?;
                    if den.is_zero() {
                        return Err(Error::ZeroDenominator { pos: at });
                    }
                    Ok(Poly::constant(Rational::new(num, den)))
                } else {
                    Ok(Poly::constant(Rational::from_integer(num)))
                }
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let v = Poly::var(name);
                self.power(v)
            }
            Some(_) => Err(self.err("unexpected character")),
        }
    }

    fn power(&mut self, base: Poly) -> Result<Poly> {
        if self.eat(b'^') {
            let e = self.uint()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.err("exponent too large"))?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected unsigned integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }
}
