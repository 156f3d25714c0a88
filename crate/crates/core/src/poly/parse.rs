//! Recursive-descent parser for the ASCII polynomial grammar:
//!
//! ```text
//! poly   := ["-"] term (("+" | "-") term)*
//! term   := coeff ("*"? factor)* | factor ("*"? factor)*
//! factor := ("X" | "Y" | "Z") ("^" uint)?
//! coeff  := uint | uint "/" uint
//! ```
//!
//! Whitespace between tokens is ignored. Positions in errors are byte
//! offsets into the original input.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Axis, Monomial, Polynomial};
use crate::error::{Error, Result};

pub fn parse_polynomial(text: &str) -> Result<Polynomial> {
    let mut parser = Parser::new(text);
    let poly = parser.poly()?;
    parser.skip_ws();
    if let Some((pos, c)) = parser.peek() {
        return Err(parser.unexpected(pos, c, "'+', '-' or end of input"));
    }
    Ok(poly)
}

/// Parses an optionally signed rational literal such as `3`, `-2` or `1/3`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let mut parser = Parser::new(text);
    parser.skip_ws();
    let negative = parser.eat('-');
    let value = parser.coefficient()?;
    parser.skip_ws();
    if let Some((pos, c)) = parser.peek() {
        return Err(parser.unexpected(pos, c, "end of input"));
    }
    Ok(if negative { -value } else { value })
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn peek(&self) -> Option<(usize, char)> {
        self.src[self.pos..].chars().next().map(|c| (self.pos, c))
    }

    fn skip_ws(&mut self) {
        while let Some((_, c)) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    /// Consumes `want` (after whitespace) if it is next.
    fn eat(&mut self, want: char) -> bool {
        self.skip_ws();
        match self.peek() {
            Some((_, c)) if c == want => {
                self.pos += c.len_utf8();
                true
            }
            _ => false,
        }
    }

    fn syntax(&self, position: usize, message: impl Into<String>) -> Error {
        Error::Syntax {
            position,
            message: message.into(),
        }
    }

    fn unexpected(&self, pos: usize, c: char, expected: &str) -> Error {
        self.syntax(pos, format!("unexpected '{c}', expected {expected}"))
    }

    fn eof(&self, expected: &str) -> Error {
        self.syntax(self.src.len(), format!("unexpected end of input, expected {expected}"))
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero();
        let negative = self.eat('-');
        let (c, m) = self.term()?;
        acc.add_term(m, if negative { -c } else { c });
        loop {
            self.skip_ws();
            let sign = match self.peek() {
                Some((_, '+')) => false,
                Some((_, '-')) => true,
                _ => break,
            };
            self.pos += 1;
            let (c, m) = self.term()?;
            acc.add_term(m, if sign { -c } else { c });
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<(BigRational, Monomial)> {
        self.skip_ws();
        let (coeff, mut mono) = match self.peek() {
            Some((_, c)) if c.is_ascii_digit() => (self.coefficient()?, Monomial::ONE),
            Some(_) => (BigRational::one(), self.factor()?),
            None => return Err(self.eof("a term")),
        };
        loop {
            self.skip_ws();
            let starred = self.eat('*');
            self.skip_ws();
            match self.peek() {
                Some((_, c)) if c.is_alphabetic() => mono = mono.mul(&self.factor()?),
                Some((pos, c)) if starred => return Err(self.unexpected(pos, c, "a variable")),
                None if starred => return Err(self.eof("a variable")),
                _ => break,
            }
        }
        Ok((coeff, mono))
    }

    fn factor(&mut self) -> Result<Monomial> {
        self.skip_ws();
        let (pos, c) = self.peek().ok_or_else(|| self.eof("a variable"))?;
        let axis = match c {
            'X' => Axis::X,
            'Y' => Axis::Y,
            'Z' => Axis::Z,
            c if c.is_alphabetic() => {
                return Err(Error::UnknownVariable {
                    symbol: c,
                    position: pos,
                })
            }
            c => return Err(self.unexpected(pos, c, "a coefficient or a variable")),
        };
        self.pos += 1;
        let exponent = if self.eat('^') {
            let (start, digits) = self.digits("an exponent")?;
            digits
                .parse::<u32>()
                .map_err(|_| self.syntax(start, format!("exponent '{digits}' is too large")))?
        } else {
            1
        };
        Ok(Monomial::pure_power(axis, exponent))
    }

    fn coefficient(&mut self) -> Result<BigRational> {
        let (_, numer) = self.digits("a coefficient")?;
        let numer: BigInt = numer.parse().expect("digit string");
        if !self.eat('/') {
            return Ok(BigRational::from_integer(numer));
        }
        let (start, denom) = self.digits("a denominator")?;
        let denom: BigInt = denom.parse().expect("digit string");
        if denom.is_zero() {
            return Err(self.syntax(start, "zero denominator"));
        }
        Ok(BigRational::new(numer, denom))
    }

    fn digits(&mut self, what: &str) -> Result<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..]
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.src.len() - start);
        if len == 0 {
            return Err(match self.peek() {
                Some((pos, c)) => self.unexpected(pos, c, what),
                None => self.eof(what),
            });
        }
        self.pos += len;
        Ok((start, &self.src[start..start + len]))
    }
}
