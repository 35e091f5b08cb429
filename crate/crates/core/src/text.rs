//! Shared lexing for the text forms of scalars and algebra elements.

use std::str::FromStr;

use thiserror::Error;

use crate::scalar::{Ring, Scalar};
use crate::Int;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

/// Exponents and sizes above this are rejected while parsing so that hostile
/// input cannot request enormous expansions.
pub const MAX_EXPONENT: i64 = 4096;

/// Largest accepted integer literal, leaving headroom for sums.
pub const MAX_LITERAL: Int = 1_000_000_000_000_000_000_000_000;

/// Byte cursor over ASCII input.
pub struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub fn pos(&self) -> usize {
        self.pos
    }

    pub fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub fn error<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    pub fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    pub fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    pub fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }

    /// Skips whitespace, then consumes `c` if it is next.
    pub fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    /// Skips whitespace, then consumes `s` if it is next.
    pub fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.error(format!("expected '{c}'"))
        }
    }

    pub fn expect_str(&mut self, s: &str) -> Result<(), ParseError> {
        if self.eat_str(s) {
            Ok(())
        } else {
            self.error(format!("expected '{s}'"))
        }
    }

    pub fn expect_end(&mut self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            self.error("unexpected trailing input")
        }
    }

    fn digits(&mut self) -> Result<&'a str, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some('0'..='9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected digits");
        }
        Ok(&self.src[start..self.pos])
    }

    pub fn int(&mut self) -> Result<Int, ParseError> {
        self.skip_ws();
        let neg = self.eat('-');
        let start = self.pos;
        let d = self.digits()?;
        let v: Int = d
            .parse()
            .ok()
            .filter(|v: &Int| *v <= MAX_LITERAL)
            .ok_or(ParseError {
                pos: start,
                msg: "integer out of range".into(),
            })?;
        Ok(if neg { -v } else { v })
    }

    /// Signed exponent bounded by [`MAX_EXPONENT`].
    pub fn exponent(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        let v = self.int()?;
        if v.abs() > MAX_EXPONENT as Int {
            return Err(ParseError {
                pos: start,
                msg: "exponent too large".into(),
            });
        }
        Ok(v as i64)
    }

    /// Non-negative exponent bounded by [`MAX_EXPONENT`].
    pub fn natural(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        let v = self.exponent()?;
        if v < 0 {
            return Err(ParseError {
                pos: start,
                msg: "expected a non-negative integer".into(),
            });
        }
        Ok(v as u32)
    }

    /// Optional `^e`, defaulting to 1.
    pub fn power(&mut self) -> Result<i64, ParseError> {
        if self.eat('^') {
            self.exponent()
        } else {
            Ok(1)
        }
    }

    /// A scalar in either ring, `cyc(n): ...` selecting the cyclotomic one.
    pub fn scalar(&mut self) -> Result<Scalar, ParseError> {
        let ring = if self.eat_str("cyc") {
            self.expect('(')?;
            let start = self.pos;
            let n = self.natural()?;
            if n == 0 || n > 4096 {
                return Err(ParseError {
                    pos: start,
                    msg: "cyclotomic order must be in 1..=4096".into(),
                });
            }
            self.expect(')')?;
            self.expect(':')?;
            Ring::cyclotomic(n)
        } else {
            Ring::generic()
        };
        let mut terms: Vec<(i64, Int)> = Vec::new();
        let mut first = true;
        loop {
            let sign: Int = if first {
                if self.eat('-') {
                    -1
                } else {
                    1
                }
            } else if self.eat('+') {
                1
            } else if self.eat('-') {
                -1
            } else {
                break;
            };
            first = false;
            self.skip_ws();
            let (c, e) = if self.eat('w') {
                (1, self.power()?)
            } else {
                let c = self.int()?;
                if self.eat('*') {
                    if !self.eat('w') {
                        return self.error("expected 'w'");
                    }
                    (c, self.power()?)
                } else {
                    (c, 0)
                }
            };
            terms.push((e, sign * c));
        }
        Ok(ring.omega_terms(terms))
    }
}

/// Parses the canonical rendering of a scalar.
pub fn parse_scalar(s: &str) -> Result<Scalar, ParseError> {
    let mut cur = Cursor::new(s);
    let x = cur.scalar()?;
    cur.expect_end()?;
    Ok(x)
}

impl FromStr for Scalar {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_scalar(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_round_trip() {
        let g = Ring::generic();
        let c12 = Ring::cyclotomic(12);
        for x in [
            g.zero(),
            g.one(),
            g.omega_terms([(0, 1), (1, -2), (-3, 5)]),
            c12.omega_terms([(0, 1), (1, -1), (3, 7)]),
            c12.zero(),
        ] {
            let s = x.to_string();
            assert_eq!(parse_scalar(&s).unwrap(), x, "{s}");
        }
    }

    #[test]
    fn scalar_examples() {
        let g = Ring::generic();
        assert_eq!(parse_scalar("1*w^0 - 2*w^1").unwrap(), g.omega_terms([(0, 1), (1, -2)]));
        assert_eq!(parse_scalar("w^-2").unwrap(), g.omega_pow(-2));
        assert_eq!(parse_scalar("cyc(4): 1 + 1*w^2").unwrap(), Ring::cyclotomic(4).zero());
        assert!(parse_scalar("1 +").is_err());
        assert!(parse_scalar("cyc(0): 1").is_err());
        assert!(parse_scalar("w^99999999999").is_err());
        assert!(parse_scalar("999999999999999999999999999999999999999999").is_err());
    }
}
