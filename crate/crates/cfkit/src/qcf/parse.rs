//! Recursive-descent parser for the polynomial grammar.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := INT | VAR ('^' INT)? | '(' expr ')'
//! VAR    := 'q' | 'x'
//! ```
//!
//! `^` binds tighter than `*`, exponents are nonnegative integer literals,
//! whitespace is insignificant. The optional leading minus extends the base
//! grammar so that polynomials with a negative leading coefficient
//! round-trip through display and parse.

use super::poly::QPolynomial;
use crate::error::Error;
use num_bigint::BigInt;
use num_traits::One;

pub fn parse_polynomial(text: &str) -> Result<QPolynomial, Error> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos < p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(expr)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::PolynomialSyntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn expr(&mut self) -> Result<QPolynomial, Error> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            _ => self.term()?,
        };
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == b'+' {
                acc.add(&rhs)
            } else {
                acc.sub(&rhs)
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<QPolynomial, Error> {
        let mut acc = self.factor()?;
        while let Some(b'*') = self.peek() {
            self.pos += 1;
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<QPolynomial, Error> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.bump() {
                    Some(b')') => Ok(inner),
                    _ => Err(self.err("expected ')'")),
                }
            }
            Some(b) if b.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(QPolynomial::constant(BigInt::from(n)))
            }
            Some(v @ (b'q' | b'x')) => {
                self.pos += 1;
                let exp = if let Some(b'^') = self.peek() {
                    self.pos += 1;
                    let e = self.integer()?;
                    u32::try_from(e).map_err(|_| self.err("exponent too large"))?
                } else {
                    1
                };
                let (dq, dx) = if v == b'q' { (exp, 0) } else { (0, exp) };
                Ok(QPolynomial::monomial(BigInt::one(), dq, dx))
            }
            Some(_) => Err(self.err("expected integer, 'q', 'x' or '('")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<num_bigint::BigUint, Error> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected integer literal"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        s.parse().map_err(|_| self.err("malformed integer"))
    }
}
