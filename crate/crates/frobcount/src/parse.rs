//! Polynomial expression parser.
//!
//! Grammar: sums of terms joined by `+`/`-`; a term is a `*`-separated
//! product of integer literals, powers `var^k`, and parenthesized
//! subexpressions `(expr)^k`. Powers expand at parse time, coefficients
//! reduce mod p as they are read.

use crate::error::Error;
use crate::poly::Polynomial;
use crate::ring::Ring;
use std::sync::Arc;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Arc<Ring>,
}

pub fn parse_polynomial(src: &str, ring: &Arc<Ring>) -> Result<Polynomial, Error> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, ring };
    p.skip_ws();
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        let mut line = 1;
        let mut col = 1;
        for &b in &self.src[..self.pos] {
            if b == b'\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        Error::Parse { line, col, msg: msg.to_string() }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t') | Some(b'\n') | Some(b'\r')) {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<Polynomial, Error> {
        self.skip_ws();
        let mut negate = false;
        if let Some(c @ (b'+' | b'-')) = self.peek() {
            negate = c == b'-';
            self.bump();
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t)?;
                }
                Some(b'-') => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.sub(&t)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, Error> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.bump();
                let f = self.factor()?;
                acc = acc.mul(&f)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial, Error> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.bump();
                let inner = self.expr()?;
                self.skip_ws();
                if self.bump() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                let e = self.optional_power()?;
                inner.pow(e).map_err(|_| self.err("exponent overflow"))
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer_mod_p()?;
                Ok(Polynomial::constant(self.ring, v))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.identifier();
                let idx = self
                    .ring
                    .var_index(&name)
                    .ok_or_else(|| self.err(&format!("unknown variable `{name}`")))?;
                let e = self.optional_power()?;
                Polynomial::var(self.ring, idx)
                    .pow(e)
                    .map_err(|_| self.err("exponent overflow"))
            }
            _ => Err(self.err("expected a coefficient, variable, or `(`")),
        }
    }

    fn optional_power(&mut self) -> Result<u64, Error> {
        self.skip_ws();
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.bump();
        self.skip_ws();
        if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            return Err(self.err("expected an exponent after `^`"));
        }
        let mut v: u64 = 0;
        while let Some(c) = self.peek() {
            if !c.is_ascii_digit() {
                break;
            }
            v = v
                .checked_mul(10)
                .and_then(|v| v.checked_add((c - b'0') as u64))
                .ok_or_else(|| self.err("exponent too large"))?;
            self.bump();
        }
        if v == 0 {
            return Err(self.err("exponent must be at least 1"));
        }
        Ok(v)
    }

    /// Integer literal folded mod p digit by digit (arbitrary length).
    fn integer_mod_p(&mut self) -> Result<u32, Error> {
        let field = self.ring.field();
        let mut v: u32 = 0;
        while let Some(c) = self.peek() {
            if !c.is_ascii_digit() {
                break;
            }
            v = field.add(field.mul(v, 10), (c - b'0') as u32);
            self.bump();
        }
        Ok(v)
    }

    fn identifier(&mut self) -> String {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == b'_' {
                self.bump();
            } else {
                break;
            }
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ring;

    #[test]
    fn single_term() {
        let r = ring(2, &["x", "y"]).unwrap();
        let f = parse_polynomial("x*y", &r).unwrap();
        assert_eq!(f.render(), "x*y");
    }

    #[test]
    fn coefficient_cancellation() {
        let r = ring(3, &["x", "y"]).unwrap();
        let f = parse_polynomial("x^2 + 2*x^2", &r).unwrap();
        assert!(f.is_zero());
    }

    #[test]
    fn paren_power_expands() {
        let r = ring(2, &["x", "y"]).unwrap();
        let f = parse_polynomial("(x+y)^2", &r).unwrap();
        assert_eq!(f, parse_polynomial("x^2 + y^2", &r).unwrap());
    }

    #[test]
    fn subtraction_and_signs() {
        let r = ring(5, &["x"]).unwrap();
        let f = parse_polynomial("-x + 2*x - x", &r).unwrap();
        assert!(f.is_zero());
        let g = parse_polynomial("3 - x", &r).unwrap();
        assert_eq!(g.render(), "4*x + 3");
    }

    #[test]
    fn parse_print_parse_roundtrip() {
        let r = ring(7, &["x", "y", "z"]).unwrap();
        let f = parse_polynomial("2*x^3*y - z^2 + 5", &r).unwrap();
        let g = parse_polynomial(&f.render(), &r).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn errors_report_position() {
        let r = ring(2, &["x"]).unwrap();
        match parse_polynomial("x + w", &r) {
            Err(Error::Parse { col, .. }) => assert_eq!(col, 6),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_polynomial("x +", &r).is_err());
        assert!(parse_polynomial("x^0", &r).is_err());
        assert!(parse_polynomial("(x", &r).is_err());
    }

    #[test]
    fn big_literal_folds_mod_p() {
        let r = ring(7, &["x"]).unwrap();
        let f = parse_polynomial("123456789012345678901234567891*x", &r).unwrap();
        // 1234...91 mod 7 == 1
        assert_eq!(f.render(), "x");
    }
}
