//! Recursive-descent parser for the polynomial text grammar.
//!
//! ```text
//! expr   := [+|-] term { (+|-) term }
//! term   := factor { [*] factor }
//! factor := atom [ ^ integer ]
//! atom   := integer | identifier | ( expr )
//! ```
//! Coefficients are decimal integers reduced modulo the characteristic.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::PolyRing;

struct Parser<'a> {
    ring: &'a PolyRing,
    chars: Vec<char>,
    pos: usize,
    line: usize,
}

pub(crate) fn parse_polynomial(ring: &PolyRing, text: &str, line: usize) -> Result<Polynomial> {
    let mut p = Parser {
        ring,
        chars: text.chars().collect(),
        pos: 0,
        line,
    };
    p.skip_ws();
    if p.peek().is_none() {
        return Err(p.error("empty polynomial"));
    }
    let value = p.expr()?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(p.error(format!("unexpected character `{c}`")));
    }
    Ok(value)
}

impl<'a> Parser<'a> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.line, self.pos + 1, msg)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        let mut negate = false;
        match self.peek() {
            Some('-') => {
                negate = true;
                self.pos += 1;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { first.neg() } else { first };
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some('-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(c) if c.is_ascii_alphanumeric() || c == '_' || c == '(' => {
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let e = self.integer_u64()?;
            let e = u32::try_from(e).map_err(|_| Error::parse(self.line, start + 1, "exponent too large"))?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn integer_u64(&mut self) -> Result<u64> {
        let start = self.pos;
        let mut v: u64 = 0;
        while let Some(c) = self.peek().filter(|c| c.is_ascii_digit()) {
            v = v
                .checked_mul(10)
                .and_then(|v| v.checked_add(c as u64 - '0' as u64))
                .ok_or_else(|| Error::parse(self.line, start + 1, "integer too large"))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        Ok(v)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let p = self.ring.characteristic() as u64;
                let mut v = 0u64;
                while let Some(c) = self.peek().filter(|c| c.is_ascii_digit()) {
                    v = (v * 10 + (c as u64 - '0' as u64)) % p;
                    self.pos += 1;
                }
                Ok(Polynomial::constant(self.ring, v as i64))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                match self.ring.var_index(&name) {
                    Some(i) => Ok(self.ring.var(i)),
                    None => Err(Error::parse(self.line, start + 1, format!("unknown variable `{name}`"))),
                }
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) => Err(self.error(format!("unexpected character `{c}`"))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::error::Error;
    use crate::ring::PolyRing;

    #[test]
    fn grammar_variants() {
        let r = PolyRing::grevlex(&["x22", "x23", "x32", "x33"], 5).unwrap();
        let a = r.parse("x22*x33 - x23*x32").unwrap();
        let b = r.parse("x22 x33 + 4 x23 x32").unwrap();
        let c = r.parse("-(x23*x32 - x22*x33)").unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        // grevlex: x23*x32 > x22*x33 since x33 is the last variable
        assert_eq!(a.to_string(), "-x23*x32 + x22*x33");
    }

    #[test]
    fn coefficients_reduce_mod_p() {
        let r = PolyRing::grevlex(&["x"], 3).unwrap();
        assert_eq!(r.parse("7x^2").unwrap(), r.parse("x^2").unwrap());
        assert!(r.parse("3x").unwrap().is_zero());
        assert_eq!(r.parse("10000000000000000000001").unwrap().to_string(), "-1");
    }

    #[test]
    fn powers_of_sums() {
        let r = PolyRing::grevlex(&["x", "y"], 3).unwrap();
        assert_eq!(r.parse("(x+y)^3").unwrap().to_string(), "x^3 + y^3");
        assert_eq!(r.parse("2x y^2").unwrap().to_string(), "-x*y^2");
    }

    #[test]
    fn errors_carry_positions() {
        let r = PolyRing::grevlex(&["x", "y"], 3).unwrap();
        match r.parse("x + z") {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(r.parse("x +").is_err());
        assert!(r.parse("(x").is_err());
        assert!(r.parse("").is_err());
        assert!(r.parse("x ^").is_err());
    }
}
