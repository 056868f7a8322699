//! Integer expressions over single-letter parameters: `+`, `-`, implicit
//! and explicit multiplication, parentheses and `GCD(a, b, ...)`.

use std::collections::BTreeMap;

use num_integer::Integer;

use super::FamilyError;

pub type Params = BTreeMap<char, i64>;

pub fn evaluate(src: &str, params: &Params) -> Result<i128, FamilyError> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, params, text: src };
    let v = p.sum()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("trailing input"));
    }
    Ok(v)
}

/// Parameter letters used in the expression, in first-seen order.
pub fn variables(src: &str) -> Vec<char> {
    let mut out = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if src[i..].starts_with("GCD") {
            i += 3;
            continue;
        }
        let c = bytes[i] as char;
        if c.is_ascii_lowercase() && !out.contains(&c) {
            out.push(c);
        }
        i += 1;
    }
    out
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    params: &'a Params,
    text: &'a str,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> FamilyError {
        FamilyError::Formula { formula: self.text.to_string(), message: format!("{what} at {}", self.pos) }
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

    fn sum(&mut self) -> Result<i128, FamilyError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.product()?
            }
            _ => self.product()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc += self.product()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc -= self.product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<i128, FamilyError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc *= self.factor()?;
                }
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() => acc *= self.factor()?,
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<i128, FamilyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.sum()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                self.text[start..self.pos].parse().map_err(|_| self.error("number too large"))
            }
            Some(b'G') if self.text[self.pos..].starts_with("GCD") => {
                self.pos += 3;
                self.expect(b'(')?;
                let mut g = self.sum()?.abs();
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    g = g.gcd(&self.sum()?);
                }
                self.expect(b')')?;
                Ok(g)
            }
            Some(c) if c.is_ascii_lowercase() => {
                self.pos += 1;
                let v = self.params.get(&(c as char)).ok_or_else(|| self.error(&format!("unbound parameter {}", c as char)))?;
                Ok(i128::from(*v))
            }
            _ => Err(self.error("expected a term")),
        }
    }

    fn expect(&mut self, b: u8) -> Result<(), FamilyError> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", b as char)))
        }
    }
}
