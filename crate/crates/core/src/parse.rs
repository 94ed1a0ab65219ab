//! Recursive-descent parser for coefficient expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := ('+' | '-') factor | base ('^' uint)?
//! base   := rational | 'i' | 't' | ('cos' | 'sin') '(' uint? '*'? 't' ')' | '(' expr ')'
//! rational := uint ('/' uint)?
//! ```

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ring::AbelRing;
use crate::scalar::{Field, Rational};

/// Parse `text` as an element of the ring `R`.
pub fn parse_expr<R: AbelRing>(text: &str) -> Result<R> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let v = p.expr::<R>()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(Error::parse(
            p.pos,
            format!("unexpected '{}'", p.src[p.pos] as char),
        ));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

fn mismatch(pos: usize, what: &str, ring: &str) -> Error {
    Error::RingMismatch {
        pos,
        msg: format!("'{what}' is not an element of the {ring} ring"),
    }
}

impl Parser<'_> {
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

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            let found = match self.peek() {
                Some(x) => format!("'{}'", x as char),
                None => "end of input".to_string(),
            };
            Err(Error::parse(
                self.pos,
                format!("expected '{}', found {found}", c as char),
            ))
        }
    }

    fn uint(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()?
            .parse()
            .ok()
    }

    fn ident(&mut self) -> Option<(usize, String)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        if start == self.pos {
            None
        } else {
            Some((
                start,
                String::from_utf8_lossy(&self.src[start..self.pos]).into_owned(),
            ))
        }
    }

    fn expr<R: AbelRing>(&mut self) -> Result<R> {
        let mut acc = self.term::<R>()?;
        loop {
            if self.eat(b'+') {
                acc = acc.plus(&self.term::<R>()?);
            } else if self.eat(b'-') {
                acc = acc.minus(&self.term::<R>()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<R: AbelRing>(&mut self) -> Result<R> {
        let mut acc = self.factor::<R>()?;
        while self.eat(b'*') {
            acc = acc.times(&self.factor::<R>()?);
        }
        Ok(acc)
    }

    fn factor<R: AbelRing>(&mut self) -> Result<R> {
        if self.eat(b'-') {
            return Ok(self.factor::<R>()?.negated());
        }
        if self.eat(b'+') {
            return self.factor::<R>();
        }
        let b = self.base::<R>()?;
        if self.eat(b'^') {
            let at = self.pos;
            let e = self
                .uint()
                .ok_or_else(|| Error::parse(at, "expected a non-negative integer exponent"))?;
            let e = e
                .to_usize()
                .filter(|&e| e <= 4096)
                .ok_or_else(|| Error::parse(at, "exponent too large"))?;
            let mut out = R::one();
            for _ in 0..e {
                out = out.times(&b);
            }
            return Ok(out);
        }
        Ok(b)
    }

    fn base<R: AbelRing>(&mut self) -> Result<R> {
        let ring = R::TAG.name();
        match self.peek() {
            None => Err(Error::parse(self.pos, "unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr::<R>()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.uint().expect("digit present");
                let mut q = Rational::from_bigint(num);
                if self.eat(b'/') {
                    let at = self.pos;
                    let den = self
                        .uint()
                        .ok_or_else(|| Error::parse(at, "expected a denominator"))?;
                    if den.is_zero() {
                        return Err(Error::parse(at, "zero denominator"));
                    }
                    q = q / Rational::from_bigint(den);
                }
                Ok(R::constant(R::Scalar::from_rational(&q)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let (at, name) = self.ident().expect("letter present");
                match name.as_str() {
                    "i" => R::atom_i().ok_or_else(|| mismatch(at, "i", ring)),
                    "t" => R::atom_t().ok_or_else(|| mismatch(at, "t", ring)),
                    "cos" | "sin" => {
                        let n = self.harmonic_argument(at)?;
                        R::atom_harmonic(name == "cos", n).ok_or_else(|| mismatch(at, &name, ring))
                    }
                    _ => Err(Error::parse(at, format!("unknown identifier '{name}'"))),
                }
            }
            Some(c) => Err(Error::parse(
                self.pos,
                format!("unexpected '{}'", c as char),
            )),
        }
    }

    /// `'(' uint? '*'? 't' ')'`, returning the harmonic index.
    fn harmonic_argument(&mut self, at: usize) -> Result<usize> {
        self.expect(b'(')?;
        let n = match self.uint() {
            Some(n) => {
                if self.peek() == Some(b'/') || self.peek() == Some(b'.') {
                    return Err(Error::parse(self.pos, "non-integer harmonic index"));
                }
                n.to_usize()
                    .filter(|&n| n <= 4096)
                    .ok_or_else(|| Error::parse(at, "harmonic index too large"))?
            }
            None => 1,
        };
        self.eat(b'*');
        match self.ident() {
            Some((_, v)) if v == "t" => {}
            Some((p, v)) => return Err(Error::parse(p, format!("expected 't', found '{v}'"))),
            None => return Err(Error::parse(self.pos, "expected 't' in harmonic argument")),
        }
        self.expect(b')')?;
        Ok(n)
    }
}
