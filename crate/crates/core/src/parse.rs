//! Parsers for the textual interchange forms: exact scalars
//! (`"c0 + c1*z + c2*z^2 + c3*z^3"` with `i`, `w` for omega and `r` for rho
//! as sugar), triangle triples, operator literals and trigonometric
//! polynomials.
//!
//! Decimal literals are converted exactly (`0.7` reads as `7/10`), so every
//! accepted input denotes an element of Q(zeta_12); the double-precision
//! forms are downcasts of the exact parse.

use num::complex::Complex64;
use num::traits::One;

use crate::error::Error;
use crate::median::MedianLabel;
use crate::orbit::TrigPoly;
use crate::scalar::{Cyc12, Rational, Scalar};
use crate::triangle::TriangleTriple;
use crate::{ApproxTriple, ExactTriple};

/// Parse an exact scalar expression.
pub fn parse_exact(s: &str) -> Result<Cyc12, Error> {
    let mut cur = Cursor::new(s);
    let v = cur.expr()?;
    cur.expect_end()?;
    Ok(v)
}

/// Parse a scalar expression and downcast to double precision.
pub fn parse_complex(s: &str) -> Result<Complex64, Error> {
    Ok(parse_exact(s)?.to_complex())
}

/// Parse a rational number (an exact expression with no imaginary part).
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let v = parse_exact(s)?;
    v.as_rational()
        .cloned()
        .ok_or_else(|| Error::parse(0, format!("expected a rational value, got {v}")))
}

/// Parse `"(a, b, c)"` into an exact triple.
pub fn parse_exact_triple(s: &str) -> Result<ExactTriple, Error> {
    let parts = split_triple(s)?;
    Ok(TriangleTriple::new(
        parse_exact(parts[0])?,
        parse_exact(parts[1])?,
        parse_exact(parts[2])?,
    ))
}

/// Parse a triple in either the `"(a, b, c)"` expression form or the JSON
/// form `[[re, im], [re, im], [re, im]]`.
pub fn parse_approx_triple(s: &str) -> Result<ApproxTriple, Error> {
    let t = s.trim();
    if t.starts_with('[') {
        return parse_json_triple(t);
    }
    let parts = split_triple(t)?;
    Ok(TriangleTriple::new(
        parse_complex(parts[0])?,
        parse_complex(parts[1])?,
        parse_complex(parts[2])?,
    ))
}

fn split_triple(s: &str) -> Result<[&str; 3], Error> {
    let t = s.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::parse(0, "expected a parenthesized triple \"(a, b, c)\""))?;
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (idx, ch) in inner.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::parse(idx, "unbalanced parentheses"))?
            }
            ',' if depth == 0 => {
                parts.push(&inner[start..idx]);
                start = idx + 1;
            }
            _ => {}
        }
    }
    parts.push(&inner[start..]);
    if parts.len() != 3 {
        return Err(Error::parse(
            0,
            format!("expected 3 components, got {}", parts.len()),
        ));
    }
    Ok([parts[0], parts[1], parts[2]])
}

fn parse_json_triple(s: &str) -> Result<ApproxTriple, Error> {
    // [[re,im],[re,im],[re,im]] with plain numeric literals.
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::parse(0, "expected a JSON array"))?;
    let mut verts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    let bytes: Vec<(usize, char)> = inner.char_indices().collect();
    for &(idx, ch) in &bytes {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                verts.push(inner[start..idx].trim());
                start = idx + 1;
            }
            _ => {}
        }
    }
    verts.push(inner[start..].trim());
    if verts.len() != 3 {
        return Err(Error::parse(
            0,
            format!("expected 3 vertices, got {}", verts.len()),
        ));
    }
    let mut out = Vec::new();
    for v in verts {
        let pair = v
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::parse(0, "expected [re, im] pairs"))?;
        let comps: Vec<&str> = pair.split(',').collect();
        if comps.len() != 2 {
            return Err(Error::parse(0, "expected [re, im] pairs"));
        }
        let re: f64 = comps[0]
            .trim()
            .parse()
            .map_err(|_| Error::parse(0, format!("bad number {:?}", comps[0].trim())))?;
        let im: f64 = comps[1]
            .trim()
            .parse()
            .map_err(|_| Error::parse(0, format!("bad number {:?}", comps[1].trim())))?;
        out.push(Complex64::new(re, im));
    }
    Ok(TriangleTriple::new(out[0], out[1], out[2]))
}

/// Operator literal: `S[p=..,q=..]`, `S[eta=..,eta'=..]`, `S[a=..,b=..,g=..]`
/// or `M[wx/yz][<params>]`.
#[derive(Debug, Clone, PartialEq)]
pub enum OpLiteral {
    Cevian(OpParams),
    Median(MedianLabel, OpParams),
}

#[derive(Debug, Clone, PartialEq)]
pub enum OpParams {
    PQ(Cyc12, Cyc12),
    Eta(Cyc12, Cyc12),
    Coeffs(Cyc12, Cyc12, Cyc12),
}

pub fn parse_op_literal(s: &str) -> Result<OpLiteral, Error> {
    let t = s.trim();
    if let Some(rest) = t.strip_prefix('S') {
        let inner = bracketed(rest.trim(), 0)?;
        return Ok(OpLiteral::Cevian(parse_params(inner)?));
    }
    if let Some(rest) = t.strip_prefix('M') {
        let rest = rest.trim();
        let label_part = bracketed(rest, 0)?;
        let label = parse_label(label_part)?;
        let after = &rest[label_part.len() + 2..];
        let inner = bracketed(after.trim(), 0)?;
        return Ok(OpLiteral::Median(label, parse_params(inner)?));
    }
    Err(Error::parse(
        0,
        "operator literal must start with 'S' or 'M'",
    ))
}

fn bracketed(s: &str, pos: usize) -> Result<&str, Error> {
    let inner = s.strip_prefix('[').ok_or_else(|| Error::parse(pos, "expected '['"))?;
    let mut depth = 1usize;
    for (idx, ch) in inner.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => {
                depth -= 1;
                if depth == 0 {
                    return Ok(&inner[..idx]);
                }
            }
            _ => {}
        }
    }
    Err(Error::parse(pos, "unterminated '['"))
}

fn parse_params(s: &str) -> Result<OpParams, Error> {
    let mut pairs = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (idx, ch) in s.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                pairs.push(&s[start..idx]);
                start = idx + 1;
            }
            _ => {}
        }
    }
    pairs.push(&s[start..]);
    let mut kv = Vec::new();
    for pair in pairs {
        let (key, value) = pair
            .split_once('=')
            .ok_or_else(|| Error::parse(0, format!("expected key=value, got {pair:?}")))?;
        kv.push((key.trim(), parse_exact(value.trim())?));
    }
    let keys: Vec<&str> = kv.iter().map(|(k, _)| *k).collect();
    match keys.as_slice() {
        ["p", "q"] => Ok(OpParams::PQ(kv[0].1.clone(), kv[1].1.clone())),
        ["eta", "eta'"] => Ok(OpParams::Eta(kv[0].1.clone(), kv[1].1.clone())),
        ["a", "b", "g"] => Ok(OpParams::Coeffs(
            kv[0].1.clone(),
            kv[1].1.clone(),
            kv[2].1.clone(),
        )),
        _ => Err(Error::parse(
            0,
            format!("expected keys p,q or eta,eta' or a,b,g; got {keys:?}"),
        )),
    }
}

/// Median label in the `"wx/yz"` form.
pub fn parse_label(s: &str) -> Result<MedianLabel, Error> {
    MedianLabel::parse(s)
}

/// Trigonometric polynomial as comma-separated `frequency:coefficient`
/// entries, e.g. `"1:-2,-2:1"` for `-2 e^{2 pi i t} + e^{-4 pi i t}`.
pub fn parse_trig_poly(s: &str) -> Result<TrigPoly, Error> {
    let mut poly = TrigPoly::new();
    for entry in s.split(',') {
        let (freq, coeff) = entry
            .split_once(':')
            .ok_or_else(|| Error::parse(0, format!("expected freq:coeff, got {entry:?}")))?;
        let k: i64 = freq
            .trim()
            .parse()
            .map_err(|_| Error::parse(0, format!("bad frequency {:?}", freq.trim())))?;
        poly.insert(k, parse_complex(coeff.trim())?);
    }
    Ok(poly)
}

struct Cursor<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor {
            src,
            bytes: src.as_bytes(),
            pos: 0,
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

    fn expect_end(&mut self) -> Result<(), Error> {
        if let Some(c) = self.peek() {
            return Err(Error::parse(
                self.pos,
                format!("unexpected character {:?}", c as char),
            ));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Cyc12, Error> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                b'-' => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Cyc12, Error> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc * self.factor()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let pos = self.pos;
                    let rhs = self.factor()?;
                    acc = acc
                        .try_div(&rhs)
                        .map_err(|_| Error::parse(pos, "division by zero"))?;
                }
                // Juxtaposition: "4i", "2w", "3z^2", "2(1+i)".
                Some(c) if c.is_ascii_alphabetic() || c == b'(' => {
                    acc = acc * self.factor()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Cyc12, Error> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.factor()
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> Result<Cyc12, Error> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let exp = self.uint()?;
            if exp > 24 {
                return Err(Error::parse(self.pos, "exponent too large"));
            }
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Cyc12, Error> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(Error::parse(self.pos, "expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => self.number(),
            Some(b'i') => {
                self.pos += 1;
                Ok(Cyc12::i())
            }
            Some(b'w') => {
                self.pos += 1;
                Ok(Cyc12::omega())
            }
            Some(b'r') => {
                self.pos += 1;
                Ok(Cyc12::rho())
            }
            Some(b'z') => {
                self.pos += 1;
                Ok(Cyc12::zeta())
            }
            Some(c) => Err(Error::parse(
                self.pos,
                format!("unexpected character {:?}", c as char),
            )),
            None => Err(Error::parse(self.pos, "unexpected end of input")),
        }
    }

    fn uint(&mut self) -> Result<u32, Error> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected an integer"));
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| Error::parse(start, "integer out of range"))
    }

    fn number(&mut self) -> Result<Cyc12, Error> {
        self.skip_ws();
        let start = self.pos;
        let mut int_digits = String::new();
        let mut frac_digits = String::new();
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            int_digits.push(self.bytes[self.pos] as char);
            self.pos += 1;
        }
        if self.bytes.get(self.pos) == Some(&b'.') {
            self.pos += 1;
            while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                frac_digits.push(self.bytes[self.pos] as char);
                self.pos += 1;
            }
        }
        if int_digits.is_empty() && frac_digits.is_empty() {
            return Err(Error::parse(start, "expected a number"));
        }
        let digits = format!("{int_digits}{frac_digits}");
        let numer: num::BigInt = digits
            .parse()
            .map_err(|_| Error::parse(start, "bad number"))?;
        let mut denom = num::BigInt::one();
        for _ in 0..frac_digits.len() {
            denom *= 10;
        }
        Ok(Cyc12::from_rational(&Rational::new(numer, denom)))
    }
}
