//! Text formats for rings, polynomials and ideals.
//!
//! Ring: `name:weight` pairs separated by commas, e.g. `x:2,y:4,z:5`.
//! Variables are grouped by weight and sorted by increasing weight; names
//! keep their relative order inside a group.
//!
//! Ideal: polynomials separated by `;` or `,`, written with `+ - * ^`,
//! parentheses, and integer or rational (`3/2`) coefficients.

use std::fmt;

use num_bigint::BigInt;
use wgr_core::{Coeff, Ideal, Polynomial, RingDescriptor};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the parsed text.
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at offset {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { pos, msg: msg.into() })
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Pieces of `text` split at any of `seps`, with their offsets, trimmed.
fn pieces<'a>(text: &'a str, seps: &[char]) -> Vec<(usize, &'a str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in text.char_indices() {
        if seps.contains(&c) {
            out.push((start, &text[start..i]));
            start = i + c.len_utf8();
        }
    }
    out.push((start, &text[start..]));
    out.into_iter()
        .map(|(off, s)| (off + (s.len() - s.trim_start().len()), s.trim()))
        .collect()
}

pub fn parse_ring(spec: &str) -> Result<RingDescriptor, ParseError> {
    let mut vars: Vec<(String, u64)> = Vec::new();
    for (off, piece) in pieces(spec, &[',']) {
        let Some((name, weight)) = piece.split_once(':') else {
            return err(off, format!("expected `name:weight`, found `{piece}`"));
        };
        let name = name.trim();
        if !is_name(name) {
            return err(off, format!("invalid variable name `{name}`"));
        }
        if vars.iter().any(|(n, _)| n == name) {
            return err(off, format!("variable `{name}` declared twice"));
        }
        let weight: u64 = match weight.trim().parse() {
            Ok(w) if w > 0 => w,
            _ => return err(off, format!("weight of `{name}` must be a positive integer")),
        };
        vars.push((name.to_string(), weight));
    }
    vars.sort_by_key(|v| v.1);
    let mut groups: Vec<(u64, usize)> = Vec::new();
    for (_, w) in &vars {
        match groups.last_mut() {
            Some(g) if g.0 == *w => g.1 += 1,
            _ => groups.push((*w, 1)),
        }
    }
    let names = vars.into_iter().map(|v| v.0).collect();
    RingDescriptor::with_names(&groups, names).or_else(|e| err(0, e.to_string()))
}

/// The canonical spec of a ring, accepted by [`parse_ring`].
pub fn print_ring(ring: &RingDescriptor) -> String {
    ring.names()
        .iter()
        .zip(ring.weights())
        .map(|(n, w)| format!("{n}:{w}"))
        .collect::<Vec<_>>()
        .join(",")
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Op(char),
}

fn tokenize(text: &str, base: usize) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((base + start, Tok::Int(text[start..i].parse().unwrap())));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((base + start, Tok::Name(text[start..i].to_string())));
        } else if "+-*^/()".contains(c) {
            out.push((base + i, Tok::Op(c)));
            i += 1;
        } else {
            return err(base + i, format!("unexpected character `{c}`"));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a RingDescriptor,
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<BigInt, ParseError> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                let n = n.clone();
                self.at += 1;
                Ok(n)
            }
            _ => err(self.pos(), "expected an integer"),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let n = self.ring.nvars();
        let mut acc = Polynomial::zero(n);
        let mut sign = if self.eat('-') {
            -1
        } else {
            self.eat('+');
            1
        };
        loop {
            let t = self.term()?;
            acc = if sign > 0 { acc.add(&t) } else { acc.sub(&t) };
            if self.eat('+') {
                sign = 1;
            } else if self.eat('-') {
                sign = -1;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.primary()?;
        if self.eat('^') {
            let pos = self.pos();
            let e = self.int()?;
            let e: u32 = e.try_into().or_else(|_| err(pos, "exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Polynomial, ParseError> {
        let n = self.ring.nvars();
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(num)) => {
                self.at += 1;
                let mut c = Coeff::from_integer(num);
                if self.eat('/') {
                    let pos = self.pos();
                    let den = self.int()?;
                    if den == BigInt::from(0) {
                        return err(pos, "division by zero");
                    }
                    c /= Coeff::from_integer(den);
                }
                Ok(Polynomial::constant(n, c))
            }
            Some(Tok::Name(name)) => {
                self.at += 1;
                match self.ring.names().iter().position(|x| *x == name) {
                    Some(v) => Ok(Polynomial::var(n, v)),
                    None => err(pos, format!("unknown variable `{name}`")),
                }
            }
            Some(Tok::Op('(')) => {
                self.at += 1;
                let p = self.expr()?;
                if !self.eat(')') {
                    return err(self.pos(), "expected `)`");
                }
                Ok(p)
            }
            Some(Tok::Op(c)) => err(pos, format!("unexpected `{c}`")),
            None => err(pos, "unexpected end of expression"),
        }
    }
}

/// Parses one polynomial; `base` is added to reported offsets.
pub fn parse_polynomial(ring: &RingDescriptor, text: &str, base: usize) -> Result<Polynomial, ParseError> {
    let toks = tokenize(text, base)?;
    let mut p = Parser {
        ring,
        toks,
        at: 0,
        end: base + text.len(),
    };
    let poly = p.expr()?;
    if p.at < p.toks.len() {
        return err(p.pos(), "unexpected trailing input");
    }
    Ok(poly)
}

/// Parses generators and checks their homogeneity.
pub fn parse_ideal(ring: &RingDescriptor, spec: &str) -> Result<Ideal, ParseError> {
    let mut gens = Vec::new();
    for (off, piece) in pieces(spec, &[';', ',']) {
        if piece.is_empty() {
            continue;
        }
        let p = parse_polynomial(ring, piece, off)?;
        if let Err(e) = Ideal::new(ring, vec![p.clone()]) {
            return err(off, format!("generator `{piece}`: {e}"));
        }
        gens.push(p);
    }
    Ideal::new(ring, gens).or_else(|e| err(0, e.to_string()))
}

/// Images of variables written `name = expression`, separated by `;`.
/// Variables not mentioned map to themselves.
pub fn parse_images(ring: &RingDescriptor, spec: &str) -> Result<Vec<Polynomial>, ParseError> {
    let n = ring.nvars();
    let mut images: Vec<Polynomial> = (0..n).map(|v| Polynomial::var(n, v)).collect();
    for (off, piece) in pieces(spec, &[';']) {
        if piece.is_empty() {
            continue;
        }
        let Some((name, expr)) = piece.split_once('=') else {
            return err(off, "expected `name = expression`");
        };
        let v = ring
            .names()
            .iter()
            .position(|x| x == name.trim())
            .ok_or_else(|| ParseError {
                pos: off,
                msg: format!("unknown variable `{}`", name.trim()),
            })?;
        images[v] = parse_polynomial(ring, expr, off + name.len() + 1)?;
    }
    Ok(images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use wgr_core::TermOrder;

    #[test]
    fn ring_is_grouped_and_sorted() {
        let r = parse_ring("z:5, x:2,y:4").unwrap();
        assert_eq!(r.weights(), &[2, 4, 5]);
        assert_eq!(r.names(), &["x", "y", "z"]);
        let r = parse_ring("b:3,a:1,c:3").unwrap();
        assert_eq!(r.groups().len(), 2);
        assert_eq!(r.names(), &["a", "b", "c"]);
        assert_eq!(print_ring(&r), "a:1,b:3,c:3");
        assert!(parse_ring("x:0").is_err());
        assert!(parse_ring("x:1,x:2").is_err());
        assert_eq!(parse_ring("x:1,y").unwrap_err().pos, 4);
    }

    #[test]
    fn xy_yz_x5_input() {
        let r = parse_ring("x:2,y:4,z:5").unwrap();
        let i = parse_ideal(&r, "x*y; y*z; x^5").unwrap();
        assert_eq!(i.generators().len(), 3);
        assert!(i.generators().iter().all(|g| g.is_monomial()));
    }

    #[test]
    fn homogeneity_is_checked() {
        let r = parse_ring("x:2,y:3").unwrap();
        assert!(parse_ideal(&r, "x^3+y^2").is_ok());
        let e = parse_ideal(&r, "x+y").unwrap_err();
        assert!(e.msg.contains("[2, 3]") || e.msg.contains("[3, 2]"), "{e}");
    }

    #[test]
    fn syntax_errors_have_positions() {
        let r = parse_ring("x:1,y:1").unwrap();
        assert_eq!(parse_ideal(&r, "x*y; x+").unwrap_err().pos, 7);
        assert_eq!(parse_ideal(&r, "x*w").unwrap_err().pos, 2);
        assert_eq!(parse_ideal(&r, "x $ y").unwrap_err().pos, 2);
        assert!(parse_ideal(&r, "(x+y").is_err());
    }

    #[test]
    fn print_parse_round_trip() {
        let r = parse_ring("x:1,y:1,z:2").unwrap();
        let o = TermOrder::default_for(&r);
        for text in ["3/2*x^2 - y*x + z", "-x^4 + 7*z^2", "(x - y)^3*x", "x*y - 1/3*z"] {
            let p = parse_polynomial(&r, text, 0).unwrap();
            let printed = p.display_with(r.names(), &o).to_string();
            let again = parse_polynomial(&r, &printed, 0).unwrap();
            assert_eq!(p, again);
            assert_eq!(printed, again.display_with(r.names(), &o).to_string());
        }
    }

    #[test]
    fn images() {
        let r = parse_ring("x:1,y:2").unwrap();
        let im = parse_images(&r, "y = 3*y + x^2").unwrap();
        assert_eq!(im[0], Polynomial::var(2, 0));
        assert_eq!(im[1].len(), 2);
    }
}
