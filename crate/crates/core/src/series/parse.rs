//! Plain-text input: integer-coefficient polynomials and quotients in `u`,
//! `t` (or a single variable), and 2-forms `P/Q * du^dt`.

use std::collections::BTreeMap;

use crate::algebra::{GaloisField, Poly};
use crate::error::{Error, Result};

use super::iterated::Rat2;
use super::poly2::{self, Poly2};
use super::ratfn::RatFn;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Var(String),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let b = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let s = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            let v = src[s..i].parse().map_err(|_| Error::Parse { pos: s, msg: "integer too large".into() })?;
            out.push((s, Tok::Num(v)));
        } else if c.is_ascii_alphabetic() {
            let s = i;
            while i < b.len() && (b[i] as char).is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((s, Tok::Var(src[s..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(Error::Parse { pos: i, msg: format!("unexpected character '{c}'") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    field: &'a GaloisField,
    vars: &'a [&'a str],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.pos(), msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Rat2> {
        let f = self.field;
        let mut acc = if self.eat('-') { neg(f, &self.term()?) } else { self.term()? };
        loop {
            if self.eat('+') {
                acc = acc.add(f, &self.term()?);
            } else if self.eat('-') {
                acc = acc.add(f, &neg(f, &self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Rat2> {
        let f = self.field;
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(f, &self.power()?);
            } else if self.eat('/') {
                let pos = self.pos();
                let d = self.power()?;
                if d.num.is_zero() {
                    return Err(Error::Parse { pos, msg: "division by zero".into() });
                }
                acc = acc.mul(f, &Rat2 { num: d.den, den: d.num });
            } else if matches!(self.peek(), Some(Tok::Op('(')) | Some(Tok::Var(_))) {
                // juxtaposition such as 2t or u(t+1)
                acc = acc.mul(f, &self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Rat2> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(e)) => {
                    self.at += 1;
                    let e = u32::try_from(e).map_err(|_| Error::Parse { pos: self.pos(), msg: "exponent too large".into() })?;
                    let f = self.field;
                    Ok(Rat2 { num: poly2::pow(f, &base.num, e), den: poly2::pow(f, &base.den, e) })
                }
                _ => self.err("expected a non-negative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Rat2> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                Ok(Rat2::from_poly(Poly2::constant(self.field.from_int(n))))
            }
            Some(Tok::Var(v)) => {
                let idx = self.vars.iter().position(|&x| x == v);
                match idx {
                    Some(0) => {
                        self.at += 1;
                        Ok(Rat2::from_poly(Poly2::u()))
                    }
                    Some(_) => {
                        self.at += 1;
                        Ok(Rat2::from_poly(Poly2::t()))
                    }
                    None => self.err(&format!("unknown variable '{v}'")),
                }
            }
            Some(Tok::Op('(')) => {
                self.at += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            _ => self.err("expected a number, variable or '('"),
        }
    }
}

fn neg(f: &GaloisField, r: &Rat2) -> Rat2 {
    Rat2 { num: poly2::neg(f, &r.num), den: r.den.clone() }
}

fn parse_with(field: &GaloisField, src: &str, vars: &[&str]) -> Result<Rat2> {
    let toks = lex(src)?;
    let mut p = Parser { toks, at: 0, end: src.len(), field, vars };
    let r = p.expr()?;
    if p.at != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(r)
}

/// A rational function of `u` and `t`, reduced into `F_q`.
pub fn parse_rat2(field: &GaloisField, src: &str) -> Result<Rat2> {
    parse_with(field, src, &["u", "t"])
}

/// A polynomial in `u` and `t`.
pub fn parse_poly2(field: &GaloisField, src: &str) -> Result<Poly2> {
    let r = parse_rat2(field, src)?;
    poly2::div_exact(field, &r.num, &r.den).ok_or(Error::Parse { pos: 0, msg: "not a polynomial".into() })
}

/// A rational function of the single variable `var`.
pub fn parse_ratfn(field: &GaloisField, src: &str, var: &str) -> Result<RatFn> {
    let r = parse_with(field, src, &[var])?;
    let to_poly = |p: &Poly2| -> Poly { p.row(0) };
    RatFn::new(field, to_poly(&r.num), to_poly(&r.den)).map_err(|_| Error::Parse { pos: 0, msg: "zero denominator".into() })
}

/// A polynomial in the single variable `var`.
pub fn parse_poly(field: &GaloisField, src: &str, var: &str) -> Result<Poly> {
    let r = parse_ratfn(field, src, var)?;
    if r.den().degree() != 0 {
        return Err(Error::Parse { pos: 0, msg: "not a polynomial".into() });
    }
    Ok(r.num().clone())
}

/// A 2-form `g du^dt`, returned as the coefficient `g`. Writing `dt^du`
/// negates the coefficient.
pub fn parse_form2(field: &GaloisField, src: &str) -> Result<Rat2> {
    let s = src.trim();
    let (body, sign) = if let Some(b) = s.strip_suffix("du^dt") {
        (b, false)
    } else if let Some(b) = s.strip_suffix("dt^du") {
        (b, true)
    } else {
        return Err(Error::Parse { pos: s.len(), msg: "expected a trailing du^dt".into() });
    };
    let body = body.trim_end();
    let body = match body.strip_suffix('*') {
        Some(b) => b,
        None if body.is_empty() => "1",
        None => return Err(Error::Parse { pos: body.len(), msg: "expected '*' before du^dt".into() }),
    };
    let r = parse_rat2(field, body)?;
    Ok(if sign { neg(field, &r) } else { r })
}

/// Integer polynomial in the named variables: exponent vector to coefficient.
pub type IntPoly = BTreeMap<Vec<u32>, i64>;

fn ip_add(a: &IntPoly, b: &IntPoly, sign: i64) -> IntPoly {
    let mut out = a.clone();
    for (k, v) in b {
        *out.entry(k.clone()).or_insert(0) += sign * v;
    }
    out.retain(|_, v| *v != 0);
    out
}

fn ip_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut out = IntPoly::new();
    for (ka, va) in a {
        for (kb, vb) in b {
            let k: Vec<u32> = ka.iter().zip(kb).map(|(x, y)| x + y).collect();
            *out.entry(k).or_insert(0) += va * vb;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

struct IntParser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    vars: &'a [&'a str],
}

impl IntParser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.toks.get(self.at).map_or(self.end, |t| t.0), msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn constant(&self, c: i64) -> IntPoly {
        let mut m = IntPoly::new();
        if c != 0 {
            m.insert(vec![0; self.vars.len()], c);
        }
        m
    }

    fn expr(&mut self) -> Result<IntPoly> {
        let mut acc = if self.eat('-') { ip_add(&IntPoly::new(), &self.term()?, -1) } else { self.term()? };
        loop {
            if self.eat('+') {
                acc = ip_add(&acc, &self.term()?, 1);
            } else if self.eat('-') {
                acc = ip_add(&acc, &self.term()?, -1);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<IntPoly> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') || matches!(self.peek(), Some(Tok::Op('(')) | Some(Tok::Var(_))) {
                acc = ip_mul(&acc, &self.power()?);
            } else if self.peek() == Some(&Tok::Op('/')) {
                return self.err("division is not allowed here");
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<IntPoly> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(e)) if e <= 64 => {
                    self.at += 1;
                    let mut out = self.constant(1);
                    for _ in 0..e {
                        out = ip_mul(&out, &base);
                    }
                    Ok(out)
                }
                _ => self.err("expected a small non-negative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<IntPoly> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                Ok(self.constant(n))
            }
            Some(Tok::Var(v)) => match self.vars.iter().position(|&x| x == v) {
                Some(i) => {
                    self.at += 1;
                    let mut e = vec![0; self.vars.len()];
                    e[i] = 1;
                    Ok(IntPoly::from([(e, 1)]))
                }
                None => self.err(&format!("unknown variable '{v}'")),
            },
            Some(Tok::Op('(')) => {
                self.at += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            _ => self.err("expected a number, variable or '('"),
        }
    }
}

/// An integer-coefficient polynomial in `vars`, kept over `Z`.
pub fn parse_int_poly(src: &str, vars: &[&str]) -> Result<IntPoly> {
    let toks = lex(src)?;
    let mut p = IntParser { toks, at: 0, end: src.len(), vars };
    let r = p.expr()?;
    if p.at != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(r)
}
