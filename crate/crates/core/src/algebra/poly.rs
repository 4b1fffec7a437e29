//! Dense univariate polynomials over a [`GaloisField`].

use std::fmt;

use crate::error::{Error, Result};

use super::field::{prime_factors, FqElem, GaloisField};

/// Coefficients lowest degree first; no trailing zeros (the zero polynomial is empty).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly(Vec<FqElem>);

impl Poly {
    pub fn new(mut c: Vec<FqElem>) -> Poly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly(c)
    }

    pub fn from_u32s(c: &[u32]) -> Poly {
        Poly::new(c.iter().map(|&x| FqElem(x)).collect())
    }

    pub fn zero() -> Poly {
        Poly(Vec::new())
    }

    pub fn one() -> Poly {
        Poly(vec![FqElem::ONE])
    }

    pub fn constant(c: FqElem) -> Poly {
        Poly::new(vec![c])
    }

    /// The monomial `c * x^n`.
    pub fn monomial(c: FqElem, n: usize) -> Poly {
        let mut v = vec![FqElem::ZERO; n + 1];
        v[n] = c;
        Poly::new(v)
    }

    /// `x - a`.
    pub fn linear(f: &GaloisField, a: FqElem) -> Poly {
        Poly::new(vec![f.neg(a), FqElem::ONE])
    }

    pub fn x() -> Poly {
        Poly(vec![FqElem::ZERO, FqElem::ONE])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `-1` for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> FqElem {
        self.0.get(i).copied().unwrap_or(FqElem::ZERO)
    }

    pub fn lead(&self) -> FqElem {
        self.0.last().copied().unwrap_or(FqElem::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == FqElem::ONE
    }

    /// Number of trailing zero coefficients, i.e. the order of vanishing at `x = 0`.
    pub fn low_order(&self) -> usize {
        self.0.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn shift(&self, n: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![FqElem::ZERO; n];
        v.extend_from_slice(&self.0);
        Poly(v)
    }

    /// Coefficients reversed relative to degree `d` (`x^d p(1/x)`).
    pub fn reversed(&self, d: usize) -> Poly {
        let mut v = vec![FqElem::ZERO; d + 1];
        for (i, &c) in self.0.iter().enumerate() {
            v[d - i] = c;
        }
        Poly::new(v)
    }

    /// Drops all coefficients of degree `>= n`.
    pub fn truncate(&self, n: usize) -> Poly {
        Poly::new(self.0.iter().take(n).copied().collect())
    }

    pub fn display<'a>(&'a self, var: &'a str) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, var }
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Poly,
    var: &'a str,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.poly.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (i, c.0) {
                (0, v) => write!(f, "{v}")?,
                (1, 1) => write!(f, "{}", self.var)?,
                (1, v) => write!(f, "{v}*{}", self.var)?,
                (n, 1) => write!(f, "{}^{n}", self.var)?,
                (n, v) => write!(f, "{v}*{}^{n}", self.var)?,
            }
        }
        Ok(())
    }
}

pub fn add(f: &GaloisField, a: &Poly, b: &Poly) -> Poly {
    let n = a.0.len().max(b.0.len());
    Poly::new((0..n).map(|i| f.add(a.coeff(i), b.coeff(i))).collect())
}

pub fn neg(f: &GaloisField, a: &Poly) -> Poly {
    Poly(a.0.iter().map(|&c| f.neg(c)).collect())
}

pub fn sub(f: &GaloisField, a: &Poly, b: &Poly) -> Poly {
    let n = a.0.len().max(b.0.len());
    Poly::new((0..n).map(|i| f.sub(a.coeff(i), b.coeff(i))).collect())
}

pub fn scale(f: &GaloisField, a: &Poly, c: FqElem) -> Poly {
    Poly::new(a.0.iter().map(|&x| f.mul(x, c)).collect())
}

pub fn mul(f: &GaloisField, a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let mut out = vec![FqElem::ZERO; a.0.len() + b.0.len() - 1];
    for (i, &x) in a.0.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.0.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    Poly::new(out)
}

pub fn pow(f: &GaloisField, a: &Poly, e: u32) -> Poly {
    let mut acc = Poly::one();
    for _ in 0..e {
        acc = mul(f, &acc, a);
    }
    acc
}

pub fn divrem(f: &GaloisField, a: &Poly, b: &Poly) -> Result<(Poly, Poly)> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let inv_lead = f.inv(b.lead())?;
    let mut rem = a.0.clone();
    let db = b.0.len() - 1;
    if rem.len() <= db {
        return Ok((Poly::zero(), a.clone()));
    }
    let mut quot = vec![FqElem::ZERO; rem.len() - db];
    for i in (db..rem.len()).rev() {
        let c = f.mul(rem[i], inv_lead);
        if c.is_zero() {
            continue;
        }
        quot[i - db] = c;
        for (j, &bj) in b.0.iter().enumerate() {
            let idx = i - db + j;
            rem[idx] = f.sub(rem[idx], f.mul(c, bj));
        }
    }
    Ok((Poly::new(quot), Poly::new(rem)))
}

pub fn rem(f: &GaloisField, a: &Poly, b: &Poly) -> Result<Poly> {
    Ok(divrem(f, a, b)?.1)
}

/// Exact division; errors if `b` does not divide `a`.
pub fn div_exact(f: &GaloisField, a: &Poly, b: &Poly) -> Result<Poly> {
    let (q, r) = divrem(f, a, b)?;
    if !r.is_zero() {
        return Err(Error::contract("inexact polynomial division"));
    }
    Ok(q)
}

pub fn monic(f: &GaloisField, a: &Poly) -> Poly {
    if a.is_zero() {
        return Poly::zero();
    }
    let inv = f.inv(a.lead()).expect("nonzero lead");
    scale(f, a, inv)
}

pub fn gcd(f: &GaloisField, a: &Poly, b: &Poly) -> Poly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let r = rem(f, &x, &y).expect("nonzero divisor");
        x = y;
        y = r;
    }
    monic(f, &x)
}

/// Returns `(g, s, t)` with `s*a + t*b = g = gcd(a, b)` monic.
pub fn ext_gcd(f: &GaloisField, a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (Poly::one(), Poly::zero());
    let (mut t0, mut t1) = (Poly::zero(), Poly::one());
    while !r1.is_zero() {
        let (q, r) = divrem(f, &r0, &r1).expect("nonzero divisor");
        let s = sub(f, &s0, &mul(f, &q, &s1));
        let t = sub(f, &t0, &mul(f, &q, &t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    if r0.is_zero() {
        return (r0, s0, t0);
    }
    let inv = f.inv(r0.lead()).expect("nonzero lead");
    (scale(f, &r0, inv), scale(f, &s0, inv), scale(f, &t0, inv))
}

/// Inverse of `a` modulo `m`.
pub fn inv_mod(f: &GaloisField, a: &Poly, m: &Poly) -> Result<Poly> {
    let (g, s, _) = ext_gcd(f, a, m);
    if g != Poly::one() {
        return Err(Error::DivisionByZero);
    }
    rem(f, &s, m)
}

pub fn mulmod(f: &GaloisField, a: &Poly, b: &Poly, m: &Poly) -> Poly {
    rem(f, &mul(f, a, b), m).expect("nonzero modulus")
}

pub fn powmod(f: &GaloisField, a: &Poly, mut e: u64, m: &Poly) -> Poly {
    let mut acc = rem(f, &Poly::one(), m).expect("nonzero modulus");
    let mut b = rem(f, a, m).expect("nonzero modulus");
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(f, &acc, &b, m);
        }
        b = mulmod(f, &b, &b, m);
        e >>= 1;
    }
    acc
}

pub fn eval(f: &GaloisField, a: &Poly, x: FqElem) -> FqElem {
    a.0.iter().rev().fold(FqElem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
}

pub fn derivative(f: &GaloisField, a: &Poly) -> Poly {
    Poly::new(
        a.0.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(c, f.from_int(i as i64)))
            .collect(),
    )
}

/// `a(b(x))`.
pub fn compose(f: &GaloisField, a: &Poly, b: &Poly) -> Poly {
    a.0.iter()
        .rev()
        .fold(Poly::zero(), |acc, &c| add(f, &mul(f, &acc, b), &Poly::constant(c)))
}

/// Rabin's irreducibility test over `F_q`.
pub fn is_irreducible(f: &GaloisField, a: &Poly) -> bool {
    let n = a.degree();
    if n < 1 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let n = n as u64;
    let q = f.size() as u64;
    let x = Poly::x();
    // x^(q^i) mod a for i = 0..=n
    let mut frob = vec![rem(f, &x, a).expect("nonzero")];
    for _ in 0..n {
        let last = frob.last().unwrap();
        frob.push(powmod(f, last, q, a));
    }
    if frob[n as usize] != frob[0] {
        return false;
    }
    for r in prime_factors(n) {
        let h = sub(f, &frob[(n / r) as usize], &x);
        if gcd(f, &h, a).degree() != 0 {
            return false;
        }
    }
    true
}

/// All monic polynomials of degree exactly `d`, in increasing packed order.
pub fn monic_of_degree(f: &GaloisField, d: usize) -> impl Iterator<Item = Poly> + '_ {
    let q = f.size() as u64;
    let count = q.pow(d as u32);
    (0..count).map(move |v| {
        let mut c = Vec::with_capacity(d + 1);
        let mut rest = v;
        for _ in 0..d {
            c.push(FqElem((rest % q) as u32));
            rest /= q;
        }
        c.push(FqElem::ONE);
        Poly::new(c)
    })
}

/// Monic irreducibles of degree `d`.
pub fn irreducibles_of_degree(f: &GaloisField, d: usize) -> Vec<Poly> {
    monic_of_degree(f, d).filter(|p| is_irreducible(f, p)).collect()
}

/// Factors `a` into monic irreducibles with multiplicities (trial division).
///
/// Returns the leading coefficient separately. Intended for the small
/// degrees that appear in residue computations.
pub fn factor(f: &GaloisField, a: &Poly) -> Result<(FqElem, Vec<(Poly, u32)>)> {
    if a.is_zero() {
        return Err(Error::contract("cannot factor the zero polynomial"));
    }
    let lead = a.lead();
    let mut rest = monic(f, a);
    let mut out = Vec::new();
    let mut d = 1;
    while rest.degree() >= 1 {
        if 2 * d > rest.degree() as usize {
            out.push((rest.clone(), 1));
            break;
        }
        for cand in monic_of_degree(f, d) {
            if rest.degree() < d as isize {
                break;
            }
            let (qt, r) = divrem(f, &rest, &cand)?;
            if !r.is_zero() || !is_irreducible(f, &cand) {
                continue;
            }
            let mut mult = 1;
            rest = qt;
            loop {
                let (qt, r) = divrem(f, &rest, &cand)?;
                if !r.is_zero() {
                    break;
                }
                mult += 1;
                rest = qt;
            }
            out.push((cand, mult));
        }
        d += 1;
    }
    // merge in case the final cofactor repeats an earlier factor
    out.sort();
    let mut merged: Vec<(Poly, u32)> = Vec::new();
    for (p, m) in out {
        match merged.last_mut() {
            Some((lp, lm)) if *lp == p => *lm += m,
            _ => merged.push((p, m)),
        }
    }
    Ok((lead, merged))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::make_field;

    #[test]
    fn irreducible_quadratics_over_f2() {
        let f = make_field(2, 1, None).unwrap();
        let irr = irreducibles_of_degree(&f, 2);
        assert_eq!(irr, vec![Poly::from_u32s(&[1, 1, 1])]);
        assert_eq!(irreducibles_of_degree(&f, 1).len(), 2);
        assert_eq!(irreducibles_of_degree(&f, 3).len(), 2);
        assert_eq!(irreducibles_of_degree(&f, 4).len(), 3);
    }

    #[test]
    fn factor_round_trip() {
        let f = make_field(3, 1, None).unwrap();
        let a = Poly::from_u32s(&[1, 0, 1]); // x^2+1 irreducible over F_3
        let b = Poly::from_u32s(&[2, 1]); // x - 1
        let prod = mul(&f, &mul(&f, &a, &b), &mul(&f, &b, &Poly::from_u32s(&[0, 2])));
        let (lead, fs) = factor(&f, &prod).unwrap();
        assert_eq!(lead, FqElem(2));
        let mut back = Poly::constant(lead);
        for (p, m) in &fs {
            assert!(is_irreducible(&f, p));
            back = mul(&f, &back, &pow(&f, p, *m));
        }
        assert_eq!(back, prod);
        assert_eq!(fs.len(), 3);
    }

    #[test]
    fn ext_gcd_bezout() {
        let f = make_field(5, 1, None).unwrap();
        let a = Poly::from_u32s(&[1, 2, 3, 1]);
        let b = Poly::from_u32s(&[4, 0, 1]);
        let (g, s, t) = ext_gcd(&f, &a, &b);
        assert_eq!(add(&f, &mul(&f, &s, &a), &mul(&f, &t, &b)), g);
    }
}
