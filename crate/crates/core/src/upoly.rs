//! Polynomials and rational functions in one variable `T` over an exact scalar.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense polynomial, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly<S> {
    c: Vec<S>,
}

impl<S: Scalar> UPoly<S> {
    pub fn new(mut c: Vec<S>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly { c }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| S::from_i64(x)).collect())
    }

    pub fn zero() -> Self {
        UPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_ints(&[1])
    }

    /// `c * T^n`.
    pub fn monomial(c: S, n: usize) -> Self {
        let mut v = vec![S::zero(); n + 1];
        v[n] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> S {
        self.c.get(i).cloned().unwrap_or_else(S::zero)
    }

    pub fn degree(&self) -> isize {
        self.c.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![S::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::new(self.c.iter().map(|x| x.clone() * s.clone()).collect())
    }

    pub fn truncate(&self, n: usize) -> Self {
        Self::new(self.c.iter().take(n).cloned().collect())
    }

    /// `T^d P(1/(qT))` where `d = deg P`; returns the polynomial and `d`.
    pub fn dual_substitution(&self, q: i64) -> (Self, usize) {
        if self.is_zero() {
            return (Self::zero(), 0);
        }
        let d = self.degree() as usize;
        // coefficient a_i T^{-i} q^{-i} -> times T^d gives a_i q^{-i} T^{d-i}
        let mut out = vec![S::zero(); d + 1];
        for (i, a) in self.c.iter().enumerate() {
            out[d - i] = a.clone() * S::pow_i(q, -(i as i32));
        }
        (Self::new(out), d)
    }
}

impl<S: Scalar> fmt::Display for UPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*T")?,
                _ => write!(f, "{c}*T^{i}")?,
            }
        }
        Ok(())
    }
}

impl<S: Scalar> Serialize for UPoly<S> {
    fn serialize<Ser: serde::Serializer>(&self, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        let v: Vec<String> = self.c.iter().map(|c| c.to_string()).collect();
        v.serialize(s)
    }
}

/// A quotient `num / den` of polynomials in `T`; equality is cross-multiplication.
#[derive(Clone, Debug, Serialize)]
pub struct RatFunc<S: Scalar> {
    pub num: UPoly<S>,
    pub den: UPoly<S>,
}

impl<S: Scalar> PartialEq for RatFunc<S> {
    fn eq(&self, o: &Self) -> bool {
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }
}

impl<S: Scalar> RatFunc<S> {
    pub fn new(num: UPoly<S>, den: UPoly<S>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc { num, den })
    }

    pub fn mul(&self, o: &Self) -> Self {
        RatFunc { num: self.num.mul(&o.num), den: self.den.mul(&o.den) }
    }

    /// `R(1/(qT))` cleared to a quotient of polynomials in `T`.
    pub fn dual_substitution(&self, q: i64) -> Self {
        let (n, dn) = self.num.dual_substitution(q);
        let (d, dd) = self.den.dual_substitution(q);
        // R(1/(qT)) = T^{dd - dn} n / d
        if dd >= dn {
            RatFunc { num: n.mul(&UPoly::monomial(S::one(), dd - dn)), den: d }
        } else {
            RatFunc { num: n, den: d.mul(&UPoly::monomial(S::one(), dn - dd)) }
        }
    }

    /// Power-series coefficients `c_0..c_{n-1}`; requires `den(0) != 0`.
    pub fn expand(&self, n: usize) -> Result<Vec<S>> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::contract("denominator vanishes at T = 0"));
        }
        let mut out: Vec<S> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = self.num.coeff(k);
            for j in 1..=k.min(self.den.c.len().saturating_sub(1)) {
                acc = acc - self.den.coeff(j) * out[k - j].clone();
            }
            out.push(acc / d0.clone());
        }
        Ok(out)
    }
}

impl<S: Scalar> fmt::Display for RatFunc<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = UPoly<BigRational>;

    #[test]
    fn geometric_expansion() {
        let r = RatFunc::new(P::one(), P::from_ints(&[1, -1]).mul(&P::from_ints(&[1, -2]))).unwrap();
        let c = r.expand(5).unwrap();
        let want: Vec<BigRational> = [1, 3, 7, 15, 31].iter().map(|&x| BigRational::from_integer(x.into())).collect();
        assert_eq!(c, want);
    }

    #[test]
    fn p1_dual_substitution() {
        // Z(1/(2T)) = 2T^2 Z(T) for Z = 1/((1-T)(1-2T))
        let z = RatFunc::new(P::one(), P::from_ints(&[1, -3, 2])).unwrap();
        let lhs = z.dual_substitution(2);
        let rhs = z.mul(&RatFunc::new(P::from_ints(&[0, 0, 2]), P::one()).unwrap());
        assert_eq!(lhs, rhs);
    }
}
