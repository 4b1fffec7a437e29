use std::fmt;

use crate::algebra::{poly, FqElem, GaloisField, Poly};
use crate::error::{Error, Result};

/// A closed point of the projective line over `F_q`: a monic irreducible
/// polynomial in `t`, or the point at infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Finite(Poly),
    Infinity,
}

impl Place {
    /// Validates irreducibility and monicity.
    pub fn finite(f: &GaloisField, pi: Poly) -> Result<Place> {
        if !pi.is_monic() || !poly::is_irreducible(f, &pi) {
            return Err(Error::contract(format!(
                "place {} is not a monic irreducible",
                pi.display("t")
            )));
        }
        Ok(Place::Finite(pi))
    }

    /// The rational place `t = a`.
    pub fn rational(f: &GaloisField, a: FqElem) -> Place {
        Place::Finite(Poly::linear(f, a))
    }

    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(p) => p.degree() as usize,
            Place::Infinity => 1,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Place::Infinity)
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "({})", p.display("t")),
            Place::Infinity => write!(f, "(inf)"),
        }
    }
}

/// A rational function `num / den` in one variable over `F_q`, kept with
/// monic denominator and coprime parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: Poly,
    den: Poly,
}

impl RatFn {
    pub fn new(f: &GaloisField, num: Poly, den: Poly) -> Result<RatFn> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFn::zero());
        }
        let g = poly::gcd(f, &num, &den);
        let num = poly::div_exact(f, &num, &g)?;
        let den = poly::div_exact(f, &den, &g)?;
        let inv = f.inv(den.lead())?;
        Ok(RatFn { num: poly::scale(f, &num, inv), den: poly::scale(f, &den, inv) })
    }

    pub fn zero() -> RatFn {
        RatFn { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> RatFn {
        RatFn { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> RatFn {
        RatFn { num: p, den: Poly::one() }
    }

    pub fn constant(c: FqElem) -> RatFn {
        RatFn::from_poly(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, f: &GaloisField, o: &RatFn) -> RatFn {
        let n = poly::add(f, &poly::mul(f, &self.num, &o.den), &poly::mul(f, &o.num, &self.den));
        RatFn::new(f, n, poly::mul(f, &self.den, &o.den)).expect("nonzero denominators")
    }

    pub fn neg(&self, f: &GaloisField) -> RatFn {
        RatFn { num: poly::neg(f, &self.num), den: self.den.clone() }
    }

    pub fn sub(&self, f: &GaloisField, o: &RatFn) -> RatFn {
        self.add(f, &o.neg(f))
    }

    pub fn mul(&self, f: &GaloisField, o: &RatFn) -> RatFn {
        RatFn::new(f, poly::mul(f, &self.num, &o.num), poly::mul(f, &self.den, &o.den))
            .expect("nonzero denominators")
    }

    pub fn inv(&self, f: &GaloisField) -> Result<RatFn> {
        RatFn::new(f, self.den.clone(), self.num.clone())
    }

    pub fn div(&self, f: &GaloisField, o: &RatFn) -> Result<RatFn> {
        Ok(self.mul(f, &o.inv(f)?))
    }

    pub fn scale(&self, f: &GaloisField, c: FqElem) -> RatFn {
        RatFn::new(f, poly::scale(f, &self.num, c), self.den.clone()).expect("nonzero denominator")
    }

    /// Order of vanishing at `place` (`i64::MAX` for zero).
    pub fn ord(&self, f: &GaloisField, place: &Place) -> i64 {
        if self.is_zero() {
            return i64::MAX;
        }
        match place {
            Place::Infinity => self.den.degree() as i64 - self.num.degree() as i64,
            Place::Finite(pi) => multiplicity(f, &self.num, pi) as i64 - multiplicity(f, &self.den, pi) as i64,
        }
    }

    /// Places where the function has a pole, including infinity.
    pub fn poles(&self, f: &GaloisField) -> Result<Vec<Place>> {
        let mut out: Vec<Place> = if self.den.degree() > 0 {
            poly::factor(f, &self.den)?.1.into_iter().map(|(p, _)| Place::Finite(p)).collect()
        } else {
            Vec::new()
        };
        if self.ord(f, &Place::Infinity) < 0 {
            out.push(Place::Infinity);
        }
        Ok(out)
    }

    pub fn display<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        struct D<'a>(&'a RatFn, &'a str);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.0.den == Poly::one() {
                    write!(f, "{}", self.0.num.display(self.1))
                } else {
                    write!(f, "({})/({})", self.0.num.display(self.1), self.0.den.display(self.1))
                }
            }
        }
        D(self, var)
    }
}

/// Multiplicity of the irreducible `pi` in `a` (`a != 0`).
pub fn multiplicity(f: &GaloisField, a: &Poly, pi: &Poly) -> u32 {
    let mut m = 0;
    let mut rest = a.clone();
    loop {
        let (q, r) = poly::divrem(f, &rest, pi).expect("nonzero place");
        if !r.is_zero() || rest.is_zero() {
            return m;
        }
        m += 1;
        rest = q;
    }
}
