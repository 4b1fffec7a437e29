//! Exact arithmetic in the cyclotomic field `Q(zeta_p)`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::field::{FqElem, GaloisField};

/// An element of `Q(zeta_p)` in the power basis `1, zeta, ..., zeta^{p-2}`.
///
/// For `p = 2` the field is `Q` and a single coefficient is stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloValue<S> {
    p: u32,
    coeffs: Vec<S>,
}

impl<S: Scalar> CycloValue<S> {
    fn width(p: u32) -> usize {
        (p as usize - 1).max(1)
    }

    pub fn zero(p: u32) -> Self {
        CycloValue { p, coeffs: vec![S::zero(); Self::width(p)] }
    }

    pub fn one(p: u32) -> Self {
        Self::from_scalar(p, S::one())
    }

    pub fn from_scalar(p: u32, s: S) -> Self {
        let mut v = Self::zero(p);
        v.coeffs[0] = s;
        v
    }

    pub fn from_int(p: u32, n: i64) -> Self {
        Self::from_scalar(p, S::from_i64(n))
    }

    /// Builds a value from coefficients of `1, zeta, ..., zeta^{p-1}` (length `p`),
    /// reducing with `1 + zeta + ... + zeta^{p-1} = 0`.
    pub fn from_group_ring(p: u32, v: &[S]) -> Self {
        assert_eq!(v.len(), p as usize, "group ring vector must have length p");
        let top = v[p as usize - 1].clone();
        let w = Self::width(p);
        let coeffs = if p == 2 {
            vec![v[0].clone() - top]
        } else {
            v[..w].iter().map(|c| c.clone() - top.clone()).collect()
        };
        CycloValue { p, coeffs }
    }

    /// `zeta_p^e`.
    pub fn zeta_pow(p: u32, e: i64) -> Self {
        let e = e.rem_euclid(p as i64) as usize;
        let mut v = vec![S::zero(); p as usize];
        v[e] = S::one();
        Self::from_group_ring(p, &v)
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational value if the element lies in `Q`.
    pub fn as_scalar(&self) -> Option<S> {
        self.coeffs[1..].iter().all(|c| c.is_zero()).then(|| self.coeffs[0].clone())
    }

    fn group_ring(&self) -> Vec<S> {
        let mut v = vec![S::zero(); self.p as usize];
        if self.p == 2 {
            v[0] = self.coeffs[0].clone();
        } else {
            v[..self.coeffs.len()].clone_from_slice(&self.coeffs);
        }
        v
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.p != other.p {
            return Err(Error::FieldMismatch);
        }
        Ok(CycloValue {
            p: self.p,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b.clone()).collect(),
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.p != other.p {
            return Err(Error::FieldMismatch);
        }
        let p = self.p as usize;
        let a = self.group_ring();
        let b = other.group_ring();
        let mut out = vec![S::zero(); p];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let k = (i + j) % p;
                out[k] = out[k].clone() + x.clone() * y.clone();
            }
        }
        Ok(Self::from_group_ring(self.p, &out))
    }

    pub fn scale(&self, s: &S) -> Self {
        CycloValue { p: self.p, coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect() }
    }

    /// Multiplies by `zeta^e`.
    pub fn mul_zeta(&self, e: i64) -> Self {
        let p = self.p as usize;
        let e = e.rem_euclid(p as i64) as usize;
        if e == 0 {
            return self.clone();
        }
        let v = self.group_ring();
        let mut out = vec![S::zero(); p];
        for (i, c) in v.into_iter().enumerate() {
            out[(i + e) % p] = c;
        }
        Self::from_group_ring(self.p, &out)
    }
}

impl<S: Scalar> Add for CycloValue<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs).expect("cyclotomic values over different primes")
    }
}

impl<'a, S: Scalar> Add<&'a CycloValue<S>> for &'a CycloValue<S> {
    type Output = CycloValue<S>;
    fn add(self, rhs: Self) -> CycloValue<S> {
        self.checked_add(rhs).expect("cyclotomic values over different primes")
    }
}

impl<S: Scalar> AddAssign<&CycloValue<S>> for CycloValue<S> {
    fn add_assign(&mut self, rhs: &CycloValue<S>) {
        assert_eq!(self.p, rhs.p, "cyclotomic values over different primes");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a = a.clone() + b.clone();
        }
    }
}

impl<S: Scalar> Neg for CycloValue<S> {
    type Output = Self;
    fn neg(self) -> Self {
        CycloValue { p: self.p, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<S: Scalar> Sub for CycloValue<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<S: Scalar> Mul for CycloValue<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(&rhs).expect("cyclotomic values over different primes")
    }
}

impl<'a, S: Scalar> Mul<&'a CycloValue<S>> for &'a CycloValue<S> {
    type Output = CycloValue<S>;
    fn mul(self, rhs: Self) -> CycloValue<S> {
        self.checked_mul(rhs).expect("cyclotomic values over different primes")
    }
}

impl<S: Scalar> fmt::Display for CycloValue<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Serialized as the coefficient vector, each rational as a string.
impl<S: Scalar> Serialize for CycloValue<S> {
    fn serialize<Ser: Serializer>(&self, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        let v: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        v.serialize(s)
    }
}

/// `psi(x) = zeta_p^{Tr(x)}`.
pub fn additive_character<S: Scalar>(field: &GaloisField, x: FqElem) -> CycloValue<S> {
    CycloValue::zeta_pow(field.characteristic(), field.trace(x) as i64)
}
