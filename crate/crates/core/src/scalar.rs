//! Exact scalar types the value-level math is generic over.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, Signed};

/// An exact field of characteristic zero (in practice: rationals).
///
/// Cyclotomic values, zeta coefficients and rational fits are generic over
/// this trait. Floating point types deliberately do not implement it: every
/// identity checked by the crate is an exact equality.
pub trait Scalar:
    Num + Clone + Debug + Display + PartialEq + Neg<Output = Self> + Signed + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self;
    fn from_bigint(v: BigInt) -> Self;
    /// The integer value if the scalar is integral.
    fn to_bigint(&self) -> Option<BigInt>;

    fn pow_i(base: i64, exp: i32) -> Self {
        let b = Self::from_i64(base);
        let mut acc = Self::one();
        for _ in 0..exp.unsigned_abs() {
            acc = acc * b.clone();
        }
        if exp < 0 {
            Self::one() / acc
        } else {
            acc
        }
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_bigint(v: BigInt) -> Self {
        BigRational::from_integer(v)
    }
    fn to_bigint(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.to_integer())
    }
}

impl Scalar for Ratio<i64> {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(v)
    }
    fn from_bigint(v: BigInt) -> Self {
        let v: i64 = v.try_into().expect("integer does not fit i64 rational");
        Ratio::from_integer(v)
    }
    fn to_bigint(&self) -> Option<BigInt> {
        self.is_integer().then(|| BigInt::from(self.to_integer()))
    }
}

impl Scalar for Ratio<i128> {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(v as i128)
    }
    fn from_bigint(v: BigInt) -> Self {
        let v: i128 = v.try_into().expect("integer does not fit i128 rational");
        Ratio::from_integer(v)
    }
    fn to_bigint(&self) -> Option<BigInt> {
        self.is_integer().then(|| BigInt::from(self.to_integer()))
    }
}
