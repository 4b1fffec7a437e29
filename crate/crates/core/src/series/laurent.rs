use std::fmt;

use crate::algebra::{Field, FqElem};
use crate::error::{Error, Result};

/// A Laurent series known exactly on the exponent window `[lo, hi)`.
///
/// Coefficients below `lo` are zero; nothing is known at or beyond `hi`.
#[derive(Clone, Debug)]
pub struct LaurentSeries1D {
    field: Field,
    lo: i64,
    hi: i64,
    coeffs: Vec<FqElem>,
}

impl PartialEq for LaurentSeries1D {
    /// Equality on the common known window.
    fn eq(&self, o: &Self) -> bool {
        let lo = self.lo.min(o.lo);
        let hi = self.hi.min(o.hi);
        *self.field == *o.field && (lo..hi).all(|e| self.get(e) == o.get(e))
    }
}

impl LaurentSeries1D {
    pub fn new(field: Field, lo: i64, coeffs: Vec<FqElem>) -> LaurentSeries1D {
        let hi = lo + coeffs.len() as i64;
        LaurentSeries1D { field, lo, hi, coeffs }
    }

    pub fn zero(field: Field, lo: i64, hi: i64) -> LaurentSeries1D {
        assert!(lo <= hi, "empty window must still satisfy lo <= hi");
        LaurentSeries1D { field, lo, hi, coeffs: vec![FqElem::ZERO; (hi - lo) as usize] }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Exclusive truncation bound.
    pub fn hi(&self) -> i64 {
        self.hi
    }

    fn get(&self, e: i64) -> FqElem {
        if e < self.lo || e >= self.hi {
            FqElem::ZERO
        } else {
            self.coeffs[(e - self.lo) as usize]
        }
    }

    /// The coefficient of `x^e`; errors for exponents at or beyond the truncation.
    pub fn coeff(&self, e: i64) -> Result<FqElem> {
        if e >= self.hi {
            return Err(Error::Precision(format!("exponent {e} beyond truncation {}", self.hi)));
        }
        Ok(self.get(e))
    }

    /// Lowest exponent with a nonzero coefficient inside the window.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs.iter().position(|c| !c.is_zero()).map(|i| self.lo + i as i64)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, FqElem)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, &c)| (self.lo + i as i64, c))
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        if *self.field != *o.field {
            return Err(Error::FieldMismatch);
        }
        let lo = self.lo.min(o.lo);
        let hi = self.hi.min(o.hi).max(lo);
        let f = &self.field;
        let coeffs = (lo..hi).map(|e| f.add(self.get(e), o.get(e))).collect();
        Ok(LaurentSeries1D { field: self.field.clone(), lo, hi, coeffs })
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if *self.field != *o.field {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        let lo = self.lo + o.lo;
        // the product is known up to min(v_a + hi_b, v_b + hi_a)
        let va = self.valuation().unwrap_or(self.hi);
        let vb = o.valuation().unwrap_or(o.hi);
        let hi = (va + o.hi).min(vb + self.hi).max(lo);
        let mut coeffs = vec![FqElem::ZERO; (hi - lo) as usize];
        for (ea, a) in self.terms() {
            for (eb, b) in o.terms() {
                let e = ea + eb;
                if e < hi {
                    let slot = &mut coeffs[(e - lo) as usize];
                    *slot = f.add(*slot, f.mul(a, b));
                }
            }
        }
        Ok(LaurentSeries1D { field: self.field.clone(), lo, hi, coeffs })
    }

    /// Restricts the window to `[lo, hi)`, requiring it to be inside the known range.
    pub fn window(&self, lo: i64, hi: i64) -> Result<Self> {
        if hi > self.hi {
            return Err(Error::Precision(format!("requested {hi} beyond truncation {}", self.hi)));
        }
        if self.valuation().is_some_and(|v| v < lo) {
            return Err(Error::contract("window would drop nonzero low-order terms"));
        }
        let coeffs = (lo..hi).map(|e| self.get(e)).collect();
        Ok(LaurentSeries1D { field: self.field.clone(), lo, hi, coeffs })
    }
}

impl fmt::Display for LaurentSeries1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (e, c) in self.terms() {
            write!(f, "{c}*x^{e} + ")?;
        }
        write!(f, "O(x^{})", self.hi)
    }
}
