use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::upoly::{RatFunc, UPoly};

use super::model::{CurveModel, MAX_DEGREE};

/// A power series in `T = q^{-s}` with an optional exact rational fit.
#[derive(Clone, Debug, Serialize)]
pub struct ZetaSeries<S: Scalar> {
    pub q: u64,
    pub coeffs: Vec<S>,
    pub fit: Option<RatFunc<S>>,
}

impl<S: Scalar> ZetaSeries<S> {
    pub fn new(q: u64, coeffs: Vec<S>) -> Self {
        ZetaSeries { q, coeffs, fit: None }
    }

    /// Number of stored coefficients.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, n: usize) -> Result<&S> {
        self.coeffs.get(n).ok_or_else(|| Error::Precision(format!("coefficient {n} beyond stored {}", self.coeffs.len())))
    }

    /// Attaches `fit` after checking it reproduces every stored coefficient.
    pub fn with_fit(mut self, fit: RatFunc<S>) -> Result<Self> {
        if fit.expand(self.coeffs.len())? != self.coeffs {
            return Err(Error::contract("fit does not reproduce the stored coefficients"));
        }
        self.fit = Some(fit);
        Ok(self)
    }

    /// Product truncated to the shorter of the two.
    pub fn mul(&self, o: &Self) -> Self {
        let n = self.coeffs.len().min(o.coeffs.len());
        let mut out = vec![S::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            for (j, b) in o.coeffs.iter().take(n - i).enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        ZetaSeries::new(self.q, out)
    }

    /// Tries `num / den` with `deg num <= num_degree`; the numerator is read
    /// off the first coefficients and the remaining ones must agree.
    pub fn fit_with_denominator(&self, den: &UPoly<S>, num_degree: usize) -> Option<RatFunc<S>> {
        let n = self.coeffs.len();
        let series = UPoly::new(self.coeffs.clone());
        let prod = series.mul(den).truncate(n);
        if (num_degree + 1..n).any(|k| !prod.coeff(k).is_zero()) {
            return None;
        }
        let fit = RatFunc::new(prod.truncate(num_degree + 1), den.clone()).ok()?;
        (fit.expand(n).ok()? == self.coeffs).then_some(fit)
    }
}

/// `(1 - T)(1 - qT)`.
pub fn line_denominator<S: Scalar>(q: u64) -> UPoly<S> {
    UPoly::from_ints(&[1, -1]).mul(&UPoly::from_ints(&[1, -(q as i64)]))
}

fn binomial(n: &BigInt, k: usize) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `prod_d (1 - T^d)^{-counts[d]}` through `T^n`; `counts[0]` is ignored.
pub fn euler_product<S: Scalar>(q: u64, counts: &[u64], n: usize) -> ZetaSeries<S> {
    let mut acc = vec![S::zero(); n + 1];
    acc[0] = S::one();
    for (d, &nd) in counts.iter().enumerate().skip(1).take(n) {
        if nd == 0 {
            continue;
        }
        // (1 - T^d)^{-N} = sum_k C(N + k - 1, k) T^{dk}
        let top = BigInt::from(nd) - 1;
        let factor: Vec<S> = (0..=n / d).map(|k| S::from_bigint(binomial(&(&top + k), k))).collect();
        let mut next = vec![S::zero(); n + 1];
        for (i, a) in acc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, c) in factor.iter().enumerate() {
                let e = i + d * k;
                if e > n {
                    break;
                }
                next[e] = next[e].clone() + a.clone() * c.clone();
            }
        }
        acc = next;
    }
    ZetaSeries::new(q, acc)
}

/// Euler product of the model through `T^n`, with the fit over
/// `(1 - T)(1 - qT)` and numerator degree `2g` attached when it holds.
pub fn zeta_from_counts<S: Scalar>(model: &CurveModel, n: usize) -> Result<ZetaSeries<S>> {
    if n > MAX_DEGREE {
        return Err(Error::contract(format!("at most {MAX_DEGREE} terms are supported")));
    }
    let counts = if n == 0 { vec![0] } else { model.closed_point_counts(n)? };
    let z = euler_product::<S>(model.q(), &counts, n);
    let den = line_denominator::<S>(model.q());
    let fit = z.fit_with_denominator(&den, 2 * model.genus() as usize);
    Ok(ZetaSeries { fit, ..z })
}

/// Numbers of effective divisors of each degree through `T^n`, by the
/// recurrence `k E_k = sum_{j=1}^{k} #C(F_{q^j}) E_{k-j}`, with the fit over
/// `(1 - T)(1 - qT)` attached when it holds.
pub fn effective_divisor_series<S: Scalar>(model: &CurveModel, n: usize) -> Result<ZetaSeries<S>> {
    if n > MAX_DEGREE {
        return Err(Error::contract(format!("at most {MAX_DEGREE} terms are supported")));
    }
    let totals: Vec<BigInt> = (1..=n).map(|k| model.count_points(k).map(BigInt::from)).collect::<Result<_>>()?;
    let mut e: Vec<BigInt> = vec![BigInt::from(1)];
    for k in 1..=n {
        let acc: BigInt = (1..=k).map(|j| &totals[j - 1] * &e[k - j]).sum();
        if &acc % k != BigInt::from(0) {
            return Err(Error::contract("point counts do not come from a curve"));
        }
        e.push(acc / k);
    }
    let z = ZetaSeries::new(model.q(), e.into_iter().map(S::from_bigint).collect());
    let fit = z.fit_with_denominator(&line_denominator::<S>(model.q()), 2 * model.genus() as usize);
    Ok(ZetaSeries { fit, ..z })
}

/// Whether the fit's numerator `P` satisfies `q^g T^{2g} P(1/(qT)) = P(T)`.
pub fn functional_equation_check<S: Scalar>(z: &ZetaSeries<S>, genus: u32) -> Result<bool> {
    let fit = z.fit.as_ref().ok_or_else(|| Error::contract("zeta series has no rational fit"))?;
    if fit.den != line_denominator::<S>(z.q) {
        return Err(Error::contract("fit denominator is not (1 - T)(1 - qT)"));
    }
    let p = &fit.num;
    let g = genus as usize;
    if p.degree() > 2 * g as isize {
        return Ok(false);
    }
    let q = z.q as i64;
    Ok((0..=2 * g).all(|i| p.coeff(2 * g - i) == p.coeff(i) * S::pow_i(q, g as i32 - i as i32)))
}
