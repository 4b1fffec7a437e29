//! Zeta integrals `int |c|^s sum_b f0(b) f1(bc) d*c` over the affine line.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{Field, FqElem, Poly};
use crate::curve::ZetaSeries;
use crate::error::{Error, Result};
use crate::linalg::vector_of_index;
use crate::scalar::Scalar;

use super::local::{tate_integral, unit_average, Integrand};

/// Largest cap for the global integral.
pub const MAX_HECKE_CAP: usize = 32;

/// The discrete factor `f0`: a delta function on a set of polynomials.
#[derive(Clone, Debug, PartialEq)]
pub enum DiscretePart<S: Scalar> {
    /// All monic polynomials.
    MonicPolys,
    /// All nonzero polynomials.
    NonzeroPolys,
    /// An explicit finite weighted list of nonzero polynomials.
    Finite(Vec<(Poly, S)>),
}

impl<S: Scalar> DiscretePart<S> {
    /// `delta_1`.
    pub fn one() -> Self {
        DiscretePart::Finite(vec![(Poly::one(), S::one())])
    }

    /// Total weight of polynomials of degree `k`.
    fn weight_of_degree(&self, q: u64, k: usize) -> S {
        let monic = S::from_bigint(BigInt::from(q).pow(k as u32));
        match self {
            DiscretePart::MonicPolys => monic,
            DiscretePart::NonzeroPolys => monic * S::from_i64(q as i64 - 1),
            DiscretePart::Finite(list) => list
                .iter()
                .filter(|(b, _)| b.degree() == k as isize)
                .fold(S::zero(), |acc, (_, w)| acc + w.clone()),
        }
    }

    fn count_of_degree(&self, q: u64, k: usize) -> BigInt {
        let monic = BigInt::from(q).pow(k as u32);
        match self {
            DiscretePart::MonicPolys => monic,
            DiscretePart::NonzeroPolys => monic * (q - 1),
            DiscretePart::Finite(list) => BigInt::from(list.iter().filter(|(b, _)| b.degree() == k as isize).count()),
        }
    }

    fn max_degree(&self) -> Option<usize> {
        match self {
            DiscretePart::Finite(list) => Some(list.iter().map(|(b, _)| b.degree().max(0) as usize).max().unwrap_or(0)),
            _ => None,
        }
    }
}

/// Coefficients of the global integral, with the number of `(b, class)`
/// pairs behind each coefficient.
#[derive(Clone, Debug, Serialize)]
pub struct HeckeZeta<S: Scalar> {
    pub series: ZetaSeries<S>,
    pub pairs: Vec<String>,
}

impl<S: Scalar> HeckeZeta<S> {
    /// Pair count at `T^m` as an integer.
    pub fn pair_count(&self, m: usize) -> BigInt {
        self.pairs[m].parse().expect("decimal pair count")
    }
}

fn check_inputs<S: Scalar>(f0: &DiscretePart<S>, f1: &Integrand<S>, cap: usize) -> Result<()> {
    if cap > MAX_HECKE_CAP {
        return Err(Error::contract(format!("cap at most {MAX_HECKE_CAP}")));
    }
    if f1.support_floor() < 0 {
        return Err(Error::contract("integrand support must lie in O"));
    }
    if let DiscretePart::Finite(list) = f0 {
        if list.iter().any(|(b, _)| b.is_zero()) {
            return Err(Error::contract("the discrete part lives on nonzero polynomials"));
        }
    }
    Ok(())
}

/// Leading coefficients of `b z^{deg b}` for the polynomials of degree `k`
/// in `f0`, grouped by their first `len` coefficients, with weights.
fn prefix_classes<S: Scalar>(field: &Field, f0: &DiscretePart<S>, k: usize, len: usize) -> Vec<(Vec<FqElem>, S)> {
    let q = field.size();
    let len = len.max(1);
    let free = k.min(len - 1);
    let mult = S::from_bigint(BigInt::from(q).pow((k - free) as u32));
    let leads: Vec<FqElem> = match f0 {
        DiscretePart::MonicPolys => vec![FqElem::ONE],
        DiscretePart::NonzeroPolys => field.elements().filter(|c| !c.is_zero()).collect(),
        DiscretePart::Finite(list) => {
            return list
                .iter()
                .filter(|(b, _)| b.degree() == k as isize)
                .map(|(b, w)| ((0..len).map(|i| if i <= k { b.coeff(k - i) } else { FqElem::ZERO }).collect(), w.clone()))
                .collect();
        }
    };
    let mut out = Vec::new();
    for lead in leads {
        for idx in 0..(q as usize).pow(free as u32) {
            let mut w = vec![lead];
            w.extend(vector_of_index(q, free, idx));
            w.resize(len, FqElem::ZERO);
            out.push((w, mult.clone()));
        }
    }
    out
}

/// The global integral, summed in the single-field form: for each
/// valuation `m` of `c`, the unit average of `sum_b f0(b) f1(bc)`.
pub fn hecke_zeta<S: Scalar>(field: &Field, f0: &DiscretePart<S>, f1: &Integrand<S>, cap: usize) -> Result<HeckeZeta<S>> {
    check_inputs(f0, f1, cap)?;
    let q = field.size() as u64;
    let floor = f1.support_floor();
    let mut coeffs = Vec::with_capacity(cap + 1);
    let mut pairs = Vec::with_capacity(cap + 1);
    for m in 0..=cap as i64 {
        let mut acc = S::zero();
        let mut count = BigInt::zero();
        let top = (m - floor).max(-1);
        let top = match f0.max_degree() {
            Some(d) => top.min(d as i64),
            None => top,
        };
        for k in 0..=top {
            let shift = m - k;
            count += f0.count_of_degree(q, k as usize);
            match f1 {
                Integrand::Ideal { n, weight } => {
                    if shift >= *n {
                        acc = acc + f0.weight_of_degree(q, k as usize) * weight.clone();
                    }
                }
                Integrand::Window { hi, .. } => {
                    let len = (hi - shift).max(0) as usize;
                    for (w, mult) in prefix_classes(field, f0, k as usize, len) {
                        acc = acc + mult * unit_average(field, f1, shift, &w);
                    }
                }
            }
        }
        coeffs.push(acc);
        pairs.push(count.to_string());
    }
    Ok(HeckeZeta { series: ZetaSeries::new(q, coeffs), pairs })
}

/// The same integral as a double sum: `sum_b |b|^{-s}` times the local
/// integral of `f1`, after the change of variable `a = bc`.
pub fn hecke_zeta_double_sum<S: Scalar>(field: &Field, f0: &DiscretePart<S>, f1: &Integrand<S>, cap: usize) -> Result<ZetaSeries<S>> {
    check_inputs(f0, f1, cap)?;
    let q = field.size() as u64;
    let local = tate_integral(field, f1, cap)?;
    let discrete: Vec<S> = (0..=cap).map(|k| f0.weight_of_degree(q, k)).collect();
    let out = ZetaSeries::new(q, discrete).mul(&local);
    Ok(out)
}

/// `(q^{m+1} - 1) / (q - 1)`, the number of monic polynomials of degree at most `m`.
pub fn monic_up_to(q: u64, m: usize) -> BigInt {
    (0..=m as u32).fold(BigInt::zero(), |acc, k| acc + BigInt::from(q).pow(k))
}

/// Bound `q^{m+1}` on the pairs behind the coefficient of `T^m`.
pub fn pair_bound(q: u64, m: usize) -> BigInt {
    BigInt::from(q).pow(m as u32 + 1)
}
