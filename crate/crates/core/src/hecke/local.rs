//! The local field `K_inf = F_q((z))`, `z = 1/t`, and multiplicative integrals over it.

use num_bigint::BigInt;

use crate::algebra::{Field, FqElem};
use crate::curve::ZetaSeries;
use crate::error::{Error, Result};
use crate::linalg::{index_of_vector, vector_of_index};
use crate::scalar::Scalar;
use crate::upoly::{RatFunc, UPoly};

/// Largest cap accepted by the local Tate series.
pub const MAX_TATE_CAP: usize = 64;

/// A test function `f1` on `K_inf` with bounded support and a declared
/// level of local constancy.
#[derive(Clone, Debug, PartialEq)]
pub enum Integrand<S: Scalar> {
    /// `weight * char(z^n O)`.
    Ideal { n: i64, weight: S },
    /// A function supported in `z^lo O` and invariant under `z^hi O`, tabulated
    /// on `z^lo O / z^hi O`; entry index is the base-`q` index of the
    /// coefficient vector of `z^lo, ..., z^{hi-1}`.
    Window { lo: i64, hi: i64, values: Vec<S> },
}

impl<S: Scalar> Integrand<S> {
    /// The characteristic function of the integers `O`.
    pub fn standard() -> Self {
        Integrand::Ideal { n: 0, weight: S::one() }
    }

    pub fn ideal(n: i64) -> Self {
        Integrand::Ideal { n, weight: S::one() }
    }

    pub fn window(field: &Field, lo: i64, hi: i64, values: Vec<S>) -> Result<Self> {
        if hi < lo {
            return Err(Error::contract("window needs lo <= hi"));
        }
        let size = (field.size() as usize).checked_pow((hi - lo) as u32);
        if size != Some(values.len()) {
            return Err(Error::contract("window table has the wrong size"));
        }
        Ok(Integrand::Window { lo, hi, values })
    }

    /// Lowest valuation in the support.
    pub fn support_floor(&self) -> i64 {
        match self {
            Integrand::Ideal { n, .. } => *n,
            Integrand::Window { lo, .. } => *lo,
        }
    }

    /// `f1(x)` for `x = z^shift * w` with `w` given by its first coefficients
    /// (`w[0] != 0`); coefficients beyond the window level are irrelevant.
    fn eval_shifted(&self, q: u32, shift: i64, w: &[FqElem]) -> S {
        match self {
            Integrand::Ideal { n, weight } => {
                if shift >= *n {
                    weight.clone()
                } else {
                    S::zero()
                }
            }
            Integrand::Window { lo, hi, values } => {
                if shift < *lo {
                    return S::zero();
                }
                let len = (hi - lo) as usize;
                let mut coords = vec![FqElem::ZERO; len];
                for (i, c) in w.iter().enumerate() {
                    let pos = shift + i as i64 - lo;
                    if pos >= len as i64 {
                        break;
                    }
                    coords[pos as usize] = *c;
                }
                values[index_of_vector(q, &coords)].clone()
            }
        }
    }

    /// Number of leading coefficients of a unit needed at valuation `shift`.
    fn precision_at(&self, shift: i64) -> usize {
        match self {
            Integrand::Ideal { .. } => 0,
            Integrand::Window { hi, .. } => (hi - shift).max(0) as usize,
        }
    }

    /// For a radial function (depending only on the valuation), its
    /// expansion `sum a_j char(z^j O)`.
    pub fn radial_decomposition(&self, field: &Field) -> Option<Vec<(i64, S)>> {
        match self {
            Integrand::Ideal { n, weight } => Some(vec![(*n, weight.clone())]),
            Integrand::Window { lo, hi, values } => {
                let q = field.size();
                let len = (hi - lo) as usize;
                // value on each valuation shell, and on z^hi O
                let mut shell: Vec<Option<S>> = vec![None; len + 1];
                for (idx, v) in values.iter().enumerate() {
                    let coords = vector_of_index(q, len, idx);
                    let val = coords.iter().position(|c| !c.is_zero()).unwrap_or(len);
                    match &shell[val] {
                        None => shell[val] = Some(v.clone()),
                        Some(prev) if prev != v => return None,
                        _ => {}
                    }
                }
                let g: Vec<S> = shell.into_iter().map(|s| s.expect("every shell is inhabited")).collect();
                let mut out = vec![(*lo, g[0].clone())];
                for j in 1..=len {
                    let a = g[j].clone() - g[j - 1].clone();
                    if !a.is_zero() {
                        out.push((lo + j as i64, a));
                    }
                }
                Some(out)
            }
        }
    }
}

/// Unit classes `u mod z^len` with `u_0 != 0`, as coefficient vectors.
pub(crate) fn unit_classes(q: u32, len: usize) -> Vec<Vec<FqElem>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let total = (q as usize).pow(len as u32);
    (0..total).map(|i| vector_of_index(q, len, i)).filter(|v| !v[0].is_zero()).collect()
}

/// `a * b mod z^len` on coefficient vectors.
pub(crate) fn mul_trunc(f: &Field, a: &[FqElem], b: &[FqElem], len: usize) -> Vec<FqElem> {
    let mut out = vec![FqElem::ZERO; len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] = f.add(out[i + j], f.mul(*x, *y));
        }
    }
    out
}

/// `int_{v(c) = shift} f1(w c) d*c` with `d*(O^*) = 1`, for a fixed unit
/// prefix `w`: the average of `f1(z^shift w u)` over unit classes `u`.
pub(crate) fn unit_average<S: Scalar>(f: &Field, f1: &Integrand<S>, shift: i64, w: &[FqElem]) -> S {
    let q = f.size();
    let len = f1.precision_at(shift);
    if len == 0 {
        let probe = [FqElem::ONE];
        return f1.eval_shifted(q, shift, &probe);
    }
    let units = unit_classes(q, len);
    let mut acc = S::zero();
    for u in &units {
        let x = mul_trunc(f, w, u, len);
        acc = acc + f1.eval_shifted(q, shift, &x);
    }
    acc / S::from_i64(units.len() as i64)
}

/// `sum_{m >= n} T^m` through `T^cap`, with fit `T^n / (1 - T)`.
pub fn tate_local<S: Scalar>(q: u64, n: i64, cap: usize) -> Result<ZetaSeries<S>> {
    if cap > MAX_TATE_CAP {
        return Err(Error::contract(format!("cap at most {MAX_TATE_CAP}")));
    }
    if n < 0 {
        return Err(Error::contract("the local integral has negative powers of T for n < 0"));
    }
    let coeffs = (0..=cap as i64).map(|m| if m >= n { S::one() } else { S::zero() }).collect();
    let fit = RatFunc::new(UPoly::monomial(S::one(), n as usize), UPoly::from_ints(&[1, -1]))?;
    ZetaSeries::new(q, coeffs).with_fit(fit)
}

/// The local integral `int |a|^s f1(a) d*a = sum_j T^j avg_u f1(z^j u)` through `T^cap`.
pub fn tate_integral<S: Scalar>(field: &Field, f1: &Integrand<S>, cap: usize) -> Result<ZetaSeries<S>> {
    if f1.support_floor() < 0 {
        return Err(Error::contract("integrand support must lie in O for a power series in T"));
    }
    let one = [FqElem::ONE];
    let coeffs = (0..=cap as i64).map(|j| unit_average(field, f1, j, &one)).collect();
    Ok(ZetaSeries::new(field.size() as u64, coeffs))
}

/// `sum_m (#monic of degree m) T^m = sum_m q^m T^m`, fit `1 / (1 - qT)`.
pub fn dirichlet_factor<S: Scalar>(q: u64, cap: usize) -> Result<ZetaSeries<S>> {
    let coeffs = (0..=cap as u32).map(|m| S::from_bigint(BigInt::from(q).pow(m))).collect();
    let fit = RatFunc::new(UPoly::one(), UPoly::from_ints(&[1, -(q as i64)]))?;
    ZetaSeries::new(q, coeffs).with_fit(fit)
}
