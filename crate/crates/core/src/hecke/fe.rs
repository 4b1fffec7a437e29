//! The functional equation of the zeta integral for radial integrands.

use serde::Serialize;

use crate::algebra::Field;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::upoly::{RatFunc, UPoly};

use super::local::Integrand;
use super::zeta::{hecke_zeta, DiscretePart};

/// Rational fits of both sides of `Z_{f1}(1/(qT)) = Z_{f1^}(T)`.
#[derive(Clone, Debug, Serialize)]
pub struct FunctionalEquationReport<S: Scalar> {
    pub q: u64,
    /// `f1 = sum a_j char(z^j O)`.
    pub integrand: Vec<(i64, S)>,
    /// `f1^ = sum a_j q^{1-j} char(z^{2-j} O)` for the self-dual measure.
    pub transform: Vec<(i64, S)>,
    pub zeta: RatFunc<S>,
    pub substituted: RatFunc<S>,
    pub transformed_zeta: RatFunc<S>,
    pub holds: bool,
}

/// `sum_i terms_i T^{e_i} / ((1 - T)(1 - qT))` with possibly negative exponents.
fn shifted_standard<S: Scalar>(q: u64, terms: &[(i64, S)]) -> Result<RatFunc<S>> {
    let low = terms.iter().map(|(e, _)| *e).min().unwrap_or(0).min(0);
    let mut num = UPoly::zero();
    for (e, a) in terms {
        num = num.add(&UPoly::monomial(a.clone(), (e - low) as usize));
    }
    let den = UPoly::from_ints(&[1, -1]).mul(&UPoly::from_ints(&[1, -(q as i64)]));
    RatFunc::new(num, den.mul(&UPoly::monomial(S::one(), (-low) as usize)))
}

/// The integral over the monic polynomials, fitted over `(1 - T)(1 - qT)`.
pub fn fitted_zeta<S: Scalar>(field: &Field, f1: &Integrand<S>, cap: usize) -> Result<RatFunc<S>> {
    let z = hecke_zeta(field, &DiscretePart::MonicPolys, f1, cap)?.series;
    let den = UPoly::from_ints(&[1, -1]).mul(&UPoly::from_ints(&[1, -(field.size() as i64)]));
    (0..cap.saturating_sub(2))
        .find_map(|k| z.fit_with_denominator(&den, k))
        .ok_or_else(|| Error::Precision(format!("no fit over (1 - T)(1 - qT) within {cap} terms")))
}

/// Checks the functional equation for a radial integrand. The left side is
/// fitted from computed coefficients; the right side is fitted from
/// coefficients when `f1^` is supported in `O`, and assembled from the
/// fitted standard integral otherwise.
pub fn functional_equation<S: Scalar>(field: &Field, f1: &Integrand<S>, cap: usize) -> Result<FunctionalEquationReport<S>> {
    let q = field.size() as u64;
    let integrand = f1
        .radial_decomposition(field)
        .ok_or_else(|| Error::Unsupported("the functional equation is checked for radial integrands".into()))?;
    let transform: Vec<(i64, S)> =
        integrand.iter().map(|(j, a)| (2 - j, a.clone() * S::pow_i(q as i64, (1 - j) as i32))).collect();
    let zeta = fitted_zeta(field, f1, cap)?;
    let substituted = zeta.dual_substitution(q as i64);
    let transformed_zeta = if transform.iter().all(|(e, _)| *e >= 0) {
        transform.iter().try_fold(None::<RatFunc<S>>, |acc, (e, a)| {
            let part = fitted_zeta(field, &Integrand::Ideal { n: *e, weight: a.clone() }, cap)?;
            Ok::<_, Error>(Some(match acc {
                None => part,
                Some(prev) => RatFunc::new(
                    prev.num.mul(&part.den).add(&part.num.mul(&prev.den)),
                    prev.den.mul(&part.den),
                )?,
            }))
        })?
        .expect("nonempty decomposition")
    } else {
        let standard = fitted_zeta(field, &Integrand::<S>::standard(), cap)?;
        if standard != shifted_standard(q, &[(0, S::one())])? {
            return Err(Error::Precision("standard integral did not fit".into()));
        }
        shifted_standard(q, &transform)?
    };
    let holds = substituted == transformed_zeta;
    Ok(FunctionalEquationReport { q, integrand, transform, zeta, substituted, transformed_zeta, holds })
}
