//! The zeta function of the plane as a product over a stratification.

use num_bigint::BigInt;
use serde::Serialize;

use crate::curve::{euler_product, mobius, ZetaSeries};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::upoly::{RatFunc, UPoly};

/// Largest number of terms for the surface factorization.
pub const MAX_SURFACE_TERMS: usize = 10;

/// Closed-point counts per degree from `#X(F_{q^k})`, `k = 1..=n`.
pub fn closed_counts_from_totals(totals: &[BigInt]) -> Result<Vec<u64>> {
    let mut out = vec![0u64];
    for d in 1..=totals.len() {
        let mut acc = BigInt::from(0);
        for e in (1..=d).filter(|e| d % e == 0) {
            acc += mobius((d / e) as u64) * &totals[e - 1];
        }
        let (count, rem) = (&acc / d, &acc % d);
        if rem != BigInt::from(0) || count < BigInt::from(0) {
            return Err(Error::contract("point counts are not those of a variety"));
        }
        out.push(count.try_into().map_err(|_| Error::contract("closed-point count exceeds u64"))?);
    }
    Ok(out)
}

/// `zeta` of `A^dim` over `F_q` from `#A^dim(F_{q^k}) = q^{dim k}`.
pub fn affine_space_zeta<S: Scalar>(q: u64, dim: u32, n: usize) -> Result<ZetaSeries<S>> {
    let totals: Vec<BigInt> = (1..=n as u32).map(|k| BigInt::from(q).pow(dim * k)).collect();
    let counts = closed_counts_from_totals(&totals)?;
    Ok(euler_product(q, &counts, n))
}

#[derive(Clone, Debug, Serialize)]
pub struct SurfaceZeta<S: Scalar> {
    /// The open stratum: the complement of a line in the plane.
    pub open: ZetaSeries<S>,
    /// The line minus a point.
    pub line: ZetaSeries<S>,
    /// A rational point.
    pub point: ZetaSeries<S>,
    pub product: ZetaSeries<S>,
    /// `1 / ((1 - T)(1 - qT)(1 - q^2 T))` through `T^n`.
    pub expected: Vec<S>,
    pub holds: bool,
}

/// The three stratum factors of the plane, their product, and the comparison.
pub fn surface_zeta_factorization<S: Scalar>(q: u64, n: usize) -> Result<SurfaceZeta<S>> {
    if n > MAX_SURFACE_TERMS {
        return Err(Error::contract(format!("at most {MAX_SURFACE_TERMS} terms")));
    }
    let open = affine_space_zeta::<S>(q, 2, n)?;
    let line = affine_space_zeta::<S>(q, 1, n)?;
    let point = affine_space_zeta::<S>(q, 0, n)?;
    let product = open.mul(&line).mul(&point);
    let qi = q as i64;
    let den = UPoly::from_ints(&[1, -1]).mul(&UPoly::from_ints(&[1, -qi])).mul(&UPoly::from_ints(&[1, -qi * qi]));
    let expected = RatFunc::new(UPoly::one(), den)?.expand(n + 1)?;
    let holds = product.coeffs == expected;
    Ok(SurfaceZeta { open, line, point, product, expected, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn r(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    #[test]
    fn plane_factorizes() {
        for q in [2u64, 3] {
            let z = surface_zeta_factorization::<Rational>(q, 10).unwrap();
            assert!(z.holds);
            assert_eq!(z.point.coeffs, vec![r(1); 11]);
        }
        let z = surface_zeta_factorization::<Rational>(2, 3).unwrap();
        // 1/((1-T)(1-2T)(1-4T)) = 1 + 7T + 35T^2 + 155T^3
        assert_eq!(z.product.coeffs, vec![r(1), r(7), r(35), r(155)]);
    }

    #[test]
    fn affine_plane_closed_points_by_enumeration() {
        // closed points of A^2 over F_3 of degree 1 and 2: 9 and (81 - 9)/2 = 36
        let totals: Vec<BigInt> = (1..=2u32)
            .map(|k| {
                let size = 3usize.pow(k);
                BigInt::from((0..size * size).count())
            })
            .collect();
        assert_eq!(closed_counts_from_totals(&totals).unwrap(), vec![0, 9, 36]);
        let z = affine_space_zeta::<Rational>(3, 2, 2).unwrap();
        // T^2: C(9+1, 2) from pairs of rational points plus 36 quadratic points
        assert_eq!(z.coeffs[2], r(45 + 36));
        assert_eq!(z.coeffs[2], r(81));
    }
}
