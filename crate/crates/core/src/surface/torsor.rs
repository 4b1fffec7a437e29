//! Haar-measure normalizations on the two-dimensional field and integration along fibers.

use serde::Serialize;

use crate::algebra::FqElem;
use crate::error::{Error, Result};
use crate::harmonic::{FiniteSpace, FnTable};
use crate::scalar::Scalar;

/// A normalization `(i, k)`: the ideal index on the residue field and the
/// `u`-power twisting the second parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct NormalizationDatum {
    pub ideal_index: i64,
    pub twist: i64,
}

impl NormalizationDatum {
    pub fn new(ideal_index: i64, twist: i64) -> Self {
        NormalizationDatum { ideal_index, twist }
    }

    /// Exponent `e` with `vol_j = q^e` for the standard block at `t`-level `j`.
    pub fn volume_exponent(&self, level: i64) -> i64 {
        -self.ideal_index - level * self.twist
    }

    pub fn volume<S: Scalar>(&self, q: u64, level: i64) -> S {
        S::pow_i(q as i64, self.volume_exponent(level) as i32)
    }

    /// The simply transitive action of `Z + Z`.
    pub fn act(&self, shift: (i64, i64)) -> Self {
        NormalizationDatum::new(self.ideal_index + shift.0, self.twist + shift.1)
    }
}

/// `(a, b)` with `vol_j(d1) / vol_j(d2) = q^{-a - jb}`, read off the volume families.
pub fn torsor_difference(d1: &NormalizationDatum, d2: &NormalizationDatum) -> (i64, i64) {
    let ratio = |j: i64| d1.volume_exponent(j) - d2.volume_exponent(j);
    let a = -ratio(0);
    let b = -(ratio(1) - ratio(0));
    (a, b)
}

/// `t`-levels `[lo_t, hi_t)`, each carrying `u`-coefficients `[lo_u, hi_u)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoLevelWindow {
    pub lo_t: i64,
    pub hi_t: i64,
    pub lo_u: i64,
    pub hi_u: i64,
}

impl TwoLevelWindow {
    pub fn new(lo_t: i64, hi_t: i64, lo_u: i64, hi_u: i64) -> Result<Self> {
        if lo_t > hi_t || lo_u > hi_u {
            return Err(Error::contract("window bounds are reversed"));
        }
        Ok(TwoLevelWindow { lo_t, hi_t, lo_u, hi_u })
    }

    pub fn width(&self) -> usize {
        (self.hi_u - self.lo_u) as usize
    }

    pub fn dim(&self) -> usize {
        (self.hi_t - self.lo_t) as usize * self.width()
    }

    /// Coordinate of `u^i t^j`; coordinates run level by level.
    pub fn coordinate(&self, i: i64, j: i64) -> usize {
        (j - self.lo_t) as usize * self.width() + (i - self.lo_u) as usize
    }
}

/// Integrates out the levels `[new_hi, hi_t)` of `f`, weighting each point
/// of level `j` by `vol_j(d)`.
pub fn f02_pushforward<S: Scalar>(
    f: &FnTable<S>,
    window: &TwoLevelWindow,
    new_hi: i64,
    d: &NormalizationDatum,
) -> Result<(FnTable<S>, TwoLevelWindow)> {
    if f.space.dim != window.dim() {
        return Err(Error::contract("table does not live on this window"));
    }
    if new_hi < window.lo_t || new_hi > window.hi_t {
        return Err(Error::contract("collapse target is not a sub-window"));
    }
    let q = f.space.q() as u64;
    let target = TwoLevelWindow { hi_t: new_hi, ..window.clone() };
    let space = FiniteSpace::new(f.space.field.clone(), target.dim())?;
    let mut weight = S::one();
    for j in new_hi..window.hi_t {
        weight = weight * d.volume::<S>(q, j);
    }
    let fibre = f.space.size() / space.size();
    let p = f.space.field.characteristic();
    let values = (0..space.size())
        .map(|x| {
            let total = (0..fibre).try_fold(crate::algebra::CycloValue::zero(p), |acc, y| acc.checked_add(&f.values[x + space.size() * y]))?;
            Ok(total.scale(&weight))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((FnTable { space, values }, target))
}

/// The characteristic function of the part of the window with `v_u >= 0` at every level.
pub fn standard_block_indicator<S: Scalar>(space: FiniteSpace, window: &TwoLevelWindow) -> FnTable<S> {
    let p = space.field.characteristic();
    FnTable::from_fn(space, |v: &[FqElem]| {
        let inside = (window.lo_t..window.hi_t)
            .all(|j| (window.lo_u..window.hi_u.min(0)).all(|i| v[window.coordinate(i, j)].is_zero()));
        if inside {
            crate::algebra::CycloValue::one(p)
        } else {
            crate::algebra::CycloValue::zero(p)
        }
    })
}
