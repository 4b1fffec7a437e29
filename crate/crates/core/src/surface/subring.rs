//! Standard subrings of `F_q((u))((t))` as valuation conditions.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::series::IteratedSeries2D;

/// A standard subring or ideal of the two-dimensional local field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SubringTag {
    /// `F_q((u))[[t]]`: `v_t >= 0`.
    Integers,
    /// `F_q[[u]]((t))`: every `t`-level has `u`-order at least 0.
    StandardB,
    /// `F_q[[u]][[t]]`, the intersection of the two.
    Both,
    /// `t^n F_q((u))[[t]]`: `v_t >= n`.
    IdealPower(i64),
}

impl SubringTag {
    /// Node label in the lattice of standard subspaces, where one applies.
    pub fn label(&self) -> Option<&'static str> {
        match self {
            SubringTag::Integers => Some("12"),
            SubringTag::StandardB => Some("02"),
            SubringTag::Both => Some("012"),
            SubringTag::IdealPower(_) => None,
        }
    }
}

impl fmt::Display for SubringTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubringTag::Integers => write!(f, "Fq((u))[[t]]"),
            SubringTag::StandardB => write!(f, "Fq[[u]]((t))"),
            SubringTag::Both => write!(f, "Fq[[u]][[t]]"),
            SubringTag::IdealPower(n) => write!(f, "t^{n} Fq((u))[[t]]"),
        }
    }
}

/// A membership answer, valid for the tracked window of the series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub tag: SubringTag,
    pub member: bool,
    /// Tracked `t`-levels `[lo, hi)`.
    pub window: (i64, i64),
}

/// `v_t(x) >= n` on the tracked coefficients; refused if the window stops short of level `n`.
fn t_order_at_least(x: &IteratedSeries2D, n: i64) -> Result<bool> {
    for (e, lvl) in x.levels() {
        if e >= n {
            break;
        }
        if lvl.valuation().is_some() {
            return Ok(false);
        }
    }
    if x.hi_t() < n {
        return Err(Error::Instability(format!("series tracks t-levels below {} only, needs {n}", x.hi_t())));
    }
    Ok(true)
}

/// Every tracked level has no negative `u`-powers.
fn u_integral(x: &IteratedSeries2D) -> bool {
    x.levels().all(|(_, lvl)| lvl.valuation().map_or(true, |v| v >= 0))
}

/// Membership of `x` in the subring named by `tag`.
pub fn subring_membership(x: &IteratedSeries2D, tag: SubringTag) -> Result<Membership> {
    let member = match tag {
        SubringTag::Integers => t_order_at_least(x, 0)?,
        SubringTag::IdealPower(n) => t_order_at_least(x, n)?,
        SubringTag::StandardB => u_integral(x),
        SubringTag::Both => u_integral(x) && t_order_at_least(x, 0)?,
    };
    Ok(Membership { tag, member, window: (x.lo_t(), x.hi_t()) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{field_of_order, FqElem};

    fn series(terms: &[(i64, i64)], lo_t: i64, hi_t: i64) -> IteratedSeries2D {
        let f = field_of_order(3).unwrap();
        let t: Vec<(i64, i64, FqElem)> = terms.iter().map(|&(i, j)| (i, j, FqElem::ONE)).collect();
        IteratedSeries2D::from_terms(f, &t, lo_t, hi_t, -3, 4)
    }

    fn is(x: &IteratedSeries2D, tag: SubringTag) -> bool {
        subring_membership(x, tag).unwrap().member
    }

    #[test]
    fn small_examples() {
        // t + u t^2
        let x = series(&[(0, 1), (1, 2)], 0, 4);
        assert!(is(&x, SubringTag::Integers));
        assert!(is(&x, SubringTag::StandardB));
        assert!(is(&x, SubringTag::Both));
        // u^-1 t
        let y = series(&[(-1, 1)], 0, 4);
        assert!(is(&y, SubringTag::Integers));
        assert!(!is(&y, SubringTag::StandardB));
        // t^-1
        let z = series(&[(0, -1)], -1, 4);
        assert!(!is(&z, SubringTag::IdealPower(1)));
        assert!(is(&z, SubringTag::StandardB));
        assert!(!is(&z, SubringTag::Integers));
    }

    #[test]
    fn ideal_powers_are_nested() {
        let x = series(&[(2, 3), (-2, 5)], 0, 6);
        for n in -2..6 {
            if is(&x, SubringTag::IdealPower(n + 1)) {
                assert!(is(&x, SubringTag::IdealPower(n)));
            }
        }
        assert!(is(&x, SubringTag::IdealPower(3)));
        assert!(!is(&x, SubringTag::IdealPower(4)));
    }

    #[test]
    fn short_window_is_refused() {
        let x = series(&[], 0, 2);
        assert!(matches!(subring_membership(&x, SubringTag::IdealPower(4)), Err(Error::Instability(_))));
    }
}
