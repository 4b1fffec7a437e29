use crate::algebra::{Field, FqElem};
use crate::curve::{rr_space_basis, CurveModel, Divisor};
use crate::error::{Error, Result};
use crate::linalg::{span_dim, Matrix};
use crate::series::{expand_rational_1d, Place};

use super::window::AdeleWindow;

/// Truncation of the restricted complex at infinity: sections on the affine
/// line get pole order at most `pole_bound` at infinity, and `K_inf` is
/// read modulo `z^precision`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComplexBounds {
    pub pole_bound: i64,
    pub precision: i64,
}

impl ComplexBounds {
    /// Bounds comfortably past the support and degree of `d`.
    pub fn for_divisor(d: &Divisor) -> ComplexBounds {
        let at_inf = d.coeff(&Place::Infinity);
        let spread = d.support().map(|(_, n)| n.abs()).sum::<i64>() + d.degree().abs();
        ComplexBounds { pole_bound: at_inf.max(0) + spread + 2, precision: (-at_inf).max(0) + 2 }
    }

    fn enlarged(self) -> ComplexBounds {
        ComplexBounds { pole_bound: self.pole_bound + 1, precision: self.precision + 1 }
    }
}

/// `(h0, h1)` of `O(D)` from `A_D ⊕ z^{-D(inf)} F_q[[z]] → K_inf`, where `A_D`
/// is the sections of `O(D)` over the affine line; recomputed at enlarged
/// bounds and refused if the answer moves.
pub fn restricted_complex_cohomology(d: &Divisor, bounds: Option<ComplexBounds>) -> Result<(usize, usize)> {
    let b = bounds.unwrap_or_else(|| ComplexBounds::for_divisor(d));
    let first = cohomology_at(d, b)?;
    let second = cohomology_at(d, b.enlarged())?;
    if first != second {
        return Err(Error::Instability(format!(
            "restricted complex gives {first:?} at bounds ({}, {}) but {second:?} after enlarging",
            b.pole_bound, b.precision
        )));
    }
    Ok(first)
}

fn cohomology_at(d: &Divisor, b: ComplexBounds) -> Result<(usize, usize)> {
    let field: &Field = d.field();
    let at_inf = d.coeff(&Place::Infinity);
    let (n, m) = (b.pole_bound, b.precision);
    if n < 0 || m <= -n {
        return Err(Error::contract("bounds leave an empty target window"));
    }
    // target K_inf window: exponents -n..m of z
    let width = (n + m) as usize;
    let col = |e: i64| (e + n) as usize;
    let mut affine = d.clone();
    affine.add_at(Place::Infinity, n - at_inf);
    let model = CurveModel::projective_line(field.clone());
    let sections = rr_space_basis(&model, &affine)?;
    let mut columns: Vec<Vec<FqElem>> = Vec::new();
    for f in &sections {
        let mut v = vec![FqElem::ZERO; width];
        if !f.is_zero() {
            let val = f.ord(field, &Place::Infinity);
            if val < m {
                let s = expand_rational_1d(field, f, &Place::Infinity, (m - val) as usize)?.series;
                for e in val.max(-n)..m {
                    v[col(e)] = s.coeff(e)?;
                }
            }
        }
        columns.push(v);
    }
    // the completed local ring at infinity twisted by D, mapped with a minus sign
    let local_lo = -at_inf;
    for e in local_lo.max(-n)..m {
        let mut v = vec![FqElem::ZERO; width];
        v[col(e)] = field.neg(FqElem::ONE);
        columns.push(v);
    }
    if local_lo < -n {
        return Err(Error::Instability("pole bound below the local order at infinity".into()));
    }
    let map = Matrix::from_cols(width, &columns);
    let rank = map.rank(field);
    Ok((columns.len() - rank, width - rank))
}

/// Whether global functions with poles only in the window's places,
/// bounded by `D_high` away from `p`, surject onto the window blocks away from `p`.
pub fn strong_approximation_check(w: &AdeleWindow, p: &Place) -> Result<bool> {
    w.block(p).ok_or_else(|| Error::contract(format!("{p} is not in the window's place set")))?;
    let target: Vec<usize> = w.blocks().iter().filter(|b| &b.place != p).flat_map(|b| b.offset..b.offset + b.dim()).collect();
    if target.is_empty() {
        return Ok(true);
    }
    let field = w.field();
    let mut high = w.high().clone();
    let slack = target.len() as i64 + w.high().degree().abs() + 2;
    high.add_at(p.clone(), slack);
    let big = AdeleWindow::unchecked(&w.places(), w.low(), &high)?;
    let vectors: Vec<Vec<FqElem>> = big
        .global_image()?
        .iter()
        .map(|v| {
            w.blocks()
                .iter()
                .filter(|b| &b.place != p)
                .flat_map(|b| {
                    let bb = big.block(&b.place).expect("same places");
                    (b.lo..b.hi).flat_map(move |e| (0..b.degree()).map(move |i| v[bb.index(e, i)]))
                })
                .collect()
        })
        .collect();
    Ok(span_dim(field, target.len(), &vectors) == target.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field_of_order;

    fn div(f: &Field, s: &str) -> Divisor {
        Divisor::parse(f.clone(), s).unwrap()
    }

    #[test]
    fn examples_at_infinity() {
        let f = field_of_order(2).unwrap();
        for n in 0..5 {
            assert_eq!(restricted_complex_cohomology(&Divisor::point(f.clone(), Place::Infinity, n), None).unwrap(), (n as usize + 1, 0));
        }
        assert_eq!(restricted_complex_cohomology(&div(&f, "-2*(inf)"), None).unwrap(), (0, 1));
        assert_eq!(restricted_complex_cohomology(&div(&f, "-1*(inf)"), None).unwrap(), (0, 0));
    }

    #[test]
    fn matches_riemann_roch() {
        let f = field_of_order(3).unwrap();
        let k = Divisor::canonical(f.clone());
        for s in ["2*(t) - 3*(inf)", "-2*(t+1) - 1*(t^2+1)", "3*(t^2+1) + 1*(inf)", "-4*(inf) + 1*(t)", "0"] {
            let d = div(&f, s);
            let (h0, h1) = restricted_complex_cohomology(&d, None).unwrap();
            assert_eq!(h0 as i64, d.l_dimension(), "{s}");
            assert_eq!(h1 as i64, k.sub(&d).l_dimension(), "{s}");
        }
    }

    #[test]
    fn small_bounds_are_refused() {
        let f = field_of_order(2).unwrap();
        let d = div(&f, "3*(inf)");
        let r = restricted_complex_cohomology(&d, Some(ComplexBounds { pole_bound: 1, precision: 1 }));
        assert!(matches!(r, Err(Error::Instability(_))));
    }

    #[test]
    fn strong_approximation_examples() {
        let f = field_of_order(2).unwrap();
        let t = Place::rational(&f, FqElem::ZERO);
        let w = AdeleWindow::new(&[t.clone(), Place::Infinity], &div(&f, "-1*(t) - 1*(inf)"), &div(&f, "2*(t) + 1*(inf)")).unwrap();
        assert!(strong_approximation_check(&w, &Place::Infinity).unwrap());
        assert!(strong_approximation_check(&w, &t).unwrap());
        let single = AdeleWindow::new(&[Place::Infinity], &div(&f, "-1*(inf)"), &div(&f, "(inf)")).unwrap();
        assert!(strong_approximation_check(&single, &Place::Infinity).unwrap());
        let flat = AdeleWindow::new(&[t.clone(), Place::Infinity], &div(&f, "-1*(inf)"), &div(&f, "-1*(inf)")).unwrap();
        assert!(strong_approximation_check(&flat, &Place::Infinity).unwrap());
        assert!(strong_approximation_check(&w, &Place::rational(&f, FqElem::ONE)).is_err());
    }
}
