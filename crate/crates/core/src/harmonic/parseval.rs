use std::collections::BTreeSet;

use serde::Serialize;

use crate::adeles::AdeleWindow;
use crate::algebra::FqElem;
use crate::curve::Divisor;
use crate::error::{Error, Result};
use crate::linalg::{intersection_dim, span_dim, Matrix};
use crate::scalar::Scalar;
use crate::series::Place;

use super::fourier::{fourier, window_space};
use super::table::{pair, FnTable};

/// Bookkeeping of Parseval for `delta_K` against `delta_D` on one window.
///
/// Every count is a power of `q`; only exponents are stored.
#[derive(Clone, Debug, Serialize)]
pub struct ParsevalReport {
    pub divisor: String,
    pub q: u64,
    pub window_dim: usize,
    /// `dim Gamma`, `Gamma` the image of `L(D_high)`.
    pub global_dim: usize,
    /// `dim A(D) / A(D_low)`.
    pub subgroup_dim: usize,
    /// `(delta_K, delta_D) = q^{l(D)}`.
    pub l_d: usize,
    /// `#(Gamma-perp ∩ A((omega) - D)) = q^{l(K - D)}`.
    pub l_k_minus_d: usize,
    /// Exponent of `|V| (delta_K, delta_D)`.
    pub lhs_exponent: usize,
    /// Exponent of `(delta_K^, delta_D^)` from the two subgroup rules.
    pub rhs_exponent: usize,
    pub degree: i64,
    /// `Gamma-perp` equals the embedded `L((omega) - D_low)`.
    pub orthogonality_verified: bool,
    pub rr_identity_holds: bool,
}

/// `S = supp D ∪ {inf} ∪ extra`, `D_high = max(D, 0)`, `D_low = min(D, 0) - inf`.
pub fn parseval_window(d: &Divisor, extra: &[Place]) -> Result<AdeleWindow> {
    let mut places: BTreeSet<Place> = d.support().map(|(p, _)| p.clone()).collect();
    places.insert(Place::Infinity);
    places.extend(extra.iter().cloned());
    let places: Vec<Place> = places.into_iter().collect();
    let mut low = d.negative_part();
    low.add_at(Place::Infinity, -1);
    AdeleWindow::new(&places, &low, &d.positive_part())
}

/// The annihilator of the span of `rows` under `pairing`, in the dual coordinates.
pub(crate) fn annihilator(w: &AdeleWindow, pairing: &Matrix, rows: &[Vec<FqElem>]) -> Vec<Vec<FqElem>> {
    let field = w.field();
    if rows.is_empty() {
        return (0..pairing.cols())
            .map(|j| {
                let mut v = vec![FqElem::ZERO; pairing.cols()];
                v[j] = FqElem::ONE;
                v
            })
            .collect();
    }
    let g = Matrix::from_rows(pairing.rows(), rows);
    g.mul(field, pairing).expect("shapes agree").kernel(field)
}

fn same_subspace(w: &AdeleWindow, dim: usize, a: &[Vec<FqElem>], b: &[Vec<FqElem>]) -> bool {
    let f = w.field();
    let da = span_dim(f, dim, a);
    da == span_dim(f, dim, b) && intersection_dim(f, dim, a, b) == da
}

/// Riemann-Roch from Parseval on `w` (default: [`parseval_window`]).
pub fn rr_via_parseval(d: &Divisor, window: Option<&AdeleWindow>) -> Result<ParsevalReport> {
    let owned;
    let w = match window {
        Some(w) => w,
        None => {
            owned = parseval_window(d, &[])?;
            &owned
        }
    };
    if !w.low().le(d) || !d.le(w.high()) {
        return Err(Error::contract("divisor must lie between the window bounds"));
    }
    if w.high().degree() < -1 {
        return Err(Error::contract("deg D_high must be at least -1"));
    }
    let field = w.field();
    let dim = w.dim();
    let dual = w.dual()?;
    let m = w.pairing_matrix(&dual)?;
    if m.rank(field) != dim {
        return Err(Error::Degenerate("residue pairing is degenerate on this window pair".into()));
    }
    let gamma = w.global_image()?;
    let global_dim = span_dim(field, dim, &gamma);
    let sub = w.subgroup_basis(d)?;
    let subgroup_dim = sub.len();
    let l_d = intersection_dim(field, dim, &gamma, &sub);

    let gamma_perp = annihilator(w, &m, &gamma);
    let dual_globals = dual.global_image()?;
    let orthogonality_verified = same_subspace(w, dim, &gamma_perp, &dual_globals);
    if !orthogonality_verified {
        return Err(Error::Degenerate("annihilator of the global lattice differs from the dual global lattice".into()));
    }
    let k = Divisor::canonical(field.clone());
    let sub_perp = annihilator(w, &m, &sub);
    let dual_sub = dual.subgroup_basis(&k.sub(d))?;
    if !same_subspace(w, dim, &sub_perp, &dual_sub) {
        return Err(Error::Degenerate("annihilator of A(D) differs from A((omega) - D)".into()));
    }
    let l_k_minus_d = intersection_dim(field, dim, &gamma_perp, &sub_perp);

    let lhs_exponent = dim + l_d;
    let rhs_exponent = global_dim + subgroup_dim + l_k_minus_d;
    let extracted = global_dim as i64 + subgroup_dim as i64 - dim as i64;
    let rr_identity_holds = lhs_exponent == rhs_exponent
        && l_d as i64 - l_k_minus_d as i64 == extracted
        && extracted == d.degree() + 1;
    Ok(ParsevalReport {
        divisor: d.to_string(),
        q: w.q(),
        window_dim: dim,
        global_dim,
        subgroup_dim,
        l_d,
        l_k_minus_d,
        lhs_exponent,
        rhs_exponent,
        degree: d.degree(),
        orthogonality_verified,
        rr_identity_holds,
    })
}

/// The same Parseval identity evaluated on explicit tables: returns
/// `((delta_K, delta_D), (delta_K^, delta_D^), |V|)` as exact values.
pub fn parseval_tables<S: Scalar>(d: &Divisor, w: &AdeleWindow) -> Result<(S, S, S)> {
    let space = window_space(w)?;
    let delta_k = FnTable::<S>::indicator(space.clone(), &w.global_image()?);
    let delta_d = FnTable::<S>::indicator(space.clone(), &w.subgroup_basis(d)?);
    let direct = pair(&delta_k, &delta_d)?;
    let (hk, _) = fourier(&delta_k, w)?;
    let (hd, _) = fourier(&delta_d, w)?;
    let transformed = pair(&hk, &hd)?;
    let scalar = |v: crate::algebra::CycloValue<S>| v.as_scalar().ok_or_else(|| Error::contract("pairing is not rational"));
    Ok((scalar(direct)?, scalar(transformed)?, S::from_i64(space.size() as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field_of_order;
    use crate::Rational;

    #[test]
    fn examples_over_f2() {
        let f = field_of_order(2).unwrap();
        let d = Divisor::parse(f.clone(), "2*(inf)").unwrap();
        let r = rr_via_parseval(&d, None).unwrap();
        assert_eq!(r.l_d, 3);
        assert!(r.rr_identity_holds);
        let d = Divisor::parse(f.clone(), "-3*(inf)").unwrap();
        let r = rr_via_parseval(&d, None).unwrap();
        assert_eq!((r.l_d, r.l_k_minus_d), (0, 2));
        assert!(r.rr_identity_holds);
    }

    #[test]
    fn tables_agree_with_ranks() {
        let f = field_of_order(2).unwrap();
        for s in ["(t) - 1*(inf)", "2*(inf)", "-2*(t+1)", "(t^2+t+1) - 2*(inf)"] {
            let d = Divisor::parse(f.clone(), s).unwrap();
            let w = parseval_window(&d, &[]).unwrap();
            let r = rr_via_parseval(&d, Some(&w)).unwrap();
            let (direct, transformed, size) = parseval_tables::<Rational>(&d, &w).unwrap();
            assert_eq!(direct, Rational::from_integer(2.into()).pow(r.l_d as i32));
            assert_eq!(transformed, size * direct.clone());
            assert_eq!(transformed, Rational::from_integer(2.into()).pow(r.rhs_exponent as i32), "{s}");
        }
    }
}
