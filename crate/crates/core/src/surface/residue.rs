//! Sum-zero relations for residues of rational 2-forms on `P^1 x P^1`.

use std::fmt;

use serde::Serialize;

use crate::algebra::{poly, Field, FqElem, GaloisField, Poly};
use crate::error::{Error, Result};
use crate::linalg::vector_of_index;
use crate::series::{
    change_coordinates, exact_levels, place_residue, poly2, residue_2d, Flag, Place, Poly2, Rat2, RatFn,
};

/// Largest degree searched for a polar branch `t = phi(u)` or `u = psi(t)`.
pub const MAX_BRANCH_DEGREE: usize = 3;

/// A curve on `P^1 x P^1` given in the affine chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurfaceCurve {
    /// `t = b`.
    Horizontal(FqElem),
    /// `u = a`.
    Vertical(FqElem),
    /// `t = phi(u)` with `deg phi >= 1`.
    Graph(Poly),
    /// `u = psi(t)` with `deg psi >= 2`.
    TransposedGraph(Poly),
}

impl SurfaceCurve {
    /// `t = phi(u)`, collapsing constant `phi` to a horizontal line.
    pub fn graph(phi: Poly) -> SurfaceCurve {
        if phi.degree() <= 0 {
            SurfaceCurve::Horizontal(phi.coeff(0))
        } else {
            SurfaceCurve::Graph(phi)
        }
    }

    /// Parses `t = <poly in u>` or `u = <constant>`.
    pub fn parse(field: &GaloisField, src: &str) -> Result<SurfaceCurve> {
        let (lhs, rhs) = src
            .split_once('=')
            .ok_or(Error::Parse { pos: 0, msg: "expected `t = ...` or `u = ...`".into() })?;
        match lhs.trim() {
            "t" => Ok(SurfaceCurve::graph(crate::series::parse::parse_poly(field, rhs, "u")?)),
            "u" => {
                let p = crate::series::parse::parse_poly(field, rhs, "t")?;
                match p.degree() {
                    d if d <= 0 => Ok(SurfaceCurve::Vertical(p.coeff(0))),
                    _ => Err(Error::Unsupported("curves u = psi(t) are supported only through a point".into())),
                }
            }
            other => Err(Error::Parse { pos: 0, msg: format!("unknown coordinate `{other}`") }),
        }
    }
}

impl fmt::Display for SurfaceCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceCurve::Horizontal(b) => write!(f, "t={b}"),
            SurfaceCurve::Vertical(a) => write!(f, "u={a}"),
            SurfaceCurve::Graph(p) => write!(f, "t={}", p.display("u")),
            SurfaceCurve::TransposedGraph(p) => write!(f, "u={}", p.display("t")),
        }
    }
}

/// One residue in a relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidueEntry {
    /// The curve (point relation) or the point (curve relation).
    pub label: String,
    pub degree: usize,
    pub residue: u32,
    /// `"2d"` for an expansion in the two-dimensional field at the flag,
    /// `"trace"` for the traced residue of the restricted form at a higher-degree point.
    pub method: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidueReport {
    pub entries: Vec<ResidueEntry>,
    pub sum: u32,
    pub holds: bool,
}

impl ResidueReport {
    fn new(field: &GaloisField, entries: Vec<ResidueEntry>) -> ResidueReport {
        let sum = entries.iter().fold(FqElem::ZERO, |acc, e| field.add(acc, FqElem(e.residue)));
        ResidueReport { entries, sum: sum.0, holds: sum.is_zero() }
    }
}

/// Polynomials `c_1 x + ... + c_d x^d` of exact degree `d`.
fn branch_candidates(field: &GaloisField, d: usize) -> impl Iterator<Item = Poly> + '_ {
    let q = field.size();
    (0..(q as usize).pow(d as u32))
        .map(move |idx| {
            let mut c = vec![FqElem::ZERO];
            c.extend(vector_of_index(q, d, idx));
            Poly::new(c)
        })
        .filter(move |p| p.degree() == d as isize)
}

/// Divides out every copy of `factor`; true if it divided at least once.
fn divide_out(field: &GaloisField, rest: &mut Poly2, factor: &Poly2) -> bool {
    let mut hit = false;
    while let Some(q) = poly2::div_exact(field, rest, factor) {
        *rest = q;
        hit = true;
    }
    hit
}

/// The polar curves of `g du^dt` through the origin, as flags.
pub fn polar_flags_at_origin(field: &GaloisField, g: &Rat2) -> Result<Vec<(String, Flag)>> {
    let den = &g.den;
    let mut out = Vec::new();
    let a = den.u_order().unwrap_or(0);
    let b = den.t_order().unwrap_or(0);
    if b > 0 {
        out.push(("t=0".to_string(), Flag::t_axis()));
    }
    if a > 0 {
        out.push(("u=0".to_string(), Flag::u_axis()));
    }
    let mut rest = den.strip_monomial(a, b);
    let vanishes = |p: &Poly2| p.eval(field, FqElem::ZERO, FqElem::ZERO).is_zero();
    if (field.size() as usize).pow(MAX_BRANCH_DEGREE as u32) > 1 << 16 {
        return Err(Error::Unsupported("branch search is limited to small fields".into()));
    }
    for d in 1..=MAX_BRANCH_DEGREE {
        if !vanishes(&rest) {
            break;
        }
        for phi in branch_candidates(field, d) {
            let factor = poly2::sub(field, &Poly2::t(), &Poly2::from_u(phi.clone()));
            if divide_out(field, &mut rest, &factor) {
                out.push((format!("t={}", phi.display("u")), Flag::graph_t(phi)));
            }
        }
        if d >= 2 {
            for psi in branch_candidates(field, d) {
                let factor = poly2::sub(field, &Poly2::u(), &Poly2::from_t(&psi));
                if divide_out(field, &mut rest, &factor) {
                    out.push((format!("u={}", psi.display("t")), Flag::graph_u(psi)));
                }
            }
        }
    }
    if vanishes(&rest) {
        return Err(Error::Unsupported(format!(
            "a polar branch through the origin is not a graph of degree at most {MAX_BRANCH_DEGREE}"
        )));
    }
    Ok(out)
}

/// `sum_{C through 0} res_{0,C}(g du^dt)` over the polar curves through the origin.
pub fn residue_relation_point(field: &Field, g: &Rat2) -> Result<ResidueReport> {
    let mut entries = Vec::new();
    if !g.num.is_zero() {
        for (label, flag) in polar_flags_at_origin(field, g)? {
            let r = residue_2d(field, g, &flag)?;
            entries.push(ResidueEntry { label, degree: 1, residue: r.0, method: "2d".into() });
        }
    }
    Ok(ResidueReport::new(field, entries))
}

/// `p(1/w, t) w^deg_u(p)` as a polynomial in `(w, t)`.
fn reverse_u(field: &GaloisField, p: &Poly2) -> (Poly2, usize) {
    let n = p.u_degree().max(0) as usize;
    let mut out = Poly2::zero();
    for (i, j, c) in p.terms() {
        out = poly2::add(field, &out, &Poly2::monomial(c, n - i, j));
    }
    (out, n)
}

/// `g du^dt` in the chart `w = 1/u`, as `h dw^dt` with `h = -g(1/w, t)/w^2`.
pub fn chart_invert_u(field: &GaloisField, g: &Rat2) -> Rat2 {
    let (num, n) = reverse_u(field, &g.num);
    let (den, d) = reverse_u(field, &g.den);
    let num = poly2::neg(field, &num);
    // g(1/w, t) = w^{d - n} num / den
    let shift = d as i64 - n as i64 - 2;
    let (num, den) = if shift >= 0 {
        (poly2::mul(field, &num, &Poly2::monomial(FqElem::ONE, shift as usize, 0)), den)
    } else {
        (num, poly2::mul(field, &den, &Poly2::monomial(FqElem::ONE, (-shift) as usize, 0)))
    };
    Rat2 { num, den }
}

/// `g du^dt` in the chart `s = 1/t`, as `h du^ds`.
pub fn chart_invert_t(field: &GaloisField, g: &Rat2) -> Rat2 {
    let swapped = Rat2 { num: g.num.swap(), den: g.den.swap() };
    let h = chart_invert_u(field, &swapped);
    Rat2 { num: h.num.swap(), den: h.den.swap() }
}

/// Flag of `curve` at its point with parameter value `x`.
fn flag_at(field: &GaloisField, curve: &SurfaceCurve, x: FqElem) -> Flag {
    match curve {
        SurfaceCurve::Horizontal(b) => Flag::t_axis().at(x, *b),
        SurfaceCurve::Vertical(a) => Flag::u_axis().at(*a, x),
        SurfaceCurve::Graph(phi) => {
            let y = poly::eval(field, phi, x);
            let moved = poly::compose(field, phi, &Poly::new(vec![x, FqElem::ONE]));
            let local = poly::sub(field, &moved, &Poly::constant(y));
            Flag::graph_t(local).at(x, y)
        }
        SurfaceCurve::TransposedGraph(psi) => {
            let y = poly::eval(field, psi, x);
            let moved = poly::compose(field, psi, &Poly::new(vec![x, FqElem::ONE]));
            let local = poly::sub(field, &moved, &Poly::constant(y));
            Flag::graph_u(local).at(y, x)
        }
    }
}

/// The restricted 1-form `R(x) dx` on `curve`, in the curve's parameter.
fn restricted_form(field: &GaloisField, g: &Rat2, curve: &SurfaceCurve) -> Result<Option<RatFn>> {
    let base = flag_at(field, curve, FqElem::ZERO);
    let local = change_coordinates(field, g, &base, true)?;
    if local.num.is_zero() {
        return Ok(None);
    }
    let m = local.den.t_order().ok_or(Error::DivisionByZero)?;
    if m == 0 {
        return Ok(None);
    }
    let (_, levels) = exact_levels(field, &local, m)?;
    Ok(Some(levels[m - 1].clone()))
}

/// `sum_{x in C} res_{x,C}(g du^dt)` over the points of `curve`, infinity included.
pub fn residue_relation_curve(field: &Field, g: &Rat2, curve: &SurfaceCurve) -> Result<ResidueReport> {
    if let SurfaceCurve::TransposedGraph(_) = curve {
        return Err(Error::Unsupported("curves u = psi(t) of degree at least 2".into()));
    }
    let mut entries = Vec::new();
    let form = match restricted_form(field, g, curve)? {
        Some(r) => r,
        None => return Ok(ResidueReport::new(field, entries)),
    };
    let var = if matches!(curve, SurfaceCurve::Vertical(_)) { "t" } else { "u" };
    for place in form.poles(field)? {
        let Place::Finite(pi) = &place else { continue };
        let entry = if pi.degree() == 1 {
            let x = field.neg(pi.coeff(0));
            let r = residue_2d(field, g, &flag_at(field, curve, x))?;
            ResidueEntry { label: format!("{var}={x}"), degree: 1, residue: r.0, method: "2d".into() }
        } else {
            let r = place_residue(field, &form, &place)?;
            ResidueEntry { label: format!("{}", pi.display(var)), degree: pi.degree() as usize, residue: r.0, method: "trace".into() }
        };
        entries.push(entry);
    }
    let at_infinity = match curve {
        SurfaceCurve::Horizontal(b) => {
            let h = chart_invert_u(field, g);
            ResidueEntry { label: "u=inf".into(), degree: 1, residue: residue_2d(field, &h, &Flag::t_axis().at(FqElem::ZERO, *b))?.0, method: "2d".into() }
        }
        SurfaceCurve::Vertical(a) => {
            let h = chart_invert_t(field, g);
            ResidueEntry { label: "t=inf".into(), degree: 1, residue: residue_2d(field, &h, &Flag::u_axis().at(*a, FqElem::ZERO))?.0, method: "2d".into() }
        }
        _ => {
            let r = place_residue(field, &form, &Place::Infinity)?;
            ResidueEntry { label: "u=inf".into(), degree: 1, residue: r.0, method: "chart".into() }
        }
    };
    entries.push(at_infinity);
    Ok(ResidueReport::new(field, entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field_of_order;
    use crate::series::parse::parse_form2;
    use crate::surface::{CURVE_CATALOG, POINT_CATALOG};

    fn labels(r: &ResidueReport) -> Vec<(String, u32)> {
        r.entries.iter().map(|e| (e.label.clone(), e.residue)).collect()
    }

    #[test]
    fn point_examples() {
        let f = field_of_order(3).unwrap();
        let w = parse_form2(&f, "1/(u*t) * du^dt").unwrap();
        let rep = residue_relation_point(&f, &w).unwrap();
        assert_eq!(labels(&rep), vec![("t=0".into(), 1), ("u=0".into(), 2)]);
        assert!(rep.holds);
        let w = parse_form2(&f, "1/(u*t*(u+t)) * du^dt").unwrap();
        let rep = residue_relation_point(&f, &w).unwrap();
        assert_eq!(rep.entries.len(), 3);
        assert!(rep.holds);
        let w = parse_form2(&f, "t * du^dt").unwrap();
        assert!(residue_relation_point(&f, &w).unwrap().entries.is_empty());
    }

    #[test]
    fn cusp_branch_is_unsupported() {
        let f = field_of_order(3).unwrap();
        let w = parse_form2(&f, "1/(u^2+t^3) * du^dt").unwrap();
        assert!(matches!(residue_relation_point(&f, &w), Err(Error::Unsupported(_))));
    }

    #[test]
    fn curve_examples() {
        let f = field_of_order(2).unwrap();
        let w = parse_form2(&f, "1/(u*t) * du^dt").unwrap();
        let rep = residue_relation_curve(&f, &w, &SurfaceCurve::Horizontal(FqElem::ZERO)).unwrap();
        assert_eq!(labels(&rep), vec![("u=0".into(), 1), ("u=inf".into(), 1)]);
        assert!(rep.holds);
        let w = parse_form2(&f, "1/((u^2+u+1)*t) * du^dt").unwrap();
        let rep = residue_relation_curve(&f, &w, &SurfaceCurve::Horizontal(FqElem::ZERO)).unwrap();
        assert_eq!(rep.entries[0].degree, 2);
        assert_eq!(rep.entries[0].residue, 0);
        assert!(rep.holds);
        let w = parse_form2(&f, "t * du^dt").unwrap();
        assert!(residue_relation_curve(&f, &w, &SurfaceCurve::Vertical(FqElem::ONE)).unwrap().entries.is_empty());
    }

    #[test]
    fn charts_agree_with_the_one_dimensional_residue_at_infinity() {
        let f = field_of_order(3).unwrap();
        let w = parse_form2(&f, "(u+t)/(u^3*(t-1)) * du^dt").unwrap();
        let curve = SurfaceCurve::Horizontal(FqElem::ONE);
        let form = restricted_form(&f, &w, &curve).unwrap().unwrap();
        let one_d = place_residue(&f, &form, &Place::Infinity).unwrap();
        let rep = residue_relation_curve(&f, &w, &curve).unwrap();
        assert_eq!(rep.entries.last().unwrap().residue, one_d.0);
    }

    #[test]
    fn shipped_catalog_holds() {
        for (q, src) in POINT_CATALOG {
            let f = field_of_order(*q).unwrap();
            let w = parse_form2(&f, src).unwrap();
            let rep = residue_relation_point(&f, &w).unwrap();
            assert!(rep.holds, "{src} over F_{q}: {rep:?}");
        }
        for (q, curve, src) in CURVE_CATALOG {
            let f = field_of_order(*q).unwrap();
            let w = parse_form2(&f, src).unwrap();
            let c = SurfaceCurve::parse(&f, curve).unwrap();
            let rep = residue_relation_curve(&f, &w, &c).unwrap();
            assert!(rep.holds, "{src} on {curve} over F_{q}: {rep:?}");
        }
        assert!(POINT_CATALOG.iter().filter(|e| e.0 == 2).count() >= 5);
        assert!(POINT_CATALOG.iter().filter(|e| e.0 == 3).count() >= 5);
        assert!(CURVE_CATALOG.iter().filter(|e| e.0 == 2).count() >= 5);
        assert!(CURVE_CATALOG.iter().filter(|e| e.0 == 3).count() >= 5);
    }
}
