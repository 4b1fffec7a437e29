//! Iterated Laurent series `F_q((u))((t))` and expansion at a flag.

use crate::algebra::{poly, Field, FqElem, GaloisField, Poly};
use crate::error::{Error, Result};

use super::expand::{expand_rational_1d, place_residue};
use super::laurent::LaurentSeries1D;
use super::poly2::{self, Poly2};
use super::ratfn::{Place, RatFn};

/// A truncated element of `F_q((u))((t))`: levels `lo_t..hi_t` in `t`, each
/// a truncated Laurent series in `u`. Levels below `lo_t` are zero.
#[derive(Clone, Debug)]
pub struct IteratedSeries2D {
    field: Field,
    lo_t: i64,
    levels: Vec<LaurentSeries1D>,
}

impl IteratedSeries2D {
    pub fn new(field: Field, lo_t: i64, levels: Vec<LaurentSeries1D>) -> IteratedSeries2D {
        IteratedSeries2D { field, lo_t, levels }
    }

    /// Builds a series from `(u_exp, t_exp, coeff)` terms, known on
    /// `t < hi_t` and, at every level, on `u < hi_u`.
    pub fn from_terms(field: Field, terms: &[(i64, i64, FqElem)], lo_t: i64, hi_t: i64, lo_u: i64, hi_u: i64) -> IteratedSeries2D {
        let mut levels: Vec<LaurentSeries1D> = (lo_t..hi_t).map(|_| LaurentSeries1D::zero(field.clone(), lo_u, hi_u)).collect();
        for &(i, j, c) in terms {
            assert!(j >= lo_t && j < hi_t && i >= lo_u && i < hi_u, "term outside the stated window");
            let lvl = &levels[(j - lo_t) as usize];
            let mut cs: Vec<FqElem> = (lo_u..hi_u).map(|e| lvl.coeff(e).expect("inside window")).collect();
            cs[(i - lo_u) as usize] = field.add(cs[(i - lo_u) as usize], c);
            levels[(j - lo_t) as usize] = LaurentSeries1D::new(field.clone(), lo_u, cs);
        }
        IteratedSeries2D { field, lo_t, levels }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn lo_t(&self) -> i64 {
        self.lo_t
    }

    pub fn hi_t(&self) -> i64 {
        self.lo_t + self.levels.len() as i64
    }

    pub fn levels(&self) -> impl Iterator<Item = (i64, &LaurentSeries1D)> {
        self.levels.iter().enumerate().map(move |(k, s)| (self.lo_t + k as i64, s))
    }

    /// The `t^e` level; `None` below the window (known zero).
    pub fn level(&self, e: i64) -> Result<Option<&LaurentSeries1D>> {
        if e >= self.hi_t() {
            return Err(Error::Precision(format!("t-level {e} beyond truncation {}", self.hi_t())));
        }
        Ok(if e < self.lo_t { None } else { Some(&self.levels[(e - self.lo_t) as usize]) })
    }

    /// Coefficient of `u^i t^j`.
    pub fn coeff(&self, i: i64, j: i64) -> Result<FqElem> {
        match self.level(j)? {
            None => Ok(FqElem::ZERO),
            Some(s) => s.coeff(i),
        }
    }

    /// Rank-two valuation `(v_t, v_u)`, read lexicographically.
    pub fn valuation(&self) -> Option<(i64, i64)> {
        self.levels().find_map(|(e, s)| s.valuation().map(|v| (e, v)))
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        if *self.field != *o.field {
            return Err(Error::FieldMismatch);
        }
        let lo = self.lo_t.min(o.lo_t);
        let hi = self.hi_t().min(o.hi_t()).max(lo);
        let mut levels = Vec::new();
        for e in lo..hi {
            levels.push(match (self.level(e)?, o.level(e)?) {
                (Some(a), Some(b)) => a.add(b)?,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => LaurentSeries1D::zero(self.field.clone(), 0, 0),
            });
        }
        Ok(IteratedSeries2D { field: self.field.clone(), lo_t: lo, levels })
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if *self.field != *o.field {
            return Err(Error::FieldMismatch);
        }
        let va = self.valuation().map_or(self.hi_t(), |v| v.0);
        let vb = o.valuation().map_or(o.hi_t(), |v| v.0);
        let lo = self.lo_t + o.lo_t;
        let hi = (va + o.hi_t()).min(vb + self.hi_t()).max(lo);
        let mut levels = Vec::new();
        for e in lo..hi {
            let mut acc: Option<LaurentSeries1D> = None;
            for (ea, a) in self.levels() {
                let eb = e - ea;
                if eb < o.lo_t || eb >= o.hi_t() {
                    continue;
                }
                let b = o.level(eb)?.expect("inside window");
                if a.valuation().is_none() && a.hi() <= a.lo() || b.valuation().is_none() && b.hi() <= b.lo() {
                    continue;
                }
                let p = a.mul(b)?;
                acc = Some(match acc {
                    None => p,
                    Some(x) => x.add(&p)?,
                });
            }
            levels.push(acc.unwrap_or_else(|| LaurentSeries1D::zero(self.field.clone(), 0, 0)));
        }
        Ok(IteratedSeries2D { field: self.field.clone(), lo_t: lo, levels })
    }

    /// Equality on the common known window.
    pub fn agrees_with(&self, o: &Self) -> bool {
        let lo = self.lo_t.min(o.lo_t);
        let hi = self.hi_t().min(o.hi_t());
        (lo..hi).all(|e| match (self.level(e).ok().flatten(), o.level(e).ok().flatten()) {
            (Some(a), Some(b)) => a == b,
            (Some(a), None) | (None, Some(a)) => a.valuation().is_none(),
            (None, None) => true,
        })
    }
}

impl std::fmt::Display for IteratedSeries2D {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (e, s) in self.levels() {
            for (i, c) in s.terms() {
                write!(out, "{c}*u^{i}*t^{e} + ")?;
            }
        }
        write!(out, "O(t^{})", self.hi_t())
    }
}

/// A rational function of `u` and `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rat2 {
    pub num: Poly2,
    pub den: Poly2,
}

impl Rat2 {
    pub fn new(num: Poly2, den: Poly2) -> Result<Rat2> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat2 { num, den })
    }

    pub fn from_poly(p: Poly2) -> Rat2 {
        Rat2 { num: p, den: Poly2::one() }
    }

    pub fn mul(&self, f: &GaloisField, o: &Rat2) -> Rat2 {
        Rat2 { num: poly2::mul(f, &self.num, &o.num), den: poly2::mul(f, &self.den, &o.den) }
    }

    pub fn add(&self, f: &GaloisField, o: &Rat2) -> Rat2 {
        Rat2 {
            num: poly2::add(f, &poly2::mul(f, &self.num, &o.den), &poly2::mul(f, &o.num, &self.den)),
            den: poly2::mul(f, &self.den, &o.den),
        }
    }
}

/// Shape of a smooth curve through the base point of a flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurveShape {
    /// `t - b = phi(u - a)` with `phi(0) = 0`; `phi = 0` is the line `t = b`.
    TGraph(Poly),
    /// `u - a = psi(t - b)` with `psi(0) = 0`; `psi = 0` is the line `u = a`.
    UGraph(Poly),
}

/// A point-curve flag at a rational point, with a transversal coordinate.
///
/// New coordinates `(u', t')` have `t' = 0` cutting out the curve; the
/// transversal `u'` restricts to a local parameter on it. `transversal_shift`
/// tilts `u'` by a multiple of `t'`, which must not change any residue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flag {
    pub point: (FqElem, FqElem),
    pub curve: CurveShape,
    pub transversal_shift: FqElem,
}

impl Flag {
    /// The curve `t = 0` at the origin.
    pub fn t_axis() -> Flag {
        Flag { point: (FqElem::ZERO, FqElem::ZERO), curve: CurveShape::TGraph(Poly::zero()), transversal_shift: FqElem::ZERO }
    }

    /// The curve `u = 0` at the origin.
    pub fn u_axis() -> Flag {
        Flag { point: (FqElem::ZERO, FqElem::ZERO), curve: CurveShape::UGraph(Poly::zero()), transversal_shift: FqElem::ZERO }
    }

    pub fn graph_t(phi: Poly) -> Flag {
        Flag { curve: CurveShape::TGraph(phi), ..Flag::t_axis() }
    }

    pub fn graph_u(psi: Poly) -> Flag {
        Flag { curve: CurveShape::UGraph(psi), ..Flag::t_axis() }
    }

    pub fn at(mut self, u0: FqElem, t0: FqElem) -> Flag {
        self.point = (u0, t0);
        self
    }

    pub fn with_shift(mut self, shift: FqElem) -> Flag {
        self.transversal_shift = shift;
        self
    }

    /// `(u, t)` as polynomials in `(u', t')`.
    pub fn substitution(&self, f: &GaloisField) -> Result<(Poly2, Poly2)> {
        let (a, b) = self.point;
        let shape = match &self.curve {
            CurveShape::TGraph(p) | CurveShape::UGraph(p) => p,
        };
        if !shape.coeff(0).is_zero() {
            return Err(Error::Unsupported("curve does not pass through the base point".into()));
        }
        // s = u' - shift * t', the coordinate along the curve
        let along = poly2::sub(f, &Poly2::u(), &poly2::scale(f, &Poly2::t(), self.transversal_shift));
        let across = poly2::add(f, &Poly2::t(), &poly2::substitute(f, &Poly2::from_u(shape.clone()), &along, &Poly2::zero()));
        let (su, st) = match self.curve {
            CurveShape::TGraph(_) => (along, across),
            CurveShape::UGraph(_) => (across, along),
        };
        Ok((poly2::add(f, &su, &Poly2::constant(a)), poly2::add(f, &st, &Poly2::constant(b))))
    }
}

/// `f` rewritten in flag coordinates, times the Jacobian `d(u,t)/d(u',t')`
/// when `with_jacobian` is set.
pub fn change_coordinates(f: &GaloisField, r: &Rat2, flag: &Flag, with_jacobian: bool) -> Result<Rat2> {
    let (su, st) = flag.substitution(f)?;
    let mut num = poly2::substitute(f, &r.num, &su, &st);
    let den = poly2::substitute(f, &r.den, &su, &st);
    if den.is_zero() {
        return Err(Error::Degenerate("denominator vanishes after the change of coordinates".into()));
    }
    if with_jacobian {
        let jac = poly2::sub(
            f,
            &poly2::mul(f, &poly2::d_du(f, &su), &poly2::d_dt(f, &st)),
            &poly2::mul(f, &poly2::d_dt(f, &su), &poly2::d_du(f, &st)),
        );
        num = poly2::mul(f, &num, &jac);
    }
    Ok(Rat2 { num, den })
}

/// Exact `t`-levels of `num/den`: the first `count` levels starting at the
/// `t`-order of the expansion, each a rational function of `u`.
pub fn exact_levels(f: &GaloisField, r: &Rat2, count: usize) -> Result<(i64, Vec<RatFn>)> {
    let m = r.den.t_order().ok_or(Error::DivisionByZero)?;
    let dm = r.den.row(m);
    let mut p_seq: Vec<Poly> = vec![Poly::one()];
    let mut dm_pows: Vec<Poly> = vec![Poly::one()];
    for n in 1..count {
        dm_pows.push(poly::mul(f, &dm_pows[n - 1], &dm));
        let mut acc = Poly::zero();
        for j in 1..=n {
            let term = poly::mul(f, &poly::mul(f, &r.den.row(m + j), &p_seq[n - j]), &dm_pows[j - 1]);
            acc = poly::sub(f, &acc, &term);
        }
        p_seq.push(acc);
    }
    if count > 0 {
        dm_pows.push(poly::mul(f, &dm_pows[count - 1], &dm));
    }
    let mut out = Vec::with_capacity(count);
    for s in 0..count {
        let mut num = Poly::zero();
        for i in 0..=s {
            let term = poly::mul(f, &poly::mul(f, &r.num.row(i), &p_seq[s - i]), &dm_pows[i]);
            num = poly::add(f, &num, &term);
        }
        out.push(RatFn::new(f, num, dm_pows[s + 1].clone())?);
    }
    Ok((-(m as i64), out))
}

/// Expansion of `r` in `F_q((u'))((t'))` at `flag`, with `prec_t` levels from
/// the `t'`-order and `prec_u` coefficients per level above its valuation.
pub fn expand_rational_2d(field: &Field, r: &Rat2, flag: &Flag, prec_t: usize, prec_u: usize) -> Result<IteratedSeries2D> {
    if prec_u == 0 {
        return Err(Error::contract("inner precision must be at least 1"));
    }
    let local = change_coordinates(field, r, flag, false)?;
    let (lo, levels) = exact_levels(field, &local, prec_t)?;
    let origin = Place::rational(field, FqElem::ZERO);
    let mut out = Vec::with_capacity(levels.len());
    for lvl in &levels {
        out.push(expand_rational_1d(field, lvl, &origin, prec_u)?.series);
    }
    Ok(IteratedSeries2D::new(field.clone(), lo, out))
}

/// `res_flag(g du^dt)`: the `u'^{-1} t'^{-1}` coefficient of `g` written
/// against `du'^dt'`, with the curve's equation `t'` last.
pub fn residue_2d(field: &Field, g: &Rat2, flag: &Flag) -> Result<FqElem> {
    let local = change_coordinates(field, g, flag, true)?;
    if local.num.is_zero() {
        return Ok(FqElem::ZERO);
    }
    let m = local.den.t_order().ok_or(Error::DivisionByZero)? as i64;
    if m == 0 {
        return Ok(FqElem::ZERO);
    }
    let (_, levels) = exact_levels(field, &local, m as usize)?;
    let level = &levels[(m - 1) as usize];
    place_residue(field, level, &Place::rational(field, FqElem::ZERO))
}
