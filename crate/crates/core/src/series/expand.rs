//! Local expansions of rational functions of one variable.

use crate::algebra::{embedding, make_field, poly, Field, FqElem, GaloisField, Poly};
use crate::error::{Error, Result};

use super::laurent::LaurentSeries1D;
use super::ratfn::{multiplicity, Place, RatFn};

/// Which local parameter a [`LocalExpansion`] is written in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Uniformizer {
    /// `t - a` at a rational place.
    Linear(FqElem),
    /// `t - alpha` over the residue field `F_{q^d}`, `alpha` a root of the place.
    ShiftedRoot(FqElem),
    /// `z = 1/t` at infinity.
    InverseT,
}

/// Differential against which a residue is read off.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Differential {
    /// `d(x)` for the expansion variable `x`: the coefficient of `x^{-1}`.
    Uniformizer,
    /// `dt` written in `z = 1/t`: `dt = -z^{-2} dz`.
    DtAtInfinity,
}

/// The residue of `s * differential`, in the coefficient field of `s`.
pub fn residue_1d(s: &LaurentSeries1D, differential: Differential) -> Result<FqElem> {
    match differential {
        Differential::Uniformizer => s.coeff(-1),
        Differential::DtAtInfinity => {
            let c = s.coeff(1)?;
            Ok(s.field().neg(c))
        }
    }
}

/// Residue field data for a place of degree `d > 1`.
#[derive(Clone, Debug)]
pub struct ResidueExtension {
    pub big: Field,
    /// Image of each element of the base field, indexed by packed value.
    pub embed: Vec<FqElem>,
    pub root: FqElem,
    pub degree: usize,
}

impl ResidueExtension {
    pub fn new(base: &GaloisField, pi: &Poly) -> Result<ResidueExtension> {
        let d = pi.degree() as usize;
        let big = make_field(base.characteristic() as u64, base.degree() * d, None)?;
        let embed = embedding(base, &big)?;
        let mapped = map_poly(&embed, pi);
        let root = big
            .elements()
            .find(|&r| poly::eval(&big, &mapped, r).is_zero())
            .ok_or_else(|| Error::contract("place has no root in its residue field"))?;
        Ok(ResidueExtension { big, embed, root, degree: d })
    }

    /// `Tr_{F_{q^d}/F_q}`, pulled back to the base field.
    pub fn trace_down(&self, c: FqElem) -> Result<FqElem> {
        let big = &self.big;
        let q = self.embed.len() as u64;
        let mut acc = FqElem::ZERO;
        let mut x = c;
        for _ in 0..self.degree {
            acc = big.add(acc, x);
            x = big.pow(x, q);
        }
        self.embed
            .iter()
            .position(|&e| e == acc)
            .map(|i| FqElem(i as u32))
            .ok_or_else(|| Error::contract("trace left the base field"))
    }
}

pub fn map_poly(embed: &[FqElem], p: &Poly) -> Poly {
    Poly::new(p.coeffs().iter().map(|c| embed[c.0 as usize]).collect())
}

/// The expansion of a global function at one place.
#[derive(Clone, Debug)]
pub struct LocalExpansion {
    pub series: LaurentSeries1D,
    pub place: Place,
    pub uniformizer: Uniformizer,
    pub extension: Option<ResidueExtension>,
}

impl LocalExpansion {
    /// `res_place(f dt)` in the base field, traced down from `F_{q^d}` at
    /// higher-degree places.
    pub fn residue_dt(&self) -> Result<FqElem> {
        match self.uniformizer {
            Uniformizer::InverseT => residue_1d(&self.series, Differential::DtAtInfinity),
            Uniformizer::Linear(_) => residue_1d(&self.series, Differential::Uniformizer),
            Uniformizer::ShiftedRoot(_) => {
                let c = residue_1d(&self.series, Differential::Uniformizer)?;
                self.extension.as_ref().expect("extension data").trace_down(c)
            }
        }
    }
}

/// First `n` coefficients of `a / b` as a power series; `b(0) != 0`.
pub fn power_series_div(f: &GaloisField, a: &Poly, b: &Poly, n: usize) -> Result<Vec<FqElem>> {
    let b0_inv = f.inv(b.coeff(0))?;
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = a.coeff(k);
        for j in 1..=k.min(b.coeffs().len().saturating_sub(1)) {
            acc = f.sub(acc, f.mul(b.coeff(j), out[k - j]));
        }
        out.push(f.mul(acc, b0_inv));
    }
    Ok(out)
}

/// Laurent expansion of `g / h` around `x = 0`, with `precision` coefficients
/// starting at the valuation.
fn expand_at_zero(field: &Field, g: &Poly, h: &Poly, precision: usize) -> Result<LaurentSeries1D> {
    if h.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if g.is_zero() {
        return Ok(LaurentSeries1D::zero(field.clone(), 0, precision as i64));
    }
    let r = g.low_order();
    let m = h.low_order();
    let g1 = Poly::new(g.coeffs()[r..].to_vec());
    let h1 = Poly::new(h.coeffs()[m..].to_vec());
    let coeffs = power_series_div(field, &g1, &h1, precision)?;
    Ok(LaurentSeries1D::new(field.clone(), r as i64 - m as i64, coeffs))
}

/// Expands `f` at `place` with at least `precision` coefficients above the valuation.
pub fn expand_rational_1d(field: &Field, f: &RatFn, place: &Place, precision: usize) -> Result<LocalExpansion> {
    if precision == 0 {
        return Err(Error::contract("precision must be at least 1"));
    }
    match place {
        Place::Infinity => {
            let dn = f.num().degree().max(0) as usize;
            let dd = f.den().degree() as usize;
            let g = f.num().reversed(dn);
            let h = f.den().reversed(dd);
            // f(1/z) = z^{dd - dn} g(z) / h(z)
            let mut s = expand_at_zero(field, &g, &h, precision)?;
            s = shift(s, dd as i64 - dn as i64);
            Ok(LocalExpansion { series: s, place: place.clone(), uniformizer: Uniformizer::InverseT, extension: None })
        }
        Place::Finite(pi) if pi.degree() == 1 => {
            let a = field.neg(pi.coeff(0));
            let sub = Poly::new(vec![a, FqElem::ONE]);
            let g = poly::compose(field, f.num(), &sub);
            let h = poly::compose(field, f.den(), &sub);
            let s = expand_at_zero(field, &g, &h, precision)?;
            Ok(LocalExpansion { series: s, place: place.clone(), uniformizer: Uniformizer::Linear(a), extension: None })
        }
        Place::Finite(pi) => {
            let ext = ResidueExtension::new(field, pi)?;
            let big = &ext.big;
            let sub = Poly::new(vec![ext.root, FqElem::ONE]);
            let g = poly::compose(big, &map_poly(&ext.embed, f.num()), &sub);
            let h = poly::compose(big, &map_poly(&ext.embed, f.den()), &sub);
            let s = expand_at_zero(big, &g, &h, precision)?;
            let root = ext.root;
            Ok(LocalExpansion { series: s, place: place.clone(), uniformizer: Uniformizer::ShiftedRoot(root), extension: Some(ext) })
        }
    }
}

fn shift(s: LaurentSeries1D, by: i64) -> LaurentSeries1D {
    let coeffs: Vec<FqElem> = (s.lo()..s.hi()).map(|e| s.coeff(e).expect("inside window")).collect();
    LaurentSeries1D::new(s.field().clone(), s.lo() + by, coeffs)
}

/// `res_place(f dt)` in `F_q`, choosing a precision that reaches the residue exponent.
pub fn place_residue(field: &Field, f: &RatFn, place: &Place) -> Result<FqElem> {
    if f.is_zero() {
        return Ok(FqElem::ZERO);
    }
    let v = f.ord(field, place);
    let need = match place {
        Place::Infinity => 2 - v,
        _ => -v,
    };
    if need <= 0 {
        return Ok(FqElem::ZERO);
    }
    expand_rational_1d(field, f, place, need as usize)?.residue_dt()
}

/// Digits of the `pi`-adic expansion of `f` for exponents `lo..hi`, each a
/// polynomial of degree `< deg pi`.
///
/// Errors if `f` has a pole of order exceeding `-lo` at `pi`.
pub fn digit_expansion(f: &GaloisField, r: &RatFn, pi: &Poly, lo: i64, hi: i64) -> Result<Vec<Poly>> {
    let n = (hi - lo).max(0) as usize;
    if r.is_zero() {
        return Ok(vec![Poly::zero(); n]);
    }
    let mn = multiplicity(f, r.num(), pi) as i64;
    let md = multiplicity(f, r.den(), pi) as i64;
    let v = mn - md;
    if v < lo {
        return Err(Error::contract(format!("pole of order {} exceeds window bound {}", -v, -lo)));
    }
    let mut out = vec![Poly::zero(); n];
    if hi <= v {
        return Ok(out);
    }
    let g = poly::div_exact(f, r.num(), &poly::pow(f, pi, mn as u32))?;
    let h = poly::div_exact(f, r.den(), &poly::pow(f, pi, md as u32))?;
    let len = (hi - v) as u32;
    let modulus = poly::pow(f, pi, len);
    let mut unit = poly::mulmod(f, &g, &poly::inv_mod(f, &h, &modulus)?, &modulus);
    for e in v..hi {
        let (qt, digit) = poly::divrem(f, &unit, pi)?;
        if e >= lo {
            out[(e - lo) as usize] = digit;
        }
        unit = qt;
    }
    Ok(out)
}

/// `res_pi(f dt)` from the `pi`-adic digits: the `t^{d-1}` coefficient of
/// the digit at exponent `-1`.
pub fn digit_residue(f: &GaloisField, r: &RatFn, pi: &Poly) -> Result<FqElem> {
    let v = r.ord(f, &Place::Finite(pi.clone()));
    if v >= 0 {
        return Ok(FqElem::ZERO);
    }
    let digits = digit_expansion(f, r, pi, v, 0)?;
    let d = pi.degree() as usize;
    Ok(digits[(-1 - v) as usize].coeff(d - 1))
}
