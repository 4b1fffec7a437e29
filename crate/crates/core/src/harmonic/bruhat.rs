use std::fmt;

use serde::Serialize;

use crate::adeles::AdeleWindow;
use crate::algebra::{Field, FqElem};
use crate::curve::Divisor;
use crate::error::{Error, Result};
use crate::linalg::span_basis;
use crate::scalar::Scalar;
use crate::series::{Place, RatFn};

use super::fourier::{fourier, window_space};
use super::table::FnTable;

/// The four Bruhat types, by (support bounded, locally constant).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BruhatType {
    /// bounded support, locally constant
    D,
    /// unbounded support, locally constant
    E,
    /// unbounded support, not locally constant
    DPrime,
    /// bounded support, not locally constant
    EPrime,
}

impl BruhatType {
    pub fn from_flags(support_bounded: bool, locally_constant: bool) -> BruhatType {
        match (support_bounded, locally_constant) {
            (true, true) => BruhatType::D,
            (false, true) => BruhatType::E,
            (false, false) => BruhatType::DPrime,
            (true, false) => BruhatType::EPrime,
        }
    }

    /// The type a Fourier transform should have.
    pub fn dual(self) -> BruhatType {
        match self {
            BruhatType::D => BruhatType::D,
            BruhatType::E => BruhatType::EPrime,
            BruhatType::DPrime => BruhatType::DPrime,
            BruhatType::EPrime => BruhatType::E,
        }
    }
}

impl fmt::Display for BruhatType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BruhatType::D => "D",
            BruhatType::E => "E",
            BruhatType::DPrime => "D'",
            BruhatType::EPrime => "E'",
        })
    }
}

/// The four catalog distributions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CatalogKind {
    /// characteristic function of `A(D)`
    Divisor,
    /// delta-sum over the global lattice
    Global,
    /// delta-sum over the embedded `H^0 = L(D)`
    H0,
    /// characteristic function of `A(D) + K`
    H1,
}

#[derive(Clone, Debug, Serialize)]
pub struct DeltaCatalogEntry {
    pub kind: CatalogKind,
    pub divisor: String,
    pub support_bounded: bool,
    pub locally_constant: bool,
}

/// A nested family `W_0 ⊂ W_1 ⊂ ...`: `D_low` decreasing, `D_high` increasing.
#[derive(Clone, Debug)]
pub struct WindowFamily {
    pub windows: Vec<AdeleWindow>,
}

impl WindowFamily {
    pub fn new(windows: Vec<AdeleWindow>) -> Result<WindowFamily> {
        if windows.len() < 3 {
            return Err(Error::Instability("a window family needs at least three windows".into()));
        }
        for pair in windows.windows(2) {
            if pair[0].places() != pair[1].places() || !pair[1].low().le(pair[0].low()) || !pair[0].high().le(pair[1].high()) {
                return Err(Error::contract("windows must share places and be nested"));
            }
        }
        Ok(WindowFamily { windows })
    }

    /// `S = {(t), inf}`, `D_low = -(2+k) inf - k (t)`, `D_high = k (t) + k inf` for `k < count`.
    pub fn standard(field: &Field, count: usize) -> Result<WindowFamily> {
        let t = Place::rational(field, FqElem::ZERO);
        let places = [t.clone(), Place::Infinity];
        let windows = (0..count as i64)
            .map(|k| {
                let low = Divisor::from_parts(field.clone(), [(Place::Infinity, -2 - k), (t.clone(), -k)]);
                let high = Divisor::from_parts(field.clone(), [(Place::Infinity, k), (t.clone(), k)]);
                AdeleWindow::new(&places, &low, &high)
            })
            .collect::<Result<Vec<_>>>()?;
        WindowFamily::new(windows)
    }

    pub fn duals(&self) -> Result<WindowFamily> {
        WindowFamily::new(self.windows.iter().map(|w| w.dual()).collect::<Result<_>>()?)
    }
}

/// Per-place profile: the smallest divisor whose subgroup contains the support.
fn support_profile<S: Scalar>(w: &AdeleWindow, t: &FnTable<S>) -> Vec<i64> {
    w.blocks()
        .iter()
        .map(|b| {
            let mut need = -b.hi; // D with -D = hi: empty contribution
            for idx in t.support() {
                let v = t.space.vector(idx);
                if let Some(e) = (b.lo..b.hi).find(|&e| (0..b.degree()).any(|i| !v[b.index(e, i)].is_zero())) {
                    need = need.max(-e);
                }
            }
            need
        })
        .collect()
}

/// Per-place profile: the largest divisor whose subgroup leaves `t` invariant.
fn invariance_profile<S: Scalar>(w: &AdeleWindow, t: &FnTable<S>) -> Vec<i64> {
    let f = w.field();
    let invariant_under = |dir: &[FqElem]| -> bool {
        (0..t.space.size()).all(|i| {
            let v = t.space.vector(i);
            let moved: Vec<FqElem> = v.iter().zip(dir).map(|(a, b)| f.add(*a, *b)).collect();
            t.values[i] == *t.at(&moved)
        })
    };
    w.blocks()
        .iter()
        .map(|b| {
            // walk exponents from the top of the window downward
            let mut reach = -b.hi;
            for e in (b.lo..b.hi).rev() {
                let ok = (0..b.degree()).all(|i| {
                    let mut dir = vec![FqElem::ZERO; w.dim()];
                    dir[b.index(e, i)] = FqElem::ONE;
                    invariant_under(&dir)
                });
                if !ok {
                    break;
                }
                reach = -e;
            }
            reach
        })
        .collect()
}

/// `Some(true)` if the sequence never changes, `Some(false)` if it moves at
/// every step in the direction `grows`, `None` otherwise.
fn trend(seq: &[Vec<i64>], grows: impl Fn(i64, i64) -> bool) -> Option<bool> {
    let pairs: Vec<(&Vec<i64>, &Vec<i64>)> = seq.windows(2).map(|p| (&p[0], &p[1])).collect();
    if pairs.iter().all(|(a, b)| a == b) {
        return Some(true);
    }
    let moves = pairs.iter().all(|(a, b)| a.iter().zip(b.iter()).all(|(x, y)| x == y || grows(*x, *y)) && a != b);
    moves.then_some(false)
}

/// Support/invariance flags of a family of tables (one per window).
pub fn classify<S: Scalar>(family: &WindowFamily, tables: &[FnTable<S>]) -> Result<(bool, bool)> {
    if tables.len() != family.windows.len() {
        return Err(Error::contract("one table per window is required"));
    }
    let supports: Vec<Vec<i64>> = family.windows.iter().zip(tables).map(|(w, t)| support_profile(w, t)).collect();
    let invariances: Vec<Vec<i64>> = family.windows.iter().zip(tables).map(|(w, t)| invariance_profile(w, t)).collect();
    let bounded = trend(&supports, |x, y| y > x)
        .ok_or_else(|| Error::Instability(format!("support profile is not stable across the family: {supports:?}")))?;
    let constant = trend(&invariances, |x, y| y < x)
        .ok_or_else(|| Error::Instability(format!("invariance profile is not stable across the family: {invariances:?}")))?;
    Ok((bounded, constant))
}

/// The catalog entry's table on one window.
pub fn catalog_table<S: Scalar>(kind: &CatalogKind, d: &Divisor, w: &AdeleWindow) -> Result<FnTable<S>> {
    let space = window_space(w)?;
    Ok(match kind {
        CatalogKind::Divisor => FnTable::indicator(space, &w.subgroup_basis(d)?),
        CatalogKind::Global => FnTable::indicator(space, &w.global_image()?),
        CatalogKind::H0 => {
            let model = crate::curve::CurveModel::projective_line(w.field().clone());
            let sections: Vec<RatFn> = crate::curve::rr_space_basis(&model, d)?;
            let vecs = sections.iter().map(|f| w.embed_global(f)).collect::<Result<Vec<_>>>()?;
            FnTable::indicator(space, &vecs)
        }
        CatalogKind::H1 => {
            let mut gens = w.subgroup_basis(d)?;
            gens.extend(w.global_image()?);
            FnTable::indicator(space, &span_basis(w.field(), w.dim(), &gens))
        }
    })
}

/// Classification of one entry and of its transform across a family.
#[derive(Clone, Debug, Serialize)]
pub struct BruhatReport {
    pub entry: DeltaCatalogEntry,
    pub entry_type: BruhatType,
    pub transform_type: BruhatType,
    pub swap_holds: bool,
}

pub fn bruhat_type<S: Scalar>(kind: CatalogKind, d: &Divisor, family: &WindowFamily) -> Result<BruhatReport> {
    let tables: Vec<FnTable<S>> = family.windows.iter().map(|w| catalog_table(&kind, d, w)).collect::<Result<_>>()?;
    let (support_bounded, locally_constant) = classify(family, &tables)?;
    let entry_type = BruhatType::from_flags(support_bounded, locally_constant);
    let hats: Vec<FnTable<S>> = family.windows.iter().zip(&tables).map(|(w, t)| fourier(t, w).map(|r| r.0)).collect::<Result<_>>()?;
    let dual_family = family.duals()?;
    let (b2, c2) = classify(&dual_family, &hats)?;
    let transform_type = BruhatType::from_flags(b2, c2);
    Ok(BruhatReport {
        entry: DeltaCatalogEntry { kind, divisor: d.to_string(), support_bounded, locally_constant },
        entry_type,
        swap_holds: transform_type == entry_type.dual(),
        transform_type,
    })
}

/// The shipped catalog: `delta_D` with `D = 0`, `delta_H1` with `D = -2 inf`,
/// `delta_K`, and `delta_H0` with `D = 0`.
pub fn standard_catalog(field: &Field) -> Vec<(CatalogKind, Divisor)> {
    let zero = Divisor::zero(field.clone());
    let minus_two = Divisor::point(field.clone(), Place::Infinity, -2);
    vec![
        (CatalogKind::Divisor, zero.clone()),
        (CatalogKind::H1, minus_two),
        (CatalogKind::Global, zero.clone()),
        (CatalogKind::H0, zero),
    ]
}
