use std::collections::BTreeSet;

use crate::algebra::{Field, FqElem, Poly};
use crate::curve::{rr_space_basis, CurveModel, Divisor};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::series::{digit_expansion, digit_residue, expand_rational_1d, Place, RatFn};

/// One place's slice of a window: exponents `lo..hi` of the local parameter
/// (`pi` at a finite place, `z = 1/t` at infinity), each carrying `degree`
/// coordinates (the `t^i` coefficients of a digit).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaceBlock {
    pub place: Place,
    pub lo: i64,
    pub hi: i64,
    pub offset: usize,
}

impl PlaceBlock {
    pub fn degree(&self) -> usize {
        self.place.degree()
    }

    pub fn dim(&self) -> usize {
        (self.hi - self.lo).max(0) as usize * self.degree()
    }

    /// Coordinate index of the `t^i` part of the digit at exponent `e`.
    pub fn index(&self, e: i64, i: usize) -> usize {
        debug_assert!(e >= self.lo && e < self.hi && i < self.degree());
        self.offset + (e - self.lo) as usize * self.degree() + i
    }
}

/// The finite quotient `A(D_high) / A(D_low)` over a place set `S`, where
/// `A(D) = { a : ord_x(a_x) >= -D(x) for all x }`.
#[derive(Clone, Debug)]
pub struct AdeleWindow {
    field: Field,
    low: Divisor,
    high: Divisor,
    blocks: Vec<PlaceBlock>,
    dim: usize,
}

/// A vector of a window, in its coordinates.
pub type WindowVector = Vec<FqElem>;

impl AdeleWindow {
    /// Checks the window contract: supports inside `S`, `D_low <= D_high`,
    /// and `deg D_low <= -1` so that global sections embed injectively.
    pub fn new(places: &[Place], low: &Divisor, high: &Divisor) -> Result<AdeleWindow> {
        if low.degree() > -1 {
            return Err(Error::contract(format!("deg D_low = {} must be at most -1", low.degree())));
        }
        AdeleWindow::unchecked(places, low, high)
    }

    /// As [`AdeleWindow::new`] without the degree condition; used for dual windows.
    pub fn unchecked(places: &[Place], low: &Divisor, high: &Divisor) -> Result<AdeleWindow> {
        let field = low.field().clone();
        if **high.field() != *field {
            return Err(Error::FieldMismatch);
        }
        let set: BTreeSet<Place> = places.iter().cloned().collect();
        if set.len() != places.len() {
            return Err(Error::contract("place set has repeated entries"));
        }
        for (p, _) in low.support().chain(high.support()) {
            if !set.contains(p) {
                return Err(Error::contract(format!("divisor support {p} outside the place set")));
            }
        }
        if !low.le(high) {
            return Err(Error::contract("D_low must be at most D_high at every place"));
        }
        let mut blocks = Vec::new();
        let mut offset = 0;
        for p in set {
            let b = PlaceBlock { lo: -high.coeff(&p), hi: -low.coeff(&p), offset, place: p };
            offset += b.dim();
            blocks.push(b);
        }
        Ok(AdeleWindow { field, low: low.clone(), high: high.clone(), blocks, dim: offset })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.size() as u64
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn low(&self) -> &Divisor {
        &self.low
    }

    pub fn high(&self) -> &Divisor {
        &self.high
    }

    pub fn blocks(&self) -> &[PlaceBlock] {
        &self.blocks
    }

    pub fn places(&self) -> Vec<Place> {
        self.blocks.iter().map(|b| b.place.clone()).collect()
    }

    pub fn block(&self, place: &Place) -> Option<&PlaceBlock> {
        self.blocks.iter().find(|b| &b.place == place)
    }

    pub fn zero(&self) -> WindowVector {
        vec![FqElem::ZERO; self.dim]
    }

    /// `(omega) - D_high` and `(omega) - D_low` with `omega = dt`: the
    /// window paired perfectly with this one by the residue pairing.
    pub fn dual(&self) -> Result<AdeleWindow> {
        let k = Divisor::canonical(self.field.clone());
        if self.block(&Place::Infinity).is_none() {
            return Err(Error::contract("dual window needs infinity in the place set"));
        }
        AdeleWindow::unchecked(&self.places(), &k.sub(&self.high), &k.sub(&self.low))
    }

    /// The subgroup `A(D) / A(D_low)` for `D_low <= D <= D_high`, as a basis.
    pub fn subgroup_basis(&self, d: &Divisor) -> Result<Vec<WindowVector>> {
        if !self.low.le(d) || !d.le(&self.high) {
            return Err(Error::contract("subgroup divisor must lie between D_low and D_high"));
        }
        let mut out = Vec::new();
        for b in &self.blocks {
            let from = -d.coeff(&b.place);
            for e in from.max(b.lo)..b.hi {
                for i in 0..b.degree() {
                    let mut v = self.zero();
                    v[b.index(e, i)] = FqElem::ONE;
                    out.push(v);
                }
            }
        }
        Ok(out)
    }

    /// Whether a vector lies in `A(D) / A(D_low)`.
    pub fn in_subgroup(&self, v: &[FqElem], d: &Divisor) -> bool {
        self.blocks.iter().all(|b| {
            let from = -d.coeff(&b.place);
            (b.lo..b.hi.min(from)).all(|e| (0..b.degree()).all(|i| v[b.index(e, i)].is_zero()))
        })
    }

    /// The global function `f` in window coordinates.
    pub fn embed_global(&self, f: &RatFn) -> Result<WindowVector> {
        let field = &self.field;
        for p in f.poles(field)? {
            let order = -f.ord(field, &p);
            if order <= 0 {
                continue;
            }
            match self.block(&p) {
                None => return Err(Error::contract(format!("pole at {p} outside the place set"))),
                Some(b) if order > -b.lo => {
                    return Err(Error::contract(format!("pole of order {order} at {p} exceeds D_high = {}", -b.lo)))
                }
                _ => {}
            }
        }
        let mut v = self.zero();
        for b in &self.blocks {
            if b.hi <= b.lo {
                continue;
            }
            match &b.place {
                Place::Finite(pi) => {
                    let digits = digit_expansion(field, f, pi, b.lo, b.hi)?;
                    for (k, digit) in digits.iter().enumerate() {
                        for i in 0..b.degree() {
                            v[b.index(b.lo + k as i64, i)] = digit.coeff(i);
                        }
                    }
                }
                Place::Infinity => {
                    if f.is_zero() {
                        continue;
                    }
                    let val = f.ord(field, &Place::Infinity);
                    if val >= b.hi {
                        continue;
                    }
                    let s = expand_rational_1d(field, f, &Place::Infinity, (b.hi - val) as usize)?.series;
                    for e in b.lo.max(val)..b.hi {
                        v[b.index(e, 0)] = s.coeff(e)?;
                    }
                }
            }
        }
        Ok(v)
    }

    /// Images of a basis of `L(D_high)`: the global lattice `K ∩ A(D_high)` in the window.
    pub fn global_image(&self) -> Result<Vec<WindowVector>> {
        let model = CurveModel::projective_line(self.field.clone());
        rr_space_basis(&model, &self.high)?.iter().map(|f| self.embed_global(f)).collect()
    }

    /// `M[i][j] = sum_x res_x(b_i c_j dt)` for the coordinate bases `b` of this
    /// window and `c` of `other`.
    pub fn pairing_matrix(&self, other: &AdeleWindow) -> Result<Matrix> {
        let field = &self.field;
        let mut m = Matrix::zeros(self.dim, other.dim);
        for b in &self.blocks {
            let Some(c) = other.block(&b.place) else { continue };
            for e in b.lo..b.hi {
                for e2 in c.lo..c.hi {
                    let n = e + e2;
                    for i in 0..b.degree() {
                        for j in 0..c.degree() {
                            let r = match &b.place {
                                Place::Infinity => {
                                    // res_inf(z^n dt) = -[n == 1]
                                    if n == 1 {
                                        field.neg(FqElem::ONE)
                                    } else {
                                        FqElem::ZERO
                                    }
                                }
                                Place::Finite(pi) => local_residue(field, pi, i + j, n)?,
                            };
                            if !r.is_zero() {
                                m.set(b.index(e, i), c.index(e2, j), r);
                            }
                        }
                    }
                }
            }
        }
        Ok(m)
    }
}

/// `res_pi(t^m pi^n dt)`.
fn local_residue(field: &Field, pi: &Poly, m: usize, n: i64) -> Result<FqElem> {
    if n >= 0 {
        return Ok(FqElem::ZERO);
    }
    let num = Poly::monomial(FqElem::ONE, m);
    let den = crate::algebra::poly::pow(field, pi, (-n) as u32);
    digit_residue(field, &RatFn::new(field, num, den)?, pi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field_of_order;

    fn f2() -> Field {
        field_of_order(2).unwrap()
    }

    fn div(f: &Field, s: &str) -> Divisor {
        Divisor::parse(f.clone(), s).unwrap()
    }

    fn base_window(f: &Field) -> AdeleWindow {
        let t = Place::rational(f, FqElem::ZERO);
        AdeleWindow::new(&[t, Place::Infinity], &div(f, "-1*(t) - 1*(inf)"), &div(f, "(t) + (inf)")).unwrap()
    }

    #[test]
    fn dimensions() {
        let f = f2();
        assert_eq!(base_window(&f).dim(), 4);
        let p = Place::finite(&f, Poly::from_u32s(&[1, 1, 1])).unwrap();
        let w = AdeleWindow::new(&[p, Place::Infinity], &div(&f, "-1*(inf)"), &div(&f, "(t^2+t+1)")).unwrap();
        assert_eq!(w.dim(), 2 + 1);
        assert!(AdeleWindow::new(&[Place::Infinity], &div(&f, "0"), &div(&f, "(inf)")).is_err());
        assert!(AdeleWindow::new(&[Place::Infinity], &div(&f, "-1*(t)"), &div(&f, "(inf)")).is_err());
    }

    #[test]
    fn embedding_examples() {
        let f = f2();
        let w = base_window(&f);
        let one = w.embed_global(&RatFn::one()).unwrap();
        let t_block = w.block(&Place::rational(&f, FqElem::ZERO)).unwrap();
        let inf_block = w.block(&Place::Infinity).unwrap();
        assert_eq!(one[t_block.index(0, 0)], FqElem::ONE);
        assert_eq!(one[inf_block.index(0, 0)], FqElem::ONE);
        let inv_t = RatFn::new(&f, Poly::one(), Poly::x()).unwrap();
        let v = w.embed_global(&inv_t).unwrap();
        assert_eq!(v[t_block.index(-1, 0)], FqElem::ONE);
        assert_eq!(v.iter().filter(|c| !c.is_zero()).count(), 1);
        let t2 = RatFn::from_poly(Poly::from_u32s(&[0, 0, 1]));
        assert!(w.embed_global(&t2).is_err());
    }

    #[test]
    fn global_sections_embed_injectively() {
        let f = field_of_order(3).unwrap();
        let w = AdeleWindow::new(
            &[Place::rational(&f, FqElem::ZERO), Place::rational(&f, FqElem(1)), Place::Infinity],
            &div(&f, "-2*(inf) - 1*(t)"),
            &div(&f, "2*(t) + 1*(t+2) + 2*(inf)"),
        )
        .unwrap();
        let g = w.global_image().unwrap();
        assert_eq!(g.len(), 6);
        assert_eq!(crate::linalg::span_dim(&f, w.dim(), &g), 6);
    }

    #[test]
    fn pairing_is_perfect() {
        for q in [2u64, 3, 4] {
            let f = field_of_order(q).unwrap();
            let mut places = vec![Place::rational(&f, FqElem::ZERO), Place::Infinity];
            let irr = crate::algebra::poly::irreducibles_of_degree(&f, 2);
            places.push(Place::Finite(irr[0].clone()));
            let mut low = Divisor::zero(f.clone());
            low.add_at(Place::Infinity, -2);
            low.add_at(places[0].clone(), -1);
            let mut high = Divisor::zero(f.clone());
            high.add_at(places[2].clone(), 2);
            high.add_at(Place::Infinity, 1);
            let w = AdeleWindow::new(&places, &low, &high).unwrap();
            let d = w.dual().unwrap();
            assert_eq!(d.dim(), w.dim());
            let m = w.pairing_matrix(&d).unwrap();
            assert_eq!(m.rank(&f), w.dim(), "q = {q}");
        }
    }

    #[test]
    fn global_lattice_is_self_orthogonal() {
        // residue theorem: sum of residues of a global differential is zero
        let f = f2();
        let w = AdeleWindow::new(
            &[Place::rational(&f, FqElem::ZERO), Place::Infinity],
            &div(&f, "-3*(inf)"),
            &div(&f, "2*(t) + 1*(inf)"),
        )
        .unwrap();
        let d = w.dual().unwrap();
        assert_eq!(d.global_image().unwrap().len(), 2);
        let m = w.pairing_matrix(&d).unwrap();
        let gw = w.global_image().unwrap();
        let gd = d.global_image().unwrap();
        for a in &gw {
            let row = m.transpose().mul_vec(&f, a);
            for b in &gd {
                let s = row.iter().zip(b).fold(FqElem::ZERO, |acc, (x, y)| f.add(acc, f.mul(*x, *y)));
                assert_eq!(s, FqElem::ZERO);
            }
        }
    }
}
