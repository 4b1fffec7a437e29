use crate::algebra::{CycloValue, Field, FqElem};
use crate::error::{Error, Result};
use crate::linalg::{index_of_vector, vector_of_index, Matrix};
use crate::scalar::Scalar;

/// Refuse tables beyond this many entries.
pub const MAX_TABLE: usize = 1 << 22;

/// `F_q^dim`, with elements indexed in base `q` (coordinate 0 least significant).
#[derive(Clone, Debug)]
pub struct FiniteSpace {
    pub field: Field,
    pub dim: usize,
}

impl FiniteSpace {
    pub fn new(field: Field, dim: usize) -> Result<FiniteSpace> {
        let q = field.size() as u128;
        if q.checked_pow(dim as u32).is_none_or(|n| n > MAX_TABLE as u128) {
            return Err(Error::contract(format!("space F_{q}^{dim} is too large to tabulate")));
        }
        Ok(FiniteSpace { field, dim })
    }

    pub fn q(&self) -> u32 {
        self.field.size()
    }

    pub fn size(&self) -> usize {
        (self.q() as usize).pow(self.dim as u32)
    }

    pub fn vector(&self, idx: usize) -> Vec<FqElem> {
        vector_of_index(self.q(), self.dim, idx)
    }

    pub fn index(&self, v: &[FqElem]) -> usize {
        index_of_vector(self.q(), v)
    }

    pub fn same_as(&self, o: &FiniteSpace) -> bool {
        self.dim == o.dim && *self.field == *o.field
    }
}

/// A linear map `F_q^src -> F_q^dst` given by a `dst x src` matrix.
#[derive(Clone, Debug)]
pub struct LinearMap {
    pub source: FiniteSpace,
    pub target: FiniteSpace,
    pub matrix: Matrix,
}

impl LinearMap {
    pub fn new(source: FiniteSpace, target: FiniteSpace, matrix: Matrix) -> Result<LinearMap> {
        if matrix.rows() != target.dim || matrix.cols() != source.dim || *source.field != *target.field {
            return Err(Error::contract("map matrix shape does not match its spaces"));
        }
        Ok(LinearMap { source, target, matrix })
    }

    pub fn apply(&self, v: &[FqElem]) -> Vec<FqElem> {
        self.matrix.mul_vec(&self.source.field, v)
    }

    /// Image index of every source index.
    fn index_map(&self) -> Vec<usize> {
        (0..self.source.size()).map(|i| self.target.index(&self.apply(&self.source.vector(i)))).collect()
    }
}

/// A function on a finite space with values in `Q(zeta_p)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FnTable<S: Scalar> {
    pub space: FiniteSpace,
    pub values: Vec<CycloValue<S>>,
}

impl PartialEq for FiniteSpace {
    fn eq(&self, o: &Self) -> bool {
        self.same_as(o)
    }
}

impl<S: Scalar> FnTable<S> {
    fn p(space: &FiniteSpace) -> u32 {
        space.field.characteristic()
    }

    pub fn from_fn<F: FnMut(&[FqElem]) -> CycloValue<S>>(space: FiniteSpace, mut f: F) -> FnTable<S> {
        let values = (0..space.size()).map(|i| f(&space.vector(i))).collect();
        FnTable { space, values }
    }

    pub fn zero(space: FiniteSpace) -> FnTable<S> {
        let p = Self::p(&space);
        FnTable { values: vec![CycloValue::zero(p); space.size()], space }
    }

    pub fn constant(space: FiniteSpace, c: CycloValue<S>) -> FnTable<S> {
        FnTable { values: vec![c; space.size()], space }
    }

    /// The point delta at `v`.
    pub fn delta(space: FiniteSpace, v: &[FqElem]) -> FnTable<S> {
        let idx = space.index(v);
        let mut t = Self::zero(space);
        t.values[idx] = CycloValue::one(Self::p(&t.space));
        t
    }

    /// The characteristic function of the span of `basis`.
    pub fn indicator(space: FiniteSpace, basis: &[Vec<FqElem>]) -> FnTable<S> {
        let mut t = Self::zero(space);
        let p = Self::p(&t.space);
        for idx in span_indices(&t.space, basis) {
            t.values[idx] = CycloValue::one(p);
        }
        t
    }

    pub fn at(&self, v: &[FqElem]) -> &CycloValue<S> {
        &self.values[self.space.index(v)]
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.values.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, _)| i)
    }

    pub fn scale(&self, s: &S) -> FnTable<S> {
        FnTable { space: self.space.clone(), values: self.values.iter().map(|v| v.scale(s)).collect() }
    }

    pub fn add(&self, o: &FnTable<S>) -> Result<FnTable<S>> {
        self.check_same(o)?;
        Ok(FnTable { space: self.space.clone(), values: self.values.iter().zip(&o.values).map(|(a, b)| a + b).collect() })
    }

    fn check_same(&self, o: &FnTable<S>) -> Result<()> {
        if !self.space.same_as(&o.space) {
            return Err(Error::contract("functions live on different spaces"));
        }
        Ok(())
    }

    /// `x -> f(-x)`.
    pub fn reflect(&self) -> FnTable<S> {
        let f = &self.space.field;
        FnTable::from_fn(self.space.clone(), |v| {
            let neg: Vec<FqElem> = v.iter().map(|&c| f.neg(c)).collect();
            self.at(&neg).clone()
        })
    }

    /// `(a, b) -> f(a) g(b)` on the product space, `a` in the low coordinates.
    pub fn tensor(&self, g: &FnTable<S>) -> Result<FnTable<S>> {
        if *self.space.field != *g.space.field {
            return Err(Error::FieldMismatch);
        }
        let space = FiniteSpace::new(self.space.field.clone(), self.space.dim + g.space.dim)?;
        let n = self.space.size();
        let values = (0..space.size()).map(|i| &self.values[i % n] * &g.values[i / n]).collect();
        Ok(FnTable { space, values })
    }
}

/// Indices of all elements of the span of `basis`.
pub fn span_indices(space: &FiniteSpace, basis: &[Vec<FqElem>]) -> Vec<usize> {
    let f = &space.field;
    let basis = crate::linalg::span_basis(f, space.dim, basis);
    let q = space.q() as usize;
    let mut out = Vec::with_capacity(q.pow(basis.len() as u32));
    for k in 0..q.pow(basis.len() as u32) {
        let coeffs = vector_of_index(q as u32, basis.len(), k);
        let mut v = vec![FqElem::ZERO; space.dim];
        for (c, b) in coeffs.iter().zip(&basis) {
            for (slot, &x) in v.iter_mut().zip(b) {
                *slot = f.add(*slot, f.mul(*c, x));
            }
        }
        out.push(space.index(&v));
    }
    out
}

/// `i_* f (w) = sum over v with i(v) = w of f(v)`.
pub fn pushforward<S: Scalar>(map: &LinearMap, f: &FnTable<S>) -> Result<FnTable<S>> {
    if !map.source.same_as(&f.space) {
        return Err(Error::contract("pushforward: function is not on the map's source"));
    }
    let mut out = FnTable::zero(map.target.clone());
    for (i, j) in map.index_map().into_iter().enumerate() {
        if !f.values[i].is_zero() {
            out.values[j] += &f.values[i];
        }
    }
    Ok(out)
}

/// `i^* g = g o i`.
pub fn pullback<S: Scalar>(map: &LinearMap, g: &FnTable<S>) -> Result<FnTable<S>> {
    if !map.target.same_as(&g.space) {
        return Err(Error::contract("pullback: function is not on the map's target"));
    }
    let values = map.index_map().into_iter().map(|j| g.values[j].clone()).collect();
    Ok(FnTable { space: map.source.clone(), values })
}

/// `sum_v f(v) g(v)`.
pub fn pair<S: Scalar>(f: &FnTable<S>, g: &FnTable<S>) -> Result<CycloValue<S>> {
    f.check_same(g)?;
    let mut acc = CycloValue::zero(f.space.field.characteristic());
    for (a, b) in f.values.iter().zip(&g.values) {
        if !a.is_zero() && !b.is_zero() {
            acc += &(a * b);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field_of_order;
    use crate::Rational;
    use rand::{Rng, SeedableRng};

    type T = FnTable<Rational>;

    #[test]
    fn identity_map() {
        let f = field_of_order(3).unwrap();
        let s = FiniteSpace::new(f.clone(), 2).unwrap();
        let id = LinearMap::new(s.clone(), s.clone(), Matrix::identity(2)).unwrap();
        let g = T::from_fn(s.clone(), |v| CycloValue::from_int(3, (v[0].0 + 2 * v[1].0) as i64));
        assert_eq!(pushforward(&id, &g).unwrap(), g);
        assert_eq!(pullback(&id, &g).unwrap(), g);
    }

    #[test]
    fn inclusion_of_line() {
        let f = field_of_order(2).unwrap();
        let a = FiniteSpace::new(f.clone(), 1).unwrap();
        let b = FiniteSpace::new(f.clone(), 2).unwrap();
        let m = Matrix::from_rows(1, &[vec![FqElem::ONE], vec![FqElem::ZERO]]);
        let i = LinearMap::new(a.clone(), b.clone(), m).unwrap();
        let pushed = pushforward(&i, &T::delta(a, &[FqElem::ZERO])).unwrap();
        for idx in 0..4 {
            assert_eq!(pushed.values[idx].is_zero(), idx != 0);
        }
    }

    #[test]
    fn duality_random_map() {
        let f = field_of_order(3).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let a = FiniteSpace::new(f.clone(), 2).unwrap();
        let b = FiniteSpace::new(f.clone(), 3).unwrap();
        let rows: Vec<Vec<FqElem>> = (0..3).map(|_| (0..2).map(|_| FqElem(rng.gen_range(0..3))).collect()).collect();
        let i = LinearMap::new(a.clone(), b.clone(), Matrix::from_rows(2, &rows)).unwrap();
        let fa = T::from_fn(a, |_| CycloValue::zeta_pow(3, rng.gen_range(0..3)));
        let gb = T::from_fn(b, |_| CycloValue::from_int(3, rng.gen_range(-3..4)));
        assert_eq!(pair(&pushforward(&i, &fa).unwrap(), &gb).unwrap(), pair(&fa, &pullback(&i, &gb).unwrap()).unwrap());
    }

    #[test]
    fn pair_examples() {
        let f = field_of_order(2).unwrap();
        let s = FiniteSpace::new(f, 3).unwrap();
        let one = T::constant(s.clone(), CycloValue::one(2));
        assert_eq!(pair(&one, &one).unwrap(), CycloValue::from_int(2, 8));
        let g = T::from_fn(s.clone(), |v| CycloValue::from_int(2, v[0].0 as i64 + 5));
        assert_eq!(pair(&T::delta(s.clone(), &[FqElem::ZERO; 3]), &g).unwrap(), CycloValue::from_int(2, 5));
        assert!(FiniteSpace::new(field_of_order(2).unwrap(), 40).is_err());
    }
}
