use serde::Serialize;

use crate::adeles::AdeleWindow;
use crate::algebra::{CycloValue, FqElem};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

use super::fourier::{fourier, fourier_with_pairing, window_space};
use super::table::{pair, pullback, pushforward, FiniteSpace, FnTable, LinearMap};

/// Values of each stage of the chain from `<F^, G^>` to `|V| <F, G o neg>`.
#[derive(Clone, Debug, Serialize)]
pub struct CubeReport<S: Scalar> {
    pub steps: Vec<CycloValue<S>>,
    pub holds: bool,
}

fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
    let mut m = Matrix::zeros(a.rows() + b.rows(), a.cols() + b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            m.set(i, j, a.get(i, j));
        }
    }
    for i in 0..b.rows() {
        for j in 0..b.cols() {
            m.set(a.rows() + i, a.cols() + j, b.get(i, j));
        }
    }
    m
}

/// `v -> (v, v)`.
fn diagonal(space: &FiniteSpace) -> Result<LinearMap> {
    let n = space.dim;
    let mut m = Matrix::zeros(2 * n, n);
    for i in 0..n {
        m.set(i, i, FqElem::ONE);
        m.set(n + i, i, FqElem::ONE);
    }
    LinearMap::new(space.clone(), FiniteSpace::new(space.field.clone(), 2 * n)?, m)
}

/// `(a, b) -> a - b`.
fn difference(space: &FiniteSpace) -> Result<LinearMap> {
    let n = space.dim;
    let minus = space.field.neg(FqElem::ONE);
    let mut m = Matrix::zeros(n, 2 * n);
    for i in 0..n {
        m.set(i, i, FqElem::ONE);
        m.set(i, n + i, minus);
    }
    LinearMap::new(FiniteSpace::new(space.field.clone(), 2 * n)?, space.clone(), m)
}

fn to_point(space: &FiniteSpace) -> Result<LinearMap> {
    LinearMap::new(space.clone(), FiniteSpace::new(space.field.clone(), 0)?, Matrix::zeros(0, space.dim))
}

fn from_point(space: &FiniteSpace) -> Result<LinearMap> {
    LinearMap::new(FiniteSpace::new(space.field.clone(), 0)?, space.clone(), Matrix::zeros(space.dim, 0))
}

fn value<S: Scalar>(t: &FnTable<S>) -> CycloValue<S> {
    t.values[0].clone()
}

/// Evaluates every stage of the cube chain for `f` and `g` on `w`.
pub fn cube_check<S: Scalar>(f: &FnTable<S>, g: &FnTable<S>, w: &AdeleWindow) -> Result<CubeReport<S>> {
    let space = window_space(w)?;
    if !f.space.same_as(&space) || !g.space.same_as(&space) {
        return Err(Error::contract("both functions must live on the window"));
    }
    let (fh, dual) = fourier(f, w)?;
    let (gh, _) = fourier(g, w)?;
    let dual_space = window_space(&dual)?;
    let m = w.pairing_matrix(&dual)?;
    let size = S::from_i64(space.size() as i64);

    let i_dual = diagonal(&dual_space)?;
    let beta_dual = to_point(&dual_space)?;
    let i_v = diagonal(&space)?;
    let beta_v = to_point(&space)?;
    let alpha_v = from_point(&space)?;
    let j_v = difference(&space)?;

    let s0 = pair(&fh, &gh)?;
    let s1 = value(&pushforward(&beta_dual, &pullback(&i_dual, &fh.tensor(&gh)?)?)?);
    let product_pairing = block_diag(&m, &m);
    let fg_hat = fourier_with_pairing(&f.tensor(g)?, &product_pairing, i_dual.target.clone())?;
    let s2 = value(&pushforward(&beta_dual, &pullback(&i_dual, &fg_hat)?)?);
    let twisted = f.tensor(&g.reflect())?;
    let pushed = pushforward(&j_v, &twisted)?;
    let (pushed_hat, _) = fourier(&pushed, w)?;
    let s3 = value(&pushforward(&beta_dual, &pushed_hat)?);
    let s4 = value(&pullback(&alpha_v, &pushed)?).scale(&size);
    let s5 = value(&pushforward(&beta_v, &pullback(&i_v, &twisted)?)?).scale(&size);
    let s6 = pair(f, &g.reflect())?.scale(&size);
    let steps = vec![s0, s1, s2, s3, s4, s5, s6];
    let holds = steps.windows(2).all(|p| p[0] == p[1]);
    Ok(CubeReport { steps, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field_of_order;
    use crate::curve::Divisor;
    use crate::series::Place;
    use crate::Rational;
    use rand::{Rng, SeedableRng};

    type T = FnTable<Rational>;

    fn window(q: u64) -> AdeleWindow {
        let f = field_of_order(q).unwrap();
        AdeleWindow::new(
            &[Place::rational(&f, FqElem::ZERO), Place::Infinity],
            &Divisor::parse(f.clone(), "-2*(inf)").unwrap(),
            &Divisor::parse(f, "(t) + (inf)").unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn deltas_at_zero() {
        let w = window(2);
        let s = window_space(&w).unwrap();
        let d0 = T::delta(s, &vec![FqElem::ZERO; w.dim()]);
        let r = cube_check(&d0, &d0, &w).unwrap();
        assert!(r.holds);
        assert_eq!(r.steps[0], CycloValue::from_int(2, 16));
    }

    #[test]
    fn random_pairs() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for q in [2u64, 3] {
            let w = window(q);
            let s = window_space(&w).unwrap();
            let p = q as u32;
            for _ in 0..3 {
                let f = T::from_fn(s.clone(), |_| CycloValue::zeta_pow(p, rng.gen_range(0..p as i64)));
                let g = T::from_fn(s.clone(), |_| CycloValue::from_int(p, rng.gen_range(-2..3)));
                assert!(cube_check(&f, &g, &w).unwrap().holds);
            }
        }
    }
}
