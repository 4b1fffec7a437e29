use crate::adeles::AdeleWindow;
use crate::algebra::{CycloValue, FqElem};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

use super::table::{FiniteSpace, FnTable};

/// `F(w) = sum_x psi(x . w) f(x)` for the coordinate dot product, one
/// coordinate at a time.
pub fn dot_transform<S: Scalar>(f: &FnTable<S>) -> FnTable<S> {
    let field = &f.space.field;
    let q = field.size() as usize;
    let tr: Vec<Vec<i64>> = (0..q)
        .map(|a| (0..q).map(|b| field.trace(field.mul(FqElem(a as u32), FqElem(b as u32))) as i64).collect())
        .collect();
    let p = field.characteristic();
    let mut cur = f.values.clone();
    let n = cur.len();
    let mut stride = 1;
    for _ in 0..f.space.dim {
        let mut next = vec![CycloValue::zero(p); n];
        for base in 0..n {
            if (base / stride) % q != 0 {
                continue;
            }
            for (b, row) in tr.iter().enumerate() {
                let mut acc = CycloValue::zero(p);
                for (a, &e) in row.iter().enumerate() {
                    let v = &cur[base + a * stride];
                    if !v.is_zero() {
                        acc += &v.mul_zeta(e);
                    }
                }
                next[base + b * stride] = acc;
            }
        }
        cur = next;
        stride *= q;
    }
    FnTable { space: f.space.clone(), values: cur }
}

/// `f^(y) = sum_x psi(<x, y>) f(x)` with `<x, y> = x^T M y`.
pub fn fourier_with_pairing<S: Scalar>(f: &FnTable<S>, pairing: &Matrix, dual: FiniteSpace) -> Result<FnTable<S>> {
    if pairing.rows() != f.space.dim || pairing.cols() != dual.dim {
        return Err(Error::contract("pairing matrix shape does not match the spaces"));
    }
    let big = dot_transform(f);
    let field = &f.space.field;
    let values = (0..dual.size())
        .map(|j| {
            let w = pairing.mul_vec(field, &dual.vector(j));
            big.values[f.space.index(&w)].clone()
        })
        .collect();
    Ok(FnTable { space: dual, values })
}

/// The Fourier transform of a function on `w` for `omega = dt`, as a
/// function on the dual window.
pub fn fourier<S: Scalar>(f: &FnTable<S>, w: &AdeleWindow) -> Result<(FnTable<S>, AdeleWindow)> {
    if f.space.dim != w.dim() || *f.space.field != **w.field() {
        return Err(Error::contract("function is not on this window"));
    }
    let dual = w.dual()?;
    let m = w.pairing_matrix(&dual)?;
    if m.rank(w.field()) != w.dim() {
        return Err(Error::Degenerate("residue pairing is degenerate on this window pair".into()));
    }
    let space = FiniteSpace::new(w.field().clone(), dual.dim())?;
    Ok((fourier_with_pairing(f, &m, space)?, dual))
}

/// The function space of a window.
pub fn window_space(w: &AdeleWindow) -> Result<FiniteSpace> {
    FiniteSpace::new(w.field().clone(), w.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{additive_character, field_of_order};
    use crate::curve::Divisor;
    use crate::series::Place;
    use crate::Rational;
    use rand::{Rng, SeedableRng};

    type T = FnTable<Rational>;

    fn brute(f: &T, m: &Matrix, dual: &FiniteSpace) -> T {
        let field = &f.space.field;
        T::from_fn(dual.clone(), |y| {
            let my = m.mul_vec(field, y);
            let mut acc = CycloValue::zero(field.characteristic());
            for (i, v) in f.values.iter().enumerate() {
                let x = f.space.vector(i);
                let c = x.iter().zip(&my).fold(FqElem::ZERO, |a, (s, t)| field.add(a, field.mul(*s, *t)));
                acc += &(&additive_character::<Rational>(field, c) * v);
            }
            acc
        })
    }

    #[test]
    fn fast_matches_brute_force() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for q in [2u64, 3, 4, 5] {
            let field = field_of_order(q).unwrap();
            let dim = if q <= 3 { 3 } else { 2 };
            let s = FiniteSpace::new(field.clone(), dim).unwrap();
            let rows: Vec<Vec<FqElem>> =
                (0..dim).map(|_| (0..dim).map(|_| FqElem(rng.gen_range(0..q as u32))).collect()).collect();
            let m = Matrix::from_rows(dim, &rows);
            let p = field.characteristic();
            let f = T::from_fn(s.clone(), |_| CycloValue::zeta_pow(p, rng.gen_range(0..p as i64)).scale(&Rational::from_integer(rng.gen_range(-2..3).into())));
            assert_eq!(fourier_with_pairing(&f, &m, s.clone()).unwrap(), brute(&f, &m, &s));
        }
    }

    #[test]
    fn delta_at_zero_goes_to_one() {
        let field = field_of_order(3).unwrap();
        let w = AdeleWindow::new(
            &[Place::rational(&field, FqElem::ZERO), Place::Infinity],
            &Divisor::parse(field.clone(), "-1*(t) - 1*(inf)").unwrap(),
            &Divisor::parse(field.clone(), "(inf)").unwrap(),
        )
        .unwrap();
        let s = window_space(&w).unwrap();
        let (fh, dual) = fourier(&T::delta(s.clone(), &vec![FqElem::ZERO; w.dim()]), &w).unwrap();
        assert_eq!(dual.dim(), w.dim());
        assert!(fh.values.iter().all(|v| *v == CycloValue::one(3)));
    }

    #[test]
    fn double_transform_reflects() {
        let field = field_of_order(3).unwrap();
        let w = AdeleWindow::new(
            &[Place::rational(&field, FqElem::ZERO), Place::Infinity],
            &Divisor::parse(field.clone(), "-2*(inf)").unwrap(),
            &Divisor::parse(field.clone(), "(t)").unwrap(),
        )
        .unwrap();
        let s = window_space(&w).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let f = T::from_fn(s.clone(), |_| CycloValue::from_int(3, rng.gen_range(-4..5)));
        let (fh, dual) = fourier(&f, &w).unwrap();
        let (fhh, back) = fourier(&fh, &dual).unwrap();
        assert_eq!(back.dim(), w.dim());
        // the dual of the dual window is the window itself, with the same coordinates
        let n = Rational::from_integer(s.size().into());
        assert_eq!(fhh, f.reflect().scale(&n));
    }
}
