//! Dense linear algebra over a finite field.

use crate::algebra::{FqElem, GaloisField};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FqElem>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![FqElem::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, FqElem::ONE);
        }
        m
    }

    /// Matrix whose rows are the given vectors.
    pub fn from_rows(cols: usize, rows: &[Vec<FqElem>]) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row length mismatch");
            m.data[i * cols..(i + 1) * cols].copy_from_slice(r);
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(rows: usize, cols: &[Vec<FqElem>]) -> Matrix {
        Matrix::from_rows(rows, cols).transpose()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FqElem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FqElem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FqElem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, f: &GaloisField, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::contract("matrix shape mismatch"));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, f: &GaloisField, v: &[FqElem]) -> Vec<FqElem> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| f.sum(self.row(r).iter().zip(v).map(|(&a, &b)| f.mul(a, b))))
            .collect()
    }

    /// Row echelon form in place; returns pivot columns.
    fn echelon(&mut self, f: &GaloisField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            for j in 0..self.cols {
                let v = f.mul(self.get(r, j), inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for j in 0..self.cols {
                    let v = f.sub(self.get(i, j), f.mul(factor, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &GaloisField) -> usize {
        self.clone().echelon(f).len()
    }

    /// Basis of `{x : self * x = 0}`.
    pub fn kernel(&self, f: &GaloisField) -> Vec<Vec<FqElem>> {
        let mut m = self.clone();
        let pivots = m.echelon(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![FqElem::ZERO; self.cols];
                v[fc] = FqElem::ONE;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(m.get(r, fc));
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self, f: &GaloisField) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::contract("inverse of a non-square matrix"));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, FqElem::ONE);
        }
        let pivots = aug.echelon(f);
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Degenerate("singular matrix".into()));
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j));
            }
        }
        Ok(inv)
    }
}

/// Dimension of the span of `vectors` (each of length `dim`).
pub fn span_dim(f: &GaloisField, dim: usize, vectors: &[Vec<FqElem>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_rows(dim, vectors).rank(f)
}

/// A basis of the span of `vectors`.
pub fn span_basis(f: &GaloisField, dim: usize, vectors: &[Vec<FqElem>]) -> Vec<Vec<FqElem>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let mut m = Matrix::from_rows(dim, vectors);
    let rank = m.echelon(f).len();
    (0..rank).map(|r| m.row(r).to_vec()).collect()
}

/// `dim(U ∩ W)` for subspaces given by spanning sets.
pub fn intersection_dim(f: &GaloisField, dim: usize, u: &[Vec<FqElem>], w: &[Vec<FqElem>]) -> usize {
    let mut all = u.to_vec();
    all.extend_from_slice(w);
    span_dim(f, dim, u) + span_dim(f, dim, w) - span_dim(f, dim, &all)
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span(f: &GaloisField, dim: usize, basis: &[Vec<FqElem>], v: &[FqElem]) -> bool {
    let mut all = basis.to_vec();
    let before = span_dim(f, dim, &all);
    all.push(v.to_vec());
    span_dim(f, dim, &all) == before
}

/// Enumerates all `q^n` vectors of `F_q^n` in base-`q` index order
/// (coordinate 0 is the least significant digit).
pub fn vector_of_index(q: u32, n: usize, mut idx: usize) -> Vec<FqElem> {
    let mut v = Vec::with_capacity(n);
    for _ in 0..n {
        v.push(FqElem((idx % q as usize) as u32));
        idx /= q as usize;
    }
    v
}

pub fn index_of_vector(q: u32, v: &[FqElem]) -> usize {
    v.iter().rev().fold(0usize, |acc, c| acc * q as usize + c.0 as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::make_field;

    #[test]
    fn kernel_and_rank() {
        let f = make_field(3, 1, None).unwrap();
        let m = Matrix::from_rows(3, &[
            vec![FqElem(1), FqElem(2), FqElem(0)],
            vec![FqElem(2), FqElem(1), FqElem(0)],
        ]);
        assert_eq!(m.rank(&f), 1);
        let k = m.kernel(&f);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(&f, v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn inverse_round_trip() {
        let f = make_field(5, 1, None).unwrap();
        let m = Matrix::from_rows(2, &[vec![FqElem(1), FqElem(2)], vec![FqElem(3), FqElem(4)]]);
        let inv = m.inverse(&f).unwrap();
        assert_eq!(m.mul(&f, &inv).unwrap(), Matrix::identity(2));
        let sing = Matrix::from_rows(2, &[vec![FqElem(1), FqElem(2)], vec![FqElem(2), FqElem(4)]]);
        assert!(sing.inverse(&f).is_err());
    }

    #[test]
    fn index_round_trip() {
        for i in 0..81 {
            assert_eq!(index_of_vector(3, &vector_of_index(3, 4, i)), i);
        }
    }
}
