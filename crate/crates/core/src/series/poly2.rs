use std::fmt;

use crate::algebra::{poly, FqElem, GaloisField, Poly};

/// A polynomial in `u` and `t`, stored as a list of `u`-polynomials: entry
/// `j` is the coefficient of `t^j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly2 {
    rows: Vec<Poly>,
}

impl Poly2 {
    pub fn new(mut rows: Vec<Poly>) -> Poly2 {
        while rows.last().is_some_and(|r| r.is_zero()) {
            rows.pop();
        }
        Poly2 { rows }
    }

    pub fn zero() -> Poly2 {
        Poly2 { rows: Vec::new() }
    }

    pub fn one() -> Poly2 {
        Poly2::constant(FqElem::ONE)
    }

    pub fn constant(c: FqElem) -> Poly2 {
        Poly2::new(vec![Poly::constant(c)])
    }

    pub fn u() -> Poly2 {
        Poly2::new(vec![Poly::x()])
    }

    pub fn t() -> Poly2 {
        Poly2::new(vec![Poly::zero(), Poly::one()])
    }

    /// `c u^i t^j`.
    pub fn monomial(c: FqElem, i: usize, j: usize) -> Poly2 {
        let mut rows = vec![Poly::zero(); j + 1];
        rows[j] = Poly::monomial(c, i);
        Poly2::new(rows)
    }

    pub fn from_u(p: Poly) -> Poly2 {
        Poly2::new(vec![p])
    }

    /// Embeds a polynomial in `t` alone.
    pub fn from_t(p: &Poly) -> Poly2 {
        Poly2::new(p.coeffs().iter().map(|&c| Poly::constant(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Coefficient of `t^j`, a polynomial in `u`.
    pub fn row(&self, j: usize) -> Poly {
        self.rows.get(j).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn rows(&self) -> &[Poly] {
        &self.rows
    }

    pub fn coeff(&self, i: usize, j: usize) -> FqElem {
        self.rows.get(j).map_or(FqElem::ZERO, |r| r.coeff(i))
    }

    /// Degree in `t`, `-1` for zero.
    pub fn t_degree(&self) -> isize {
        self.rows.len() as isize - 1
    }

    pub fn u_degree(&self) -> isize {
        self.rows.iter().map(|r| r.degree()).max().unwrap_or(-1)
    }

    /// Lowest power of `t` present.
    pub fn t_order(&self) -> Option<usize> {
        self.rows.iter().position(|r| !r.is_zero())
    }

    pub fn u_order(&self) -> Option<usize> {
        self.rows.iter().filter(|r| !r.is_zero()).map(|r| r.low_order()).min()
    }

    /// Nonzero terms as `(u_exp, t_exp, coeff)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, FqElem)> + '_ {
        self.rows.iter().enumerate().flat_map(|(j, r)| {
            r.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, &c)| (i, j, c))
        })
    }

    /// Divides by `u^a t^b`; the caller guarantees exactness.
    pub fn strip_monomial(&self, a: usize, b: usize) -> Poly2 {
        Poly2::new(self.rows[b.min(self.rows.len())..].iter().map(|r| Poly::new(r.coeffs()[a.min(r.coeffs().len())..].to_vec())).collect())
    }

    pub fn swap(&self) -> Poly2 {
        let mut out = Poly2::zero();
        for (i, j, c) in self.terms() {
            out = add_mono(out, c, j, i);
        }
        out
    }

    pub fn eval(&self, f: &GaloisField, u: FqElem, t: FqElem) -> FqElem {
        let mut acc = FqElem::ZERO;
        for r in self.rows.iter().rev() {
            acc = f.add(f.mul(acc, t), poly::eval(f, r, u));
        }
        acc
    }

    /// `p(u, t0)` as a polynomial in `u`.
    pub fn at_t(&self, f: &GaloisField, t0: FqElem) -> Poly {
        let mut acc = Poly::zero();
        for r in self.rows.iter().rev() {
            acc = poly::add(f, &poly::scale(f, &acc, t0), r);
        }
        acc
    }

    /// `p(u0, t)` as a polynomial in `t`.
    pub fn at_u(&self, f: &GaloisField, u0: FqElem) -> Poly {
        Poly::new(self.rows.iter().map(|r| poly::eval(f, r, u0)).collect())
    }

    pub fn display<'a>(&'a self) -> impl fmt::Display + 'a {
        Disp(self)
    }
}

fn add_mono(p: Poly2, c: FqElem, i: usize, j: usize) -> Poly2 {
    let mut rows = p.rows;
    if rows.len() <= j {
        rows.resize(j + 1, Poly::zero());
    }
    let mut cs = rows[j].coeffs().to_vec();
    if cs.len() <= i {
        cs.resize(i + 1, FqElem::ZERO);
    }
    debug_assert!(cs[i].is_zero());
    cs[i] = c;
    rows[j] = Poly::new(cs);
    Poly2::new(rows)
}

struct Disp<'a>(&'a Poly2);

impl fmt::Display for Disp<'_> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut terms: Vec<_> = self.0.terms().collect();
        terms.sort_by_key(|&(i, j, _)| (std::cmp::Reverse(i + j), std::cmp::Reverse(j)));
        for (i, j, c) in terms {
            if !first {
                write!(out, " + ")?;
            }
            first = false;
            let mut parts = Vec::new();
            if c.0 != 1 || (i == 0 && j == 0) {
                parts.push(c.to_string());
            }
            match i {
                0 => {}
                1 => parts.push("u".into()),
                _ => parts.push(format!("u^{i}")),
            }
            match j {
                0 => {}
                1 => parts.push("t".into()),
                _ => parts.push(format!("t^{j}")),
            }
            write!(out, "{}", parts.join("*"))?;
        }
        if first {
            write!(out, "0")?;
        }
        Ok(())
    }
}

pub fn add(f: &GaloisField, a: &Poly2, b: &Poly2) -> Poly2 {
    let n = a.rows.len().max(b.rows.len());
    Poly2::new((0..n).map(|j| poly::add(f, &a.row(j), &b.row(j))).collect())
}

pub fn neg(f: &GaloisField, a: &Poly2) -> Poly2 {
    Poly2::new(a.rows.iter().map(|r| poly::neg(f, r)).collect())
}

pub fn sub(f: &GaloisField, a: &Poly2, b: &Poly2) -> Poly2 {
    add(f, a, &neg(f, b))
}

pub fn scale(f: &GaloisField, a: &Poly2, c: FqElem) -> Poly2 {
    Poly2::new(a.rows.iter().map(|r| poly::scale(f, r, c)).collect())
}

pub fn mul(f: &GaloisField, a: &Poly2, b: &Poly2) -> Poly2 {
    if a.is_zero() || b.is_zero() {
        return Poly2::zero();
    }
    let mut rows = vec![Poly::zero(); a.rows.len() + b.rows.len() - 1];
    for (i, ra) in a.rows.iter().enumerate() {
        for (j, rb) in b.rows.iter().enumerate() {
            rows[i + j] = poly::add(f, &rows[i + j], &poly::mul(f, ra, rb));
        }
    }
    Poly2::new(rows)
}

pub fn pow(f: &GaloisField, a: &Poly2, e: u32) -> Poly2 {
    let mut out = Poly2::one();
    for _ in 0..e {
        out = mul(f, &out, a);
    }
    out
}

pub fn d_du(f: &GaloisField, a: &Poly2) -> Poly2 {
    Poly2::new(a.rows.iter().map(|r| poly::derivative(f, r)).collect())
}

pub fn d_dt(f: &GaloisField, a: &Poly2) -> Poly2 {
    Poly2::new(
        a.rows
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, r)| poly::scale(f, r, f.from_int(j as i64)))
            .collect(),
    )
}

/// `a(U, T)` for polynomial substitutions `u = U`, `t = T`.
pub fn substitute(f: &GaloisField, a: &Poly2, su: &Poly2, st: &Poly2) -> Poly2 {
    let mut acc = Poly2::zero();
    for r in a.rows.iter().rev() {
        let mut inner = Poly2::zero();
        for &c in r.coeffs().iter().rev() {
            inner = add(f, &mul(f, &inner, su), &Poly2::constant(c));
        }
        acc = add(f, &mul(f, &acc, st), &inner);
    }
    acc
}

/// Polynomial division by `d` where `d` has an invertible leading `t`-row
/// constant; returns `None` unless the division is exact.
pub fn div_exact(f: &GaloisField, a: &Poly2, d: &Poly2) -> Option<Poly2> {
    if d.is_zero() {
        return None;
    }
    // Divide as polynomials in u over the lexicographically leading term.
    let (du, dt, dc) = lead_term(d);
    let inv = f.inv(dc).ok()?;
    let mut rem = a.clone();
    let mut quot = Poly2::zero();
    let mut guard = 0usize;
    while !rem.is_zero() {
        let (ru, rt, rc) = lead_term(&rem);
        if ru < du || rt < dt {
            return None;
        }
        let m = Poly2::monomial(f.mul(rc, inv), ru - du, rt - dt);
        quot = add(f, &quot, &m);
        rem = sub(f, &rem, &mul(f, &m, d));
        guard += 1;
        if guard > 1 << 20 {
            return None;
        }
    }
    Some(quot)
}

/// Leading term in the order "t-degree first, then u-degree".
fn lead_term(a: &Poly2) -> (usize, usize, FqElem) {
    let j = a.rows.len() - 1;
    let r = &a.rows[j];
    (r.degree() as usize, j, r.lead())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::make_field;

    #[test]
    fn substitution_and_derivatives() {
        let f = make_field(3, 1, None).unwrap();
        // p = u t + t^2
        let p = add(&f, &mul(&f, &Poly2::u(), &Poly2::t()), &pow(&f, &Poly2::t(), 2));
        // t = t' + u
        let st = add(&f, &Poly2::t(), &Poly2::u());
        let q = substitute(&f, &p, &Poly2::u(), &st);
        // u(t+u) + (t+u)^2 = 2u^2 + 3ut + t^2 = 2u^2 + t^2 mod 3
        assert_eq!(q.coeff(2, 0), FqElem(2));
        assert_eq!(q.coeff(1, 1), FqElem(0));
        assert_eq!(q.coeff(0, 2), FqElem(1));
        assert_eq!(d_dt(&f, &p).coeff(1, 0), FqElem(1));
        assert_eq!(d_dt(&f, &p).coeff(0, 1), FqElem(2));
        assert_eq!(d_du(&f, &p), Poly2::t());
        assert_eq!(p.swap().coeff(2, 0), FqElem(1));
    }

    #[test]
    fn exact_division() {
        let f = make_field(2, 1, None).unwrap();
        let a = add(&f, &Poly2::u(), &Poly2::t());
        let b = add(&f, &Poly2::u(), &Poly2::one());
        let prod = mul(&f, &a, &b);
        assert_eq!(div_exact(&f, &prod, &a), Some(b.clone()));
        assert_eq!(div_exact(&f, &add(&f, &prod, &Poly2::one()), &a), None);
        assert_eq!(format!("{}", prod.display()), "u*t + u^2 + t + u");
    }
}
