use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{poly, Field, Poly};
use crate::error::{Error, Result};
use crate::series::parse::parse_poly;
use crate::series::{Place, RatFn};

use super::model::CurveModel;

/// A divisor on the projective line over `F_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divisor {
    field: Field,
    parts: BTreeMap<Place, i64>,
}

impl Divisor {
    pub fn zero(field: Field) -> Divisor {
        Divisor { field, parts: BTreeMap::new() }
    }

    pub fn from_parts<I: IntoIterator<Item = (Place, i64)>>(field: Field, parts: I) -> Divisor {
        let mut d = Divisor::zero(field);
        for (p, n) in parts {
            d.add_at(p, n);
        }
        d
    }

    /// `n * place`.
    pub fn point(field: Field, place: Place, n: i64) -> Divisor {
        Divisor::from_parts(field, [(place, n)])
    }

    /// The divisor of `dt`: `-2 * (inf)`.
    pub fn canonical(field: Field) -> Divisor {
        Divisor::point(field, Place::Infinity, -2)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn add_at(&mut self, place: Place, n: i64) {
        let e = self.parts.entry(place.clone()).or_insert(0);
        *e += n;
        if *e == 0 {
            self.parts.remove(&place);
        }
    }

    pub fn coeff(&self, place: &Place) -> i64 {
        self.parts.get(place).copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = (&Place, i64)> {
        self.parts.iter().map(|(p, &n)| (p, n))
    }

    pub fn degree(&self) -> i64 {
        self.parts.iter().map(|(p, n)| n * p.degree() as i64).sum()
    }

    pub fn is_effective(&self) -> bool {
        self.parts.values().all(|&n| n >= 0)
    }

    pub fn add(&self, o: &Divisor) -> Divisor {
        let mut d = self.clone();
        for (p, &n) in &o.parts {
            d.add_at(p.clone(), n);
        }
        d
    }

    pub fn neg(&self) -> Divisor {
        Divisor { field: self.field.clone(), parts: self.parts.iter().map(|(p, &n)| (p.clone(), -n)).collect() }
    }

    pub fn sub(&self, o: &Divisor) -> Divisor {
        self.add(&o.neg())
    }

    /// Pointwise `max(D, 0)`.
    pub fn positive_part(&self) -> Divisor {
        Divisor { field: self.field.clone(), parts: self.parts.iter().filter(|(_, &n)| n > 0).map(|(p, &n)| (p.clone(), n)).collect() }
    }

    /// Pointwise `min(D, 0)`.
    pub fn negative_part(&self) -> Divisor {
        Divisor { field: self.field.clone(), parts: self.parts.iter().filter(|(_, &n)| n < 0).map(|(p, &n)| (p.clone(), n)).collect() }
    }

    /// Pointwise `self <= o`.
    pub fn le(&self, o: &Divisor) -> bool {
        self.parts.keys().chain(o.parts.keys()).all(|p| self.coeff(p) <= o.coeff(p))
    }

    /// `l(D) = max(0, deg D + 1)` on the projective line.
    pub fn l_dimension(&self) -> i64 {
        (self.degree() + 1).max(0)
    }

    /// Parses `2*(t) + 1*(t^2+t+1) - 3*(inf)`; `0` is the zero divisor.
    pub fn parse(field: Field, text: &str) -> Result<Divisor> {
        let mut d = Divisor::zero(field.clone());
        let s = text.trim();
        if s == "0" || s.is_empty() {
            return Ok(d);
        }
        let bytes = s.as_bytes();
        let mut i = 0;
        let mut first = true;
        let skip_ws = |i: &mut usize| {
            while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
                *i += 1;
            }
        };
        while i < bytes.len() {
            skip_ws(&mut i);
            let mut sign = 1;
            if i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
                sign = if bytes[i] == b'-' { -1 } else { 1 };
                i += 1;
            } else if !first {
                return Err(Error::Parse { pos: i, msg: "expected '+' or '-'".into() });
            }
            first = false;
            skip_ws(&mut i);
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let mult: i64 = if i > start {
                s[start..i].parse().map_err(|_| Error::Parse { pos: start, msg: "multiplicity too large".into() })?
            } else {
                1
            };
            skip_ws(&mut i);
            if i < bytes.len() && bytes[i] == b'*' {
                i += 1;
                skip_ws(&mut i);
            }
            if i >= bytes.len() || bytes[i] != b'(' {
                return Err(Error::Parse { pos: i, msg: "expected '(' starting a place".into() });
            }
            let open = i;
            let close = s[open..].find(')').map(|k| open + k).ok_or(Error::Parse { pos: open, msg: "unclosed place".into() })?;
            let name = s[open + 1..close].trim();
            let place = if name == "inf" {
                Place::Infinity
            } else {
                let p = parse_poly(&field, name, "t").map_err(|e| match e {
                    Error::Parse { pos, msg } => Error::Parse { pos: pos + open + 1, msg },
                    other => other,
                })?;
                Place::finite(&field, p)?
            };
            d.add_at(place, sign * mult);
            i = close + 1;
            skip_ws(&mut i);
        }
        Ok(d)
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        // finite places first, infinity last
        let mut first = true;
        for (p, &n) in self.parts.iter() {
            let (sign, m) = if n < 0 { ("-", -n) } else { ("+", n) };
            if first {
                if n < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            write!(f, "{m}*{p}")?;
        }
        Ok(())
    }
}

/// A basis `t^j / prod pi_x^{n_x}`, `0 <= j <= deg D`, of `L(D)` on the projective line.
pub fn rr_space_basis(model: &CurveModel, d: &Divisor) -> Result<Vec<RatFn>> {
    if !model.is_projective_line() {
        return Err(Error::Unsupported("Riemann-Roch spaces are implemented on the projective line only".into()));
    }
    let f = d.field();
    if **f != **model.field() {
        return Err(Error::FieldMismatch);
    }
    let deg = d.degree();
    if deg < 0 {
        return Ok(Vec::new());
    }
    let mut num = Poly::one();
    let mut den = Poly::one();
    for (p, n) in d.support() {
        if let Place::Finite(pi) = p {
            let pw = poly::pow(f, pi, n.unsigned_abs() as u32);
            if n > 0 {
                den = poly::mul(f, &den, &pw);
            } else {
                num = poly::mul(f, &num, &pw);
            }
        }
    }
    (0..=deg as usize)
        .map(|j| RatFn::new(f, poly::mul(f, &num, &Poly::monomial(crate::algebra::FqElem::ONE, j)), den.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field_of_order;

    #[test]
    fn parse_and_print() {
        let f = field_of_order(2).unwrap();
        let d = Divisor::parse(f.clone(), "2*(t) + 1*(t^2+t+1) - 3*(inf)").unwrap();
        assert_eq!(d.degree(), 2 + 2 - 3);
        assert_eq!(d.to_string(), "2*(t) + 1*(t^2+t+1) - 3*(inf)");
        assert_eq!(Divisor::parse(f.clone(), &d.to_string()).unwrap(), d);
        assert_eq!(Divisor::parse(f.clone(), "(t) - (t)").unwrap(), Divisor::zero(f.clone()));
        assert!(Divisor::parse(f.clone(), "(t^2+1)").is_err());
        assert!(Divisor::parse(f.clone(), "2*(t").is_err());
        assert!(matches!(Divisor::parse(f, "(t) (inf)"), Err(Error::Parse { pos: 4, .. })));
    }

    fn check_basis(model: &CurveModel, d: &Divisor) -> usize {
        let f = model.field();
        let basis = rr_space_basis(model, d).unwrap();
        for g in &basis {
            let mut places: Vec<Place> = d.support().map(|(p, _)| p.clone()).collect();
            places.extend(g.poles(f).unwrap());
            places.push(Place::Infinity);
            for p in &places {
                assert!(g.ord(f, p) >= -d.coeff(p), "{} at {p}", g.display("t"));
            }
        }
        basis.len()
    }

    #[test]
    fn basis_examples() {
        let f = field_of_order(2).unwrap();
        let m = CurveModel::projective_line(f.clone());
        assert_eq!(check_basis(&m, &Divisor::zero(f.clone())), 1);
        assert_eq!(check_basis(&m, &Divisor::parse(f.clone(), "2*(inf)").unwrap()), 3);
        assert_eq!(check_basis(&m, &Divisor::parse(f.clone(), "(t) + (inf)").unwrap()), 3);
        assert_eq!(check_basis(&m, &Divisor::parse(f.clone(), "-1*(inf)").unwrap()), 0);
        assert_eq!(check_basis(&m, &Divisor::parse(f, "3*(t^2+t+1) - 2*(t+1) - 1*(inf)").unwrap()), 4);
    }

    #[test]
    fn riemann_roch_on_line() {
        let f = field_of_order(3).unwrap();
        let k = Divisor::canonical(f.clone());
        for a in -3..=3 {
            for b in -3..=3 {
                let d = Divisor::from_parts(f.clone(), [(Place::Infinity, a), (Place::rational(&f, crate::algebra::FqElem(1)), b)]);
                assert_eq!(d.l_dimension() - k.sub(&d).l_dimension(), d.degree() + 1);
            }
        }
    }
}
