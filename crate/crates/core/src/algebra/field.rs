use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

use super::poly::{self, Poly};

/// Largest field size accepted by [`make_field`].
pub const MAX_FIELD_SIZE: u64 = 1 << 16;

/// An element of some `F_{p^k}`, packed as the base-`p` integer of its
/// coefficient vector in the polynomial basis `1, x, ..., x^{k-1}`.
///
/// Elements carry no reference to their field; every operation goes through
/// the owning [`GaloisField`].
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FqElem(pub u32);

impl FqElem {
    pub const ZERO: FqElem = FqElem(0);
    pub const ONE: FqElem = FqElem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Shared handle to a field description.
pub type Field = Arc<GaloisField>;

/// The finite field `F_{p^k} = F_p[x]/(m(x))` with log/exp tables.
pub struct GaloisField {
    p: u32,
    k: usize,
    q: u32,
    /// Monic modulus over `F_p`, lowest coefficient first, length `k + 1`.
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    add_table: Option<Vec<u32>>,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GaloisField")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.modulus == other.modulus
    }
}

impl Eq for GaloisField {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Builds `F_{p^k}`.
///
/// Without an explicit modulus the lexicographically smallest monic
/// irreducible of degree `k` is used, where polynomials are compared by the
/// base-`p` integer of their non-leading coefficients (so `x^3 + x + 1`
/// precedes `x^3 + x^2 + 1` over `F_2`).
pub fn make_field(p: u64, k: usize, modulus: Option<&[u32]>) -> Result<Field> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k == 0 {
        return Err(Error::contract("extension degree must be at least 1"));
    }
    let q = (p as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if q > MAX_FIELD_SIZE as u128 {
        return Err(Error::FieldTooLarge(q.min(u64::MAX as u128) as u64));
    }
    let p32 = p as u32;
    let prime = Arc::new(GaloisField::build(p32, 1, vec![0, 1]));
    let modulus = match modulus {
        Some(m) => {
            if m.len() != k + 1 {
                return Err(Error::DegreeMismatch { expected: k, found: m.len().saturating_sub(1) });
            }
            if m[k] % p32 != 1 {
                return Err(Error::contract("modulus must be monic"));
            }
            let m: Vec<u32> = m.iter().map(|c| c % p32).collect();
            let mp = Poly::from_u32s(&m);
            if !poly::is_irreducible(&prime, &mp) {
                return Err(Error::Reducible(p));
            }
            m
        }
        None => {
            if k == 1 {
                vec![0, 1]
            } else {
                smallest_irreducible(&prime, k)
                    .into_iter()
                    .map(|c| c.0)
                    .collect()
            }
        }
    };
    if k == 1 {
        return Ok(prime);
    }
    Ok(Arc::new(GaloisField::build(p32, k, modulus)))
}

/// Splits a prime power `q = p^k`.
pub fn prime_power(q: u64) -> Result<(u64, usize)> {
    let fs = prime_factors(q);
    if fs.len() != 1 {
        return Err(Error::NotPrime(q));
    }
    let p = fs[0];
    let mut k = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        k += 1;
    }
    Ok((p, k))
}

/// `F_q` with its default modulus.
pub fn field_of_order(q: u64) -> Result<Field> {
    let (p, k) = prime_power(q)?;
    make_field(p, k, None)
}

/// Lexicographically smallest monic irreducible of degree `k` over `field`.
pub fn smallest_irreducible(field: &GaloisField, k: usize) -> Vec<FqElem> {
    let q = field.size() as u64;
    let count = q.pow(k as u32);
    for v in 0..count {
        let mut coeffs = Vec::with_capacity(k + 1);
        let mut rest = v;
        for _ in 0..k {
            coeffs.push(FqElem((rest % q) as u32));
            rest /= q;
        }
        coeffs.push(FqElem::ONE);
        let f = Poly::new(coeffs.clone());
        if poly::is_irreducible(field, &f) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl GaloisField {
    fn build(p: u32, k: usize, modulus: Vec<u32>) -> GaloisField {
        let q = p.pow(k as u32);
        let mut field = GaloisField {
            p,
            k,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
            add_table: None,
        };
        if q <= 256 {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = field.add_digits(a, b);
                }
            }
            field.add_table = Some(t);
        }
        field.build_tables();
        field
    }

    fn add_digits(&self, mut a: u32, mut b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let mut out = 0;
        let mut place = 1;
        while a > 0 || b > 0 {
            let d = (a % self.p + b % self.p) % self.p;
            out += d * place;
            place *= self.p;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    fn digits(&self, mut a: u32) -> Vec<u32> {
        let mut d = vec![0; self.k];
        for slot in d.iter_mut() {
            *slot = a % self.p;
            a /= self.p;
        }
        d
    }

    fn pack(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    /// Schoolbook product modulo the defining polynomial; used only to seed the tables.
    fn raw_mul(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u64; 2 * self.k];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for deg in (self.k..2 * self.k).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            prod[deg] = 0;
            for (i, &m) in self.modulus[..self.k].iter().enumerate() {
                let idx = deg - self.k + i;
                prod[idx] = (prod[idx] + (p - c) * m as u64) % p;
            }
        }
        let low: Vec<u32> = prod[..self.k].iter().map(|&c| c as u32).collect();
        self.pack(&low)
    }

    fn build_tables(&mut self) {
        let order = self.q - 1;
        let factors = prime_factors(order as u64);
        let mut gen = 0;
        'search: for g in 1..self.q {
            if order == 1 {
                gen = 1;
                break;
            }
            // g has full order iff g^((q-1)/r) != 1 for each prime r | q-1
            for &r in &factors {
                if self.raw_pow(g, order as u64 / r) == 1 {
                    continue 'search;
                }
            }
            gen = g;
            break;
        }
        let mut exp = vec![0u32; 2 * order as usize];
        let mut log = vec![0u32; self.q as usize];
        let mut x = 1;
        for i in 0..order as usize {
            exp[i] = x;
            exp[i + order as usize] = x;
            log[x as usize] = i as u32;
            x = self.raw_mul(x, gen);
        }
        self.exp = exp;
        self.log = log;
    }

    fn raw_pow(&self, base: u32, mut e: u64) -> u32 {
        let mut acc = 1;
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.raw_mul(acc, b);
            }
            b = self.raw_mul(b, b);
            e >>= 1;
        }
        acc
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Extension degree over the prime field.
    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn size(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = FqElem> {
        (0..self.q).map(FqElem)
    }

    pub fn from_int(&self, v: i64) -> FqElem {
        FqElem(v.rem_euclid(self.p as i64) as u32)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FqElem> {
        if coeffs.len() != self.k {
            return Err(Error::DegreeMismatch { expected: self.k, found: coeffs.len() });
        }
        let reduced: Vec<u32> = coeffs.iter().map(|c| c % self.p).collect();
        Ok(FqElem(self.pack(&reduced)))
    }

    pub fn coeffs(&self, x: FqElem) -> Vec<u32> {
        self.digits(x.0)
    }

    /// The class of `x` in the polynomial presentation, i.e. the generator
    /// of `F_p[x]/(m)`.
    pub fn x(&self) -> FqElem {
        if self.k == 1 {
            // modulus is `x` itself; the generator class is zero
            FqElem::ZERO
        } else {
            FqElem(self.p)
        }
    }

    #[inline]
    pub fn add(&self, a: FqElem, b: FqElem) -> FqElem {
        if let Some(t) = &self.add_table {
            FqElem(t[(a.0 * self.q + b.0) as usize])
        } else {
            FqElem(self.add_digits(a.0, b.0))
        }
    }

    #[inline]
    pub fn neg(&self, a: FqElem) -> FqElem {
        if self.p == 2 || a.0 == 0 {
            return a;
        }
        let d: Vec<u32> = self.digits(a.0).iter().map(|&c| (self.p - c) % self.p).collect();
        FqElem(self.pack(&d))
    }

    #[inline]
    pub fn sub(&self, a: FqElem, b: FqElem) -> FqElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FqElem, b: FqElem) -> FqElem {
        if a.0 == 0 || b.0 == 0 {
            return FqElem::ZERO;
        }
        let l = self.log[a.0 as usize] + self.log[b.0 as usize];
        FqElem(self.exp[l as usize])
    }

    pub fn inv(&self, a: FqElem) -> Result<FqElem> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let order = self.q - 1;
        let l = (order - self.log[a.0 as usize]) % order;
        Ok(FqElem(self.exp[l as usize]))
    }

    pub fn div(&self, a: FqElem, b: FqElem) -> Result<FqElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FqElem, e: u64) -> FqElem {
        if e == 0 {
            return FqElem::ONE;
        }
        if a.0 == 0 {
            return FqElem::ZERO;
        }
        let order = (self.q - 1) as u64;
        let l = (self.log[a.0 as usize] as u64 * (e % order)) % order;
        FqElem(self.exp[l as usize])
    }

    pub fn frobenius(&self, a: FqElem) -> FqElem {
        self.pow(a, self.p as u64)
    }

    /// Absolute trace `F_{p^k} -> F_p`, returned as an integer in `0..p`.
    pub fn trace(&self, a: FqElem) -> u32 {
        let mut acc = FqElem::ZERO;
        let mut x = a;
        for _ in 0..self.k {
            acc = self.add(acc, x);
            x = self.frobenius(x);
        }
        debug_assert!(acc.0 < self.p, "trace must land in the prime field");
        acc.0
    }

    pub fn sum<I: IntoIterator<Item = FqElem>>(&self, it: I) -> FqElem {
        it.into_iter().fold(FqElem::ZERO, |a, b| self.add(a, b))
    }
}

/// Embedding of `small` into `big` as field homomorphism, returned as the
/// image table indexed by the packed value of each element of `small`.
///
/// Requires `deg(small) | deg(big)` and equal characteristic.
pub fn embedding(small: &GaloisField, big: &GaloisField) -> Result<Vec<FqElem>> {
    if small.p != big.p || big.k % small.k != 0 {
        return Err(Error::FieldMismatch);
    }
    // find a root of small's modulus in big
    let root = big
        .elements()
        .find(|&r| {
            let mut acc = FqElem::ZERO;
            for &c in small.modulus.iter().rev() {
                acc = big.add(big.mul(acc, r), big.from_int(c as i64));
            }
            acc.is_zero()
        })
        .ok_or(Error::FieldMismatch)?;
    let mut table = Vec::with_capacity(small.q as usize);
    for v in 0..small.q {
        let d = small.digits(v);
        let mut acc = FqElem::ZERO;
        for &c in d.iter().rev() {
            acc = big.add(big.mul(acc, root), big.from_int(c as i64));
        }
        table.push(acc);
    }
    Ok(table)
}
