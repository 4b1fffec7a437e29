use serde::{Deserialize, Serialize};

use crate::algebra::{field_of_order, make_field, poly, Field, FqElem, GaloisField};
use crate::error::{Error, Result};
use crate::series::parse::parse_int_poly;
use crate::series::Place;

/// Largest degree accepted by point enumeration and zeta expansion.
pub const MAX_DEGREE: usize = 12;

/// A projective plane curve `F(x, y, z) = 0` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneCurve {
    source: String,
    terms: Vec<([u32; 3], i64)>,
    degree: u32,
}

impl PlaneCurve {
    pub fn parse(src: &str) -> Result<PlaneCurve> {
        let p = parse_int_poly(src, &["x", "y", "z"])?;
        let terms: Vec<([u32; 3], i64)> = p.into_iter().map(|(e, c)| ([e[0], e[1], e[2]], c)).collect();
        let degree = terms.first().map(|(e, _)| e.iter().sum::<u32>()).ok_or_else(|| Error::contract("zero polynomial"))?;
        if terms.iter().any(|(e, _)| e.iter().sum::<u32>() != degree) {
            return Err(Error::contract("plane curve polynomial must be homogeneous"));
        }
        if degree == 0 {
            return Err(Error::contract("plane curve polynomial must have positive degree"));
        }
        Ok(PlaneCurve { source: src.to_string(), terms, degree })
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    fn partial(&self, var: usize) -> Vec<([u32; 3], i64)> {
        self.terms
            .iter()
            .filter(|(e, _)| e[var] > 0)
            .map(|&(mut e, c)| {
                let k = e[var] as i64;
                e[var] -= 1;
                (e, c * k)
            })
            .collect()
    }
}

/// Evaluator for an integer form over one finite field, with power tables.
struct FormEval<'a> {
    f: &'a GaloisField,
    terms: Vec<([u32; 3], FqElem)>,
}

impl<'a> FormEval<'a> {
    fn new(f: &'a GaloisField, terms: &[([u32; 3], i64)]) -> Self {
        let terms = terms.iter().map(|&(e, c)| (e, f.from_int(c))).filter(|(_, c)| !c.is_zero()).collect();
        FormEval { f, terms }
    }

    fn eval(&self, pows: [&[FqElem]; 3]) -> FqElem {
        let f = self.f;
        let mut acc = FqElem::ZERO;
        for &(e, c) in &self.terms {
            let m = f.mul(f.mul(pows[0][e[0] as usize], pows[1][e[1] as usize]), pows[2][e[2] as usize]);
            acc = f.add(acc, f.mul(c, m));
        }
        acc
    }
}

/// A curve over `F_q`: the projective line or a smooth plane curve.
#[derive(Clone, Debug)]
pub enum CurveModel {
    ProjectiveLine(Field),
    Plane(Field, PlaneCurve),
}

#[derive(Serialize, Deserialize)]
struct CurveJson {
    q: u64,
    model: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    poly: Option<String>,
}

impl CurveModel {
    pub fn projective_line(field: Field) -> CurveModel {
        CurveModel::ProjectiveLine(field)
    }

    pub fn plane(field: Field, src: &str) -> Result<CurveModel> {
        Ok(CurveModel::Plane(field, PlaneCurve::parse(src)?))
    }

    /// Reads `{"q":2,"model":"p1"}` or `{"q":2,"model":"plane","poly":"..."}`.
    pub fn from_json(text: &str) -> Result<CurveModel> {
        let j: CurveJson = parse_json(text)?;
        let field = field_of_order(j.q)?;
        match (j.model.as_str(), j.poly) {
            ("p1", None) => Ok(CurveModel::projective_line(field)),
            ("plane", Some(p)) => CurveModel::plane(field, &p),
            ("plane", None) => Err(Error::contract("plane model needs a \"poly\" entry")),
            (m, _) => Err(Error::Unsupported(format!("curve model '{m}'"))),
        }
    }

    pub fn field(&self) -> &Field {
        match self {
            CurveModel::ProjectiveLine(f) | CurveModel::Plane(f, _) => f,
        }
    }

    pub fn q(&self) -> u64 {
        self.field().size() as u64
    }

    pub fn is_projective_line(&self) -> bool {
        matches!(self, CurveModel::ProjectiveLine(_))
    }

    /// `(d-1)(d-2)/2` for a smooth plane curve of degree `d`.
    pub fn genus(&self) -> u32 {
        match self {
            CurveModel::ProjectiveLine(_) => 0,
            CurveModel::Plane(_, c) => (c.degree - 1) * (c.degree - 2) / 2,
        }
    }

    /// `#C(F_{q^k})`. Plane models are enumerated point by point and
    /// rejected if a found point has all partial derivatives zero.
    pub fn count_points(&self, k: usize) -> Result<u64> {
        if k == 0 || k > MAX_DEGREE {
            return Err(Error::contract(format!("extension degree {k} outside 1..={MAX_DEGREE}")));
        }
        match self {
            CurveModel::ProjectiveLine(f) => Ok((f.size() as u64).pow(k as u32) + 1),
            CurveModel::Plane(f, c) => {
                let big = make_field(f.characteristic() as u64, f.degree() * k, None)?;
                count_plane(&big, c)
            }
        }
    }

    /// Number of closed points of each degree `1..=max_degree` (index 0 unused),
    /// from the point counts by Möbius inversion.
    pub fn closed_point_counts(&self, max_degree: usize) -> Result<Vec<u64>> {
        let totals: Vec<u64> = (1..=max_degree).map(|k| self.count_points(k)).collect::<Result<_>>()?;
        let mut out = vec![0u64; max_degree + 1];
        for d in 1..=max_degree {
            let mut acc: i128 = 0;
            for e in 1..=d {
                if d % e == 0 {
                    acc += mobius((d / e) as u64) as i128 * totals[e - 1] as i128;
                }
            }
            if acc < 0 || acc % d as i128 != 0 {
                return Err(Error::contract("point counts are not consistent with any curve"));
            }
            out[d] = (acc / d as i128) as u64;
        }
        Ok(out)
    }
}

fn parse_json(text: &str) -> Result<CurveJson> {
    serde_json::from_str(text).map_err(|e| Error::Parse { pos: e.column().saturating_sub(1), msg: e.to_string() })
}

fn count_plane(big: &GaloisField, c: &PlaneCurve) -> Result<u64> {
    let d = c.degree as usize;
    let elems: Vec<FqElem> = big.elements().collect();
    // pows[e][x] = x^e
    let pows: Vec<Vec<FqElem>> = (0..=d).map(|e| elems.iter().map(|&x| big.pow(x, e as u64)).collect()).collect();
    let col = |x: FqElem| -> Vec<FqElem> { (0..=d).map(|e| pows[e][x.0 as usize]).collect() };
    let form = FormEval::new(big, &c.terms);
    let partials: Vec<FormEval> = (0..3).map(|v| FormEval::new(big, &c.partial(v))).collect();
    let mut count = 0u64;
    let mut check = |px: &[FqElem], py: &[FqElem], pz: &[FqElem]| -> Result<()> {
        if form.eval([px, py, pz]).is_zero() {
            count += 1;
            if partials.iter().all(|p| p.eval([px, py, pz]).is_zero()) {
                return Err(Error::Degenerate("plane model is singular".into()));
            }
        }
        Ok(())
    };
    let one = col(FqElem::ONE);
    let zero = col(FqElem::ZERO);
    for &x in &elems {
        let px = col(x);
        for &y in &elems {
            check(&px, &col(y), &one)?;
        }
        check(&px, &one, &zero)?;
    }
    check(&one, &zero, &zero)?;
    Ok(count)
}

pub fn mobius(mut n: u64) -> i64 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Closed points of a model up to some degree.
#[derive(Clone, Debug)]
pub struct ClosedPoints {
    /// `counts[d]` closed points of degree `d`; index 0 unused.
    pub counts: Vec<u64>,
    /// Explicit places, for the projective line when enumeration is cheap.
    pub places: Option<Vec<Place>>,
}

/// Enumeration budget for listing places explicitly.
const LISTING_BUDGET: u64 = 1 << 14;

pub fn closed_points(model: &CurveModel, max_degree: usize) -> Result<ClosedPoints> {
    if max_degree == 0 || max_degree > MAX_DEGREE {
        return Err(Error::contract(format!("degree cap must be in 1..={MAX_DEGREE}")));
    }
    let counts = model.closed_point_counts(max_degree)?;
    let places = match model {
        CurveModel::ProjectiveLine(f) => {
            let q = f.size() as u64;
            let work: u64 = (1..=max_degree as u32).map(|d| q.saturating_pow(d)).fold(0u64, |a, b| a.saturating_add(b));
            if work <= LISTING_BUDGET {
                let mut v = vec![Place::Infinity];
                for d in 1..=max_degree {
                    v.extend(poly::irreducibles_of_degree(f, d).into_iter().map(Place::Finite));
                }
                Some(v)
            } else {
                None
            }
        }
        CurveModel::Plane(..) => None,
    };
    Ok(ClosedPoints { counts, places })
}
