//! Exact harmonic analysis on finite adelic windows of curves over finite
//! fields, with one- and two-dimensional residue calculus.
//!
//! Value-level arithmetic (characters, Fourier transforms, zeta series,
//! rational fits) is generic over an exact [`Scalar`]; the aliases below fix
//! the arbitrary-precision rationals used throughout the front end.

pub mod adeles;
pub mod algebra;
pub mod curve;
pub mod error;
pub mod harmonic;
pub mod hecke;
pub mod lattice;
pub mod linalg;
pub mod scalar;
pub mod series;
pub mod surface;
pub mod upoly;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Arbitrary-precision rationals.
pub type Rational = num_rational::BigRational;
/// Machine-word rationals; fast but may overflow on large windows.
pub type Rational64 = num_rational::Ratio<i64>;

pub type Cyclo = algebra::CycloValue<Rational>;
pub type Cyclo64 = algebra::CycloValue<Rational64>;

pub type Zeta = curve::ZetaSeries<Rational>;
pub type Table = harmonic::FnTable<Rational>;
