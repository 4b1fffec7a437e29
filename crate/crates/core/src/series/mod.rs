//! Rational functions, places, and their local expansions in one and two variables.

pub mod expand;
pub mod iterated;
pub mod laurent;
pub mod parse;
pub mod poly2;
pub mod ratfn;

pub use expand::{
    digit_expansion, digit_residue, expand_rational_1d, place_residue, residue_1d, Differential, LocalExpansion,
    ResidueExtension, Uniformizer,
};
pub use iterated::{change_coordinates, exact_levels, expand_rational_2d, residue_2d, CurveShape, Flag, IteratedSeries2D, Rat2};
pub use laurent::LaurentSeries1D;
pub use poly2::Poly2;
pub use ratfn::{multiplicity, Place, RatFn};
