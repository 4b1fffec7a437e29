//! Curves over finite fields: the projective line in full, smooth plane
//! curves for point counting, divisors, Riemann-Roch spaces, and zeta series.

pub mod divisor;
pub mod model;
pub mod zeta;

pub use divisor::{rr_space_basis, Divisor};
pub use zeta::{effective_divisor_series, euler_product, functional_equation_check, line_denominator, zeta_from_counts, ZetaSeries};
pub use model::{closed_points, mobius, ClosedPoints, CurveModel, PlaneCurve, MAX_DEGREE};
pub use crate::series::Place as ClosedPoint;
