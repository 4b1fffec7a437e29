//! Zeta integrals over the affine line and the local field at infinity.

pub mod fe;
pub mod local;
pub mod poisson;
pub mod zeta;

pub use fe::{fitted_zeta, functional_equation, FunctionalEquationReport};
pub use local::{dirichlet_factor, tate_integral, tate_local, Integrand, MAX_TATE_CAP};
pub use poisson::{poisson_check, PoissonReport};
pub use zeta::{hecke_zeta, hecke_zeta_double_sum, monic_up_to, pair_bound, DiscretePart, HeckeZeta, MAX_HECKE_CAP};
