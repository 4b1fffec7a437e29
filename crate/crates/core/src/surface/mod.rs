//! The two-dimensional local field at a flag of a surface.

pub mod catalog;
pub mod residue;
pub mod subring;
pub mod torsor;
pub mod zeta;

pub use catalog::{CURVE_CATALOG, POINT_CATALOG};
pub use residue::{
    chart_invert_t, chart_invert_u, polar_flags_at_origin, residue_relation_curve, residue_relation_point, ResidueEntry,
    ResidueReport, SurfaceCurve, MAX_BRANCH_DEGREE,
};
pub use subring::{subring_membership, Membership, SubringTag};
pub use torsor::{f02_pushforward, standard_block_indicator, torsor_difference, NormalizationDatum, TwoLevelWindow};
pub use zeta::{affine_space_zeta, closed_counts_from_totals, surface_zeta_factorization, SurfaceZeta, MAX_SURFACE_TERMS};
