//! The free distributive lattice on three generators and its quadrant model.

pub mod quadrant;
pub mod term;

pub use quadrant::{
    candidate_sets, class_count, commensurable, homomorphism_check, injectivity_check, model_evaluate,
    search_third_generator, shipped_assignment, Assignment, Bound, ModelSearch, QuadrantSet,
};
pub use term::{enumerate_free_lattice, hasse_dot, hasse_edges, LatticeTerm, GENERATORS};
