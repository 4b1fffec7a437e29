//! Finite adelic windows on the projective line, the restricted adelic
//! complex at infinity, and strong approximation at window level.

pub mod cohomology;
pub mod window;

pub use cohomology::{restricted_complex_cohomology, strong_approximation_check, ComplexBounds};
pub use window::{AdeleWindow, PlaceBlock, WindowVector};
