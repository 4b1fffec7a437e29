//! Functions on finite adelic windows: pushforward and pullback, the Fourier
//! transform for the residue pairing, Parseval and Riemann-Roch, the cube
//! chain, and Bruhat type tags.

pub mod bruhat;
pub mod cube;
pub mod fourier;
pub mod parseval;
pub mod table;

pub use bruhat::{bruhat_type, catalog_table, classify, standard_catalog, BruhatReport, BruhatType, CatalogKind, DeltaCatalogEntry, WindowFamily};
pub use cube::{cube_check, CubeReport};
pub use fourier::{dot_transform, fourier, fourier_with_pairing, window_space};
pub use parseval::{parseval_tables, parseval_window, rr_via_parseval, ParsevalReport};
pub use table::{pair, pullback, pushforward, span_indices, FiniteSpace, FnTable, LinearMap};
