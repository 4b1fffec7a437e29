//! Poisson summation on an adele window.

use serde::Serialize;

use crate::adeles::AdeleWindow;
use crate::algebra::CycloValue;
use crate::error::Result;
use crate::harmonic::{fourier, span_indices, window_space, FnTable};
use crate::linalg::span_basis;
use crate::scalar::Scalar;

/// Both sides of `|V| sum_{Gamma} f = |Gamma| sum_{Gamma^perp} f^`.
#[derive(Clone, Debug, Serialize)]
pub struct PoissonReport<S: Scalar> {
    pub window_size: String,
    pub lattice_size: String,
    pub direct: CycloValue<S>,
    pub transformed: CycloValue<S>,
    pub holds: bool,
}

fn sum_over<S: Scalar>(f: &FnTable<S>, idx: &[usize]) -> Result<CycloValue<S>> {
    let p = f.space.field.characteristic();
    idx.iter().try_fold(CycloValue::zero(p), |acc, &i| acc.checked_add(&f.values[i]))
}

/// Poisson summation for the global lattice `Gamma` in the window `w`; the
/// annihilator of `Gamma` is computed from the residue pairing.
pub fn poisson_check<S: Scalar>(w: &AdeleWindow, f: &FnTable<S>) -> Result<PoissonReport<S>> {
    let (fhat, dual) = fourier(f, w)?;
    let space = window_space(w)?;
    let gamma = span_basis(w.field(), w.dim(), &w.global_image()?);
    let m = w.pairing_matrix(&dual)?;
    let perp = crate::harmonic::parseval::annihilator(w, &m, &gamma);
    let gamma_idx = span_indices(&space, &gamma);
    let perp_idx = span_indices(&fhat.space, &perp);
    let v = S::from_i64(space.size() as i64);
    let g = S::from_i64(gamma_idx.len() as i64);
    let direct = sum_over(f, &gamma_idx)?.scale(&v);
    let transformed = sum_over(&fhat, &perp_idx)?.scale(&g);
    let holds = direct == transformed;
    Ok(PoissonReport {
        window_size: space.size().to_string(),
        lattice_size: gamma_idx.len().to_string(),
        direct,
        transformed,
        holds,
    })
}
