//! Semi-free resolutions of presented dg categories as towers of truncated free
//! categories, with the checks, flatness probe and functor lifting built on them.

mod analysis;
mod cells;
mod check;
mod flat;
mod free;
mod lift;
mod shukla;
mod tower;

pub use check::{check_resolution, is_boundary_at, CellCheck, ResolutionReport, UnresolvedCycle};
pub use flat::{flatness_probe, hom_complex, short_exact_test_complex, tensor, FlatnessReport, PairFlatness};
pub use free::{compose_elems, free_category, path_differential, FreeCategory, GeneratorSpec, PathElem, PathKey};
pub use lift::{check_lift, lift_functor, vanishes_off_units};
pub use shukla::{hom_modules_free, shukla_mixed_complex, ShuklaCaps, ShuklaComplex, ShuklaPath};
pub use tower::{semifree_resolve, DefectKind, GeneratorKind, LedgerEntry, SemiFreeStageTower, Stage, TowerGenerator};

use crate::dgcat::DgError;
use crate::exactlin::HomologyError;
use crate::hochschild::HochschildError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ResolveError {
    #[error("negative weight on `{0}`")]
    NegativeWeight(String),
    #[error("degree cap must be non-negative, got {0}")]
    BadDegreeCap(i64),
    #[error("weight window {lo}..{hi} must contain 0 and lie inside the presented window {have_lo}..{have_hi}")]
    WindowNotCovered { lo: i64, hi: i64, have_lo: i64, have_hi: i64 },
    #[error("degree cap {need} exceeds the presentation's cap {have}")]
    DegreeCapTooSmall { need: i64, have: i64 },
    #[error("a generator in degree 0 and weight 0 from {from_object} to {to_object} would be needed for `{witness}`")]
    ZeroGradedGenerator { from_object: String, to_object: String, witness: String },
    #[error("stage {stage} was not built (last stage {built})")]
    NoSuchStage { stage: usize, built: usize },
    #[error("check window {lo}..{hi} must lie in 0..{cap} minus the top degree")]
    CheckWindow { lo: i64, hi: i64, cap: i64 },
    #[error("stage cap {stage_cap} reached with unresolved cycles: {}", remaining.join(", "))]
    CapExceeded { stage_cap: usize, remaining: Vec<String> },
    #[error("test complex is not acyclic: {0:?}")]
    TestComplexNotAcyclic(crate::exactlin::HomologyReport),
    #[error(transparent)]
    Dg(#[from] DgError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Hochschild(#[from] HochschildError),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

#[cfg(test)]
mod tests;
