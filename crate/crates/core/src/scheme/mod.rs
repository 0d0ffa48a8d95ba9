//! Čech hypercohomology of presheaves of mixed complexes on finite affine covers,
//! Mayer–Vietoris bookkeeping, and the comparison with a generating dg category.
//!
//! Total degree of a class on an intersection of `m + 1` patches in internal degree `q`
//! is `q - m`, so the Čech direction lowers homological degree.

mod cech;
mod cover;
mod derham;
mod keller;
mod mv;

pub use cech::{cech_homology, cech_total_complex, CechReport, Mode};
pub use cover::{affine_line, affine_line_bar, cover_from_kinds, projective_line, CechCoverData};
pub use derham::{derham_patch, derham_restriction, PatchKind};
pub use keller::{keller_compare, KellerVerdict};
pub use mv::{mayer_vietoris_check, MvReport, MvRow};

use crate::dgcat::DgError;
use crate::exactlin::HomologyError;
use crate::hochschild::HochschildError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SchemeError {
    #[error("presheaf condition fails on the inclusions from {from} into {to}")]
    PresheafConditionViolated { from: String, to: String },
    #[error("restriction {from} → {to} is not a map of mixed complexes: {reason}")]
    NotAChainMap { from: String, to: String, reason: String },
    #[error("weight {weight} is not available on {patch}")]
    WeightWindowInsufficient { weight: i64, patch: String },
    #[error("window {lo}..{hi} needs patch complexes to degree {needed_cap}, cover has {cap}")]
    WindowTooSmall { lo: i64, hi: i64, cap: i64, needed_cap: i64 },
    #[error("bad cover: {0}")]
    BadCover(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Hochschild(#[from] HochschildError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Dg(#[from] DgError),
}

#[cfg(test)]
mod tests;
