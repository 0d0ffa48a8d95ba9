//! Reduced Hochschild chains of a presented dg category, the operators `b` and `B`,
//! and the homology theories of the resulting mixed complex.
//!
//! A basis word `x_0 ⊗ x_1 ⊗ … ⊗ x_n` has total degree `n + Σ|x_i|`. Because hom
//! degrees are non-negative, a word in total degree `t` has at most `t + 1` letters, so
//! a complex built up to a degree cap is exact in that range. Words are ordered by
//! length, then by object sequence, then by letter indices.

mod complex;
mod induced;
mod totalize;
mod words;

pub use complex::{build_mixed_complex, build_mixed_complex_with, BuildOptions, MixedComplexData};
pub use induced::{induced_map, MixedMap};
pub use totalize::{hc, hc_by_weight, hc_minus_and_hp, hh, hh_by_weight, CyclicReport};
pub use words::Word;

pub(crate) use totalize::{b_complex, block_matrix, components, total_complex, Totalization};


use crate::dgcat::DgError;
use crate::exactlin::HomologyError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HochschildError {
    #[error("weight window insufficient: weight {missing} is needed but not presented")]
    WeightWindowInsufficient { missing: i64 },
    #[error("degree cap insufficient: degree {need} is needed but the presentation stops at {have}")]
    DegreeCapInsufficient { need: i64, have: i64 },
    #[error("negative homological degree on `{0}`")]
    DegreeNegative(String),
    #[error("negative weight on `{0}`: words would not be finite per weight")]
    NegativeWeight(String),
    #[error("hom module spanned by `{0}` is not free over the base ring; resolve it first")]
    NonFreeInput(String),
    #[error("window {lo}..{hi} needs degree cap {needed_cap}, complex was built with cap {cap}")]
    WindowTooSmall { lo: i64, hi: i64, cap: i64, needed_cap: i64 },
    #[error("window starts at negative degree {0}")]
    NegativeWindow(i64),
    #[error("degree cap must be non-negative, got {0}")]
    BadCap(i64),
    #[error("u-truncation order must be at least 1, got {0}")]
    BadOrder(i64),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Dg(#[from] DgError),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}
