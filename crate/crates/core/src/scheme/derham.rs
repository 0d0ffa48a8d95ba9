//! Small de Rham models `(Ω^•, b = 0, B = d)` of the patches of the affine and
//! projective line. `Ω^0` sits in chain degree 0 and `Ω^1` in chain degree 1.
//!
//! Bases per weight `w`:
//! - `AffineX`: `x^w` (w ≥ 0), `x^{w-1} dx` (w ≥ 1)
//! - `AffineY` with `y = 1/x` of weight −1: `y^{-w}` (w ≤ 0), `y^{-w-1} dy` (w ≤ −1)
//! - `Laurent`: `x^w`, `x^{w-1} dx` for every `w`
//! - `Zero`: nothing

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::exactlin::{ExactMatrix, RingSpec};
use crate::hochschild::{MixedComplexData, MixedMap};
use crate::{Coeff, RatMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PatchKind {
    AffineX,
    AffineY,
    Laurent,
    Zero,
}

impl fmt::Display for PatchKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PatchKind::AffineX => "a1x",
            PatchKind::AffineY => "a1y",
            PatchKind::Laurent => "laurent",
            PatchKind::Zero => "zero",
        };
        f.write_str(s)
    }
}

impl FromStr for PatchKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "a1x" => Ok(PatchKind::AffineX),
            "a1y" => Ok(PatchKind::AffineY),
            "laurent" => Ok(PatchKind::Laurent),
            "zero" => Ok(PatchKind::Zero),
            _ => Err(format!("unknown patch kind `{s}` (expected a1x, a1y, laurent or zero)")),
        }
    }
}

impl PatchKind {
    /// Ranks of `Ω^0` and `Ω^1` in weight `w`.
    pub fn ranks(self, w: i64) -> (usize, usize) {
        match self {
            PatchKind::AffineX => ((w >= 0) as usize, (w >= 1) as usize),
            PatchKind::AffineY => ((w <= 0) as usize, (w <= -1) as usize),
            PatchKind::Laurent => (1, 1),
            PatchKind::Zero => (0, 0),
        }
    }

    /// Coefficient of `d` on the single `Ω^0` basis element of weight `w`, when both
    /// sides are present.
    fn d_coeff(self, w: i64) -> i64 {
        match self {
            // d x^w = w x^{w-1} dx
            PatchKind::AffineX | PatchKind::Laurent => w,
            // d y^k = k y^{k-1} dy with k = -w
            PatchKind::AffineY => -w,
            PatchKind::Zero => 0,
        }
    }
}

fn scalar(c: i64) -> RatMatrix {
    ExactMatrix::from_rows(vec![vec![Coeff::from_integer(c.into())]])
}

/// The de Rham mixed complex of a patch on the given weights. `degree_cap` only fixes
/// how far the (zero) higher chain groups are considered known.
pub fn derham_patch(ring: &RingSpec, kind: PatchKind, weights: &BTreeSet<i64>, degree_cap: i64) -> MixedComplexData {
    let mut ranks = BTreeMap::new();
    let mut big_b = BTreeMap::new();
    for &w in weights {
        let (r0, r1) = kind.ranks(w);
        ranks.insert((0, w), r0);
        ranks.insert((1, w), r1);
        if r0 == 1 && r1 == 1 {
            big_b.insert((0, w), scalar(kind.d_coeff(w)));
        }
    }
    let mut m = MixedComplexData::from_parts(ring.clone(), degree_cap, weights.clone(), ranks, BTreeMap::new(), big_b);
    m.note = format!("de Rham model of a {kind} patch");
    m
}

/// Restriction from one patch model to another, or `None` when no such map exists.
pub fn derham_restriction(from: PatchKind, to: PatchKind, weights: &BTreeSet<i64>) -> Option<MixedMap> {
    use PatchKind::*;
    let mut cells = BTreeMap::new();
    for &w in weights {
        let (s0, s1) = from.ranks(w);
        let (t0, t1) = to.ranks(w);
        let (c0, c1) = match (from, to) {
            (_, Zero) | (Zero, _) => (0, 0),
            (a, b) if a == b => (1, 1),
            (AffineX, Laurent) => (1, 1),
            // y^k ↦ x^{-k},  y^k dy ↦ -x^{-k-2} dx
            (AffineY, Laurent) => (1, -1),
            _ => return None,
        };
        let block = |s: usize, t: usize, c: i64| -> RatMatrix {
            if s == 1 && t == 1 {
                scalar(c)
            } else {
                ExactMatrix::zeros(t, s)
            }
        };
        cells.insert((0, w), block(s0, t0, c0));
        cells.insert((1, w), block(s1, t1, c1));
    }
    Some(MixedMap { cells })
}
