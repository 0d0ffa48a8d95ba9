use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rayon::prelude::*;

use super::cover::CechCoverData;
use super::SchemeError;
use crate::dgcat::sign;
use crate::exactlin::{complex_homology, ChainComplexOfFree, HomologyReport};
use crate::hochschild::{b_complex, block_matrix, components, total_complex, MixedComplexData, MixedMap, Totalization};
use crate::RatMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Hh,
    Hc,
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "hh" => Ok(Mode::Hh),
            "hc" => Ok(Mode::Hc),
            _ => Err(format!("unknown mode `{s}` (expected hh or hc)")),
        }
    }
}

/// The patch complex of one node in one weight, on internal degrees `lo..=hi`.
pub(crate) fn internal(m: &MixedComplexData, w: i64, mode: Mode, lo: i64, hi: i64) -> ChainComplexOfFree {
    match mode {
        Mode::Hh => b_complex(m, w),
        Mode::Hc => total_complex(m, w, Totalization::Cyclic, lo, hi),
    }
}

/// A restriction map on internal degree `q`; in HC mode it acts on each `u^{-j}` copy.
pub(crate) fn restrict(map: &MixedMap, src: &MixedComplexData, tgt: &MixedComplexData, q: i64, w: i64, mode: Mode) -> RatMatrix {
    match mode {
        Mode::Hh => map.at(q, w, src, tgt),
        Mode::Hc => {
            let cs = components(src, Totalization::Cyclic, q);
            let ct = components(tgt, Totalization::Cyclic, q);
            let rows: Vec<usize> = ct.iter().map(|&(_, s)| tgt.rank(s, w)).collect();
            let cols: Vec<usize> = cs.iter().map(|&(_, s)| src.rank(s, w)).collect();
            let mut blocks = Vec::new();
            for (c, &(j, s)) in cs.iter().enumerate() {
                if let Some(r) = ct.iter().position(|&(k, _)| k == j) {
                    blocks.push((r, c, map.at(s, w, src, tgt)));
                }
            }
            block_matrix(&rows, &cols, &blocks)
        }
    }
}

fn require_window(cover: &CechCoverData, window: &RangeInclusive<i64>) -> Result<(), SchemeError> {
    let k = cover.patches.len() as i64;
    let need = window.end() + k - 1;
    if need > cover.degree_cap {
        return Err(SchemeError::WindowTooSmall { lo: *window.start(), hi: *window.end(), cap: cover.degree_cap, needed_cap: need });
    }
    Ok(())
}

/// Čech total complex in weight `w` on total degrees `window.start()-1 ..= window.end()+1`.
/// A class on `U_S` in internal degree `q` has total degree `q - (|S| - 1)`; the
/// differential is the internal one plus `(-1)^q` times the alternating Čech sum.
pub fn cech_total_complex(cover: &CechCoverData, w: i64, window: RangeInclusive<i64>, mode: Mode) -> Result<ChainComplexOfFree, SchemeError> {
    require_window(cover, &window)?;
    let (lo, hi) = (*window.start() - 1, *window.end() + 1);
    let k = cover.patches.len() as i64;
    let subsets = cover.subsets();
    let inner: BTreeMap<&Vec<usize>, ChainComplexOfFree> =
        subsets.iter().map(|s| (s, internal(cover.node(s), w, mode, lo, hi + k))).collect();
    let rank_at = |s: &Vec<usize>, t: i64| inner[s].rank(t + s.len() as i64 - 1);
    let mut c = ChainComplexOfFree::truncated(cover.ring.clone(), lo, hi);
    for t in lo..=hi {
        let cols: Vec<usize> = subsets.iter().map(|s| rank_at(s, t)).collect();
        c.set_rank(t, cols.iter().sum());
        if t == lo {
            continue;
        }
        let rows: Vec<usize> = subsets.iter().map(|s| rank_at(s, t - 1)).collect();
        let mut blocks = Vec::new();
        for (ci, s) in subsets.iter().enumerate() {
            let q = t + s.len() as i64 - 1;
            if q < 0 || cols[ci] == 0 {
                continue;
            }
            blocks.push((ci, ci, inner[s].differential(q)));
            for (ri, big) in subsets.iter().enumerate() {
                if big.len() != s.len() + 1 || !s.iter().all(|x| big.contains(x)) {
                    continue;
                }
                let pos = big.iter().position(|x| !s.contains(x)).expect("one new patch") as i64;
                let m = restrict(cover.restriction(s, big), cover.node(s), cover.node(big), q, w, mode);
                blocks.push((ri, ci, m.scale(&(sign(q) * sign(pos)))));
            }
        }
        c.set_differential(t, block_matrix(&rows, &cols, &blocks));
    }
    Ok(c)
}

/// Hypercohomology of the cover, per weight and summed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CechReport {
    pub mode: Mode,
    pub by_weight: BTreeMap<i64, HomologyReport>,
    pub total: HomologyReport,
}

pub fn cech_homology(cover: &CechCoverData, window: RangeInclusive<i64>, mode: Mode) -> Result<CechReport, SchemeError> {
    cover.check()?;
    require_window(cover, &window)?;
    let ws: Vec<i64> = cover.weights.iter().copied().collect();
    let by_weight: BTreeMap<i64, HomologyReport> = ws
        .par_iter()
        .map(|&w| {
            let c = cech_total_complex(cover, w, window.clone(), mode)?;
            Ok((w, complex_homology(&c, window.clone())?))
        })
        .collect::<Result<_, SchemeError>>()?;
    let mut total = HomologyReport::new(cover.ring.clone());
    for t in window {
        total.degrees.insert(t, Default::default());
    }
    for r in by_weight.values() {
        total = total.direct_sum(r);
    }
    Ok(CechReport { mode, by_weight, total })
}
