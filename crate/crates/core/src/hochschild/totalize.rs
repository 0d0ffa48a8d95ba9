use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rayon::prelude::*;

use super::complex::MixedComplexData;
use super::HochschildError;
use crate::exactlin::{complex_homology, ChainComplexOfFree, ExactMatrix, HomologyReport};
use crate::RatMatrix;

/// Which u-completion of `(C, b + uB)` to totalize.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Totalization {
    /// Components `u^{-j} C_{τ-2j}`, `j ≥ 0`.
    Cyclic,
    /// Components `u^j C_{τ+2j}`, `0 ≤ j < n`.
    Negative(i64),
    /// Components `u^j C_{τ+2j}`, `j < n`.
    Periodic(i64),
}

/// Stacks blocks into one matrix. `blocks` holds `(row block, col block, matrix)`.
pub(crate) fn block_matrix(rows: &[usize], cols: &[usize], blocks: &[(usize, usize, RatMatrix)]) -> RatMatrix {
    let row_off: Vec<usize> = rows.iter().scan(0, |a, &r| { let o = *a; *a += r; Some(o) }).collect();
    let col_off: Vec<usize> = cols.iter().scan(0, |a, &c| { let o = *a; *a += c; Some(o) }).collect();
    let mut m = ExactMatrix::zeros(rows.iter().sum(), cols.iter().sum());
    for (r, c, b) in blocks {
        for (i, j, v) in b.entries() {
            m.add_to(row_off[*r] + i, col_off[*c] + j, v.clone());
        }
    }
    m
}

/// `(C_t, b)` in one weight as a free complex.
pub(crate) fn b_complex(m: &MixedComplexData, w: i64) -> ChainComplexOfFree {
    let top = m.degree_cap + 1;
    let mut c = ChainComplexOfFree::truncated(m.ring.clone(), -1, top);
    for t in 0..=top {
        c.set_rank(t, m.rank(t, w));
        if t >= 1 {
            c.set_differential(t, m.b(t, w));
        }
    }
    c
}

/// Chain degrees making up total degree `tau`, as `(j, chain degree)`.
pub(crate) fn components(m: &MixedComplexData, kind: Totalization, tau: i64) -> Vec<(i64, i64)> {
    let top = m.degree_cap + 1;
    match kind {
        Totalization::Cyclic => (0..).map(|j| (j, tau - 2 * j)).take_while(|&(_, s)| s >= 0).filter(|&(_, s)| s <= top).collect(),
        Totalization::Negative(n) => (0..n).map(|j| (j, tau + 2 * j)).filter(|&(_, s)| s >= 0).collect(),
        Totalization::Periodic(n) => {
            let jmin = (-tau).div_euclid(2) - 1;
            (jmin..n).map(|j| (j, tau + 2 * j)).filter(|&(_, s)| s >= 0).collect()
        }
    }
}

/// Total complex of one weight on total degrees `lo..=hi`.
pub(crate) fn total_complex(m: &MixedComplexData, w: i64, kind: Totalization, lo: i64, hi: i64) -> ChainComplexOfFree {
    let mut c = ChainComplexOfFree::truncated(m.ring.clone(), lo, hi);
    // u lowers (Cyclic: u^{-1} raises) the component index by one under B
    let b_shift = match kind {
        Totalization::Cyclic => -1,
        _ => 1,
    };
    for tau in lo..=hi {
        let src = components(m, kind, tau);
        c.set_rank(tau, src.iter().map(|&(_, s)| m.rank(s, w)).sum());
        if tau == lo {
            continue;
        }
        let tgt = components(m, kind, tau - 1);
        let rows: Vec<usize> = tgt.iter().map(|&(_, s)| m.rank(s, w)).collect();
        let cols: Vec<usize> = src.iter().map(|&(_, s)| m.rank(s, w)).collect();
        let mut blocks = Vec::new();
        for (cj, &(j, s)) in src.iter().enumerate() {
            for (rk, &(k, _)) in tgt.iter().enumerate() {
                if k == j {
                    blocks.push((rk, cj, m.b(s, w)));
                } else if k == j + b_shift {
                    blocks.push((rk, cj, m.big_b(s, w)));
                }
            }
        }
        c.set_differential(tau, block_matrix(&rows, &cols, &blocks));
    }
    c
}

fn per_weight<F>(m: &MixedComplexData, f: F) -> Result<BTreeMap<i64, HomologyReport>, HochschildError>
where
    F: Fn(i64) -> Result<HomologyReport, HochschildError> + Sync,
{
    let ws: Vec<i64> = m.weights.iter().copied().collect();
    let reports: Vec<(i64, HomologyReport)> =
        ws.par_iter().map(|&w| f(w).map(|r| (w, r))).collect::<Result<_, _>>()?;
    Ok(reports.into_iter().collect())
}

fn aggregate(m: &MixedComplexData, by_weight: &BTreeMap<i64, HomologyReport>, window: &RangeInclusive<i64>) -> HomologyReport {
    let mut out = HomologyReport::new(m.ring.clone());
    for t in window.clone() {
        out.degrees.insert(t, Default::default());
    }
    for r in by_weight.values() {
        out = out.direct_sum(r);
    }
    out
}

fn require(m: &MixedComplexData, window: &RangeInclusive<i64>, need_top: i64) -> Result<(), HochschildError> {
    if need_top > m.degree_cap + 1 {
        return Err(HochschildError::WindowTooSmall {
            lo: *window.start(),
            hi: *window.end(),
            cap: m.degree_cap,
            needed_cap: need_top - 1,
        });
    }
    Ok(())
}

/// Hochschild homology per weight.
pub fn hh_by_weight(m: &MixedComplexData, window: RangeInclusive<i64>) -> Result<BTreeMap<i64, HomologyReport>, HochschildError> {
    require(m, &window, window.end() + 1)?;
    if *window.start() < 0 {
        return Err(HochschildError::NegativeWindow(*window.start()));
    }
    per_weight(m, |w| Ok(complex_homology(&b_complex(m, w), window.clone())?))
}

/// Hochschild homology of `(C, b)`, summed over the complex's weights.
pub fn hh(m: &MixedComplexData, window: RangeInclusive<i64>) -> Result<HomologyReport, HochschildError> {
    let by = hh_by_weight(m, window.clone())?;
    Ok(aggregate(m, &by, &window))
}

pub fn hc_by_weight(m: &MixedComplexData, window: RangeInclusive<i64>) -> Result<BTreeMap<i64, HomologyReport>, HochschildError> {
    require(m, &window, window.end() + 1)?;
    let (lo, hi) = (*window.start(), *window.end());
    if lo < 0 {
        return Err(HochschildError::NegativeWindow(lo));
    }
    per_weight(m, |w| {
        let c = total_complex(m, w, Totalization::Cyclic, lo - 1, hi + 1);
        Ok(complex_homology(&c, window.clone())?)
    })
}

/// Cyclic homology from the finite total complex `⊕_{j≥0} u^{-j} C_{t-2j}`.
pub fn hc(m: &MixedComplexData, window: RangeInclusive<i64>) -> Result<HomologyReport, HochschildError> {
    let by = hc_by_weight(m, window.clone())?;
    Ok(aggregate(m, &by, &window))
}

/// Negative cyclic and periodic cyclic homology from u-adic truncations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicReport {
    pub order: i64,
    pub hc_minus: HomologyReport,
    pub hp: HomologyReport,
    /// Per degree: whether the order `N` and `N+1` truncations agree, for HC⁻ and HP.
    pub stabilized: BTreeMap<i64, (bool, bool)>,
}

fn truncated_report(
    m: &MixedComplexData,
    window: &RangeInclusive<i64>,
    kind: Totalization,
) -> Result<HomologyReport, HochschildError> {
    let (lo, hi) = (*window.start(), *window.end());
    let by = per_weight(m, |w| {
        let c = total_complex(m, w, kind, lo - 1, hi + 1);
        Ok(complex_homology(&c, window.clone())?)
    })?;
    Ok(aggregate(m, &by, window))
}

/// HC⁻ and HP at u-truncation order `n`, flagged against order `n + 1`. Needs
/// `degree_cap ≥ max(window) + 2n`.
pub fn hc_minus_and_hp(m: &MixedComplexData, window: RangeInclusive<i64>, n: i64) -> Result<CyclicReport, HochschildError> {
    if n < 1 {
        return Err(HochschildError::BadOrder(n));
    }
    require(m, &window, window.end() + 1 + 2 * n)?;
    let neg = truncated_report(m, &window, Totalization::Negative(n))?;
    let neg2 = truncated_report(m, &window, Totalization::Negative(n + 1))?;
    let per = truncated_report(m, &window, Totalization::Periodic(n))?;
    let per2 = truncated_report(m, &window, Totalization::Periodic(n + 1))?;
    let stabilized = window
        .clone()
        .map(|t| (t, (neg.get(t) == neg2.get(t), per.get(t) == per2.get(t))))
        .collect();
    Ok(CyclicReport { order: n, hc_minus: neg, hp: per, stabilized })
}
