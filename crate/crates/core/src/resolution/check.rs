use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::cells::{int_vec, vec_to_lin};
use super::free::PathElem;
use super::tower::{elem_coords, SemiFreeStageTower};
use super::ResolveError;

/// A cycle of a stage that maps to a boundary but is not yet a boundary itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnresolvedCycle {
    pub source: usize,
    pub target: usize,
    pub degree: i64,
    pub weight: i64,
    /// Order of its class (`0` = infinite).
    pub order: BigInt,
    pub element: PathElem,
    pub display: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellCheck {
    pub surjective_on_cocycles: bool,
    pub homology_iso: bool,
    pub unresolved: Vec<UnresolvedCycle>,
}

impl Default for CellCheck {
    fn default() -> Self {
        CellCheck { surjective_on_cocycles: true, homology_iso: true, unresolved: Vec::new() }
    }
}

/// Comparison of one stage with the target, per `(degree, weight)` summed over object
/// pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionReport {
    pub stage: usize,
    pub cells: BTreeMap<(i64, i64), CellCheck>,
}

impl ResolutionReport {
    pub fn surjective_on_cocycles(&self) -> bool {
        self.cells.values().all(|c| c.surjective_on_cocycles)
    }

    pub fn quasi_isomorphic(&self) -> bool {
        self.cells.values().all(|c| c.homology_iso)
    }

    pub fn unresolved(&self) -> impl Iterator<Item = &UnresolvedCycle> {
        self.cells.values().flat_map(|c| c.unresolved.iter())
    }
}

/// Checks stage `stage` on the given degrees. Degrees must stay below the tower's
/// degree cap, since boundaries from one degree up are needed.
pub fn check_resolution(
    tower: &SemiFreeStageTower,
    stage: usize,
    degrees: RangeInclusive<i64>,
) -> Result<ResolutionReport, ResolveError> {
    let st = tower.stage(stage).ok_or(ResolveError::NoSuchStage { stage, built: tower.stages.len() - 1 })?;
    if *degrees.start() < 0 || *degrees.end() >= tower.degree_cap {
        return Err(ResolveError::CheckWindow { lo: *degrees.start(), hi: *degrees.end(), cap: tower.degree_cap });
    }
    let a = tower.target.as_ref();
    let ctx = st.ctx(a);
    let n = a.objects().len();
    let (wlo, whi) = tower.weight_window;
    let keys: Vec<_> = degrees
        .clone()
        .flat_map(|h| (wlo..=whi).flat_map(move |w| (0..n).flat_map(move |x| (0..n).map(move |y| (x, y, h, w)))))
        .collect();
    let per: Vec<_> = keys.par_iter().map(|&k| (k, ctx.analyze(k))).collect();
    let mut cells: BTreeMap<(i64, i64), CellCheck> = BTreeMap::new();
    for h in degrees {
        for w in wlo..=whi {
            cells.insert((h, w), CellCheck::default());
        }
    }
    for ((x, y, h, w), an) in per {
        let c = cells.get_mut(&(h, w)).expect("inserted above");
        c.surjective_on_cocycles &= an.cocycles_unhit.is_empty();
        c.homology_iso &= an.homology_unhit.is_empty() && an.kernel.is_empty();
        let basis = ctx.c_cell((x, y, h, w));
        for (v, order) in an.kernel {
            let l = st.pres().normalize_unchecked(&vec_to_lin(basis, &int_vec(&v)));
            c.unresolved.push(UnresolvedCycle {
                source: x,
                target: y,
                degree: h,
                weight: w,
                order,
                element: st.cat.lin_to_elem(&l),
                display: st.pres().display_lin(&l),
            });
        }
    }
    Ok(ResolutionReport { stage, cells })
}

/// Whether a cycle recorded at some stage is a boundary in stage `stage`.
pub fn is_boundary_at(tower: &SemiFreeStageTower, stage: usize, cycle: &UnresolvedCycle) -> Result<bool, ResolveError> {
    let st = tower.stage(stage).ok_or(ResolveError::NoSuchStage { stage, built: tower.stages.len() - 1 })?;
    let key = (cycle.source, cycle.target, cycle.degree, cycle.weight);
    let v = elem_coords(st, key, &cycle.element)?;
    Ok(st.ctx(&tower.target).is_boundary(key, &v))
}
