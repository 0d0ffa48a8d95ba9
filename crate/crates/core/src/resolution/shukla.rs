use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::check::check_resolution;
use super::tower::{semifree_resolve, SemiFreeStageTower};
use super::ResolveError;
use crate::dgcat::DgPresentation;
use crate::hochschild::{build_mixed_complex, MixedComplexData};

/// Caps for the Shukla construction. They are never defaulted: the resolution is
/// infinite in general and the caller owns the budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShuklaCaps {
    /// Highest Hochschild degree wanted; chains are built to one degree above.
    pub max_degree: i64,
    pub weights: BTreeSet<i64>,
    pub stage_cap: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShuklaPath {
    /// Every hom module is free over the base ring; no resolution was built.
    Bypass,
    Resolved,
}

#[derive(Debug, Clone)]
pub struct ShuklaComplex {
    pub complex: MixedComplexData,
    pub path: ShuklaPath,
    pub tower: Option<SemiFreeStageTower>,
}

/// Whether every basis summand is free or zero over the base ring.
pub fn hom_modules_free(a: &DgPresentation) -> bool {
    (0..a.basis().len()).all(|m| {
        let e = a.effective_order(m);
        e.is_zero() || e.is_one()
    })
}

/// The mixed complex of `a`, resolving first when some hom module is not free.
pub fn shukla_mixed_complex(a: Arc<DgPresentation>, caps: &ShuklaCaps) -> Result<ShuklaComplex, ResolveError> {
    let t = caps.max_degree;
    let wmax = caps.weights.iter().copied().max().unwrap_or(0);
    if hom_modules_free(&a) {
        let mut complex = build_mixed_complex(&a, t, &caps.weights)?;
        complex.note = format!("bypass: hom modules free over {}; degree cap {t}, weights {:?}", a.ring(), caps.weights);
        return Ok(ShuklaComplex { complex, path: ShuklaPath::Bypass, tower: None });
    }
    if let Some(&w) = caps.weights.iter().find(|&&w| w < 0) {
        return Err(ResolveError::WindowNotCovered { lo: w, hi: wmax, have_lo: a.weight_window().0, have_hi: a.weight_window().1 });
    }
    let tower = semifree_resolve(a, caps.stage_cap, t + 1, (0, wmax))?;
    let top = tower.stages.len() - 1;
    let report = check_resolution(&tower, top, 0..=t)?;
    if !report.quasi_isomorphic() {
        let mut remaining: Vec<String> = report
            .unresolved()
            .map(|c| format!("{} in degree {} weight {}", c.display, c.degree, c.weight))
            .collect();
        for ((h, w), c) in &report.cells {
            if !c.homology_iso && c.unresolved.is_empty() {
                remaining.push(format!("homology not hit in degree {h} weight {w}"));
            }
        }
        return Err(ResolveError::CapExceeded { stage_cap: caps.stage_cap, remaining });
    }
    let mut complex = build_mixed_complex(tower.top().pres(), t, &caps.weights)?;
    complex.note = format!(
        "resolved: {} stages, {} generators, degree cap {}, weights {:?}",
        tower.stages.len() - 1,
        tower.generators.len(),
        t + 1,
        caps.weights
    );
    Ok(ShuklaComplex { complex, path: ShuklaPath::Resolved, tower: Some(tower) })
}
