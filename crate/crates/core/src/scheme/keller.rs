use std::collections::{BTreeMap, BTreeSet};
use std::ops::RangeInclusive;

use super::cech::{cech_homology, Mode};
use super::cover::CechCoverData;
use super::SchemeError;
use crate::exactlin::{DegreeHomology, HomologyReport};
use crate::hochschild::{hc_by_weight, hh_by_weight, MixedComplexData};

/// Both sides of the comparison, per weight and summed over weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KellerVerdict {
    pub mode: Mode,
    pub categorical: HomologyReport,
    pub scheme: HomologyReport,
    pub categorical_by_weight: BTreeMap<i64, HomologyReport>,
    pub scheme_by_weight: BTreeMap<i64, HomologyReport>,
    /// Free ranks and invariant factors agree in every degree of the window.
    pub pass: bool,
    /// The same holds weight by weight (a missing weight counts as zero).
    pub weightwise: bool,
}

fn sum(ring: &crate::exactlin::RingSpec, by: &BTreeMap<i64, HomologyReport>, window: &RangeInclusive<i64>) -> HomologyReport {
    let mut out = HomologyReport::new(ring.clone());
    for t in window.clone() {
        out.degrees.insert(t, DegreeHomology::default());
    }
    for r in by.values() {
        out = out.direct_sum(r);
    }
    out
}

/// Compares the homology of a category's mixed complex with the Čech hypercohomology
/// of a cover of the scheme it is meant to generate. Generation itself is the caller's
/// claim; only the homology is checked.
pub fn keller_compare(
    categorical: &MixedComplexData,
    cover: &CechCoverData,
    window: RangeInclusive<i64>,
    mode: Mode,
) -> Result<KellerVerdict, SchemeError> {
    let left = match mode {
        Mode::Hh => hh_by_weight(categorical, window.clone())?,
        Mode::Hc => hc_by_weight(categorical, window.clone())?,
    };
    let right = cech_homology(cover, window.clone(), mode)?;
    let categorical_total = sum(&categorical.ring, &left, &window);
    let pass = categorical_total.degrees == right.total.degrees;
    let weights: BTreeSet<i64> = left.keys().chain(right.by_weight.keys()).copied().collect();
    let weightwise = weights.iter().all(|w| {
        window.clone().all(|t| {
            let l = left.get(w).map(|r| r.get(t)).unwrap_or_default();
            let r = right.by_weight.get(w).map(|r| r.get(t)).unwrap_or_default();
            l == r
        })
    });
    Ok(KellerVerdict {
        mode,
        categorical: categorical_total,
        scheme: right.total,
        categorical_by_weight: left,
        scheme_by_weight: right.by_weight,
        pass,
        weightwise,
    })
}
