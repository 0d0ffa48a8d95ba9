use std::collections::{BTreeMap, HashMap};
use std::ops::RangeInclusive;

use super::complex::{normalize_matrix, MixedComplexData};
use super::totalize::block_matrix;
use super::words::{expand, Word};
use super::HochschildError;
use crate::dgcat::DgFunctorData;
use crate::exactlin::{complex_homology, ChainComplexOfFree, ExactMatrix, HomologyReport};
use crate::{Coeff, RatMatrix};

/// A weight- and degree-preserving map between two mixed complexes, one matrix per cell.
#[derive(Debug, Clone)]
pub struct MixedMap {
    pub cells: BTreeMap<(i64, i64), RatMatrix>,
}

impl MixedMap {
    pub fn at(&self, t: i64, w: i64, src: &MixedComplexData, tgt: &MixedComplexData) -> RatMatrix {
        self.cells.get(&(t, w)).cloned().unwrap_or_else(|| ExactMatrix::zeros(tgt.rank(t, w), src.rank(t, w)))
    }

    /// Checks `f b = b f` and `f B = B f` on every cell where both sides are built.
    pub fn check_commutes(&self, src: &MixedComplexData, tgt: &MixedComplexData) -> Result<(), String> {
        let top = src.degree_cap.min(tgt.degree_cap) + 1;
        for &w in &src.weights {
            for t in 0..=top {
                if t >= 1 {
                    let l = self.at(t - 1, w, src, tgt).mul(&src.b(t, w));
                    let r = tgt.b(t, w).mul(&self.at(t, w, src, tgt));
                    if !tgt.ring_zero(&l.add(&r.scale(&-Coeff::from_integer(1.into())))) {
                        return Err(format!("map does not commute with b at degree {t}, weight {w}"));
                    }
                }
                if t < top && src.reduced && tgt.reduced {
                    let l = self.at(t + 1, w, src, tgt).mul(&src.big_b(t, w));
                    let r = tgt.big_b(t, w).mul(&self.at(t, w, src, tgt));
                    if !tgt.ring_zero(&l.add(&r.scale(&-Coeff::from_integer(1.into())))) {
                        return Err(format!("map does not commute with B at degree {t}, weight {w}"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Homology of the mapping cone of `(C, b)` in one weight; it vanishes on a window
    /// exactly when the map is a quasi-isomorphism there.
    pub fn cone_homology(
        &self,
        src: &MixedComplexData,
        tgt: &MixedComplexData,
        w: i64,
        window: RangeInclusive<i64>,
    ) -> Result<HomologyReport, HochschildError> {
        let (lo, hi) = (*window.start(), *window.end() + 1);
        let mut c = ChainComplexOfFree::truncated(src.ring.clone(), lo - 1, hi + 1);
        let minus_one = -Coeff::from_integer(1.into());
        for t in lo - 1..=hi + 1 {
            let rows = [src.rank(t - 2, w), tgt.rank(t - 1, w)];
            let cols = [src.rank(t - 1, w), tgt.rank(t, w)];
            c.set_rank(t, cols[0] + cols[1]);
            let blocks = vec![
                (0, 0, src.b(t - 1, w).scale(&minus_one)),
                (1, 0, self.at(t - 1, w, src, tgt)),
                (1, 1, tgt.b(t, w)),
            ];
            c.set_differential(t, block_matrix(&rows, &cols, &blocks));
        }
        let shifted = lo..=hi;
        Ok(complex_homology(&c, shifted)?)
    }

    /// Whether the induced map on `(C, b)` homology is an isomorphism on `window`, in
    /// every weight.
    pub fn is_quasi_isomorphism(
        &self,
        src: &MixedComplexData,
        tgt: &MixedComplexData,
        window: RangeInclusive<i64>,
    ) -> Result<bool, HochschildError> {
        for &w in &src.weights {
            let h = self.cone_homology(src, tgt, w, window.clone())?;
            if h.degrees.values().any(|d| !d.is_zero()) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The map of Hochschild mixed complexes induced by a dg functor, applied letterwise.
pub fn induced_map(
    f: &DgFunctorData,
    src: &MixedComplexData,
    tgt: &MixedComplexData,
) -> Result<MixedMap, HochschildError> {
    let q = &*f.target;
    let mut cells = BTreeMap::new();
    for (t, w) in src.cells() {
        let words = src.words(t, w);
        let index: HashMap<&Word, usize> = tgt.words(t, w).iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut cols = Vec::with_capacity(words.len());
        for word in words {
            let images: Vec<_> = word.iter().map(|&m| f.images[m].clone()).collect();
            let mut col = Vec::new();
            for (v, c) in expand(&images) {
                if tgt.reduced && v.iter().skip(1).any(|&m| q.is_unit(m)) {
                    continue;
                }
                match index.get(&v) {
                    Some(&i) => col.push((i, c)),
                    None => {
                        return Err(HochschildError::Internal(format!(
                            "image word {v:?} missing from target cell ({t}, {w})"
                        )))
                    }
                }
            }
            cols.push(col);
        }
        let m = ExactMatrix::from_columns(tgt.rank(t, w), cols);
        cells.insert((t, w), normalize_matrix(&src.ring, m));
    }
    Ok(MixedMap { cells })
}
