use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::{One, Zero};
use rayon::prelude::*;

use super::words::{enumerate, Alphabet, Word};
use super::HochschildError;
use crate::dgcat::{sign, DgPresentation};
use crate::exactlin::{ExactMatrix, RingSpec};
use crate::{Coeff, RatMatrix};

/// A weight-graded mixed complex `(C, b, B)` known in total degrees `0..=degree_cap + 1`.
///
/// `b` is stored for every built degree; `B` for degrees `0..=degree_cap`.
#[derive(Debug, Clone)]
pub struct MixedComplexData {
    pub ring: RingSpec,
    pub degree_cap: i64,
    pub weights: BTreeSet<i64>,
    pub reduced: bool,
    ranks: BTreeMap<(i64, i64), usize>,
    b: BTreeMap<(i64, i64), RatMatrix>,
    big_b: BTreeMap<(i64, i64), RatMatrix>,
    words: BTreeMap<(i64, i64), Vec<Word>>,
    pub note: String,
}

impl MixedComplexData {
    /// Assembles a mixed complex from explicit data, e.g. a small model of a patch.
    /// Missing matrices are zero.
    pub fn from_parts(
        ring: RingSpec,
        degree_cap: i64,
        weights: BTreeSet<i64>,
        ranks: BTreeMap<(i64, i64), usize>,
        b: BTreeMap<(i64, i64), RatMatrix>,
        big_b: BTreeMap<(i64, i64), RatMatrix>,
    ) -> Self {
        MixedComplexData {
            ring,
            degree_cap,
            weights,
            reduced: true,
            ranks,
            b,
            big_b,
            words: BTreeMap::new(),
            note: String::new(),
        }
    }

    pub fn rank(&self, t: i64, w: i64) -> usize {
        self.ranks.get(&(t, w)).copied().unwrap_or(0)
    }

    /// `b : C_t → C_{t-1}` in weight `w`.
    pub fn b(&self, t: i64, w: i64) -> RatMatrix {
        self.b.get(&(t, w)).cloned().unwrap_or_else(|| ExactMatrix::zeros(self.rank(t - 1, w), self.rank(t, w)))
    }

    /// `B : C_t → C_{t+1}` in weight `w`.
    pub fn big_b(&self, t: i64, w: i64) -> RatMatrix {
        self.big_b.get(&(t, w)).cloned().unwrap_or_else(|| ExactMatrix::zeros(self.rank(t + 1, w), self.rank(t, w)))
    }

    /// Basis words of a cell (empty for complexes not built from words).
    pub fn words(&self, t: i64, w: i64) -> &[Word] {
        self.words.get(&(t, w)).map_or(&[], Vec::as_slice)
    }

    pub fn has_words(&self) -> bool {
        !self.words.is_empty()
    }

    pub fn cells(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.ranks.keys().copied()
    }

    /// Reduces matrix entries into the canonical range of the ring.
    pub(crate) fn ring_zero(&self, m: &RatMatrix) -> bool {
        match self.ring.modulus() {
            Some(n) => m.entries().all(|(_, _, v)| v.is_integer() && (v.to_integer() % &n).is_zero()),
            None => m.is_zero(),
        }
    }

    /// Checks `b² = 0`, `B² = 0` and `bB + Bb = 0` wherever both sides are built.
    /// Returns the first failing identity.
    pub fn check_identities(&self) -> Result<(), String> {
        for &w in &self.weights {
            for t in 0..=self.degree_cap + 1 {
                if t >= 1 && !self.ring_zero(&self.b(t - 1, w).mul(&self.b(t, w))) {
                    return Err(format!("b∘b ≠ 0 from degree {t}, weight {w}"));
                }
                if !self.reduced || t + 1 > self.degree_cap {
                    continue;
                }
                if !self.ring_zero(&self.big_b(t + 1, w).mul(&self.big_b(t, w))) {
                    return Err(format!("B∘B ≠ 0 from degree {t}, weight {w}"));
                }
                let s = self.b(t + 1, w).mul(&self.big_b(t, w));
                let s = if t >= 1 { s.add(&self.big_b(t - 1, w).mul(&self.b(t, w))) } else { s };
                if !self.ring_zero(&s) {
                    return Err(format!("bB + Bb ≠ 0 from degree {t}, weight {w}"));
                }
            }
        }
        Ok(())
    }

    /// Whether every nonzero entry of `b` and `B` connects equal weights. Holds by
    /// construction since cells are per weight; kept as an explicit check.
    pub fn weights_preserved(&self) -> bool {
        self.b.iter().all(|(&(t, w), m)| m.nrows() == self.rank(t - 1, w) && m.ncols() == self.rank(t, w))
            && self
                .big_b
                .iter()
                .all(|(&(t, w), m)| m.nrows() == self.rank(t + 1, w) && m.ncols() == self.rank(t, w))
    }
}

/// Options for [`build_mixed_complex_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildOptions {
    /// Quotient by words with units in positions `≥ 1`.
    pub reduced: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { reduced: true }
    }
}

/// Reduced Hochschild mixed complex of `p` in total degrees `0..=cap+1`.
pub fn build_mixed_complex(
    p: &DgPresentation,
    cap: i64,
    weights: &BTreeSet<i64>,
) -> Result<MixedComplexData, HochschildError> {
    build_mixed_complex_with(p, cap, weights, BuildOptions::default())
}

pub fn build_mixed_complex_with(
    p: &DgPresentation,
    cap: i64,
    weights: &BTreeSet<i64>,
    opts: BuildOptions,
) -> Result<MixedComplexData, HochschildError> {
    let alpha = Alphabet::new(p);
    check_input(p, &alpha, cap, weights)?;
    let top = cap + 1;
    let words = enumerate(&alpha, top, weights, opts.reduced);
    let index: HashMap<(i64, i64), HashMap<&Word, usize>> = words
        .iter()
        .map(|(k, ws)| (*k, ws.iter().enumerate().map(|(i, w)| (w, i)).collect()))
        .collect();
    let mut ranks = BTreeMap::new();
    for &w in weights {
        for t in 0..=top {
            ranks.insert((t, w), words.get(&(t, w)).map_or(0, Vec::len));
        }
    }

    let cells: Vec<(i64, i64)> = ranks.keys().copied().collect();
    let ring = p.ring().clone();
    let column_matrix = |src: &[Word], tgt: (i64, i64), op: &dyn Fn(&Word) -> Result<Vec<(Word, Coeff)>, HochschildError>| {
        let rows = ranks.get(&tgt).copied().unwrap_or(0);
        let empty = HashMap::new();
        let idx = index.get(&tgt).unwrap_or(&empty);
        let mut cols = Vec::with_capacity(src.len());
        for wd in src {
            let mut col = Vec::new();
            for (v, c) in op(wd)? {
                if opts.reduced && !alpha.is_reduced(&v) {
                    continue;
                }
                match idx.get(&v) {
                    Some(&i) => col.push((i, c)),
                    None => return Err(HochschildError::Internal(format!("word {v:?} missing from cell {tgt:?}"))),
                }
            }
            cols.push(col);
        }
        let m = ExactMatrix::from_columns(rows, cols);
        Ok::<_, HochschildError>(normalize_matrix(&ring, m))
    };

    let b_mats: Vec<((i64, i64), RatMatrix)> = cells
        .par_iter()
        .filter(|(t, _)| *t >= 1)
        .map(|&(t, w)| {
            let src = words.get(&(t, w)).map_or(&[][..], Vec::as_slice);
            column_matrix(src, (t - 1, w), &|wd| hochschild_b(&alpha, wd)).map(|m| ((t, w), m))
        })
        .collect::<Result<_, _>>()?;
    let big_b_mats: Vec<((i64, i64), RatMatrix)> = if opts.reduced {
        cells
            .par_iter()
            .filter(|(t, _)| *t <= cap)
            .map(|&(t, w)| {
                let src = words.get(&(t, w)).map_or(&[][..], Vec::as_slice);
                column_matrix(src, (t + 1, w), &|wd| Ok(connes_b(&alpha, wd))).map(|m| ((t, w), m))
            })
            .collect::<Result<_, _>>()?
    } else {
        Vec::new()
    };

    Ok(MixedComplexData {
        ring: p.ring().clone(),
        degree_cap: cap,
        weights: weights.clone(),
        reduced: opts.reduced,
        ranks,
        b: b_mats.into_iter().collect(),
        big_b: big_b_mats.into_iter().collect(),
        words,
        note: String::new(),
    })
}

fn check_input(
    p: &DgPresentation,
    alpha: &Alphabet,
    cap: i64,
    weights: &BTreeSet<i64>,
) -> Result<(), HochschildError> {
    if cap < 0 {
        return Err(HochschildError::BadCap(cap));
    }
    for (m, b) in p.basis().iter().enumerate() {
        if !alpha.live[m] {
            continue;
        }
        if b.degree < 0 {
            return Err(HochschildError::DegreeNegative(b.name.clone()));
        }
        if b.weight < 0 {
            return Err(HochschildError::NegativeWeight(b.name.clone()));
        }
        if !p.effective_order(m).is_zero() {
            return Err(HochschildError::NonFreeInput(b.name.clone()));
        }
    }
    let (lo, hi) = p.weight_window();
    if let Some(&max_w) = weights.iter().next_back() {
        if max_w > hi {
            return Err(HochschildError::WeightWindowInsufficient { missing: hi + 1 });
        }
    }
    if lo > 0 {
        return Err(HochschildError::WeightWindowInsufficient { missing: 0 });
    }
    if let Some(d) = p.degree_cap() {
        if d < cap + 1 {
            return Err(HochschildError::DegreeCapInsufficient { need: cap + 1, have: d });
        }
    }
    Ok(())
}

pub(crate) fn normalize_matrix(ring: &RingSpec, m: RatMatrix) -> RatMatrix {
    match ring {
        RingSpec::IntegersModN(_) => m.map(|v| ring.normalize(v).expect("integral entries")),
        _ => m,
    }
}

fn shifted(alpha: &Alphabet, m: usize) -> i64 {
    alpha.degree(m) + 1
}

/// The Hochschild differential on one word. Letters are suspended, `|s a| = |a| + 1`,
/// with `m₁(s a) = −s(da)` and `m₂(s a ⊗ s b) = (−1)^{|a|} s(a∘b)`, and `b` is the sum of
/// these applied at every cyclically consecutive position with Koszul signs.
pub(crate) fn hochschild_b(alpha: &Alphabet, w: &Word) -> Result<Vec<(Word, Coeff)>, HochschildError> {
    let p = alpha.pres;
    let n = w.len() - 1;
    let mut out = Vec::new();
    let mut prefix = 0i64;
    for i in 0..=n {
        let eps = sign(prefix);
        for (m, c) in p.differential(w[i]).iter() {
            let mut v = w.clone();
            v[i] = m;
            out.push((v, -(eps.clone() * c)));
        }
        if i < n {
            let prod = p.compose(w[i], w[i + 1])?;
            let s = eps.clone() * sign(alpha.degree(w[i]));
            for (m, c) in prod.iter() {
                let mut v = Vec::with_capacity(n);
                v.extend_from_slice(&w[..i]);
                v.push(m);
                v.extend_from_slice(&w[i + 2..]);
                out.push((v, s.clone() * c));
            }
        }
        prefix += shifted(alpha, w[i]);
    }
    if n >= 1 {
        let before: i64 = w[..n].iter().map(|&m| shifted(alpha, m)).sum();
        let s = sign(shifted(alpha, w[n]) * before) * sign(alpha.degree(w[n]));
        let prod = p.compose(w[n], w[0])?;
        for (m, c) in prod.iter() {
            let mut v = Vec::with_capacity(n);
            v.push(m);
            v.extend_from_slice(&w[1..n]);
            out.push((v, s.clone() * c));
        }
    }
    Ok(out)
}

/// Connes' operator on one reduced word: insert a unit in front of every cyclic
/// rotation, with the Koszul sign of the rotation in suspended degrees.
pub(crate) fn connes_b(alpha: &Alphabet, w: &Word) -> Vec<(Word, Coeff)> {
    let p = alpha.pres;
    if p.is_unit(w[0]) {
        return Vec::new();
    }
    let n = w.len() - 1;
    let total: i64 = w.iter().map(|&m| shifted(alpha, m)).sum();
    let mut out = Vec::with_capacity(n + 1);
    let mut before = 0i64;
    for j in 0..=n {
        let s = sign(before * (total - before));
        let mut v = Vec::with_capacity(n + 2);
        v.push(p.unit(p.morphism(w[j]).target));
        v.extend_from_slice(&w[j..]);
        v.extend_from_slice(&w[..j]);
        out.push((v, s * Coeff::one()));
        before += shifted(alpha, w[j]);
    }
    out
}
