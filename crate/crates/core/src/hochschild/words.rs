use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::dgcat::{DgPresentation, LinComb};

/// A Hochschild word `x_0 ⊗ x_1 ⊗ … ⊗ x_n` of basis morphisms with
/// `source(x_i) = target(x_{i+1})` and `source(x_n) = target(x_0)`.
pub type Word = Vec<usize>;

/// Letters of a presentation that survive over its ring, with their grading data.
pub(crate) struct Alphabet<'a> {
    pub pres: &'a DgPresentation,
    pub live: Vec<bool>,
    /// Live non-unit letters grouped by target object.
    pub by_target: Vec<Vec<usize>>,
}

impl<'a> Alphabet<'a> {
    pub fn new(pres: &'a DgPresentation) -> Self {
        let n = pres.basis().len();
        let live: Vec<bool> = (0..n).map(|m| !pres.effective_order(m).is_one()).collect();
        let mut by_target = vec![Vec::new(); pres.objects().len()];
        for m in 0..n {
            if live[m] && !pres.is_unit(m) {
                by_target[pres.morphism(m).target].push(m);
            }
        }
        Alphabet { pres, live, by_target }
    }

    pub fn degree(&self, m: usize) -> i64 {
        self.pres.morphism(m).degree
    }

    pub fn weight(&self, m: usize) -> i64 {
        self.pres.morphism(m).weight
    }

    /// Whether a word lies in the reduced complex.
    pub fn is_reduced(&self, w: &[usize]) -> bool {
        w.iter().skip(1).all(|&m| !self.pres.is_unit(m))
    }
}

/// Sort key: word length, then object sequence, then letters.
pub(crate) fn word_key(p: &DgPresentation, w: &[usize]) -> (usize, Vec<usize>, Vec<usize>) {
    (w.len(), w.iter().map(|&m| p.morphism(m).source).collect(), w.to_vec())
}

/// All words of total degree `0..=max_degree` whose weight lies in `weights`, bucketed by
/// `(degree, weight)`. With `reduced` set, units appear only in slot 0.
pub(crate) fn enumerate(
    alpha: &Alphabet,
    max_degree: i64,
    weights: &BTreeSet<i64>,
    reduced: bool,
) -> BTreeMap<(i64, i64), Vec<Word>> {
    let p = alpha.pres;
    let max_w = weights.iter().copied().max().unwrap_or(0);
    let mut out: BTreeMap<(i64, i64), Vec<Word>> = BTreeMap::new();
    let mut stack: Vec<usize> = Vec::new();
    let n = p.basis().len();
    for x0 in 0..n {
        if !alpha.live[x0] {
            continue;
        }
        let (h, w) = (alpha.degree(x0), alpha.weight(x0));
        if h > max_degree || w > max_w {
            continue;
        }
        stack.clear();
        stack.push(x0);
        extend(alpha, &mut stack, h, w, max_degree, max_w, weights, reduced, &mut out);
    }
    for words in out.values_mut() {
        words.sort_by_cached_key(|w| word_key(p, w));
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn extend(
    alpha: &Alphabet,
    stack: &mut Vec<usize>,
    degree: i64,
    weight: i64,
    max_degree: i64,
    max_w: i64,
    weights: &BTreeSet<i64>,
    reduced: bool,
    out: &mut BTreeMap<(i64, i64), Vec<Word>>,
) {
    let p = alpha.pres;
    let first = stack[0];
    let last = *stack.last().unwrap();
    if p.morphism(last).source == p.morphism(first).target && weights.contains(&weight) {
        out.entry((degree, weight)).or_default().push(stack.clone());
    }
    let next_target = p.morphism(last).source;
    let mut candidates: Vec<usize> = alpha.by_target[next_target].clone();
    if !reduced {
        candidates.push(p.unit(next_target));
    }
    for m in candidates {
        if !alpha.live[m] {
            continue;
        }
        let d = degree + 1 + alpha.degree(m);
        let w = weight + alpha.weight(m);
        if d > max_degree || w > max_w {
            continue;
        }
        stack.push(m);
        extend(alpha, stack, d, w, max_degree, max_w, weights, reduced, out);
        stack.pop();
    }
}

/// Multilinear image of a word under per-letter maps, expanded into words.
pub(crate) fn expand(images: &[LinComb]) -> Vec<(Word, crate::Coeff)> {
    let mut acc: Vec<(Word, crate::Coeff)> = vec![(Vec::new(), crate::Coeff::one())];
    for l in images {
        let mut next = Vec::with_capacity(acc.len() * l.len());
        for (w, c) in &acc {
            for (m, a) in l.iter() {
                let v = c * a;
                if v.is_zero() {
                    continue;
                }
                let mut w2 = w.clone();
                w2.push(m);
                next.push((w2, v));
            }
        }
        acc = next;
    }
    acc
}
