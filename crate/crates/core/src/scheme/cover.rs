use std::collections::{BTreeMap, BTreeSet};

use super::derham::{derham_patch, derham_restriction, PatchKind};
use super::SchemeError;
use crate::dgcat::{builtin_presentation, Builtin};
use crate::exactlin::RingSpec;
use crate::hochschild::{build_mixed_complex, MixedComplexData, MixedMap};

/// A finite affine cover: a mixed complex for every nonempty set of patches (their
/// intersection) and restriction maps `S → S ∪ {j}`.
#[derive(Debug, Clone)]
pub struct CechCoverData {
    pub ring: RingSpec,
    pub patches: Vec<String>,
    pub weights: BTreeSet<i64>,
    pub degree_cap: i64,
    pub nodes: BTreeMap<Vec<usize>, MixedComplexData>,
    pub restrictions: BTreeMap<(Vec<usize>, Vec<usize>), MixedMap>,
}

fn without(s: &[usize], i: usize) -> Vec<usize> {
    s.iter().copied().filter(|&x| x != i).collect()
}

impl CechCoverData {
    pub fn new(ring: RingSpec, patches: Vec<String>, weights: BTreeSet<i64>, degree_cap: i64) -> Self {
        CechCoverData { ring, patches, weights, degree_cap, nodes: BTreeMap::new(), restrictions: BTreeMap::new() }
    }

    /// Nonempty subsets ordered by size, then lexicographically.
    pub fn subsets(&self) -> Vec<Vec<usize>> {
        let k = self.patches.len();
        let mut out: Vec<Vec<usize>> = (1u32..(1 << k))
            .map(|mask| (0..k).filter(|i| mask & (1 << i) != 0).collect())
            .collect();
        out.sort_by(|a: &Vec<usize>, b| (a.len(), a).cmp(&(b.len(), b)));
        out
    }

    pub fn node(&self, s: &[usize]) -> &MixedComplexData {
        &self.nodes[s]
    }

    pub fn restriction(&self, from: &[usize], to: &[usize]) -> &MixedMap {
        &self.restrictions[&(from.to_vec(), to.to_vec())]
    }

    pub fn describe(&self, s: &[usize]) -> String {
        s.iter().map(|&i| self.patches[i].as_str()).collect::<Vec<_>>().join("∩")
    }

    /// Completeness, chain-map property of every restriction, and the presheaf
    /// condition on every square of inclusions.
    pub fn check(&self) -> Result<(), SchemeError> {
        let subsets = self.subsets();
        for s in &subsets {
            let node = self.nodes.get(s).ok_or_else(|| SchemeError::BadCover(format!("missing patch data for {}", self.describe(s))))?;
            if node.degree_cap < self.degree_cap {
                return Err(SchemeError::BadCover(format!("{} is built only to degree {}", self.describe(s), node.degree_cap)));
            }
            if let Some(w) = self.weights.iter().find(|w| !node.weights.contains(w)) {
                return Err(SchemeError::WeightWindowInsufficient { weight: *w, patch: self.describe(s) });
            }
        }
        for t in &subsets {
            if t.len() < 2 {
                continue;
            }
            for &i in t {
                let s = without(t, i);
                let map = self
                    .restrictions
                    .get(&(s.clone(), t.clone()))
                    .ok_or_else(|| SchemeError::BadCover(format!("missing restriction {} → {}", self.describe(&s), self.describe(t))))?;
                let (src, tgt) = (self.node(&s), self.node(t));
                if let Some(((q, w), m)) = map.cells.iter().find(|((q, w), m)| m.nrows() != tgt.rank(*q, *w) || m.ncols() != src.rank(*q, *w)) {
                    return Err(SchemeError::NotAChainMap {
                        from: self.describe(&s),
                        to: self.describe(t),
                        reason: format!("{}×{} matrix in degree {q}, weight {w} does not fit", m.nrows(), m.ncols()),
                    });
                }
                map.check_commutes(src, tgt).map_err(|e| SchemeError::NotAChainMap {
                    from: self.describe(&s),
                    to: self.describe(t),
                    reason: e,
                })?;
            }
            for (x, &a) in t.iter().enumerate() {
                for &b in &t[x + 1..] {
                    let s = without(&without(t, a), b);
                    if s.is_empty() {
                        continue;
                    }
                    let (via_a, via_b) = (without(t, a), without(t, b));
                    for &w in &self.weights {
                        for q in 0..=self.degree_cap + 1 {
                            let (src, tgt) = (self.node(&s), self.node(t));
                            let p1 = self.restriction(&via_a, t).at(q, w, self.node(&via_a), tgt).mul(&self.restriction(&s, &via_a).at(q, w, src, self.node(&via_a)));
                            let p2 = self.restriction(&via_b, t).at(q, w, self.node(&via_b), tgt).mul(&self.restriction(&s, &via_b).at(q, w, src, self.node(&via_b)));
                            let neg = p2.scale(&-crate::Coeff::from_integer(1.into()));
                            if !tgt.ring_zero(&p1.add(&neg)) {
                                return Err(SchemeError::PresheafConditionViolated { from: self.describe(&s), to: self.describe(t) });
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// A cover whose patches and intersections are de Rham models. `intersections` gives
/// the kind of every subset with at least two patches.
pub fn cover_from_kinds(
    ring: &RingSpec,
    patches: &[(String, PatchKind)],
    intersections: &BTreeMap<Vec<usize>, PatchKind>,
    weights: &BTreeSet<i64>,
    degree_cap: i64,
) -> Result<CechCoverData, SchemeError> {
    let names = patches.iter().map(|(n, _)| n.clone()).collect();
    let mut c = CechCoverData::new(ring.clone(), names, weights.clone(), degree_cap);
    let mut kinds: BTreeMap<Vec<usize>, PatchKind> = BTreeMap::new();
    for s in c.subsets() {
        let k = if s.len() == 1 {
            patches[s[0]].1
        } else {
            *intersections.get(&s).ok_or_else(|| SchemeError::BadCover(format!("no intersection kind for {}", c.describe(&s))))?
        };
        c.nodes.insert(s.clone(), derham_patch(ring, k, weights, degree_cap));
        kinds.insert(s, k);
    }
    for t in c.subsets().into_iter().filter(|t| t.len() >= 2) {
        for &i in &t {
            let s = without(&t, i);
            let map = derham_restriction(kinds[&s], kinds[&t], weights)
                .ok_or_else(|| SchemeError::BadCover(format!("no restriction from {} to {}", kinds[&s], kinds[&t])))?;
            c.restrictions.insert((s, t.clone()), map);
        }
    }
    Ok(c)
}

/// 𝔸¹ as a single de Rham patch.
pub fn affine_line(ring: &RingSpec, weights: &BTreeSet<i64>, degree_cap: i64) -> CechCoverData {
    cover_from_kinds(ring, &[("U".into(), PatchKind::AffineX)], &BTreeMap::new(), weights, degree_cap)
        .expect("single patch cover is complete")
}

/// 𝔸¹ as a single patch modelled by the Hochschild complex of `R[x]`.
pub fn affine_line_bar(ring: &RingSpec, weights: &BTreeSet<i64>, degree_cap: i64) -> Result<CechCoverData, SchemeError> {
    let hi = weights.iter().copied().max().unwrap_or(0);
    let p = builtin_presentation(Builtin::Polynomial, ring.clone(), (0, hi.max(0)))?;
    let mut c = CechCoverData::new(ring.clone(), vec!["U".into()], weights.clone(), degree_cap);
    c.nodes.insert(vec![0], build_mixed_complex(&p, degree_cap, weights)?);
    Ok(c)
}

/// ℙ¹ with the standard cover `U = Spec R[x]`, `V = Spec R[y]`, `U∩V = Spec R[x, 1/x]`.
pub fn projective_line(ring: &RingSpec, weights: &BTreeSet<i64>, degree_cap: i64) -> CechCoverData {
    let patches = [("U".to_string(), PatchKind::AffineX), ("V".to_string(), PatchKind::AffineY)];
    let inter = BTreeMap::from([(vec![0, 1], PatchKind::Laurent)]);
    cover_from_kinds(ring, &patches, &inter, weights, degree_cap).expect("standard cover is complete")
}
