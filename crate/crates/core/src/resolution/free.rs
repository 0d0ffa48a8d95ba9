//! Free path categories on graded generators, truncated at a degree cap and a weight
//! window.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::dgcat::{sign, DgError, DgPresentation, LinComb};
use crate::exactlin::RingSpec;
use crate::Coeff;

/// A path in a free category: its source object and the generators in the order they
/// are traversed. The empty path is the unit of `source`.
pub type PathKey = (usize, Vec<usize>);

/// A linear combination of paths.
pub type PathElem = BTreeMap<PathKey, Coeff>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub name: String,
    pub source: usize,
    pub target: usize,
    pub degree: i64,
    pub weight: i64,
    /// Differential as a combination of paths in earlier generators.
    pub d: PathElem,
}

/// The truncated free category together with the path behind every basis index.
#[derive(Debug, Clone)]
pub struct FreeCategory {
    pub pres: DgPresentation,
    pub paths: Vec<PathKey>,
    pub index: HashMap<PathKey, usize>,
}

impl FreeCategory {
    pub fn elem_to_lin(&self, e: &PathElem) -> Result<LinComb, DgError> {
        let mut out = LinComb::zero();
        for (k, c) in e {
            let i = self
                .index
                .get(k)
                .ok_or_else(|| DgError::UnknownName(format!("path {k:?} outside the truncation")))?;
            out.add_term(*i, c.clone());
        }
        self.pres.normalize(&out)
    }

    pub fn lin_to_elem(&self, l: &LinComb) -> PathElem {
        l.iter().map(|(i, c)| (self.paths[i].clone(), c.clone())).collect()
    }
}

pub(crate) fn path_target(gens: &[GeneratorSpec], k: &PathKey) -> usize {
    k.1.last().map_or(k.0, |&g| gens[g].target)
}

/// Builds the free category on `gens` over the given objects, keeping paths of degree
/// `≤ degree_cap` and weight in `window`. Generator weights must be non-negative and no
/// generator may sit in degree 0 and weight 0.
pub fn free_category(
    ring: &RingSpec,
    objects: &[String],
    gens: &[GeneratorSpec],
    degree_cap: i64,
    window: (i64, i64),
) -> Result<FreeCategory, DgError> {
    let mut pres = DgPresentation::new(ring.clone(), window)?;
    pres.set_degree_cap(Some(degree_cap));
    for o in objects {
        pres.add_object(o)?;
    }
    let mut paths: Vec<PathKey> = (0..objects.len()).map(|x| (x, Vec::new())).collect();
    let mut index: HashMap<PathKey, usize> = paths.iter().enumerate().map(|(i, k)| (k.clone(), i)).collect();

    // breadth-first by length; every extension strictly increases degree or weight
    let mut frontier: Vec<(PathKey, i64, i64)> = (0..objects.len()).map(|x| ((x, Vec::new()), 0, 0)).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (k, h, w) in &frontier {
            let end = path_target(gens, k);
            for (g, spec) in gens.iter().enumerate() {
                if spec.source != end {
                    continue;
                }
                let (h2, w2) = (h + spec.degree, w + spec.weight);
                if h2 > degree_cap || w2 > window.1 {
                    continue;
                }
                let mut p = k.1.clone();
                p.push(g);
                next.push(((k.0, p), h2, w2));
            }
        }
        next.sort();
        for (k, h, w) in &next {
            if *w < window.0 {
                continue;
            }
            let name = path_name(gens, &k.1);
            let i = pres.add_morphism(&name, k.0, path_target(gens, k), *h, *w)?;
            debug_assert_eq!(i, paths.len());
            index.insert(k.clone(), i);
            paths.push(k.clone());
        }
        frontier = next;
    }

    let cat = FreeCategory { pres, paths, index };
    let mut pres = cat.pres.clone();
    for i in objects.len()..cat.paths.len() {
        let d = path_differential(gens, &cat.paths[i]);
        pres.set_differential(i, cat.elem_to_lin(&d)?)?;
    }
    let n = cat.paths.len();
    for f in objects.len()..n {
        for g in objects.len()..n {
            let (pf, pg) = (&cat.paths[f], &cat.paths[g]);
            if pg.0 != path_target(gens, pf) {
                continue;
            }
            let mut p = pf.1.clone();
            p.extend(&pg.1);
            if let Some(&i) = cat.index.get(&(pf.0, p)) {
                pres.set_product(g, f, LinComb::basis(i))?;
            }
        }
    }
    Ok(FreeCategory { pres, ..cat })
}

fn path_name(gens: &[GeneratorSpec], p: &[usize]) -> String {
    p.iter().rev().map(|&g| gens[g].name.as_str()).collect::<Vec<_>>().join(".")
}

/// Leibniz rule along a path: the term differentiating the `i`-th traversed generator
/// carries the sign of the degrees traversed after it.
pub fn path_differential(gens: &[GeneratorSpec], k: &PathKey) -> PathElem {
    let mut out = PathElem::new();
    let p = &k.1;
    for i in 0..p.len() {
        let later: i64 = p[i + 1..].iter().map(|&g| gens[g].degree).sum();
        let s = sign(later);
        let prefix_src = k.0;
        for ((_, q), c) in &gens[p[i]].d {
            let mut full = p[..i].to_vec();
            full.extend(q);
            full.extend(&p[i + 1..]);
            let slot = out.entry((prefix_src, full)).or_insert_with(Coeff::zero);
            *slot += c * &s;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Product of path combinations, `g ∘ f` (traverse `f` first).
pub fn compose_elems(gens: &[GeneratorSpec], g: &PathElem, f: &PathElem) -> PathElem {
    let mut out = PathElem::new();
    for (kf, a) in f {
        for (kg, b) in g {
            if kg.0 != path_target(gens, kf) {
                continue;
            }
            let mut p = kf.1.clone();
            p.extend(&kg.1);
            let slot = out.entry((kf.0, p)).or_insert_with(Coeff::zero);
            *slot += a * b;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}
