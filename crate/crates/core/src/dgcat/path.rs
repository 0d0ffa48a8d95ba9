use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::lincomb::LinComb;
use super::presentation::{DgError, DgPresentation};
use crate::exactlin::RingSpec;
use crate::Coeff;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A path is the list of arrows in the order they are traversed.
pub type Path = Vec<usize>;

/// A quiver with linear relations between paths of equal length and endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Vec<(Coeff, Path)>>,
}

impl Quiver {
    pub fn new(vertices: &[&str]) -> Self {
        Quiver { vertices: vertices.iter().map(|s| s.to_string()).collect(), ..Default::default() }
    }

    pub fn arrow(&mut self, name: &str, source: usize, target: usize) -> usize {
        self.arrows.push(Arrow { name: name.to_string(), source, target });
        self.arrows.len() - 1
    }

    pub fn relation(&mut self, terms: Vec<(Coeff, Path)>) {
        self.relations.push(terms);
    }

    fn ends(&self, p: &Path) -> Option<(usize, usize)> {
        let first = self.arrows.get(*p.first()?)?;
        let last = self.arrows.get(*p.last()?)?;
        for w in p.windows(2) {
            if self.arrows[w[0]].target != self.arrows[w[1]].source {
                return None;
            }
        }
        Some((first.source, last.target))
    }

    /// Paths of the given length, grouped by endpoints, in lexicographic order.
    fn paths_of_length(&self, len: usize) -> Vec<Path> {
        let mut layer: Vec<Path> = (0..self.arrows.len()).map(|a| vec![a]).collect();
        for _ in 1..len {
            let mut next = Vec::new();
            for p in &layer {
                let end = self.arrows[*p.last().unwrap()].target;
                for (a, arr) in self.arrows.iter().enumerate() {
                    if arr.source == end {
                        let mut q = p.clone();
                        q.push(a);
                        next.push(q);
                    }
                }
            }
            layer = next;
        }
        layer.sort_by_key(|p| {
            let (s, t) = self.ends(p).unwrap();
            (s, t, p.clone())
        });
        layer
    }

    fn path_name(&self, p: &Path) -> String {
        // composition order: last arrow first
        p.iter().rev().map(|&a| self.arrows[a].name.as_str()).collect::<Vec<_>>().join(".")
    }
}

/// The path category of `quiver` modulo its relations, truncated at path length
/// `weight_cap`. Every morphism sits in homological degree 0 with weight equal to its
/// length.
pub fn path_algebra_presentation(
    ring: RingSpec,
    quiver: &Quiver,
    weight_cap: i64,
) -> Result<DgPresentation, DgError> {
    if weight_cap < 0 {
        return Err(DgError::EmptyWindow { lo: 0, hi: weight_cap });
    }
    let cap = weight_cap as usize;
    let mut rel_len = Vec::new();
    for (k, r) in quiver.relations.iter().enumerate() {
        let mut shape = None;
        for (_, p) in r {
            let e = quiver.ends(p).ok_or(DgError::RelationNotHomogeneous(k))?;
            let s = (p.len(), e);
            if shape.is_some_and(|x| x != s) {
                return Err(DgError::RelationNotHomogeneous(k));
            }
            shape = Some(s);
        }
        rel_len.push(shape.map_or(0, |s| s.0));
    }

    let mut pres = DgPresentation::new(ring.clone(), (0, weight_cap))?;
    for v in &quiver.vertices {
        pres.add_object(v)?;
    }
    // normal form of every path, as a combination of basis indices
    let mut normal: BTreeMap<Path, LinComb> = BTreeMap::new();
    let mut basis_paths: Vec<(usize, Path)> = Vec::new();
    for len in 1..=cap {
        let paths = quiver.paths_of_length(len);
        if paths.is_empty() {
            break;
        }
        let col: BTreeMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut rows = Vec::new();
        for (k, r) in quiver.relations.iter().enumerate() {
            let l = rel_len[k];
            if l == 0 || l > len {
                continue;
            }
            for pre in 0..=len - l {
                for (prefix, suffix) in affixes(quiver, pre, len - l - pre) {
                    let mut row = vec![Coeff::zero(); paths.len()];
                    let mut any = false;
                    for (c, p) in r {
                        let mut full = prefix.clone();
                        full.extend(p);
                        full.extend(&suffix);
                        if let Some(&j) = col.get(&full) {
                            row[j] += c;
                            any = true;
                        }
                    }
                    if any {
                        rows.push(row);
                    }
                }
            }
        }
        let pivots = unit_pivot_reduce(&ring, &mut rows, len as i64)?;
        let mut index_of = vec![usize::MAX; paths.len()];
        for (j, p) in paths.iter().enumerate() {
            if pivots.contains_key(&j) {
                continue;
            }
            let (s, t) = quiver.ends(p).unwrap();
            index_of[j] = pres.add_morphism(&quiver.path_name(p), s, t, 0, len as i64)?;
            normal.insert(p.clone(), LinComb::basis(index_of[j]));
            basis_paths.push((index_of[j], p.clone()));
        }
        for (&j, row) in &pivots {
            let l = LinComb::from_terms(
                row.iter()
                    .enumerate()
                    .filter(|(k, c)| *k != j && !c.is_zero())
                    .map(|(k, c)| (index_of[k], -c.clone())),
            );
            normal.insert(paths[j].clone(), l);
        }
    }

    for (f, pf) in &basis_paths {
        for (g, pg) in &basis_paths {
            if pf.len() + pg.len() > cap || pres.morphism(*g).source != pres.morphism(*f).target {
                continue;
            }
            let mut full = pf.clone();
            full.extend(pg);
            let v = normal.get(&full).cloned().unwrap_or_default();
            pres.set_product(*g, *f, v)?;
        }
    }
    Ok(pres)
}

/// Prefix/suffix path pairs of the given lengths (length 0 means the empty path).
fn affixes(q: &Quiver, pre: usize, suf: usize) -> Vec<(Path, Path)> {
    let side = |n: usize| if n == 0 { vec![Vec::new()] } else { q.paths_of_length(n) };
    let mut out = Vec::new();
    for a in side(pre) {
        for b in side(suf) {
            out.push((a.clone(), b));
        }
    }
    out
}

/// Eliminates with unit pivots only, preferring the largest column. Returns the fully
/// reduced pivot rows keyed by pivot column (pivot entry one).
fn unit_pivot_reduce(
    ring: &RingSpec,
    rows: &mut Vec<Vec<Coeff>>,
    weight: i64,
) -> Result<BTreeMap<usize, Vec<Coeff>>, DgError> {
    let norm = |c: &Coeff| ring.normalize(c);
    for r in rows.iter_mut() {
        for c in r.iter_mut() {
            *c = norm(c)?;
        }
    }
    let is_unit = |c: &Coeff| match ring {
        RingSpec::Rationals => !c.is_zero(),
        _ => c.is_integer() && ring.is_unit(&c.to_integer()),
    };
    let mut pivots: BTreeMap<usize, Vec<Coeff>> = BTreeMap::new();
    loop {
        let mut best: Option<(usize, usize)> = None;
        for (ri, r) in rows.iter().enumerate() {
            for (j, c) in r.iter().enumerate().rev() {
                if is_unit(c) {
                    if best.is_none_or(|(_, bj)| j > bj) {
                        best = Some((ri, j));
                    }
                    break;
                }
            }
        }
        let Some((ri, j)) = best else { break };
        let mut prow = rows.swap_remove(ri);
        let inv = norm(&(Coeff::one() / prow[j].clone()))?;
        for c in prow.iter_mut() {
            *c = norm(&(c.clone() * inv.clone()))?;
        }
        let clear = |r: &mut Vec<Coeff>| -> Result<(), DgError> {
            let f = r[j].clone();
            if f.is_zero() {
                return Ok(());
            }
            for (x, y) in r.iter_mut().zip(&prow) {
                *x = norm(&(x.clone() - f.clone() * y.clone()))?;
            }
            Ok(())
        };
        for r in rows.iter_mut() {
            clear(r)?;
        }
        for r in pivots.values_mut() {
            clear(r)?;
        }
        pivots.insert(j, prow);
    }
    if let Some(r) = rows.iter().find(|r| r.iter().any(|c| !c.is_zero())) {
        return Err(DgError::InconsistentRelations {
            weight,
            detail: format!("relation with no unit coefficient left after reduction: {r:?}"),
        });
    }
    Ok(pivots)
}
