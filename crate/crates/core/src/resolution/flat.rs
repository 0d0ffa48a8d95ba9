use std::collections::{BTreeMap, BTreeSet};
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::cells::{d_matrix, integral, orders, CellKey};
use super::ResolveError;
use crate::dgcat::{sign, DgPresentation};
use crate::exactlin::{module_homology, ExactMatrix, HomologyReport, ModuleComplex, RingSpec};
use crate::IntMatrix;

/// `0 → R → R → R/m → 0` (the first map is multiplication by m) in degrees 2, 1, 0.
pub fn short_exact_test_complex(ring: &RingSpec, m: u64) -> ModuleComplex {
    let mut c = ModuleComplex::new(ring.clone());
    c.set_degree(2, vec![BigInt::zero()]);
    c.set_degree(1, vec![BigInt::zero()]);
    c.set_degree(0, vec![BigInt::from(m)]);
    c.set_differential(2, ExactMatrix::from_rows(vec![vec![BigInt::from(m)]]));
    c.set_differential(1, ExactMatrix::from_rows(vec![vec![BigInt::one()]]));
    c
}

fn support(c: &ModuleComplex) -> (i64, i64) {
    let ks: Vec<i64> = c.orders.iter().filter(|(_, v)| !v.is_empty()).map(|(&t, _)| t).collect();
    (ks.first().copied().unwrap_or(0), ks.last().copied().unwrap_or(0))
}

/// Total complex of `a ⊗ b` with `d(x⊗y) = dx⊗y + (-1)^{|x|} x⊗dy`. Summand orders are
/// gcds of the factors' orders.
pub fn tensor(a: &ModuleComplex, b: &ModuleComplex) -> ModuleComplex {
    let ring = a.ring.clone();
    let (alo, ahi) = support(a);
    let (blo, bhi) = support(b);
    // basis of total degree k: (p, i, j) with i in a_p, j in b_{k-p}
    let basis = |k: i64| -> Vec<(i64, usize, usize)> {
        let mut v = Vec::new();
        for p in alo..=ahi {
            for i in 0..a.size(p) {
                for j in 0..b.size(k - p) {
                    v.push((p, i, j));
                }
            }
        }
        v
    };
    let mut out = ModuleComplex::new(ring);
    for k in alo + blo..=ahi + bhi {
        let src = basis(k);
        let ords: Vec<BigInt> = src.iter().map(|&(p, i, j)| a.orders[&p][i].gcd(&b.orders[&(k - p)][j])).collect();
        out.orders.insert(k, ords);
        let tgt = basis(k - 1);
        let pos: BTreeMap<(i64, usize, usize), usize> = tgt.iter().enumerate().map(|(r, &t)| (t, r)).collect();
        let mut d: IntMatrix = ExactMatrix::zeros(tgt.len(), src.len());
        for (col, &(p, i, j)) in src.iter().enumerate() {
            let da = a.differential(p);
            for &(r, ref v) in da.column(i) {
                if let Some(&row) = pos.get(&(p - 1, r, j)) {
                    d.add_to(row, col, v.clone());
                }
            }
            let db = b.differential(k - p);
            let s = if sign(p).is_one() { BigInt::one() } else { -BigInt::one() };
            for &(r, ref v) in db.column(j) {
                if let Some(&row) = pos.get(&(p, i, r)) {
                    d.add_to(row, col, v * &s);
                }
            }
        }
        out.set_differential(k, d);
    }
    out
}

/// The hom complex `hom^•(x, y)` in one weight as a module complex.
pub fn hom_complex(p: &DgPresentation, x: usize, y: usize, w: i64) -> ModuleComplex {
    let idx = super::cells::cell_index(p);
    let cell = |h: i64| -> Vec<usize> { idx.get(&(x, y, h, w) as &CellKey).cloned().unwrap_or_default() };
    let mut c = ModuleComplex::new(p.ring().clone());
    for h in 0..=p.max_degree() {
        let here = cell(h);
        if here.is_empty() {
            continue;
        }
        c.orders.insert(h, orders(p, &here));
        if h > 0 {
            c.set_differential(h, integral(&d_matrix(p, &here, &cell(h - 1))));
        }
    }
    c
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairFlatness {
    pub acyclic: bool,
    /// Homology of `hom(x, y) ⊗ N`, summed over weights.
    pub homology: HomologyReport,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatnessReport {
    pub pairs: BTreeMap<(String, String), PairFlatness>,
}

impl FlatnessReport {
    pub fn all_acyclic(&self) -> bool {
        self.pairs.values().all(|p| p.acyclic)
    }
}

/// Tensors every hom complex of `p` with the acyclic test complex `n` and reports which
/// stay acyclic on `window`. A finite probe of flatness, not a proof.
pub fn flatness_probe(p: &DgPresentation, n: &ModuleComplex, window: RangeInclusive<i64>) -> Result<FlatnessReport, ResolveError> {
    let (lo, hi) = support(n);
    let own = module_homology(n, lo..=hi)?;
    if own.degrees.values().any(|d| !d.is_zero()) {
        return Err(ResolveError::TestComplexNotAcyclic(own));
    }
    let weights: BTreeSet<i64> = p.basis().iter().map(|b| b.weight).collect();
    let k = p.objects().len();
    let mut pairs = BTreeMap::new();
    for x in 0..k {
        for y in 0..k {
            let mut total = HomologyReport::new(p.ring().clone());
            for t in window.clone() {
                total.degrees.insert(t, Default::default());
            }
            for &w in &weights {
                let h = hom_complex(p, x, y, w);
                if h.orders.is_empty() {
                    continue;
                }
                total = total.direct_sum(&module_homology(&tensor(&h, n), window.clone())?);
            }
            let acyclic = total.degrees.values().all(|d| d.is_zero());
            let names = (p.objects()[x].clone(), p.objects()[y].clone());
            pairs.insert(names, PairFlatness { acyclic, homology: total });
        }
    }
    Ok(FlatnessReport { pairs })
}
