//! Per-cell linear algebra for comparing a semi-free stage with its target.
//!
//! A cell is a hom module `(source, target, degree, weight)`. Modules are handled as
//! integer lattices modulo order relations, so the same code runs over ℤ, ℤ/n and ℚ;
//! over ℚ every matrix is scaled to integral form first, which keeps rational spans.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::dgcat::{DgPresentation, LinComb};
use crate::exactlin::{field, lattice, ExactMatrix, RingSpec};
use crate::{Coeff, IntMatrix, RatMatrix};

pub type CellKey = (usize, usize, i64, i64);

pub fn cell_index(p: &DgPresentation) -> BTreeMap<CellKey, Vec<usize>> {
    let mut out: BTreeMap<CellKey, Vec<usize>> = BTreeMap::new();
    for (i, b) in p.basis().iter().enumerate() {
        out.entry((b.source, b.target, b.degree, b.weight)).or_default().push(i);
    }
    out
}

pub fn cell<'a>(idx: &'a BTreeMap<CellKey, Vec<usize>>, k: CellKey) -> &'a [usize] {
    idx.get(&k).map_or(&[], Vec::as_slice)
}

/// Relation generators `diag(order)` for the listed basis elements, as lattice orders.
pub fn orders(p: &DgPresentation, basis: &[usize]) -> Vec<BigInt> {
    basis
        .iter()
        .map(|&i| {
            let e = p.effective_order(i);
            if e.is_zero() {
                p.ring().lattice_order()
            } else {
                e
            }
        })
        .collect()
}

/// Matrix of `images[from_j]` in the coordinates `to`.
pub fn matrix_of(images: impl Fn(usize) -> LinComb, from: &[usize], to: &[usize]) -> RatMatrix {
    let pos: BTreeMap<usize, usize> = to.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    let cols = from
        .iter()
        .map(|&j| images(j).iter().filter_map(|(i, c)| pos.get(&i).map(|&r| (r, c.clone()))).collect())
        .collect();
    ExactMatrix::from_columns(to.len(), cols)
}

pub fn d_matrix(p: &DgPresentation, from: &[usize], to: &[usize]) -> RatMatrix {
    matrix_of(|j| p.differential(j).clone(), from, to)
}

pub fn to_rat(m: &IntMatrix) -> RatMatrix {
    m.map(|x| Coeff::from_integer(x.clone()))
}

/// Integral matrix with the same column span over ℚ (exact over ℤ and ℤ/n, where
/// entries are already integers).
pub fn integral(m: &RatMatrix) -> IntMatrix {
    let l = m.entries().fold(BigInt::one(), |acc, (_, _, x)| acc.lcm(x.denom()));
    m.map(|x| (x * Coeff::from_integer(l.clone())).to_integer())
}

/// Cycles of `d: C_h → C_{h-1}` modulo the target's order relations.
pub fn cycles(d: &RatMatrix, target_orders: &[BigInt]) -> IntMatrix {
    lattice::preimage(&integral(d), &lattice::order_lattice(target_orders))
}

/// Solves `a·x = b` in the ring: rationally over ℚ, integrally otherwise.
pub fn solve(ring: &RingSpec, a: &RatMatrix, b: &[Coeff]) -> Option<Vec<Coeff>> {
    match ring {
        RingSpec::Rationals => field::solve(a, b),
        _ => {
            let ai = integral(a);
            let bi: Vec<BigInt> = b.iter().map(|x| x.to_integer()).collect();
            lattice::solve(ring, &ai, &bi)
        }
    }
}

pub fn vec_to_lin(basis: &[usize], v: &[Coeff]) -> LinComb {
    LinComb::from_terms(basis.iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(&i, c)| (i, c.clone())))
}

pub fn lin_to_vec(basis: &[usize], l: &LinComb) -> Vec<Coeff> {
    basis.iter().map(|&i| l.coeff(i)).collect()
}

pub fn int_vec(v: &[BigInt]) -> Vec<Coeff> {
    v.iter().map(|x| Coeff::from_integer(x.clone())).collect()
}
