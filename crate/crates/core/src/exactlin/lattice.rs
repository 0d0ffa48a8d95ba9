//! Integer lattice operations (kernels, preimages, membership, quotients) used for
//! modules of the form ⊕ R/(c_i). Over ℚ the same routines are run on integral
//! representatives and every nonzero invariant factor counts as a unit.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::ExactMatrix;
use super::ring::RingSpec;
use super::smith::smith_normal_form;
use crate::{Coeff, IntMatrix};

/// Columns spanning `{x ∈ ℤ^k : a·x = 0}`.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(a);
    let keep: Vec<usize> = (s.rank..a.ncols()).collect();
    s.v.select_columns(&keep)
}

/// A basis of the lattice generated by the columns of `gens`.
pub fn lattice_basis(gens: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(gens);
    let cols: Vec<Vec<BigInt>> = (0..s.rank)
        .map(|i| s.u_inv.column_vector(i).into_iter().map(|x| x * &s.diagonal[i]).collect())
        .collect();
    ExactMatrix::from_column_vectors(gens.nrows(), &cols)
}

/// Basis of `{x : a·x ∈ span(l)}`.
pub fn preimage(a: &IntMatrix, l: &IntMatrix) -> IntMatrix {
    let k = a.ncols();
    let joined = a.hstack(&l.scale(&-BigInt::one()));
    let ker = kernel_basis(&joined);
    lattice_basis(&ker.row_block(0, k))
}

/// Solves `a·x = b`. Over ℚ the solution may be fractional; otherwise it must be
/// integral (ℤ/n relations have to be part of `a`).
pub fn solve(ring: &RingSpec, a: &IntMatrix, b: &[BigInt]) -> Option<Vec<Coeff>> {
    assert_eq!(a.nrows(), b.len(), "rhs length mismatch");
    let s = smith_normal_form(a);
    let ub = s.u.apply(b);
    let mut y = vec![Coeff::zero(); a.ncols()];
    for (i, val) in ub.iter().enumerate() {
        if i < s.rank {
            let d = &s.diagonal[i];
            match ring {
                RingSpec::Rationals => y[i] = Coeff::new(val.clone(), d.clone()),
                _ => {
                    if !val.is_multiple_of(d) {
                        return None;
                    }
                    y[i] = Coeff::from_integer(val / d);
                }
            }
        } else if !val.is_zero() {
            return None;
        }
    }
    let v = s.v.map(|x| Coeff::from_integer(x.clone()));
    Some(v.apply(&y))
}

/// Generators of `L / I` for lattices `I ⊆ L`, each with its order (`0` = infinite).
/// Only generators whose order is not a unit in `ring` are returned.
pub fn quotient_generators(
    ring: &RingSpec,
    l_basis: &IntMatrix,
    i_gens: &IntMatrix,
) -> Vec<(Vec<BigInt>, BigInt)> {
    let r = l_basis.ncols();
    if r == 0 {
        return Vec::new();
    }
    // coordinates of the I generators in the L basis
    let mut coord_cols = Vec::with_capacity(i_gens.ncols());
    for j in 0..i_gens.ncols() {
        let g = i_gens.column_vector(j);
        let c = solve(&RingSpec::Rationals, l_basis, &g).expect("I must lie inside L");
        coord_cols.push(integral_or_scaled(ring, c));
    }
    let coords = ExactMatrix::from_column_vectors(r, &coord_cols);
    let s = smith_normal_form(&coords);
    let new_basis = l_basis.mul(&s.u_inv);
    (0..r)
        .filter_map(|i| {
            let d = if i < s.rank { s.diagonal[i].clone() } else { BigInt::zero() };
            let unit = match ring {
                RingSpec::Rationals => !d.is_zero(),
                _ => d.abs().is_one(),
            };
            (!unit).then(|| (new_basis.column_vector(i), d))
        })
        .collect()
}

fn integral_or_scaled(ring: &RingSpec, c: Vec<Coeff>) -> Vec<BigInt> {
    match ring {
        RingSpec::Rationals => scale_to_integral(&c),
        _ => c
            .into_iter()
            .map(|x| {
                assert!(x.is_integer(), "sublattice coordinates must be integral");
                x.to_integer()
            })
            .collect(),
    }
}

/// Multiplies by the lcm of denominators. Only meaningful for spans over ℚ.
pub fn scale_to_integral(v: &[Coeff]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    v.iter().map(|x| (x * Coeff::from_integer(l.clone())).to_integer()).collect()
}

/// `diag(orders)` restricted to nonzero orders, as lattice generators.
pub fn order_lattice(orders: &[BigInt]) -> IntMatrix {
    let cols: Vec<Vec<BigInt>> = orders
        .iter()
        .enumerate()
        .filter(|(_, o)| !o.is_zero())
        .map(|(i, o)| {
            let mut v = vec![BigInt::zero(); orders.len()];
            v[i] = o.clone();
            v
        })
        .collect();
    ExactMatrix::from_column_vectors(orders.len(), &cols)
}
