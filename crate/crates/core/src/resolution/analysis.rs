//! Comparison of a stage `Ψ: Ã → A` with its target, one cell at a time.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::cells::*;
use crate::dgcat::{DgPresentation, LinComb};
use crate::exactlin::{lattice, ExactMatrix};
use crate::Coeff;

pub(crate) struct Ctx<'a> {
    pub c: &'a DgPresentation,
    pub c_idx: BTreeMap<CellKey, Vec<usize>>,
    pub psi: &'a [LinComb],
    pub a: &'a DgPresentation,
    pub a_idx: BTreeMap<CellKey, Vec<usize>>,
}

/// Quotient generators with their orders; vectors are lattice coordinates in the cell.
pub(crate) type Classes = Vec<(Vec<BigInt>, BigInt)>;

#[derive(Debug, Default)]
pub(crate) struct CellAnalysis {
    /// Cocycles of `A` outside `Ψ(Z(Ã))`.
    pub cocycles_unhit: Classes,
    /// Homology classes of `A` outside the image of `Ψ_*`.
    pub homology_unhit: Classes,
    /// Cycles of `Ã` sent to boundaries, modulo boundaries of `Ã`.
    pub kernel: Classes,
    /// Morphisms of `A` outside `Ψ(Ã)`.
    pub morphisms_unhit: Classes,
}

impl<'a> Ctx<'a> {
    pub fn new(c: &'a DgPresentation, psi: &'a [LinComb], a: &'a DgPresentation) -> Self {
        Ctx { c, c_idx: cell_index(c), psi, a, a_idx: cell_index(a) }
    }

    pub fn c_cell(&self, k: CellKey) -> &[usize] {
        cell(&self.c_idx, k)
    }

    pub fn a_cell(&self, k: CellKey) -> &[usize] {
        cell(&self.a_idx, k)
    }

    fn psi_matrix(&self, k: CellKey) -> crate::RatMatrix {
        matrix_of(|j| self.psi[j].clone(), self.c_cell(k), self.a_cell(k))
    }

    fn c_cycles(&self, k: CellKey) -> crate::IntMatrix {
        let (x, y, h, w) = k;
        let below = (x, y, h - 1, w);
        cycles(&d_matrix(self.c, self.c_cell(k), self.c_cell(below)), &orders(self.c, self.c_cell(below)))
    }

    pub fn analyze(&self, k: CellKey) -> CellAnalysis {
        let ring = self.c.ring();
        let (x, y, h, w) = k;
        let (below, above) = ((x, y, h - 1, w), (x, y, h + 1, w));
        let (ch, ah) = (self.c_cell(k), self.a_cell(k));

        let zc = self.c_cycles(k);
        let za = cycles(&d_matrix(self.a, ah, self.a_cell(below)), &orders(self.a, self.a_cell(below)));
        let psi = self.psi_matrix(k);
        let psi_z = integral(&psi.mul(&to_rat(&zc)));
        let oa = lattice::order_lattice(&orders(self.a, ah));
        let ba = integral(&d_matrix(self.a, self.a_cell(above), ah));
        let bc = integral(&d_matrix(self.c, self.c_cell(above), ch));
        let oc = lattice::order_lattice(&orders(self.c, ch));

        let cocycles_unhit = lattice::quotient_generators(ring, &za, &psi_z.hstack(&oa));
        let homology_unhit = lattice::quotient_generators(ring, &za, &psi_z.hstack(&ba).hstack(&oa));
        let pre = lattice::preimage(&psi_z, &ba.hstack(&oa));
        let k_basis = lattice::lattice_basis(&zc.mul(&pre));
        let kernel = lattice::quotient_generators(ring, &k_basis, &bc.hstack(&oc));
        let everything = ExactMatrix::identity(ah.len());
        let morphisms_unhit = lattice::quotient_generators(ring, &everything, &integral(&psi).hstack(&oa));
        CellAnalysis { cocycles_unhit, homology_unhit, kernel, morphisms_unhit }
    }

    /// A cycle `z` of `Ã` one degree down with `Ψ(z) = d(m)`, for `m` in cell `k` of `A`.
    pub fn lift_differential(&self, k: CellKey, m: &[Coeff]) -> Option<LinComb> {
        let (x, y, h, w) = k;
        let below = (x, y, h - 1, w);
        let (cb, ab) = (self.c_cell(below), self.a_cell(below));
        let dm = d_matrix(self.a, self.a_cell(k), ab).apply(m);
        let zc = to_rat(&self.c_cycles(below));
        let lhs = self.psi_matrix(below).mul(&zc).hstack(&to_rat(&lattice::order_lattice(&orders(self.a, ab))));
        let sol = solve(self.c.ring(), &lhs, &dm)?;
        let z = zc.apply(&sol[..zc.ncols()]);
        Some(self.c.normalize_unchecked(&vec_to_lin(cb, &z)))
    }

    /// A morphism `m` of `A` one degree up with `d(m) = Ψ(z)`, for a cycle `z` in cell `k`.
    pub fn lift_boundary(&self, k: CellKey, z: &[Coeff]) -> Option<LinComb> {
        let (x, y, h, w) = k;
        let above = (x, y, h + 1, w);
        let (ah, aa) = (self.a_cell(k), self.a_cell(above));
        let target = self.psi_matrix(k).apply(z);
        let lhs = d_matrix(self.a, aa, ah).hstack(&to_rat(&lattice::order_lattice(&orders(self.a, ah))));
        let sol = solve(self.c.ring(), &lhs, &target)?;
        Some(self.a.normalize_unchecked(&vec_to_lin(aa, &sol[..aa.len()])))
    }

    /// Whether `v` (coordinates in cell `k` of `Ã`) is a boundary modulo orders.
    pub fn is_boundary(&self, k: CellKey, v: &[Coeff]) -> bool {
        let (x, y, h, w) = k;
        let ch = self.c_cell(k);
        let lhs = d_matrix(self.c, self.c_cell((x, y, h + 1, w)), ch)
            .hstack(&to_rat(&lattice::order_lattice(&orders(self.c, ch))));
        solve(self.c.ring(), &lhs, v).is_some()
    }
}
