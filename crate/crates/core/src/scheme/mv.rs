use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use super::cech::{cech_total_complex, internal, restrict, Mode};
use super::cover::CechCoverData;
use super::SchemeError;
use crate::exactlin::{field, ExactMatrix, RingSpec};
use crate::hochschild::block_matrix;
use crate::{Coeff, RatMatrix};

/// Rank bookkeeping of the long exact sequence
/// `H_t(X) → H_t(V) ⊕ H_t(W) → H_t(V∩W) → H_{t-1}(X)` in one total degree, summed
/// over weights. Ranks are taken over ℚ (free ranks over ℤ).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MvRow {
    pub h_x: usize,
    pub h_v: usize,
    pub h_w: usize,
    pub h_vw: usize,
    /// Rank of `H_t(X) → H_t(V) ⊕ H_t(W)`.
    pub rank_restrict: usize,
    /// Rank of `H_t(V) ⊕ H_t(W) → H_t(V∩W)`.
    pub rank_difference: usize,
    /// Rank of the connecting map `H_t(V∩W) → H_{t-1}(X)`.
    pub rank_connecting: usize,
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MvReport {
    pub rows: BTreeMap<i64, MvRow>,
}

impl MvReport {
    pub fn exact(&self) -> bool {
        self.rows.values().all(|r| r.exact)
    }
}

fn dim_homology(d_here: &RatMatrix, d_above: &RatMatrix) -> usize {
    d_here.ncols() - field::rank(d_here) - field::rank(d_above)
}

/// Rank of the map induced on homology by `f`, given the source differential out of
/// the source degree and the target differential into the target degree.
fn induced_rank(f: &RatMatrix, d_src: &RatMatrix, d_tgt_above: &RatMatrix) -> usize {
    let ker = field::kernel(d_src);
    let z = ExactMatrix::from_column_vectors(f.ncols(), &ker);
    let img = f.mul(&z);
    field::rank(&img.hstack(d_tgt_above)) - field::rank(d_tgt_above)
}

fn diag(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    block_matrix(&[a.nrows(), b.nrows()], &[a.ncols(), b.ncols()], &[(0, 0, a.clone()), (1, 1, b.clone())])
}

/// Checks the Mayer–Vietoris sequence of a two-patch cover on `window`.
pub fn mayer_vietoris_check(cover: &CechCoverData, window: RangeInclusive<i64>, mode: Mode) -> Result<MvReport, SchemeError> {
    if cover.patches.len() != 2 {
        return Err(SchemeError::BadCover(format!("Mayer–Vietoris needs two patches, got {}", cover.patches.len())));
    }
    if matches!(cover.ring, RingSpec::IntegersModN(_)) {
        return Err(SchemeError::Unsupported("rank bookkeeping over ℤ/n".into()));
    }
    cover.check()?;
    let (lo, hi) = (*window.start(), *window.end());
    let mut rows: BTreeMap<i64, MvRow> = window.clone().map(|t| (t, MvRow { exact: true, ..Default::default() })).collect();
    let (v, wv, vw) = (vec![0], vec![1], vec![0, 1]);
    for &w in &cover.weights {
        let tot = cech_total_complex(cover, w, window.clone(), mode)?;
        let kv = internal(cover.node(&v), w, mode, lo - 1, hi + 2);
        let kw = internal(cover.node(&wv), w, mode, lo - 1, hi + 2);
        let ki = internal(cover.node(&vw), w, mode, lo - 1, hi + 2);
        let rv = |q: i64| restrict(cover.restriction(&v, &vw), cover.node(&v), cover.node(&vw), q, w, mode);
        let rw = |q: i64| restrict(cover.restriction(&wv, &vw), cover.node(&wv), cover.node(&vw), q, w, mode);
        let neg = -Coeff::from_integer(1.into());
        let connecting = |t: i64| -> usize {
            // V∩W in internal degree t sits in total degree t - 1, after the patch blocks
            let (a, b) = (kv.rank(t - 1), kw.rank(t - 1));
            let n = ki.rank(t);
            let incl = block_matrix(&[a, b, n], &[n], &[(2, 0, ExactMatrix::identity(n))]);
            induced_rank(&incl, &ki.differential(t), &tot.differential(t))
        };
        for t in window.clone() {
            let dvw = diag(&kv.differential(t), &kw.differential(t));
            let dvw_up = diag(&kv.differential(t + 1), &kw.differential(t + 1));
            let h_x = dim_homology(&tot.differential(t), &tot.differential(t + 1));
            let h_v = dim_homology(&kv.differential(t), &kv.differential(t + 1));
            let h_w = dim_homology(&kw.differential(t), &kw.differential(t + 1));
            let h_vw = dim_homology(&ki.differential(t), &ki.differential(t + 1));
            let (a, b) = (kv.rank(t), kw.rank(t));
            let proj = block_matrix(&[a, b], &[a, b, tot.rank(t) - a - b], &[(0, 0, ExactMatrix::identity(a)), (1, 1, ExactMatrix::identity(b))]);
            let r_alpha = induced_rank(&proj, &tot.differential(t), &dvw_up);
            let rho = rv(t).scale(&neg).hstack(&rw(t));
            let r_rho = induced_rank(&rho, &dvw, &ki.differential(t + 1));
            let r_conn = connecting(t);
            let r_conn_up = connecting(t + 1);
            let exact = h_x == r_alpha + r_conn_up && h_v + h_w == r_alpha + r_rho && h_vw == r_rho + r_conn;
            let row = rows.get_mut(&t).expect("window row");
            row.h_x += h_x;
            row.h_v += h_v;
            row.h_w += h_w;
            row.h_vw += h_vw;
            row.rank_restrict += r_alpha;
            row.rank_difference += r_rho;
            row.rank_connecting += r_conn;
            row.exact &= exact;
        }
    }
    Ok(MvReport { rows })
}
