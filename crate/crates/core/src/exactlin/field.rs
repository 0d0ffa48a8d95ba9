//! Gaussian elimination over a field (ℚ in practice).

use super::matrix::{ExactMatrix, Scalar};

/// Reduced row echelon form; returns the reduced rows and pivot columns.
pub fn rref<T: Scalar>(m: &ExactMatrix<T>) -> (Vec<Vec<T>>, Vec<usize>) {
    let mut a = m.to_rows();
    let rows = a.len();
    let cols = m.ncols();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = T::one() / a[r][c].clone();
        for x in a[r].iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * inv.clone();
            }
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

/// Rank by forward elimination on sparse rows.
pub fn rank<T: Scalar>(m: &ExactMatrix<T>) -> usize {
    // eliminate column by column over the (sparse) columns viewed as rows of the transpose
    let t = m.transpose();
    let mut rows: Vec<Vec<(usize, T)>> = (0..t.ncols()).map(|j| t.column(j).to_vec()).collect();
    rows.retain(|r| !r.is_empty());
    // pivot table: leading column -> reduced row
    let mut basis: std::collections::BTreeMap<usize, Vec<(usize, T)>> = Default::default();
    for mut row in rows {
        loop {
            let Some(&(lead, ref lv)) = row.first() else { break };
            match basis.get(&lead) {
                None => {
                    let inv = T::one() / lv.clone();
                    for e in row.iter_mut() {
                        e.1 = e.1.clone() * inv.clone();
                    }
                    basis.insert(lead, row);
                    break;
                }
                Some(b) => {
                    let f = lv.clone();
                    row = sparse_axpy(&row, b, &f);
                }
            }
        }
    }
    basis.len()
}

/// `a - f * b` on sorted sparse rows.
fn sparse_axpy<T: Scalar>(a: &[(usize, T)], b: &[(usize, T)], f: &T) -> Vec<(usize, T)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(f.clone() * b[j].1.clone())));
            j += 1;
        } else {
            let v = a[i].1.clone() - f.clone() * b[j].1.clone();
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Basis of the right kernel, as vectors.
pub fn kernel<T: Scalar>(m: &ExactMatrix<T>) -> Vec<Vec<T>> {
    let (r, pivots) = rref(m);
    let n = m.ncols();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![T::zero(); n];
            v[f] = T::one();
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Some solution of `m x = b`, if one exists.
pub fn solve<T: Scalar>(m: &ExactMatrix<T>, b: &[T]) -> Option<Vec<T>> {
    assert_eq!(b.len(), m.nrows(), "rhs length mismatch");
    let bcol = ExactMatrix::from_column_vectors(m.nrows(), &[b.to_vec()]);
    let aug = m.hstack(&bcol);
    let (r, pivots) = rref(&aug);
    let n = m.ncols();
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![T::zero(); n];
    for (row, &p) in r.iter().zip(&pivots) {
        x[p] = row[n].clone();
    }
    Some(x)
}


fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

/// Rank over `𝔽_p` of an integral matrix, `p` prime.
pub fn rank_mod_p(m: &ExactMatrix<num_bigint::BigInt>, p: u64) -> usize {
    use num_integer::Integer;
    use num_traits::ToPrimitive;
    let big_p = num_bigint::BigInt::from(p);
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let t = m.transpose();
    let mut basis: std::collections::BTreeMap<usize, Vec<(usize, u64)>> = Default::default();
    for j in 0..t.ncols() {
        let mut row: Vec<(usize, u64)> = t
            .column(j)
            .iter()
            .map(|(i, v)| (*i, v.mod_floor(&big_p).to_u64().expect("reduced entry")))
            .filter(|(_, v)| *v != 0)
            .collect();
        while let Some(&(lead, lv)) = row.first() {
            match basis.get(&lead) {
                None => {
                    let inv = pow_mod(lv, p - 2, p);
                    for e in row.iter_mut() {
                        e.1 = mul(e.1, inv);
                    }
                    basis.insert(lead, row);
                    break;
                }
                Some(piv) => {
                    // row -= lv * piv, merging sorted sparse rows
                    let mut out = Vec::with_capacity(row.len() + piv.len());
                    let (mut a, mut b) = (0, 0);
                    while a < row.len() || b < piv.len() {
                        let ka = row.get(a).map_or(usize::MAX, |e| e.0);
                        let kb = piv.get(b).map_or(usize::MAX, |e| e.0);
                        if ka < kb {
                            out.push(row[a]);
                            a += 1;
                        } else {
                            let s = mul(lv, piv[b].1);
                            let v = if ka == kb { (row[a].1 + p - s) % p } else { (p - s) % p };
                            if v != 0 {
                                out.push((kb, v));
                            }
                            if ka == kb {
                                a += 1;
                            }
                            b += 1;
                        }
                    }
                    row = out;
                }
            }
        }
    }
    basis.len()
}
