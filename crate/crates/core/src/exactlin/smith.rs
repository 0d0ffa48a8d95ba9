//! Smith normal form over ℤ (any `Integer` type) and over ℤ/n by lifting.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::{ExactMatrix, Scalar};
use super::ring::associate_unit;

/// `u · m · v = d` with `u`, `v` unimodular and `d` diagonal with `d_1 | d_2 | …`.
#[derive(Debug, Clone)]
pub struct Smith<T: Scalar> {
    pub diagonal: Vec<T>,
    pub rank: usize,
    pub u: ExactMatrix<T>,
    pub u_inv: ExactMatrix<T>,
    pub v: ExactMatrix<T>,
}

impl<T: Scalar> Smith<T> {
    pub fn d_matrix(&self) -> ExactMatrix<T> {
        ExactMatrix::diagonal(self.u.nrows(), self.v.nrows(), &self.diagonal)
    }
}

struct Transforms<T> {
    u: Vec<Vec<T>>,
    u_inv: Vec<Vec<T>>,
    v: Vec<Vec<T>>,
}

fn ident<T: Scalar>(n: usize) -> Vec<Vec<T>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
        .collect()
}

fn row_axpy<T: Scalar>(m: &mut [Vec<T>], dst: usize, src: usize, q: &T) {
    // row_dst += q * row_src
    let (a, b) = if dst < src {
        let (lo, hi) = m.split_at_mut(src);
        (&mut lo[dst], &hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(dst);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in a.iter_mut().zip(b.iter()) {
        if !y.is_zero() {
            *x = x.clone() + q.clone() * y.clone();
        }
    }
}

fn col_axpy<T: Scalar>(m: &mut [Vec<T>], dst: usize, src: usize, q: &T) {
    for row in m.iter_mut() {
        if !row[src].is_zero() {
            row[dst] = row[dst].clone() + q.clone() * row[src].clone();
        }
    }
}

fn col_swap<T>(m: &mut [Vec<T>], a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

struct Elim<T> {
    a: Vec<Vec<T>>,
    tr: Option<Transforms<T>>,
}

impl<T: Scalar + Integer + Signed> Elim<T> {
    fn row_op(&mut self, dst: usize, src: usize, q: &T) {
        row_axpy(&mut self.a, dst, src, q);
        if let Some(tr) = &mut self.tr {
            row_axpy(&mut tr.u, dst, src, q);
            // inverse op on the right of u_inv: col_src -= q col_dst
            col_axpy(&mut tr.u_inv, src, dst, &-q.clone());
        }
    }

    fn col_op(&mut self, dst: usize, src: usize, q: &T) {
        col_axpy(&mut self.a, dst, src, q);
        if let Some(tr) = &mut self.tr {
            col_axpy(&mut tr.v, dst, src, q);
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        if let Some(tr) = &mut self.tr {
            tr.u.swap(i, j);
            col_swap(&mut tr.u_inv, i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        col_swap(&mut self.a, i, j);
        if let Some(tr) = &mut self.tr {
            col_swap(&mut tr.v, i, j);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.a[i].iter_mut() {
            *x = -x.clone();
        }
        if let Some(tr) = &mut self.tr {
            for x in tr.u[i].iter_mut() {
                *x = -x.clone();
            }
            for row in tr.u_inv.iter_mut() {
                row[i] = -row[i].clone();
            }
        }
    }

    fn run(&mut self) -> Vec<T> {
        let m = self.a.len();
        let n = if m == 0 { 0 } else { self.a[0].len() };
        let mut diag = Vec::new();
        let mut t = 0;
        while t < m.min(n) {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    let x = &self.a[i][j];
                    if x.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| x.abs() < self.a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut clean = true;
                for i in t + 1..m {
                    if self.a[i][t].is_zero() {
                        continue;
                    }
                    let q = self.a[i][t].div_floor(&self.a[t][t]);
                    self.row_op(i, t, &-q);
                    if !self.a[i][t].is_zero() {
                        clean = false;
                    }
                }
                for j in t + 1..n {
                    if self.a[t][j].is_zero() {
                        continue;
                    }
                    let q = self.a[t][j].div_floor(&self.a[t][t]);
                    self.col_op(j, t, &-q);
                    if !self.a[t][j].is_zero() {
                        clean = false;
                    }
                }
                if !clean {
                    let mut best = (t, t);
                    for i in t + 1..m {
                        let x = &self.a[i][t];
                        if !x.is_zero() && x.abs() < self.a[best.0][best.1].abs() {
                            best = (i, t);
                        }
                    }
                    for j in t + 1..n {
                        let x = &self.a[t][j];
                        if !x.is_zero() && x.abs() < self.a[best.0][best.1].abs() {
                            best = (t, j);
                        }
                    }
                    self.swap_rows(t, best.0);
                    self.swap_cols(t, best.1);
                    continue;
                }
                // divisibility of the trailing block
                let p = self.a[t][t].clone();
                let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !self.a[i][j].is_multiple_of(&p)));
                match bad {
                    Some(i) => {
                        self.row_op(t, i, &T::one());
                    }
                    None => break,
                }
            }
            if self.a[t][t].is_negative() {
                self.negate_row(t);
            }
            diag.push(self.a[t][t].clone());
            t += 1;
        }
        diag
    }
}

fn dense_to_matrix<T: Scalar>(rows: Vec<Vec<T>>, nrows: usize, ncols: usize) -> ExactMatrix<T> {
    if nrows == 0 || ncols == 0 {
        return ExactMatrix::zeros(nrows, ncols);
    }
    ExactMatrix::from_rows(rows)
}

/// Full Smith normal form with transforms.
pub fn smith_normal_form<T: Scalar + Integer + Signed>(m: &ExactMatrix<T>) -> Smith<T> {
    let (r, c) = (m.nrows(), m.ncols());
    let mut e = Elim {
        a: m.to_rows(),
        tr: Some(Transforms { u: ident(r), u_inv: ident(r), v: ident(c) }),
    };
    let mut diagonal = e.run();
    let rank = diagonal.len();
    diagonal.resize(r.min(c), T::zero());
    let tr = e.tr.expect("transforms tracked");
    Smith {
        diagonal,
        rank,
        u: dense_to_matrix(tr.u, r, r),
        u_inv: dense_to_matrix(tr.u_inv, r, r),
        v: dense_to_matrix(tr.v, c, c),
    }
}

/// Nonzero invariant factors only; cheaper than [`smith_normal_form`].
pub fn invariant_factors<T: Scalar + Integer + Signed>(m: &ExactMatrix<T>) -> Vec<T> {
    if m.nnz() == 0 {
        return Vec::new();
    }
    // drop zero rows/cols up front
    let mut live_rows: Vec<usize> = m.entries().map(|(i, _, _)| i).collect();
    live_rows.sort_unstable();
    live_rows.dedup();
    let live_cols: Vec<usize> = (0..m.ncols()).filter(|&j| !m.column(j).is_empty()).collect();
    let pos: std::collections::HashMap<usize, usize> =
        live_rows.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    let mut a = vec![vec![T::zero(); live_cols.len()]; live_rows.len()];
    for (jj, &j) in live_cols.iter().enumerate() {
        for (i, v) in m.column(j) {
            a[pos[i]][jj] = v.clone();
        }
    }
    let mut e = Elim { a, tr: None };
    e.run()
}

/// Smith normal form over ℤ/n. Entries of the result are reduced into `[0, n)`;
/// nonzero diagonal entries are proper divisors of `n` forming a divisibility chain.
pub fn smith_normal_form_mod(m: &ExactMatrix<BigInt>, n: &BigInt) -> Smith<BigInt> {
    let lifted = m.map(|x| x.mod_floor(n));
    let s = smith_normal_form(&lifted);
    let reduce = |x: &BigInt| x.mod_floor(n);
    let u = s.u.map(reduce);
    let u_inv = s.u_inv.map(reduce);
    let mut v = s.v.map(reduce);
    let mut diagonal = Vec::with_capacity(s.diagonal.len());
    for (i, d) in s.diagonal.iter().enumerate() {
        let g = d.gcd(n);
        if &g == n || d.is_zero() {
            diagonal.push(BigInt::zero());
            continue;
        }
        let c = associate_unit(d, n);
        for r in 0..v.nrows() {
            let x = v.get(r, i);
            if !x.is_zero() {
                v.set(r, i, (x * &c).mod_floor(n));
            }
        }
        diagonal.push(g);
    }
    let rank = diagonal.iter().filter(|d| !d.is_zero()).count();
    Smith { diagonal, rank, u, u_inv, v }
}
