use std::fmt::Debug;
use std::ops::Neg;

use num_traits::Num;

/// Coefficient types usable in [`ExactMatrix`].
pub trait Scalar: Num + Clone + Neg<Output = Self> + Debug + Send + Sync {}

impl<T> Scalar for T where T: Num + Clone + Neg<Output = T> + Debug + Send + Sync {}

/// Sparse exact matrix stored column by column; each column is sorted by row index
/// and holds no explicit zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, T)>>,
}

impl<T: Scalar> ExactMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i].push((i, T::one()));
        }
        m
    }

    pub fn diagonal(rows: usize, cols: usize, diag: &[T]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    /// Builds from row-major dense data.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.into_iter().enumerate() {
                if !v.is_zero() {
                    m.data[j].push((i, v));
                }
            }
        }
        m
    }

    pub fn from_columns(rows: usize, cols: Vec<Vec<(usize, T)>>) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.into_iter().enumerate() {
            for (i, v) in col {
                m.add_to(i, j, v);
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &[(usize, T)] {
        &self.data[j]
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        match self.data[j].binary_search_by_key(&i, |e| e.0) {
            Ok(k) => self.data[j][k].1.clone(),
            Err(_) => T::zero(),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        let col = &mut self.data[j];
        match col.binary_search_by_key(&i, |e| e.0) {
            Ok(k) => {
                if v.is_zero() {
                    col.remove(k);
                } else {
                    col[k].1 = v;
                }
            }
            Err(k) => {
                if !v.is_zero() {
                    col.insert(k, (i, v));
                }
            }
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: T) {
        if v.is_zero() {
            return;
        }
        let cur = self.get(i, j);
        self.set(i, j, cur + v);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |(i, v)| (*i, j, v)))
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        let mut out = vec![vec![T::zero(); self.cols]; self.rows];
        for (i, j, v) in self.entries() {
            out[i][j] = v.clone();
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut cols: Vec<Vec<(usize, T)>> = vec![Vec::new(); self.rows];
        for (j, col) in self.data.iter().enumerate() {
            for (i, v) in col {
                cols[*i].push((j, v.clone()));
            }
        }
        ExactMatrix { rows: self.cols, cols: self.rows, data: cols }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, rhs.cols);
        let mut acc: Vec<Option<T>> = vec![None; self.rows];
        for (j, rcol) in rhs.data.iter().enumerate() {
            let mut touched = Vec::new();
            for (k, rv) in rcol {
                for (i, lv) in &self.data[*k] {
                    let p = lv.clone() * rv.clone();
                    match &mut acc[*i] {
                        Some(a) => *a = a.clone() + p,
                        slot @ None => {
                            *slot = Some(p);
                            touched.push(*i);
                        }
                    }
                }
            }
            touched.sort_unstable();
            for i in touched {
                if let Some(v) = acc[i].take() {
                    if !v.is_zero() {
                        out.data[j].push((i, v));
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in apply");
        let mut out = vec![T::zero(); self.rows];
        for (j, col) in self.data.iter().enumerate() {
            if v[j].is_zero() {
                continue;
            }
            for (i, a) in col {
                out[*i] = out[*i].clone() + a.clone() * v[j].clone();
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch in sum");
        let mut out = self.clone();
        for (i, j, v) in rhs.entries() {
            out.add_to(i, j, v.clone());
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|v| v.clone() * c.clone())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> ExactMatrix<U> {
        let data = self
            .data
            .iter()
            .map(|col| {
                col.iter()
                    .filter_map(|(i, v)| {
                        let u = f(v);
                        (!u.is_zero()).then_some((*i, u))
                    })
                    .collect()
            })
            .collect();
        ExactMatrix { rows: self.rows, cols: self.cols, data }
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.rows, rhs.rows, "row mismatch in hstack");
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        ExactMatrix { rows: self.rows, cols: self.cols + rhs.cols, data }
    }

    /// Vertical concatenation.
    pub fn vstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.cols, "column mismatch in vstack");
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| {
                let mut c = a.clone();
                c.extend(b.iter().map(|(i, v)| (i + self.rows, v.clone())));
                c
            })
            .collect();
        ExactMatrix { rows: self.rows + rhs.rows, cols: self.cols, data }
    }

    /// Keeps the listed columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let data = cols.iter().map(|&j| self.data[j].clone()).collect();
        ExactMatrix { rows: self.rows, cols: cols.len(), data }
    }

    /// Keeps rows in `range`, renumbered from zero.
    pub fn row_block(&self, start: usize, end: usize) -> Self {
        let data = self
            .data
            .iter()
            .map(|col| {
                col.iter()
                    .filter(|(i, _)| *i >= start && *i < end)
                    .map(|(i, v)| (i - start, v.clone()))
                    .collect()
            })
            .collect();
        ExactMatrix { rows: end - start, cols: self.cols, data }
    }

    pub fn column_vector(&self, j: usize) -> Vec<T> {
        let mut out = vec![T::zero(); self.rows];
        for (i, v) in &self.data[j] {
            out[*i] = v.clone();
        }
        out
    }

    pub fn from_column_vectors(rows: usize, vecs: &[Vec<T>]) -> Self {
        let mut m = Self::zeros(rows, vecs.len());
        for (j, v) in vecs.iter().enumerate() {
            assert_eq!(v.len(), rows, "vector length mismatch");
            for (i, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    m.data[j].push((i, x.clone()));
                }
            }
        }
        m
    }
}

impl<T: Scalar> Debug for ExactMatrix<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "ExactMatrix {}x{}", self.rows, self.cols)?;
        for row in self.to_rows() {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}
