//! Exact linear algebra over the rationals: an incremental sparse reduced
//! row-echelon form and small dense matrices.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::poly::Rational;

pub type SparseVec = BTreeMap<usize, Rational>;

fn axpy(target: &mut SparseVec, c: &Rational, row: &SparseVec) {
    for (&j, v) in row {
        let entry = target.entry(j).or_insert_with(Rational::zero);
        *entry -= c * v;
        if entry.is_zero() {
            target.remove(&j);
        }
    }
}

/// Fully reduced row-echelon basis of a subspace of `Q^ncols`.
///
/// Rows are normalized with pivot entry 1 at their smallest column, and no
/// row has a non-zero entry in another row's pivot column.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    ncols: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: BTreeMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    pub fn rows(&self) -> impl Iterator<Item = (&usize, &SparseVec)> {
        self.rows.iter()
    }

    /// Columns without a pivot, ascending.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| !self.rows.contains_key(c)).collect()
    }

    /// Subtracts the span so that the result is supported on free columns.
    pub fn reduce(&self, v: &mut SparseVec) {
        let hits: Vec<(usize, Rational)> = v.iter().filter(|(j, _)| self.rows.contains_key(j)).map(|(&j, c)| (j, c.clone())).collect();
        for (j, c) in hits {
            axpy(v, &c, &self.rows[&j]);
        }
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: SparseVec) -> bool {
        if self.is_full() {
            return false;
        }
        self.reduce(&mut v);
        let Some((&pivot, lead)) = v.iter().next() else {
            return false;
        };
        let inv = lead.recip();
        for c in v.values_mut() {
            *c *= &inv;
        }
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&pivot).cloned() {
                axpy(row, &c, &v);
            }
        }
        self.rows.insert(pivot, v);
        true
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    nrows: usize,
    ncols: usize,
    data: Vec<Rational>,
}

impl DenseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        DenseMatrix { nrows, ncols, data: vec![Rational::zero(); nrows * ncols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_columns(nrows: usize, columns: &[Vec<Rational>]) -> Self {
        let mut m = Self::zeros(nrows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), nrows);
            for (i, v) in col.iter().enumerate() {
                m.data[i * m.ncols + j] = v.clone();
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.ncols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.nrows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn scale(&self, c: &Rational) -> DenseMatrix {
        DenseMatrix { nrows: self.nrows, ncols: self.ncols, data: self.data.iter().map(|v| v * c).collect() }
    }

    pub fn add(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        DenseMatrix { nrows: self.nrows, ncols: self.ncols, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &DenseMatrix) -> DenseMatrix {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.ncols, other.nrows);
        let mut out = DenseMatrix::zeros(self.nrows, other.ncols);
        for i in 0..self.nrows {
            for l in 0..self.ncols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.ncols {
                    let b = other.get(l, j);
                    if !b.is_zero() {
                        out.data[i * other.ncols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ncols);
        (0..self.nrows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (j, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        acc += self.get(i, j) * x;
                    }
                }
                acc
            })
            .collect()
    }

    /// Gauss-Jordan inverse; `None` when singular or not square.
    pub fn inverse(&self) -> Option<DenseMatrix> {
        if self.nrows != self.ncols {
            return None;
        }
        let n = self.nrows;
        let mut a = self.clone();
        let mut inv = DenseMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = a.get(col, col).recip();
            a.scale_row(col, &p);
            inv.scale_row(col, &p);
            for r in 0..n {
                if r != col && !a.get(r, col).is_zero() {
                    let c = a.get(r, col).clone();
                    a.sub_row(r, col, &c);
                    inv.sub_row(r, col, &c);
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, r: usize, s: usize) {
        for j in 0..self.ncols {
            self.data.swap(r * self.ncols + j, s * self.ncols + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: &Rational) {
        for j in 0..self.ncols {
            self.data[r * self.ncols + j] *= c;
        }
    }

    /// `row[r] -= c * row[s]`
    fn sub_row(&mut self, r: usize, s: usize, c: &Rational) {
        for j in 0..self.ncols {
            let v = c * &self.data[s * self.ncols + j];
            self.data[r * self.ncols + j] -= v;
        }
    }
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.nrows {
            let row: Vec<String> = (0..self.ncols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
