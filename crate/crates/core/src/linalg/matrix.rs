use std::fmt;
use std::ops::{Index, IndexMut};

use super::integer::{dot, Integer};

/// Dense integer matrix; rows are vectors in the ambient space.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Integer>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![Integer::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Integer::ONE;
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Integer>>) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend(r);
        }
        Matrix { rows: n, cols, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| Integer::from(x)).collect())
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0
    }

    pub fn row(&self, i: usize) -> &[Integer] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Integer] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Integer]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn to_rows(&self) -> Vec<Vec<Integer>> {
        self.rows().map(|r| r.to_vec()).collect()
    }

    pub fn push_row(&mut self, row: &[Integer]) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        self.data.extend_from_slice(row);
        self.rows += 1;
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[target] += factor * row[source]
    pub fn add_row_multiple(&mut self, target: usize, source: usize, factor: &Integer) {
        if factor.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = &self[(source, c)] * factor;
            self[(target, c)] += &v;
        }
    }

    /// col[target] += factor * col[source]
    pub fn add_col_multiple(&mut self, target: usize, source: usize, factor: &Integer) {
        if factor.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = &self[(r, source)] * factor;
            self[(r, target)] += &v;
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for x in self.row_mut(i) {
            *x = -&*x;
        }
    }

    pub fn negate_col(&mut self, j: usize) {
        for r in 0..self.rows {
            self[(r, j)] = -&self[(r, j)];
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let p = a * b;
                        out[(i, j)] += &p;
                    }
                }
            }
        }
        out
    }

    /// Row vector times matrix: `v · self`.
    pub fn left_mul_vec(&self, v: &[Integer]) -> Vec<Integer> {
        assert_eq!(v.len(), self.rows, "dimension mismatch");
        let mut out = vec![Integer::ZERO; self.cols];
        for (i, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let b = &self[(i, j)];
                if !b.is_zero() {
                    *o += &(a * b);
                }
            }
        }
        out
    }

    /// Matrix times column vector: `self · v`.
    pub fn mul_vec(&self, v: &[Integer]) -> Vec<Integer> {
        self.rows().map(|r| dot(r, v)).collect()
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_rows(self.cols, idx.iter().map(|&i| self.row(i).to_vec()).collect())
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let rows = self
            .rows()
            .map(|r| idx.iter().map(|&j| r[j].clone()).collect())
            .collect();
        Matrix::from_rows(idx.len(), rows)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Integer::is_zero)
    }

    /// Fraction-free (Bareiss) elimination on a copy. Returns the echelon
    /// form and the pivot columns.
    fn bareiss(&self) -> (Matrix, Vec<usize>, i32) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prev = Integer::ONE;
        let mut sign = 1;
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                m.swap_rows(p, r);
                sign = -sign;
            }
            for i in r + 1..m.rows {
                for j in c + 1..m.cols {
                    let v = &m[(r, c)] * &m[(i, j)] - &m[(i, c)] * &m[(r, j)];
                    m[(i, j)] = v.div_exact(&prev);
                }
                m[(i, c)] = Integer::ZERO;
            }
            prev = m[(r, c)].clone();
            pivots.push(c);
            r += 1;
        }
        (m, pivots, sign)
    }

    pub fn rank(&self) -> usize {
        self.bareiss().1.len()
    }

    /// Pivot columns of a row echelon form, i.e. a lexicographically first
    /// set of linearly independent columns.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.bareiss().1
    }

    /// Indices of a lexicographically first maximal set of linearly
    /// independent rows.
    pub fn independent_rows(&self) -> Vec<usize> {
        let mut chosen: Vec<usize> = Vec::new();
        let mut acc = Matrix::zeros(0, self.cols);
        for i in 0..self.rows {
            let mut trial = acc.clone();
            trial.push_row(self.row(i));
            if trial.rank() > acc.nrows() {
                acc = trial;
                chosen.push(i);
            }
        }
        chosen
    }

    pub fn determinant(&self) -> Integer {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        if self.rows == 0 {
            return Integer::ONE;
        }
        let (m, pivots, sign) = self.bareiss();
        if pivots.len() < self.rows {
            return Integer::ZERO;
        }
        let d = m[(self.rows - 1, self.cols - 1)].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    /// Adjugate of a square matrix: `self · adj = det · I`.
    pub fn adjugate(&self) -> Matrix {
        let n = self.rows;
        assert_eq!(n, self.cols, "adjugate of non-square matrix");
        let mut adj = Matrix::zeros(n, n);
        if n == 1 {
            adj[(0, 0)] = Integer::ONE;
            return adj;
        }
        for i in 0..n {
            for j in 0..n {
                let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
                let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
                let minor = self.select_rows(&rows).select_cols(&cols).determinant();
                adj[(i, j)] = if (i + j) % 2 == 0 { minor } else { -minor };
            }
        }
        adj
    }

    /// Exact solution `x` of `x · self = v` for square invertible `self`,
    /// returned as numerators over the common denominator `det`.
    pub fn solve_left_rational(&self, v: &[Integer]) -> (Vec<Integer>, Integer) {
        let det = self.determinant();
        assert!(!det.is_zero(), "singular matrix");
        // x = v · A^{-1} = v · adj(A) / det
        (self.adjugate().left_mul_vec(v), det)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Integer;

    fn index(&self, (r, c): (usize, usize)) -> &Integer {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Integer {
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r:?}")?;
        }
        write!(f, "]")
    }
}
