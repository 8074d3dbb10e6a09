use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use super::vector::{self, Vector};
use super::{format_rat, int, Rat};
use crate::error::{Error, Result};

/// Dense row-major matrix of exact rationals.
///
/// Read as a linear map, column `c` holds the coordinates of the image of the
/// `c`-th basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &Rat) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    /// Builds from explicit rows; all rows must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vector>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
            }
            data.extend(row);
        }
        Ok(Mat { rows: n, cols, data })
    }

    /// Builds a matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        Self::from_fn(rows, columns.len(), |r, c| columns[c][r].clone())
    }

    /// Convenience constructor from small integers, mostly for tests.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_fn(rows.len(), cols, |r, c| int(rows[r][c]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column_vectors(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Rat] {
        &self.data
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn is_zero(&self) -> bool {
        vector::is_zero(&self.data)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Mat::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows).map(|r| vector::dot(self.row(r), v)).collect()
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat { rows: self.rows, cols: self.cols, data: vector::add(&self.data, &other.data) }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat { rows: self.rows, cols: self.cols, data: vector::sub(&self.data, &other.data) }
    }

    pub fn scale(&self, c: &Rat) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: vector::scale(c, &self.data) }
    }

    pub fn neg(&self) -> Mat {
        self.scale(&-Rat::one())
    }

    /// `self * other - other * self`
    pub fn commutator(&self, other: &Mat) -> Mat {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn pow(&self, k: u32) -> Mat {
        assert!(self.is_square());
        let mut out = Mat::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// `B(x, y) = x^T B y`
    pub fn bilinear(&self, x: &[Rat], y: &[Rat]) -> Rat {
        vector::dot(x, &self.mul_vec(y))
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols)).fold(Rat::zero(), |acc, i| acc + &self[(i, i)])
    }

    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        Mat::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                other[(r, c - self.cols)].clone()
            }
        })
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Submatrix of the given rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Mat {
        Mat::from_fn(rows.len(), cols.len(), |r, c| self[(rows[r], cols[c])].clone())
    }

    /// Reduced row-echelon form and the pivot column of each nonzero row.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place(self.cols);
        (m, pivots)
    }

    /// Gauss-Jordan elimination choosing pivots only among the first
    /// `pivot_cols` columns; the remaining columns are carried along.
    pub(crate) fn rref_in_place(&mut self, pivot_cols: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..pivot_cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self[(row, col)].recip();
            for c in col..self.cols {
                let v = &self[(row, c)] * &inv;
                self[(row, c)] = v;
            }
            for r in 0..self.rows {
                if r == row || self[(r, col)].is_zero() {
                    continue;
                }
                let factor = self[(r, col)].clone();
                for c in col..self.cols {
                    if self[(row, c)].is_zero() {
                        continue;
                    }
                    let delta = &factor * &self[(row, c)];
                    self[(r, c)] -= delta;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = self.hstack(&Mat::identity(n));
        let pivots = aug.rref_in_place(n);
        if pivots.len() < n {
            return None;
        }
        Some(aug.select(&(0..n).collect::<Vec<_>>(), &(n..2 * n).collect::<Vec<_>>()))
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = Rat;

    fn index(&self, (r, c): (usize, usize)) -> &Rat {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rat {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(format_rat).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
