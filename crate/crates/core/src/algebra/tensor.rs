use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::vector::{self, Vector};
use crate::linalg::{Mat, Rat};

/// Structure constants of a skew-symmetric bilinear product.
///
/// Only the brackets `[e_i, e_j]` with `i < j` are stored. `[e_j, e_i]` is
/// read as the negative and `[e_i, e_i]` as zero, so a non-skew table cannot
/// be represented.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StructureTensor {
    dim: usize,
    // pair (i, j), i < j, at index pair_index(i, j); each entry has length dim
    table: Vec<Vector>,
}

impl StructureTensor {
    pub fn zero(dim: usize) -> Self {
        let pairs = dim * dim.saturating_sub(1) / 2;
        StructureTensor { dim, table: vec![vector::zeros(dim); pairs] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn pair_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.dim);
        // rows 0..i contribute (dim-1) + (dim-2) + ... + (dim-i) pairs
        i * (2 * self.dim - i - 1) / 2 + (j - i - 1)
    }

    /// Sets `[e_i, e_j]` for `i < j`.
    pub fn set(&mut self, i: usize, j: usize, value: Vector) -> Result<()> {
        if i >= j || j >= self.dim {
            return Err(Error::BadBracketIndex { i, j });
        }
        if value.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: value.len() });
        }
        let idx = self.pair_index(i, j);
        self.table[idx] = value;
        Ok(())
    }

    /// Sets `[e_i, e_j] = Σ c e_k` from sparse `(k, c)` terms; `i < j`.
    pub fn set_sparse(&mut self, i: usize, j: usize, terms: &[(usize, Rat)]) -> Result<()> {
        let mut v = vector::zeros(self.dim);
        for (k, c) in terms {
            if *k >= self.dim {
                return Err(Error::BadBracketIndex { i, j });
            }
            v[*k] += c;
        }
        self.set(i, j, v)
    }

    /// Stored value `[e_i, e_j]` for `i < j`.
    pub fn stored(&self, i: usize, j: usize) -> &[Rat] {
        &self.table[self.pair_index(i, j)]
    }

    /// `[e_i, e_j]` for any ordered pair.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vector {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Less => self.stored(i, j).to_vec(),
            Ordering::Greater => vector::neg(self.stored(j, i)),
            Ordering::Equal => vector::zeros(self.dim),
        }
    }

    /// Coefficient of `e_k` in `[e_i, e_j]`.
    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> Rat {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Less => self.stored(i, j)[k].clone(),
            Ordering::Greater => -self.stored(j, i)[k].clone(),
            Ordering::Equal => Rat::zero(),
        }
    }

    /// Bilinear extension to arbitrary coordinate vectors.
    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Vector {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vector::zeros(self.dim);
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                // x_i y_j [e_i, e_j] + x_j y_i [e_j, e_i]
                let c = &x[i] * &y[j] - &x[j] * &y[i];
                if !c.is_zero() {
                    vector::axpy(&mut out, &c, self.stored(i, j));
                }
            }
        }
        out
    }

    /// Matrix of `y -> [x, y]`.
    pub fn ad(&self, x: &[Rat]) -> Mat {
        let n = self.dim;
        let mut m = Mat::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                let col = self.basis_bracket(i, j);
                for (k, c) in col.iter().enumerate() {
                    if !c.is_zero() {
                        m[(k, j)] += xi * c;
                    }
                }
            }
        }
        m
    }

    /// `ad(e_i)`.
    pub fn ad_basis(&self, i: usize) -> Mat {
        let n = self.dim;
        let cols: Vec<Vector> = (0..n).map(|j| self.basis_bracket(i, j)).collect();
        Mat::from_columns(n, &cols)
    }

    /// Nonzero stored entries as `(i, j, k, c)` with `i < j`, in index order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Rat)> + '_ {
        (0..self.dim).flat_map(move |i| {
            ((i + 1)..self.dim).flat_map(move |j| {
                self.stored(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(move |(k, c)| (i, j, k, c))
            })
        })
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|v| vector::is_zero(v))
    }

    /// Classical Jacobiator `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]`.
    pub fn jacobiator(&self, x: &[Rat], y: &[Rat], z: &[Rat]) -> Vector {
        let a = self.bracket(x, &self.bracket(y, z));
        let b = self.bracket(y, &self.bracket(z, x));
        let c = self.bracket(z, &self.bracket(x, y));
        vector::add(&vector::add(&a, &b), &c)
    }

    /// First basis triple `i < j < k` where the Jacobi identity fails.
    pub fn jacobi_witness(&self) -> Option<(usize, usize, usize, Vector)> {
        let n = self.dim;
        let e = |i| vector::unit(n, i);
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let d = self.jacobiator(&e(i), &e(j), &e(k));
                    if !vector::is_zero(&d) {
                        return Some((i, j, k, d));
                    }
                }
            }
        }
        None
    }

    pub fn is_lie(&self) -> bool {
        self.jacobi_witness().is_none()
    }

    /// Applies a linear map to every structure constant: the product
    /// `(x, y) -> M [x, y]`.
    pub fn compose_left(&self, m: &Mat) -> StructureTensor {
        assert_eq!((m.rows(), m.cols()), (self.dim, self.dim));
        let table = self.table.iter().map(|v| m.mul_vec(v)).collect();
        StructureTensor { dim: self.dim, table }
    }

    /// Structure constants in a new basis. `p` has the new basis vectors as
    /// columns (in old coordinates) and `p_inv` is its inverse.
    pub fn change_basis(&self, p: &Mat, p_inv: &Mat) -> StructureTensor {
        let n = self.dim;
        let cols = p.column_vectors();
        let mut out = StructureTensor::zero(n);
        for i in 0..n {
            for j in (i + 1)..n {
                let v = p_inv.mul_vec(&self.bracket(&cols[i], &cols[j]));
                out.set(i, j, v).expect("indices are ordered");
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    #[test]
    fn rejects_unordered_indices() {
        let mut t = StructureTensor::zero(3);
        assert!(t.set(1, 1, vector::zeros(3)).is_err());
        assert!(t.set(2, 1, vector::zeros(3)).is_err());
        assert!(t.set(0, 3, vector::zeros(3)).is_err());
    }

    #[test]
    fn pair_index_is_a_bijection() {
        let t = StructureTensor::zero(6);
        let mut seen = Vec::new();
        for i in 0..6 {
            for j in (i + 1)..6 {
                seen.push(t.pair_index(i, j));
            }
        }
        assert_eq!(seen, (0..15).collect::<Vec<_>>());
    }

    #[test]
    fn skew_evaluation() {
        let mut t = StructureTensor::zero(3);
        t.set_sparse(0, 1, &[(2, int(1))]).unwrap();
        assert_eq!(t.basis_bracket(1, 0), vec![int(0), int(0), int(-1)]);
        let x = vec![int(2), int(-1), int(5)];
        assert!(vector::is_zero(&t.bracket(&x, &x)));
        assert_eq!(t.ad(&vector::unit(3, 0)), t.ad_basis(0));
    }
}
