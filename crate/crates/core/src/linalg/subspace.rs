use std::fmt;

use num_traits::Zero;

use super::mat::Mat;
use super::vector::{self, Vector};
use super::Rat;

/// A subspace of coordinate space `F^n`, stored as the nonzero rows of a
/// reduced row-echelon matrix. The form is canonical, so two subspaces are
/// equal exactly when their bases are entrywise equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Mat::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Mat::identity(ambient), pivots: (0..ambient).collect() }
    }

    /// Span of arbitrary vectors of length `ambient`.
    pub fn span<V: AsRef<[Rat]>>(ambient: usize, vectors: &[V]) -> Self {
        let rows: Vec<Vector> = vectors
            .iter()
            .map(|v| {
                assert_eq!(v.as_ref().len(), ambient, "vector length must match ambient dimension");
                v.as_ref().to_vec()
            })
            .collect();
        Self::from_row_matrix(Mat::from_rows(ambient, rows).expect("lengths checked above"))
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let vs: Vec<Vector> = indices.into_iter().map(|i| vector::unit(ambient, i)).collect();
        Self::span(ambient, &vs)
    }

    /// Row space of `m`.
    pub fn from_row_matrix(m: Mat) -> Self {
        let ambient = m.cols();
        let (r, pivots) = m.rref();
        let k = pivots.len();
        let basis = r.select(&(0..k).collect::<Vec<_>>(), &(0..ambient).collect::<Vec<_>>());
        Subspace { ambient, basis, pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Basis rows in reduced row-echelon form.
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the echelon basis, or `None` when `v` is not in
    /// the subspace. Because the basis is reduced, the coordinates are just
    /// the entries of `v` at the pivot columns.
    pub fn coordinates(&self, v: &[Rat]) -> Option<Vector> {
        assert_eq!(v.len(), self.ambient);
        let coords: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (i, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                vector::axpy(&mut residual, &-c, self.basis.row(i));
            }
        }
        vector::is_zero(&residual).then_some(coords)
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient);
        (0..other.dim()).all(|i| self.contains(other.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        Subspace::from_row_matrix(self.basis.vstack(&other.basis))
    }

    /// Annihilator under the standard dot product: `{y : <s, y> = 0 for all s}`.
    pub fn annihilator(&self) -> Subspace {
        kernel(&self.basis)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let a = self.annihilator();
        let b = other.annihilator();
        kernel(&a.basis.vstack(&b.basis))
    }

    /// Image of the subspace under the linear map `m` (column convention).
    pub fn map(&self, m: &Mat) -> Subspace {
        assert_eq!(m.cols(), self.ambient);
        let images: Vec<Vector> = (0..self.dim()).map(|i| m.mul_vec(self.basis.row(i))).collect();
        Subspace::span(m.rows(), &images)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}):\n{}", self.dim(), self.ambient, self.basis)
    }
}

/// Result of [`rref_solve`]: one particular solution, if any, and the null
/// space of the coefficient matrix.
#[derive(Clone, Debug)]
pub struct Solution {
    pub particular: Option<Mat>,
    pub kernel: Subspace,
}

/// Solves `A X = B` exactly. Each column of `B` is a right-hand side; a
/// particular solution exists only when every column is consistent. Free
/// variables are set to zero, so the returned solution is deterministic.
pub fn rref_solve(a: &Mat, b: &Mat) -> Solution {
    assert_eq!(a.rows(), b.rows(), "rref_solve: row counts differ");
    let n = a.cols();
    let mut aug = a.hstack(b);
    let pivots = aug.rref_in_place(n);
    let rank = pivots.len();
    let consistent = (rank..aug.rows()).all(|r| (n..aug.cols()).all(|c| aug[(r, c)].is_zero()));
    let particular = consistent.then(|| {
        let mut x = Mat::zeros(n, b.cols());
        for (i, &p) in pivots.iter().enumerate() {
            for c in 0..b.cols() {
                x[(p, c)] = aug[(i, n + c)].clone();
            }
        }
        x
    });
    Solution { particular, kernel: null_space_from_rref(&aug, &pivots, n) }
}

fn null_space_from_rref(r: &Mat, pivots: &[usize], n: usize) -> Subspace {
    let mut vs = Vec::new();
    let mut is_pivot = vec![false; n];
    for &p in pivots {
        is_pivot[p] = true;
    }
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vector::zeros(n);
        v[free] = super::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -r[(i, free)].clone();
        }
        vs.push(v);
    }
    Subspace::span(n, &vs)
}

/// Null space `{x : A x = 0}`.
pub fn kernel(a: &Mat) -> Subspace {
    let (r, pivots) = a.rref();
    null_space_from_rref(&r, &pivots, a.cols())
}

/// Column space of `A`.
pub fn image(a: &Mat) -> Subspace {
    Subspace::from_row_matrix(a.transpose())
}

/// A complement `U` with `S + U` the whole space and `S ∩ U = {0}`, built by
/// adding standard basis vectors in index order whenever they are not yet in
/// the running span.
pub fn complement(s: &Subspace) -> Subspace {
    let n = s.ambient_dim();
    let mut span = s.clone();
    let mut chosen = Vec::new();
    for i in 0..n {
        if span.is_full() {
            break;
        }
        let e = vector::unit(n, i);
        if !span.contains(&e) {
            span = span.sum(&Subspace::span(n, &[e]));
            chosen.push(i);
        }
    }
    Subspace::coordinate(n, chosen)
}
