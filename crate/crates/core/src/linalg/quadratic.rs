//! Symmetric bilinear forms: orthogonality, Witt splitting, the flat map.

use super::mat::Mat;
use super::subspace::{complement, kernel, Subspace};
use super::vector::{self, Vector};
use super::frac;
use crate::error::{Error, Result};

fn require_symmetric(b: &Mat) -> Result<()> {
    if !b.is_square() {
        return Err(Error::NotSquare { rows: b.rows(), cols: b.cols() });
    }
    if !b.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(())
}

pub fn is_nondegenerate(b: &Mat) -> bool {
    b.is_square() && b.rank() == b.rows()
}

/// `{w : B(w, s) = 0 for all s in S}`.
pub fn orthogonal_complement(s: &Subspace, b: &Mat) -> Result<Subspace> {
    require_symmetric(b)?;
    if b.rows() != s.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: s.ambient_dim(), found: b.rows() });
    }
    Ok(kernel(&s.basis().mul(b)))
}

/// Matrix of `x -> B(x, .)` in the dual basis. For a symmetric form this is
/// `B` itself; in general it is `B^T`.
pub fn flat_map(b: &Mat) -> Result<Mat> {
    if !b.is_square() {
        return Err(Error::NotSquare { rows: b.rows(), cols: b.cols() });
    }
    Ok(b.transpose())
}

/// `S^T B + B S = 0`, i.e. `S` is skew-adjoint for `B`.
pub fn is_in_orthogonal_algebra(b: &Mat, s: &Mat) -> bool {
    b.is_square() && s.is_square() && b.rows() == s.rows() && s.transpose().mul(b).add(&b.mul(s)).is_zero()
}

pub fn is_totally_isotropic(b: &Mat, w: &Subspace) -> bool {
    w.basis().mul(b).mul(&w.basis().transpose()).is_zero()
}

/// Witt splitting of a nondegenerate quadratic space relative to a totally
/// isotropic subspace `W`.
#[derive(Clone, Debug)]
pub struct WittSplit {
    /// Isotropic partner of `W`.
    pub s: Subspace,
    /// Nondegenerate part, `(S + W)^⊥`.
    pub h: Subspace,
    /// Basis `s_i` of `S` with `B(s_i, w_j) = δ_ij` against `w_vectors`.
    pub s_vectors: Vec<Vector>,
    /// The echelon basis of `W` the pairing refers to.
    pub w_vectors: Vec<Vector>,
}

/// Splits the space as `S ⊕ H ⊕ W` with `S` totally isotropic, `B` pairing
/// `S` with `W` by a dual basis, and `H = (S ⊕ W)^⊥` nondegenerate.
///
/// A first partner `S'` is taken inside the deterministic complement of
/// `W^⊥` and normalized so that `B(s'_i, w_j) = δ_ij`; then
/// `s_i = s'_i - 1/2 Σ_j B(s'_i, s'_j) w_j` kills `B` on `S`.
pub fn witt_split(b: &Mat, w: &Subspace) -> Result<WittSplit> {
    require_symmetric(b)?;
    let n = b.rows();
    if w.ambient_dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: w.ambient_dim() });
    }
    if !is_nondegenerate(b) {
        return Err(Error::Degenerate);
    }
    if !is_totally_isotropic(b, w) {
        return Err(Error::NotIsotropic);
    }
    let w_vectors = w.basis_vectors();
    let k = w_vectors.len();
    let w_perp = orthogonal_complement(w, b)?;
    let c = complement(&w_perp).basis_vectors();
    debug_assert_eq!(c.len(), k);

    // pairing[l][j] = B(c_l, w_j) is invertible because B is nondegenerate.
    let pairing = Mat::from_fn(k, k, |l, j| b.bilinear(&c[l], &w_vectors[j]));
    let inv = pairing.inverse().ok_or(Error::Degenerate)?;
    let primed: Vec<Vector> = (0..k).map(|i| vector::combine(n, inv.row(i), &c)).collect();

    let half = frac(1, 2);
    let s_vectors: Vec<Vector> = (0..k)
        .map(|i| {
            let mut s = primed[i].clone();
            for j in 0..k {
                let coeff = -(&half * b.bilinear(&primed[i], &primed[j]));
                vector::axpy(&mut s, &coeff, &w_vectors[j]);
            }
            s
        })
        .collect();

    let s = Subspace::span(n, &s_vectors);
    let h = orthogonal_complement(&s.sum(w), b)?;
    Ok(WittSplit { s, h, s_vectors, w_vectors })
}

/// Gram matrix `B(v_i, v_j)` of a family of vectors.
pub fn gram(b: &Mat, vs: &[Vector]) -> Mat {
    Mat::from_fn(vs.len(), vs.len(), |i, j| b.bilinear(&vs[i], &vs[j]))
}
