use crate::algebra::{HomLieAlgebra, StructureTensor};
use crate::error::{Error, Result};
use crate::linalg::{is_in_orthogonal_algebra, is_nondegenerate, Mat, Subspace};
use crate::report::Witness;

/// `K(e_i, e_j) = trace(ad(e_i) ad(e_j))`.
pub fn killing_form(bracket: &StructureTensor) -> Mat {
    let n = bracket.dim();
    let ads: Vec<Mat> = (0..n).map(|i| bracket.ad_basis(i)).collect();
    Mat::from_fn(n, n, |i, j| ads[i].mul(&ads[j]).trace())
}

/// Dimension test for simplicity of a quadratic Lie algebra: the adjoint
/// maps lie in `o(B)`, span a space of dimension `n(n-1)/2 = dim o(B)`,
/// and the center is trivial.
///
/// Since `n = n(n-1)/2` only for `n = 3`, this accepts exactly the
/// three-dimensional simple algebras.
pub fn is_simple_quadratic(bracket: &StructureTensor, b: &Mat) -> Result<bool> {
    let n = bracket.dim();
    if let Some((i, j, k, d)) = bracket.jacobi_witness() {
        return Err(Error::verification("jacobi", Some(Witness::new(vec![i, j, k], d))));
    }
    let a = HomLieAlgebra::lie("lie", bracket.clone(), Some(b.clone()))?;
    if !is_nondegenerate(b) {
        return Err(Error::Degenerate);
    }
    let report = a.check_axioms();
    if let Some(check) = report.get("invariance").filter(|c| c.failed()) {
        return Err(Error::verification("invariance", check.witness().cloned()));
    }
    if n == 0 {
        return Ok(false);
    }
    let ads: Vec<Mat> = (0..n).map(|i| bracket.ad_basis(i)).collect();
    if !ads.iter().all(|ad| is_in_orthogonal_algebra(b, ad)) {
        return Ok(false);
    }
    let flat: Vec<Vec<_>> = ads.iter().map(|m| m.entries().to_vec()).collect();
    let span_dim = Subspace::span(n * n, &flat).dim();
    Ok(span_dim == n * (n - 1) / 2 && a.center().is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::sl2_table;
    use crate::linalg::int;

    fn direct_sum(a: &StructureTensor, b: &StructureTensor) -> StructureTensor {
        let (p, q) = (a.dim(), b.dim());
        let mut t = StructureTensor::zero(p + q);
        for (i, j, k, c) in a.nonzero_entries() {
            let mut v = t.stored(i, j).to_vec();
            v[k] = c.clone();
            t.set(i, j, v).unwrap();
        }
        for (i, j, k, c) in b.nonzero_entries() {
            let mut v = t.stored(p + i, p + j).to_vec();
            v[p + k] = c.clone();
            t.set(p + i, p + j, v).unwrap();
        }
        t
    }

    #[test]
    fn killing_forms() {
        assert!(killing_form(&StructureTensor::zero(3)).is_zero());
        assert_eq!(killing_form(&sl2_table()), Mat::scalar(3, &int(-2)));
        let mut t = StructureTensor::zero(2);
        t.set_sparse(0, 1, &[(1, int(1))]).unwrap();
        assert_eq!(killing_form(&t), Mat::from_ints(&[&[1, 0], &[0, 0]]));
    }

    #[test]
    fn simplicity_by_dimension() {
        assert!(is_simple_quadratic(&sl2_table(), &Mat::identity(3)).unwrap());
        assert!(!is_simple_quadratic(&StructureTensor::zero(3), &Mat::identity(3)).unwrap());
        let sum = direct_sum(&sl2_table(), &sl2_table());
        assert!(!is_simple_quadratic(&sum, &Mat::identity(6)).unwrap());
    }

    #[test]
    fn rejects_bad_forms() {
        assert!(matches!(is_simple_quadratic(&sl2_table(), &Mat::zeros(3, 3)), Err(Error::Degenerate)));
        let b = Mat::from_ints(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 1]]);
        assert!(is_simple_quadratic(&sl2_table(), &b).is_err());
    }
}
