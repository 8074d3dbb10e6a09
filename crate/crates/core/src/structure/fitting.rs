use super::require_equivariant;
use crate::algebra::HomLieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{image, kernel, vector, Subspace};
use crate::report::Witness;

/// `g = Im(T^ell) ⊕ Ker(T^ell)` at the first exponent where the image
/// chain stabilizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FittingResult {
    pub ell: usize,
    pub image_part: Subspace,
    pub kernel_part: Subspace,
}

/// Fitting splitting of the twist. Both parts are checked to be ideals, the
/// sum is checked to be direct, and the bracket restricted to the image part
/// is checked against the Jacobi identity.
pub fn fitting(a: &HomLieAlgebra) -> Result<FittingResult> {
    require_equivariant(a)?;
    let t = a.twist();
    let mut power = t.clone();
    let mut ell = 1;
    let mut current = image(&power);
    loop {
        let next_power = power.mul(t);
        let next = image(&next_power);
        if next == current {
            break;
        }
        power = next_power;
        current = next;
        ell += 1;
    }
    let image_part = current;
    let kernel_part = kernel(&power);

    if !image_part.intersection(&kernel_part).is_zero() || !image_part.sum(&kernel_part).is_full() {
        return Err(Error::verification("fitting_direct_sum", None));
    }
    for (name, part) in [("image_part_ideal", &image_part), ("kernel_part_ideal", &kernel_part)] {
        if let Some(v) = a.ideal_violation(part)? {
            return Err(Error::NotIdeal(format!("{name}: {v}")));
        }
    }
    let basis = image_part.basis_vectors();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            for k in (j + 1)..basis.len() {
                let d = a.jacobi_defect(&basis[i], &basis[j], &basis[k])?;
                if !vector::is_zero(&d) {
                    return Err(Error::verification("image_part_jacobi", Some(Witness::new(vec![i, j, k], d))));
                }
            }
        }
    }
    Ok(FittingResult { ell, image_part, kernel_part })
}
