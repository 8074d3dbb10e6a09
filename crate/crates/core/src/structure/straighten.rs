use num_traits::Zero;

use super::{killing_form, require_equivariant, require_nilpotent_twist};
use crate::algebra::{HomLieAlgebra, StructureTensor};
use crate::error::{Error, Result};
use crate::linalg::vector::{self, Vector};
use crate::linalg::{complement, image, is_in_orthogonal_algebra, kernel, rref_solve, Mat, Rat, Subspace};
use crate::report::Witness;

/// A complement of an ideal closed under the bracket.
#[derive(Clone, Debug)]
pub struct StraightenResult {
    pub s: Subspace,
    /// Corrected basis `y_a + phi(y_a)`, aligned with `initial_basis`.
    pub s_basis: Vec<Vector>,
    /// The starting complement `y_1, ..., y_q`.
    pub initial_basis: Vec<Vector>,
    /// Bracket of the complement modulo the ideal, in the `s_basis` indexing.
    pub quotient_bracket: StructureTensor,
    /// `lambda[a][b]`: component of `[y_a, y_b]` in the ideal.
    pub lambda: Vec<Vec<Vector>>,
    /// `Ker(T) ∩ Im(T)`, where the corrections live.
    pub correction_space: Subspace,
    /// `D_t` with `Λ_t(x, y) = K(D_t x, y)` for the t-th echelon basis
    /// vector of the correction space, `K` the Killing form of the quotient.
    /// Empty when no correction was needed or `K` is degenerate.
    pub derivations: Vec<Mat>,
    /// `x_t` (quotient coordinates) with `D_t = ad(x_t)`, when all exist.
    pub correction_vectors: Option<Vec<Vector>>,
    /// `n x q`; column `a` is `phi(y_a)`.
    pub phi: Mat,
}

/// Closes the index-ordered complement of the maximal ideal `ideal` under
/// the bracket by adding a correction with values in `Ker(T) ∩ Im(T)`.
///
/// Requires an equivariant nilpotent twist. Fails with
/// [`Error::Unsupported`] when the bracket defect leaves `Ker(T) ∩ Im(T)`
/// or no correction exists.
pub fn straighten(a: &HomLieAlgebra, ideal: &Subspace) -> Result<StraightenResult> {
    if let Some(v) = a.ideal_violation(ideal)? {
        return Err(Error::NotIdeal(v.to_string()));
    }
    if ideal.is_full() {
        return Err(Error::NoProperIdeal);
    }
    require_equivariant(a)?;
    require_nilpotent_twist(a)?;
    straighten_from(a, ideal, complement(ideal).basis_vectors(), None)
}

/// As [`straighten`] but from a given complement basis. With `form`, the
/// correction is also required to keep the complement totally isotropic.
pub(crate) fn straighten_from(
    a: &HomLieAlgebra,
    ideal: &Subspace,
    initial: Vec<Vector>,
    form: Option<&Mat>,
) -> Result<StraightenResult> {
    let n = a.dim();
    let q = initial.len();
    let mut frame_cols = initial.clone();
    frame_cols.extend(ideal.basis_vectors());
    let frame = Mat::from_columns(n, &frame_cols);
    let frame_inv = frame
        .inverse()
        .ok_or_else(|| Error::Unsupported("initial vectors do not complement the ideal".into()))?;
    let ideal_basis = ideal.basis_vectors();

    let mut quotient_bracket = StructureTensor::zero(q);
    let mut lambda = vec![vec![vector::zeros(n); q]; q];
    for i in 0..q {
        for j in (i + 1)..q {
            let coords = frame_inv.mul_vec(&a.bracket().bracket(&initial[i], &initial[j]));
            quotient_bracket.set(i, j, coords[..q].to_vec())?;
            let lam = vector::combine(n, &coords[q..], &ideal_basis);
            lambda[j][i] = vector::neg(&lam);
            lambda[i][j] = lam;
        }
    }

    let gram_nonzero = form.is_some_and(|b| {
        (0..q).any(|i| (0..q).any(|j| !b.bilinear(&initial[i], &initial[j]).is_zero()))
    });
    let lambda_nonzero = lambda.iter().flatten().any(|v| !vector::is_zero(v));
    let z = kernel(a.twist()).intersection(&image(a.twist()));

    let mut result = StraightenResult {
        s: Subspace::span(n, &initial),
        s_basis: initial.clone(),
        initial_basis: initial.clone(),
        quotient_bracket,
        lambda,
        correction_space: z.clone(),
        derivations: Vec::new(),
        correction_vectors: None,
        phi: Mat::zeros(n, q),
    };
    if !lambda_nonzero && !gram_nonzero {
        result.correction_vectors = Some(Vec::new());
        verify_closed(a, &result, form)?;
        return Ok(result);
    }

    for (i, row) in result.lambda.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if !z.contains(v) {
                return Err(Error::Unsupported(format!(
                    "bracket defect of complement vectors ({i}, {j}) leaves Ker(T) ∩ Im(T)"
                )));
            }
        }
    }
    let z_basis = z.basis_vectors();
    let dz = z_basis.len();
    for zi in &z_basis {
        for zj in &z_basis {
            if !vector::is_zero(&a.bracket().bracket(zi, zj)) {
                return Err(Error::Unsupported("Ker(T) ∩ Im(T) is not abelian".into()));
            }
        }
    }
    // act[i][t] = coordinates of [y_i, z_t] in the echelon basis of Z
    let mut act = vec![Vec::with_capacity(dz); q];
    for (i, y) in initial.iter().enumerate() {
        for zt in &z_basis {
            let v = a.bracket().bracket(y, zt);
            let coords = z
                .coordinates(&v)
                .ok_or_else(|| Error::Unsupported("Ker(T) ∩ Im(T) is not stable under the bracket".into()))?;
            act[i].push(coords);
        }
    }
    let lambda_coords: Vec<Vec<Vector>> = result
        .lambda
        .iter()
        .map(|row| row.iter().map(|v| z.coordinates(v).expect("checked above")).collect())
        .collect();

    if lambda_nonzero {
        let (ds, xs) = inner_derivations(&result.quotient_bracket, &lambda_coords, dz)?;
        result.derivations = ds;
        result.correction_vectors = xs;
    } else {
        result.correction_vectors = Some(Vec::new());
    }

    // Unknown phi(y_i) = Σ_t u[i * dz + t] z_t.
    let unknowns = q * dz;
    let mut rows: Vec<Vector> = Vec::new();
    let mut rhs: Vec<Rat> = Vec::new();
    for i in 0..q {
        for j in (i + 1)..q {
            let c = result.quotient_bracket.stored(i, j).to_vec();
            for t in 0..dz {
                // Λ_ij + [y_i, phi y_j] - [y_j, phi y_i] - phi([y_i, y_j]_s) = 0
                let mut row = vector::zeros(unknowns);
                for tp in 0..dz {
                    row[j * dz + tp] += &act[i][tp][t];
                    row[i * dz + tp] -= &act[j][tp][t];
                }
                for (k, ck) in c.iter().enumerate() {
                    row[k * dz + t] -= ck;
                }
                rows.push(row);
                rhs.push(-lambda_coords[i][j][t].clone());
            }
        }
    }
    if let Some(b) = form {
        for i in 0..q {
            for j in i..q {
                // B(y_i, phi y_j) + B(phi y_i, y_j) = -B(y_i, y_j)
                let mut row = vector::zeros(unknowns);
                for (tp, zt) in z_basis.iter().enumerate() {
                    row[j * dz + tp] += b.bilinear(&initial[i], zt);
                    row[i * dz + tp] += b.bilinear(zt, &initial[j]);
                }
                rows.push(row);
                rhs.push(-b.bilinear(&initial[i], &initial[j]));
            }
        }
    }
    let system = Mat::from_rows(unknowns, rows)?;
    let rhs = Mat::from_columns(rhs.len(), &[rhs]);
    let sol = rref_solve(&system, &rhs)
        .particular
        .ok_or_else(|| Error::Unsupported("no correction in Ker(T) ∩ Im(T) closes the complement".into()))?;

    let mut phi_cols = Vec::with_capacity(q);
    for (i, y) in initial.iter().enumerate() {
        let coeffs: Vec<Rat> = (0..dz).map(|t| sol[(i * dz + t, 0)].clone()).collect();
        let phi_y = vector::combine(n, &coeffs, &z_basis);
        result.s_basis[i] = vector::add(y, &phi_y);
        phi_cols.push(phi_y);
    }
    result.phi = Mat::from_columns(n, &phi_cols);
    result.s = Subspace::span(n, &result.s_basis);
    verify_closed(a, &result, form)?;
    Ok(result)
}

/// `D_t = K^-1 Λ_t^T` and, when every `D_t` is inner, `x_t` with
/// `ad(x_t) = D_t`.
fn inner_derivations(
    bracket: &StructureTensor,
    lambda_coords: &[Vec<Vector>],
    dz: usize,
) -> Result<(Vec<Mat>, Option<Vec<Vector>>)> {
    let q = bracket.dim();
    let k = killing_form(bracket);
    let Some(k_inv) = k.inverse() else {
        return Ok((Vec::new(), None));
    };
    let ads: Vec<Mat> = (0..q).map(|i| bracket.ad_basis(i)).collect();
    // column k of the system is ad(e_k) flattened
    let ad_system = Mat::from_columns(q * q, &ads.iter().map(|m| m.entries().to_vec()).collect::<Vec<_>>());
    let mut ds = Vec::with_capacity(dz);
    let mut xs = Some(Vec::with_capacity(dz));
    for t in 0..dz {
        let lam_t = Mat::from_fn(q, q, |i, j| lambda_coords[i][j][t].clone());
        let d = k_inv.mul(&lam_t.transpose());
        if !is_in_orthogonal_algebra(&k, &d) {
            return Err(Error::verification("derivation_skew_for_killing", Some(Witness::new(vec![t], vec![]))));
        }
        let target = Mat::from_columns(q * q, &[d.entries().to_vec()]);
        match (rref_solve(&ad_system, &target).particular, xs.as_mut()) {
            (Some(x), Some(list)) => list.push(x.column(0)),
            _ => xs = None,
        }
        ds.push(d);
    }
    Ok((ds, xs))
}

fn verify_closed(a: &HomLieAlgebra, r: &StraightenResult, form: Option<&Mat>) -> Result<()> {
    let q = r.s_basis.len();
    for i in 0..q {
        for j in (i + 1)..q {
            let v = a.bracket().bracket(&r.s_basis[i], &r.s_basis[j]);
            if !r.s.contains(&v) {
                return Err(Error::verification("complement_closed", Some(Witness::new(vec![i, j], v))));
            }
        }
    }
    if let Some(b) = form {
        for i in 0..q {
            for j in i..q {
                let v = b.bilinear(&r.s_basis[i], &r.s_basis[j]);
                if !v.is_zero() {
                    return Err(Error::verification("complement_isotropic", Some(Witness::new(vec![i, j], vec![v]))));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{example_one_dim, example_sl2};
    use crate::linalg::int;

    /// The example rewritten in the basis `x1 + xi2, x2, x3, v, xi`.
    fn tilted() -> HomLieAlgebra {
        let g = example_sl2(int(1));
        let mut p = Mat::identity(9);
        p[(7, 0)] = int(1);
        let p_inv = p.inverse().unwrap();
        let bracket = g.bracket().change_basis(&p, &p_inv);
        let twist = p_inv.mul(g.twist()).mul(&p);
        let form = p.transpose().mul(g.form().unwrap()).mul(&p);
        HomLieAlgebra::new("tilted", g.basis_names().to_vec(), bracket, twist, Some(form)).unwrap()
    }

    #[test]
    fn closed_complement_needs_no_correction() {
        let g = example_sl2(int(1));
        let r = straighten(&g, &Subspace::coordinate(9, 3..9)).unwrap();
        assert_eq!(r.s, Subspace::coordinate(9, 0..3));
        assert!(r.phi.is_zero());
    }

    #[test]
    fn tilted_complement_is_corrected() {
        let g = tilted();
        let ideal = Subspace::coordinate(9, 3..9);
        let r = straighten(&g, &ideal).unwrap();
        assert!(r.lambda.iter().flatten().any(|v| !vector::is_zero(v)));
        assert!(!r.phi.is_zero());
        assert!(r.s.intersection(&ideal).is_zero());
        assert_eq!(r.s.dim(), 3);
        let xs = r.correction_vectors.expect("sl2 derivations are inner");
        for (d, x) in r.derivations.iter().zip(&xs) {
            assert_eq!(&r.quotient_bracket.ad(x), d);
        }
    }

    #[test]
    fn one_dimensional_quotient() {
        let g = example_one_dim();
        let r = straighten(&g, &Subspace::coordinate(4, 1..4)).unwrap();
        assert_eq!(r.s, Subspace::coordinate(4, [0]));
    }
}
