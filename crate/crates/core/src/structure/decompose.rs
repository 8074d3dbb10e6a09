use num_traits::Zero;

use super::straighten::straighten_from;
use super::{
    check_isometric_isomorphism, killing_form, maximal_proper_ideal_containing, require_nilpotent_twist,
    StraightenResult,
};
use crate::algebra::{HomLieAlgebra, StructureTensor};
use crate::constructions::{column_witness, DoubleExtensionData, OneDimExtensionData};
use crate::error::{Error, Result};
use crate::linalg::vector::{self, Vector};
use crate::linalg::{image, kernel, orthogonal_complement, witt_split, Mat, Rat, Subspace};
use crate::report::{CheckReport, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecompositionKind {
    /// `g = Fd ⊕ h ⊕ Fc`.
    OneDimensional,
    /// `g = s ⊕ h ⊕ s*` with `s` a Lie algebra of dimension at least 2.
    Simple,
}

/// The pieces of bracket, twist and form in the adapted basis
/// `s_1..s_q, h_1..h_m, w_1..w_q`.
#[derive(Clone, Debug)]
pub struct Extracted {
    /// Bracket of `s`.
    pub s_bracket: StructureTensor,
    /// `h` with its own product, the twist block `L` and the form block.
    pub h_algebra: HomLieAlgebra,
    /// `s -> h` block of the twist (`m x q`).
    pub f: Mat,
    /// `s -> I^⊥` block of the twist (`q x q`, in the `w` basis).
    pub g: Mat,
    /// `h -> h` block of the twist.
    pub l: Mat,
    /// `h -> I^⊥` block of the twist (`q x m`).
    pub r: Mat,
    /// Action of `s_i` on `h`.
    pub rho: Vec<Mat>,
    /// Action of `s_i` on `I^⊥`.
    pub sigma: Vec<Mat>,
    /// `gamma[t][(a, b)]`: `w_t`-component of `[h_a, h_b]`.
    pub gamma: Vec<Mat>,
    /// `psi[(j, t)] = B(w_t, s_j)`: the pairing `I^⊥ -> s*`.
    pub psi: Mat,
    /// `g_psi(s_i, s_j) = B(g(s_i), s_j)`.
    pub g_psi: Mat,
    /// Killing form of `s`.
    pub killing: Mat,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub kind: DecompositionKind,
    pub ideal: Subspace,
    pub iperp: Subspace,
    pub s: Subspace,
    pub h: Subspace,
    pub s_basis: Vec<Vector>,
    pub h_basis: Vec<Vector>,
    pub w_basis: Vec<Vector>,
    /// Columns `s_basis, h_basis, w_basis`.
    pub change_of_basis: Mat,
    pub straighten: StraightenResult,
    pub extracted: Extracted,
    /// `g_psi = eta K`, for the simple kind.
    pub eta: Option<Rat>,
    /// Set when the simple kind has `g = 0`, so `eta = 0`.
    pub eta_vanishes: bool,
    /// Every identity verified along the way.
    pub checks: CheckReport,
    pub reconstruction: HomLieAlgebra,
    /// Isometric isomorphism from the input onto `reconstruction`.
    pub iso: Mat,
    pub iso_report: CheckReport,
}

fn require(report: &mut CheckReport, name: &str, witness: Option<Witness>) -> Result<()> {
    report.record(name, witness.clone());
    match witness {
        None => Ok(()),
        Some(w) => Err(Error::verification(name, Some(w))),
    }
}

fn flag(failed: bool) -> Option<Witness> {
    failed.then(|| Witness::new(vec![], vec![]))
}

/// Basis name when `v` is a standard basis vector, `fallback` otherwise.
fn label(a: &HomLieAlgebra, v: &[Rat], fallback: String) -> String {
    let nonzero: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
    match nonzero.as_slice() {
        [i] if v[*i] == crate::linalg::one() => a.basis_names()[*i].clone(),
        _ => fallback,
    }
}

/// Decomposes a quadratic Hom-Lie algebra with equivariant nilpotent twist
/// as one of the two double extensions and verifies the result by an
/// isometric isomorphism onto the rebuilt extension.
///
/// Indecomposability is the caller's responsibility. Any failed identity
/// aborts with [`Error::Verification`] naming it.
pub fn decompose(a: &HomLieAlgebra) -> Result<Decomposition> {
    let b = a.form().ok_or(Error::MissingForm)?.clone();
    let axioms = a.check_axioms();
    if !axioms.all_passed() {
        return Err(Error::Hypotheses(axioms));
    }
    require_nilpotent_twist(a)?;
    let n = a.dim();
    let t = a.twist();
    let mut checks = CheckReport::new();

    let ker = kernel(t);
    let im = image(t);
    let ideal = maximal_proper_ideal_containing(a, &ker)?;
    require(&mut checks, "image_in_ideal", flag(!ideal.contains_subspace(&im)))?;
    let iperp = orthogonal_complement(&ideal, &b)?;
    let z = ker.intersection(&im);
    require(&mut checks, "iperp_in_kernel_image", flag(!z.contains_subspace(&iperp)))?;
    require(&mut checks, "kernel_image_in_ideal", flag(!ideal.contains_subspace(&z)))?;

    let witt = witt_split(&b, &iperp)?;
    let st = straighten_from(a, &ideal, witt.s_vectors.clone(), Some(&b))?;
    let s_basis = st.s_basis.clone();
    let w_basis = witt.w_vectors.clone();
    let q = s_basis.len();
    let h = orthogonal_complement(&st.s.sum(&iperp), &b)?;
    let h_basis = h.basis_vectors();
    let m = h_basis.len();
    let kind = if q == 1 { DecompositionKind::OneDimensional } else { DecompositionKind::Simple };

    let mut cols = s_basis.clone();
    cols.extend(h_basis.iter().cloned());
    cols.extend(w_basis.iter().cloned());
    let p = Mat::from_columns(n, &cols);
    let p_inv = p.inverse().ok_or_else(|| Error::verification("adapted_basis", None))?;
    let bt = a.bracket().change_basis(&p, &p_inv);
    let tt = p_inv.mul(t).mul(&p);
    let bb = p.transpose().mul(&b).mul(&p);
    let (hs, ws) = (q, q + m);
    let s_range = 0..hs;
    let h_range = hs..ws;
    let w_range = ws..n;

    require(&mut checks, "block_structure", block_witness(&bt, &tt, q, m))?;

    let s_bracket = {
        let mut sb = StructureTensor::zero(q);
        for i in 0..q {
            for j in (i + 1)..q {
                sb.set(i, j, bt.stored(i, j)[s_range.clone()].to_vec())?;
            }
        }
        sb
    };
    let rho: Vec<Mat> = (0..q).map(|i| Mat::from_fn(m, m, |r, c| bt.coefficient(i, hs + c, hs + r))).collect();
    let sigma: Vec<Mat> = (0..q).map(|i| Mat::from_fn(q, q, |r, c| bt.coefficient(i, ws + c, ws + r))).collect();
    let gamma: Vec<Mat> = (0..q).map(|k| Mat::from_fn(m, m, |r, c| bt.coefficient(hs + r, hs + c, ws + k))).collect();
    let h_bracket = {
        let mut hb = StructureTensor::zero(m);
        for i in 0..m {
            for j in (i + 1)..m {
                hb.set(i, j, bt.stored(hs + i, hs + j)[h_range.clone()].to_vec())?;
            }
        }
        hb
    };
    let f = Mat::from_fn(m, q, |r, c| tt[(hs + r, c)].clone());
    let g = Mat::from_fn(q, q, |r, c| tt[(ws + r, c)].clone());
    let l = Mat::from_fn(m, m, |r, c| tt[(hs + r, hs + c)].clone());
    let r_map = Mat::from_fn(q, m, |r, c| tt[(ws + r, hs + c)].clone());
    let b_h = Mat::from_fn(m, m, |r, c| bb[(hs + r, hs + c)].clone());
    let psi = Mat::from_fn(q, q, |j, k| bb[(ws + k, j)].clone());
    let g_psi = psi.mul(&g).transpose();
    let killing = killing_form(&s_bracket);

    let h_names = h_basis.iter().enumerate().map(|(i, v)| label(a, v, format!("h{}", i + 1))).collect();
    let h_algebra = HomLieAlgebra::new("h", h_names, h_bracket, l.clone(), Some(b_h.clone()))?;
    for check in h_algebra.check_axioms().checks {
        let name = format!("h_{}", check.name);
        require(&mut checks, &name, check.witness().cloned())?;
    }

    let ad_s: Vec<Mat> = (0..q).map(|i| s_bracket.ad_basis(i)).collect();
    // coadjoint: column j is [s_i, xi^j] = -Σ_k c(i,k)^j xi^k
    let coad: Vec<Mat> = (0..q).map(|i| Mat::from_fn(q, q, |k, j| -s_bracket.coefficient(i, k, j))).collect();

    let w = (0..q).find_map(|i| column_witness(&[i], &f.mul(&ad_s[i]).sub(&rho[i].mul(&f))));
    require(&mut checks, "f_intertwines_action", w)?;
    let w = (0..q).find_map(|i| column_witness(&[i], &g.mul(&ad_s[i]).sub(&sigma[i].mul(&g))));
    require(&mut checks, "g_intertwines_dual_action", w)?;
    let w = (0..q).find_map(|i| {
        let ad_f = h_algebra.bracket().ad(&f.column(i));
        column_witness(&[i, 0], &l.mul(&rho[i]).sub(&ad_f))
            .or_else(|| column_witness(&[i, 1], &ad_f.sub(&rho[i].mul(&l))))
    });
    require(&mut checks, "l_rho_commute_with_ad_f", w)?;
    let mut w = None;
    'pairs: for i in 0..q {
        for j in (i + 1)..q {
            let mut rho_ij = Mat::zeros(m, m);
            for (k, c) in s_bracket.stored(i, j).iter().enumerate() {
                rho_ij = rho_ij.add(&rho[k].scale(c));
            }
            if let Some(x) = column_witness(&[i, j], &rho_ij.sub(&rho[i].commutator(&rho[j])).mul(&l)) {
                w = Some(x);
                break 'pairs;
            }
        }
    }
    require(&mut checks, "rho_bracket_on_image_of_l", w)?;
    let w = (0..q).find_map(|i| {
        let ad_f = h_algebra.bracket().ad(&f.column(i));
        h_algebra.derivation_witness(&ad_f).expect("square").map(|x| {
            let mut idx = vec![i];
            idx.extend(x.indices);
            Witness::new(idx, x.defect)
        })
    });
    require(&mut checks, "ad_f_derivation", w)?;
    let w = (0..q).find_map(|i| column_witness(&[i], &psi.mul(&sigma[i]).sub(&coad[i].mul(&psi))));
    require(&mut checks, "psi_intertwines_dual_action", w)?;
    require(&mut checks, "r_matches_f_adjoint", column_witness(&[], &psi.mul(&r_map).sub(&f.transpose().mul(&b_h))))?;
    let w = (0..q).find_map(|j| {
        let mut lhs = Mat::zeros(m, m);
        for (k, gk) in gamma.iter().enumerate() {
            lhs = lhs.add(&gk.scale(&psi[(j, k)]));
        }
        column_witness(&[j], &lhs.sub(&rho[j].transpose().mul(&b_h)))
    });
    require(&mut checks, "gamma_matches_action", w)?;
    require(&mut checks, "g_psi_symmetric", column_witness(&[], &g_psi.sub(&g_psi.transpose())))?;
    require(&mut checks, "g_psi_invariant", invariance_witness(&s_bracket, &g_psi))?;

    let extracted = Extracted {
        s_bracket: s_bracket.clone(),
        h_algebra: h_algebra.clone(),
        f: f.clone(),
        g,
        l,
        r: r_map,
        rho: rho.clone(),
        sigma,
        gamma,
        psi: psi.clone(),
        g_psi: g_psi.clone(),
        killing: killing.clone(),
    };

    let (eta, reconstruction) = match kind {
        DecompositionKind::Simple => {
            let eta = proportionality(&g_psi, &killing);
            require(&mut checks, "g_psi_proportional_to_killing", flag(eta.is_none()))?;
            let eta = eta.expect("checked");
            let s_names = s_basis.iter().enumerate().map(|(i, v)| label(a, v, format!("x{}", i + 1))).collect();
            let d_names = w_basis.iter().enumerate().map(|(i, v)| label(a, v, format!("xi{}", i + 1))).collect();
            let data = DoubleExtensionData::new(h_algebra, s_bracket, killing, f, rho, eta.clone())?
                .with_names(s_names, d_names)?;
            (Some(eta), data.build()?)
        }
        DecompositionKind::OneDimensional => {
            let data = OneDimExtensionData::new(h_algebra, rho[0].clone(), f.column(0), g_psi[(0, 0)].clone())?;
            (None, data.build()?)
        }
    };
    let reconstruction = reconstruction.with_name(format!("{}_rebuilt", a.name()));

    let mut scale = Mat::identity(n);
    for j in 0..q {
        for k in 0..q {
            scale[(ws + j, ws + k)] = psi[(j, k)].clone();
        }
    }
    let iso = scale.mul(&p_inv);
    let iso_report = check_isometric_isomorphism(a, &reconstruction, &iso);
    let first = iso_report.first_failure().map(|c| (c.name.clone(), c.witness().cloned()));
    checks.record("isometric_isomorphism", first.as_ref().map(|(_, w)| w.clone().unwrap_or(Witness::new(vec![], vec![]))));
    if let Some((name, w)) = first {
        return Err(Error::verification(format!("isometric_isomorphism: {name}"), w));
    }
    let _ = w_range;

    Ok(Decomposition {
        kind,
        ideal,
        iperp,
        s: st.s.clone(),
        h,
        s_basis,
        h_basis,
        w_basis,
        change_of_basis: p,
        straighten: st,
        extracted,
        eta_vanishes: eta.as_ref().is_some_and(Zero::is_zero),
        eta,
        checks,
        reconstruction,
        iso,
        iso_report,
    })
}

/// Zero pattern of the bracket and twist in the adapted basis.
fn block_witness(bt: &StructureTensor, tt: &Mat, q: usize, m: usize) -> Option<Witness> {
    let n = bt.dim();
    let (hs, ws) = (q, q + m);
    let block = |i: usize| if i < hs { 0 } else if i < ws { 1 } else { 2 };
    // allowed[x][y]: index ranges the bracket of blocks x and y may touch
    let allowed = |x: usize, y: usize, k: usize| -> bool {
        let (x, y) = (x.min(y), x.max(y));
        match (x, y) {
            (0, 0) => block(k) == 0,
            (0, 1) => block(k) == 1,
            (0, 2) => block(k) == 2,
            (1, 1) => block(k) != 0,
            _ => false,
        }
    };
    for i in 0..n {
        for j in (i + 1)..n {
            let v = bt.stored(i, j);
            if (0..n).any(|k| !v[k].is_zero() && !allowed(block(i), block(j), k)) {
                return Some(Witness::new(vec![i, j], v.to_vec()));
            }
        }
    }
    for c in 0..n {
        let col = tt.column(c);
        let bad = (0..n).any(|k| !col[k].is_zero() && (block(c) == 2 || block(k) == 0));
        if bad {
            return Some(Witness::new(vec![c], col));
        }
    }
    None
}

fn invariance_witness(bracket: &StructureTensor, form: &Mat) -> Option<Witness> {
    let q = bracket.dim();
    for i in 0..q {
        for j in 0..q {
            for k in 0..q {
                let lhs = form.bilinear(&bracket.basis_bracket(i, j), &vector::unit(q, k));
                let rhs = form.bilinear(&vector::unit(q, i), &bracket.basis_bracket(j, k));
                if lhs != rhs {
                    return Some(Witness::new(vec![i, j, k], vec![lhs - rhs]));
                }
            }
        }
    }
    None
}

/// `eta` with `a = eta k`, if one exists.
fn proportionality(a: &Mat, k: &Mat) -> Option<Rat> {
    let eta = match k.entries().iter().position(|x| !x.is_zero()) {
        Some(idx) => &a.entries()[idx] / &k.entries()[idx],
        None => Rat::zero(),
    };
    (a == &k.scale(&eta)).then_some(eta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{example_one_dim, example_sl2};
    use crate::linalg::{frac, int};

    #[test]
    fn example_decomposes_as_simple() {
        let g = example_sl2(int(1));
        let d = decompose(&g).unwrap();
        assert_eq!(d.kind, DecompositionKind::Simple);
        assert_eq!(d.s, Subspace::coordinate(9, 0..3));
        assert_eq!(d.h, Subspace::coordinate(9, 3..6));
        assert_eq!(d.iperp, Subspace::coordinate(9, 6..9));
        assert_eq!(d.eta, Some(frac(-1, 2)));
        assert!(d.extracted.f.is_zero());
        assert!(d.extracted.l.is_zero());
        assert_eq!(d.extracted.rho, crate::constructions::example_sl2_data(int(1)).rho());
        assert!(d.checks.all_passed());
        assert!(d.iso_report.all_passed());
        assert_eq!(d.reconstruction.basis_names(), g.basis_names());
    }

    #[test]
    fn one_dim_example_round_trip() {
        let g = example_one_dim();
        let d = decompose(&g).unwrap();
        assert_eq!(d.kind, DecompositionKind::OneDimensional);
        assert_eq!(d.extracted.rho[0], Mat::from_ints(&[&[0, 1], &[-1, 0]]));
        assert!(d.extracted.f.is_zero());
        assert_eq!(d.extracted.g_psi[(0, 0)], int(1));
        assert_eq!(d.eta, None);
    }

    #[test]
    fn zero_eta_is_flagged() {
        let g = example_sl2(int(0));
        // T = 0, so Ker(T) is everything and no proper ideal contains it.
        assert!(matches!(decompose(&g), Err(Error::NoProperIdeal)));
    }

    #[test]
    fn non_nilpotent_twist_is_rejected() {
        let g = example_sl2(int(1));
        let g = g.clone().with_twist(Mat::identity(9)).unwrap();
        assert!(matches!(decompose(&g), Err(Error::Hypotheses(_))));
    }
}
