//! The Lie algebra `(g, T∘[.,.])` attached to an equivariant Hom-Lie algebra,
//! its `Ker(T)`-valued 2-cocycle and the map recovering the original bracket.

use num_traits::Zero;

use crate::algebra::HomLieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::vector::{self, Vector};
use crate::linalg::{complement, image, kernel, orthogonal_complement, rref_solve, Mat, Rat, Subspace};
use crate::report::{CheckReport, Witness};
use crate::structure::{require_equivariant, require_nilpotent_twist};

/// `[x, y]_Lie = T([x, y])` with identity twist and the same form.
pub fn lieify(a: &HomLieAlgebra) -> Result<HomLieAlgebra> {
    require_equivariant(a)?;
    let n = a.dim();
    HomLieAlgebra::new(
        format!("{}_lie", a.name()),
        a.basis_names().to_vec(),
        a.bracket().compose_left(a.twist()),
        Mat::identity(n),
        a.form().cloned(),
    )
}

/// Jacobi for the Lie bracket, `[Ker(T), g]_Lie = 0`, and the termwise
/// inclusions `g_Lie^k ⊆ g^k` and `g_Lie^k ⊆ Im(T^(k-1))` (series indexed
/// from `g^1 = g`). Nilpotency of the Lie bracket is asserted when the
/// Hom-Lie algebra is nilpotent and skipped otherwise.
pub fn nilpotency_transfer_check(a: &HomLieAlgebra) -> CheckReport {
    let mut report = CheckReport::new();
    let lie = match lieify(a) {
        Ok(lie) => lie,
        Err(_) => {
            report.record("equivariance", a.equivariance_witness());
            return report;
        }
    };
    let n = a.dim();
    report.record(
        "lie_jacobi",
        lie.bracket().jacobi_witness().map(|(i, j, k, v)| Witness::new(vec![i, j, k], v)),
    );
    let mut central = None;
    'outer: for z in kernel(a.twist()).basis_vectors() {
        for j in 0..n {
            let v = lie.bracket().bracket(&z, &vector::unit(n, j));
            if !vector::is_zero(&v) {
                central = Some(Witness::new(vec![j], v));
                break 'outer;
            }
        }
    }
    report.record("kernel_central", central);

    let hom = a.lower_central_series();
    let lie_series = lie.lower_central_series();
    let len = hom.len().max(lie_series.len());
    let term = |s: &[Subspace], k: usize| s.get(k).unwrap_or_else(|| s.last().expect("nonempty")).clone();
    let mut inclusion = None;
    let mut in_image = None;
    let mut power = Mat::identity(n);
    for k in 0..len {
        let l = term(&lie_series, k);
        if inclusion.is_none() && !term(&hom, k).contains_subspace(&l) {
            inclusion = Some(Witness::new(vec![k + 1], vec![]));
        }
        if in_image.is_none() && !image(&power).contains_subspace(&l) {
            in_image = Some(Witness::new(vec![k + 1], vec![]));
        }
        power = power.mul(a.twist());
    }
    report.record("series_inclusion", inclusion);
    report.record("series_in_twist_image", in_image);
    if a.is_nilpotent().is_some() {
        report.record("lie_nilpotent", lie.is_nilpotent().is_none().then(|| Witness::new(vec![], vec![])));
    } else {
        report.skip("lie_nilpotent", "Hom-Lie algebra is not nilpotent");
    }
    report
}

/// `theta(x, y) = Σ_k B([a_k, x], y) v_k` for a basis `a_k` of a complement
/// of `Im(T)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CocycleData {
    /// `dim Ker(T)`.
    pub d: usize,
    pub a_basis: Vec<Vector>,
    /// `theta[k][(i, j)] = B([a_k, e_i], e_j)`.
    pub theta: Vec<Mat>,
}

impl CocycleData {
    /// `theta(x, y)` as a vector of length `d`.
    pub fn eval(&self, x: &[Rat], y: &[Rat]) -> Vector {
        self.theta.iter().map(|t| t.bilinear(x, y)).collect()
    }
}

fn require_quadratic(a: &HomLieAlgebra) -> Result<Mat> {
    let b = a.form().ok_or(Error::MissingForm)?.clone();
    let report = a.check_axioms();
    if !report.all_passed() {
        return Err(Error::Hypotheses(report));
    }
    require_nilpotent_twist(a)?;
    Ok(b)
}

pub fn cocycle_theta(a: &HomLieAlgebra) -> Result<CocycleData> {
    let b = require_quadratic(a)?;
    let a_basis = complement(&image(a.twist())).basis_vectors();
    let theta: Vec<Mat> = a_basis.iter().map(|ak| a.bracket().ad(ak).transpose().mul(&b)).collect();
    for (k, t) in theta.iter().enumerate() {
        if let Some(w) = crate::constructions::column_witness(&[k], &t.add(&t.transpose())) {
            return Err(Error::verification("theta_skew", Some(w)));
        }
    }
    Ok(CocycleData { d: a_basis.len(), a_basis, theta })
}

/// First basis triple `i < j < k` where the cyclic sum
/// `theta([x,y]_Lie, z) + theta([y,z]_Lie, x) + theta([z,x]_Lie, y)` is nonzero.
pub fn cocycle_witness(a: &HomLieAlgebra, c: &CocycleData) -> Option<Witness> {
    let n = a.dim();
    let lie = a.bracket().compose_left(a.twist());
    let e = |i| vector::unit(n, i);
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let mut sum = c.eval(&lie.basis_bracket(i, j), &e(k));
                sum = vector::add(&sum, &c.eval(&lie.basis_bracket(j, k), &e(i)));
                sum = vector::add(&sum, &c.eval(&lie.basis_bracket(k, i), &e(j)));
                if !vector::is_zero(&sum) {
                    return Some(Witness::new(vec![i, j, k], sum));
                }
            }
        }
    }
    None
}

pub fn is_cocycle(a: &HomLieAlgebra, c: &CocycleData) -> bool {
    cocycle_witness(a, c).is_none()
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).collect()
}

/// A `d x n` matrix `mu` with `theta(x, y) = mu([x, y]_Lie)`, if one exists.
pub fn is_coboundary(a: &HomLieAlgebra, c: &CocycleData) -> Option<Mat> {
    let n = a.dim();
    let lie = a.bracket().compose_left(a.twist());
    let ps = pairs(n);
    // row p: [e_i, e_j]_Lie; right-hand side row p: theta(e_i, e_j)
    let system = Mat::from_fn(ps.len(), n, |p, r| lie.coefficient(ps[p].0, ps[p].1, r));
    let rhs = Mat::from_fn(ps.len(), c.d, |p, k| c.theta[k][(ps[p].0, ps[p].1)].clone());
    rref_solve(&system, &rhs).particular.map(|x| x.transpose())
}

/// How a solution of the bracket system was chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selection {
    /// `h(T w, theta-part of w) = w` built from `g = a^⊥ ⊕ Ker(T)`.
    Split,
    /// Row-reduced particular solution, free variables zero.
    Particular,
}

/// A map `h: g ⊕ V -> g` with `[x, y] = h([x, y]_Lie + theta(x, y))`.
#[derive(Clone, Debug)]
pub struct RecoveryMap {
    /// `n x (n + d)`; the last `d` columns are the images of `v_1..v_d`.
    pub matrix: Mat,
    pub selection: Selection,
    /// `bracket_identity`, `v_image_is_kernel`, `g_image_is_a_perp`,
    /// `kernel_is_a`.
    pub conditions: CheckReport,
}

/// Solves the bracket identity for `h` and evaluates each side condition on
/// the chosen solution. The candidate sending `(T w, 0)` to the `a^⊥` part of
/// `w`, `(0, theta_k-coordinates of w)` to its `Ker(T)` part and `a` to zero
/// is preferred when it solves the system; otherwise the row-reduced
/// particular solution is used.
pub fn recover_h(a: &HomLieAlgebra, c: &CocycleData) -> Result<RecoveryMap> {
    let b = require_quadratic(a)?;
    let n = a.dim();
    let d = c.d;
    let w = n + d;
    let t = a.twist();
    let lie = a.bracket().compose_left(t);
    let idx = |r: usize, col: usize| r * w + col;

    let ps = pairs(n);
    let inputs: Vec<Vector> = ps
        .iter()
        .map(|&(i, j)| {
            let mut u = lie.basis_bracket(i, j);
            u.extend(c.eval(&vector::unit(n, i), &vector::unit(n, j)));
            u
        })
        .collect();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    let mut offsets = Vec::new();
    for (p, &(i, j)) in ps.iter().enumerate() {
        let target = a.bracket().basis_bracket(i, j);
        for (r, value) in target.into_iter().enumerate() {
            let mut row = vector::zeros(n * w);
            for (col, x) in inputs[p].iter().enumerate() {
                row[idx(r, col)] = x.clone();
            }
            rows.push(row);
            rhs.push(value);
        }
        offsets.push(rows.len());
    }
    if solve(&rows, &rhs, n * w).is_none() {
        // shortest infeasible prefix of pairs
        let p = (0..ps.len())
            .find(|&p| solve(&rows[..offsets[p]], &rhs[..offsets[p]], n * w).is_none())
            .expect("full system is infeasible");
        let (i, j) = ps[p];
        return Err(Error::verification(
            "recovery_bracket_system",
            Some(Witness::new(vec![i, j], a.bracket().basis_bracket(i, j))),
        ));
    }

    let satisfies = |h: &Mat| {
        ps.iter().enumerate().all(|(p, &(i, j))| h.mul_vec(&inputs[p]) == a.bracket().basis_bracket(i, j))
    };
    let (matrix, selection) = match canonical_recovery(a, c, &b)? {
        Some(h) if satisfies(&h) => (h, Selection::Split),
        _ => {
            let x = solve(&rows, &rhs, n * w).expect("checked above");
            (Mat::from_fn(n, w, |r, col| x[idx(r, col)].clone()), Selection::Particular)
        }
    };

    let mut conditions = CheckReport::new();
    let mut bad = None;
    for (p, &(i, j)) in ps.iter().enumerate() {
        let diff = vector::sub(&matrix.mul_vec(&inputs[p]), &a.bracket().basis_bracket(i, j));
        if !vector::is_zero(&diff) {
            bad = Some(Witness::new(vec![i, j], diff));
            break;
        }
    }
    conditions.record("bracket_identity", bad);
    let flag = |ok: bool| (!ok).then(|| Witness::new(vec![], vec![]));
    let v_part = Mat::from_fn(n, d, |r, k| matrix[(r, n + k)].clone());
    let g_part = Mat::from_fn(n, n, |r, col| matrix[(r, col)].clone());
    conditions.record("v_image_is_kernel", flag(image(&v_part) == kernel(t)));
    let a_span = Subspace::span(n, &c.a_basis);
    conditions.record("g_image_is_a_perp", flag(image(&g_part) == orthogonal_complement(&a_span, &b)?));
    let a_embedded: Vec<Vector> = c
        .a_basis
        .iter()
        .map(|ak| {
            let mut v = ak.clone();
            v.extend(vector::zeros(d));
            v
        })
        .collect();
    conditions.record("kernel_is_a", flag(kernel(&matrix) == Subspace::span(w, &a_embedded)));
    Ok(RecoveryMap { matrix, selection, conditions })
}

fn canonical_recovery(a: &HomLieAlgebra, c: &CocycleData, b: &Mat) -> Result<Option<Mat>> {
    let n = a.dim();
    let t = a.twist();
    let a_perp = orthogonal_complement(&Subspace::span(n, &c.a_basis), b)?;
    let ker = kernel(t);
    let mut cols = a_perp.basis_vectors();
    let split = cols.len();
    cols.extend(ker.basis_vectors());
    if cols.len() != n {
        return Ok(None);
    }
    let q = Mat::from_columns(n, &cols);
    let Some(q_inv) = q.inverse() else { return Ok(None) };
    let keep = Mat::from_fn(n, n, |r, col| if r == col && r < split { crate::linalg::one() } else { Rat::zero() });
    let p1 = q.mul(&keep).mul(&q_inv);
    let p2 = Mat::identity(n).sub(&p1);
    // H_g [A | T] = [0 | P1] and H_V M = P2 with M the rows a_k^T B
    let lhs = Mat::from_columns(n, &c.a_basis).hstack(t);
    let rhs = Mat::zeros(n, c.d).hstack(&p1);
    let Some(hg) = rref_solve(&lhs.transpose(), &rhs.transpose()).particular else { return Ok(None) };
    let m = Mat::from_columns(n, &c.a_basis.iter().map(|ak| b.mul_vec(ak)).collect::<Vec<_>>()).transpose();
    let Some(hv) = rref_solve(&m.transpose(), &p2.transpose()).particular else { return Ok(None) };
    Ok(Some(hg.transpose().hstack(&hv.transpose())))
}

fn solve(rows: &[Vector], rhs: &[Rat], unknowns: usize) -> Option<Vector> {
    let a = Mat::from_rows(unknowns, rows.to_vec()).expect("row lengths agree");
    let b = Mat::from_fn(rhs.len(), 1, |r, _| rhs[r].clone());
    rref_solve(&a, &b).particular.map(|x| x.column(0))
}

/// `∩ Ker(ad a_j) = 0`, trivial center and `g = [g, g]`, evaluated when
/// `theta` is not a coboundary; skipped otherwise.
pub fn center_triviality_consequences(a: &HomLieAlgebra) -> CheckReport {
    const NAMES: [&str; 3] = ["ad_a_kernels_trivial", "center_trivial", "perfect"];
    let mut report = CheckReport::new();
    let c = match cocycle_theta(a) {
        Ok(c) => c,
        Err(e) => {
            for name in NAMES {
                report.skip(name, e.to_string());
            }
            return report;
        }
    };
    if is_coboundary(a, &c).is_some() {
        for name in NAMES {
            report.skip(name, "theta is a coboundary");
        }
        return report;
    }
    let n = a.dim();
    let stacked = c.a_basis.iter().fold(Mat::zeros(0, n), |acc, ak| acc.vstack(&a.bracket().ad(ak)));
    let first = |s: Subspace| s.basis_vectors().into_iter().next().map(|v| Witness::new(vec![], v));
    report.record(NAMES[0], first(kernel(&stacked)));
    report.record(NAMES[1], first(a.center()));
    report.record(NAMES[2], first(complement(&a.derived_subalgebra())));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::StructureTensor;
    use crate::constructions::{example_one_dim, example_sl2};
    use crate::linalg::int;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn abelian(n: usize) -> HomLieAlgebra {
        HomLieAlgebra::lie("ab", StructureTensor::zero(n), Some(Mat::identity(n)))
            .unwrap()
            .with_twist(Mat::zeros(n, n))
            .unwrap()
    }

    #[test]
    fn lie_bracket_of_example() {
        let lie = lieify(&example_sl2(int(1))).unwrap();
        assert_eq!(lie.bracket().basis_bracket(0, 1), vector::unit(9, 8));
        assert_eq!(lie.bracket().basis_bracket(1, 2), vector::unit(9, 6));
        assert_eq!(lie.bracket().basis_bracket(2, 0), vector::unit(9, 7));
        assert!(lie.bracket().is_lie());
        assert!(lie.check_axioms().all_passed());
        assert!(lieify(&abelian(3)).unwrap().bracket().is_abelian());
    }

    #[test]
    fn transfer_on_example() {
        let g = example_sl2(int(1));
        let report = nilpotency_transfer_check(&g);
        assert!(report.all_passed(), "{report}");
        let series = lieify(&g).unwrap().lower_central_series();
        assert_eq!(series[1], Subspace::coordinate(9, 6..9));
        assert!(series[2].is_zero());
        assert!(lieify(&example_one_dim()).unwrap().bracket().is_abelian());
    }

    #[test]
    fn theta_of_example() {
        let g = example_sl2(int(1));
        let c = cocycle_theta(&g).unwrap();
        assert_eq!(c.d, 6);
        assert_eq!(Subspace::span(9, &c.a_basis), Subspace::coordinate(9, 0..6));
        assert_eq!(c.theta[0][(3, 4)], int(-1));
        assert!(is_cocycle(&g, &c));
        assert!(is_coboundary(&g, &c).is_none());
        let report = center_triviality_consequences(&g);
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn mutated_theta_breaks_cocycle_and_recovery() {
        let g = example_sl2(int(1));
        let mut c = cocycle_theta(&g).unwrap();
        c.theta[0][(6, 0)] += int(1);
        c.theta[0][(0, 6)] -= int(1);
        assert_eq!(cocycle_witness(&g, &c).unwrap().indices, vec![0, 1, 2]);
        assert!(matches!(recover_h(&g, &c), Err(Error::Verification { .. })));
    }

    #[test]
    fn recovery_on_example() {
        let g = example_sl2(int(1));
        let c = cocycle_theta(&g).unwrap();
        let h = recover_h(&g, &c).unwrap();
        assert_eq!(h.selection, Selection::Split);
        assert!(h.conditions.all_passed(), "{}", h.conditions);
    }

    #[test]
    fn one_dim_example_has_non_coboundary_theta_and_center() {
        // the Lie bracket vanishes while theta does not
        let g = example_one_dim();
        let c = cocycle_theta(&g).unwrap();
        assert!(lieify(&g).unwrap().bracket().is_abelian());
        assert_eq!(c.theta[0][(1, 2)], int(-1));
        assert!(is_coboundary(&g, &c).is_none());
        assert!(recover_h(&g, &c).unwrap().conditions.all_passed());
        let report = center_triviality_consequences(&g);
        assert!(report.get("center_trivial").unwrap().failed());
        assert!(report.get("perfect").unwrap().failed());
    }

    #[test]
    fn abelian_cases() {
        let g = abelian(3);
        let c = cocycle_theta(&g).unwrap();
        assert!(c.theta.iter().all(Mat::is_zero));
        assert!(is_cocycle(&g, &c));
        assert!(is_coboundary(&g, &c).unwrap().is_zero());
        let h = recover_h(&g, &c).unwrap();
        // both sides vanish, so any h solves the bracket system; the split
        // candidate also meets the side conditions
        assert!(h.conditions.all_passed(), "{}", h.conditions);
        assert_eq!(h.matrix, Mat::zeros(3, 3).hstack(&Mat::identity(3)));
        assert!(matches!(center_triviality_consequences(&g).get("center_trivial").unwrap().outcome, crate::report::Outcome::Skip(_)));
    }

    #[test]
    fn invertible_twist_is_rejected() {
        let g = abelian(2).with_twist(Mat::identity(2)).unwrap();
        assert!(cocycle_theta(&g).is_err());
    }

    #[test]
    fn coboundaries_round_trip() {
        let g = example_sl2(int(1));
        let lie = lieify(&g).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(28);
        for _ in 0..50 {
            let d = rng.gen_range(1..=3);
            let mu = Mat::from_fn(d, 9, |_, _| int(rng.gen_range(-3..=3)));
            let theta = (0..d)
                .map(|k| Mat::from_fn(9, 9, |i, j| vector::dot(mu.row(k), &lie.bracket().basis_bracket(i, j))))
                .collect();
            let c = CocycleData { d, a_basis: vec![], theta };
            assert!(is_cocycle(&g, &c));
            let found = is_coboundary(&g, &c).unwrap();
            for i in 0..9 {
                for j in 0..9 {
                    let v = found.mul_vec(&lie.bracket().basis_bracket(i, j));
                    assert_eq!(v, c.eval(&vector::unit(9, i), &vector::unit(9, j)));
                }
            }
        }
    }
}
