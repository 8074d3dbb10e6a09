use crate::algebra::HomLieAlgebra;
use crate::linalg::{vector, Mat};
use crate::report::{CheckReport, Witness};
use crate::constructions::column_witness;

/// Checks that `P` (columns are images of the basis of `A1` in the basis of
/// `A2`) is invertible, carries brackets to brackets on all basis pairs,
/// intertwines the twists and pulls the form of `A2` back to that of `A1`.
pub fn check_isometric_isomorphism(a1: &HomLieAlgebra, a2: &HomLieAlgebra, p: &Mat) -> CheckReport {
    let mut report = CheckReport::new();
    let n = a1.dim();
    let names = ["invertible", "bracket_preserved", "twist_intertwined", "form_preserved"];
    if a2.dim() != n || p.rows() != n || p.cols() != n {
        report.record("dimensions", Some(Witness::new(vec![a1.dim(), a2.dim(), p.rows(), p.cols()], vec![])));
        for name in names {
            report.skip(name, "dimension mismatch");
        }
        return report;
    }
    report.record("invertible", p.inverse().is_none().then(|| Witness::new(vec![], vec![])));

    let cols = p.column_vectors();
    let mut bracket_w = None;
    'outer: for i in 0..n {
        for j in (i + 1)..n {
            let left = p.mul_vec(a1.bracket().stored(i, j));
            let right = a2.bracket().bracket(&cols[i], &cols[j]);
            let d = vector::sub(&left, &right);
            if !vector::is_zero(&d) {
                bracket_w = Some(Witness::new(vec![i, j], d));
                break 'outer;
            }
        }
    }
    report.record("bracket_preserved", bracket_w);
    report.record("twist_intertwined", column_witness(&[], &p.mul(a1.twist()).sub(&a2.twist().mul(p))));

    match (a1.form(), a2.form()) {
        (Some(b1), Some(b2)) => {
            let pulled = p.transpose().mul(b2).mul(p);
            report.record("form_preserved", column_witness(&[], &pulled.sub(b1)));
        }
        _ => report.skip("form_preserved", "a form is missing"),
    }
    report
}
