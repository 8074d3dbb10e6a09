//! Structure theory for Hom-Lie algebras with equivariant twist maps:
//! Fitting splitting, maximal ideals above a subspace, closing a complement
//! of a maximal ideal under the bracket, and the decomposition of a
//! quadratic algebra with nilpotent twist into one of the two double
//! extensions.

mod decompose;
mod fitting;
mod iso;
mod maximal;
mod simple;
mod straighten;

pub use decompose::{decompose, Decomposition, DecompositionKind, Extracted};
pub use fitting::{fitting, FittingResult};
pub use iso::check_isometric_isomorphism;
pub use maximal::{maximal_proper_ideal_containing, PROBE_BUDGET, PROBE_SEED};
pub use simple::{is_simple_quadratic, killing_form};
pub use straighten::{straighten, StraightenResult};

use crate::algebra::HomLieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::report::CheckReport;

/// Errors with a one-entry report unless `A` has an equivariant twist.
pub(crate) fn require_equivariant(a: &HomLieAlgebra) -> Result<()> {
    if let Some(w) = a.equivariance_witness() {
        let mut report = CheckReport::new();
        report.record("equivariance", Some(w));
        return Err(Error::Hypotheses(report));
    }
    Ok(())
}

/// Smallest `k` with `T^k = 0`, if any.
pub(crate) fn nilpotency_index(t: &Mat) -> Option<usize> {
    let n = t.rows();
    let mut p = Mat::identity(n);
    for k in 0..=n {
        if p.is_zero() {
            return Some(k);
        }
        p = p.mul(t);
    }
    None
}

pub(crate) fn require_nilpotent_twist(a: &HomLieAlgebra) -> Result<()> {
    if nilpotency_index(a.twist()).is_none() {
        let mut report = CheckReport::new();
        let w = crate::report::Witness::new(vec![a.dim()], vec![]);
        report.record("twist_nilpotent", Some(w));
        return Err(Error::Hypotheses(report));
    }
    Ok(())
}
