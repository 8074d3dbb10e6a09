use thiserror::Error;

use crate::report::{CheckReport, Witness};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("bilinear form is not symmetric")]
    NotSymmetric,

    #[error("bilinear form is degenerate")]
    Degenerate,

    #[error("a bilinear form is required")]
    MissingForm,

    #[error("subspace is not totally isotropic")]
    NotIsotropic,

    #[error("structure constant index out of range or not strictly ordered: ({i}, {j})")]
    BadBracketIndex { i: usize, j: usize },

    #[error("subspace is not an ideal: {0}")]
    NotIdeal(String),

    #[error("no proper ideal contains the given subspace")]
    NoProperIdeal,

    #[error("hypotheses not satisfied:\n{0}")]
    Hypotheses(CheckReport),

    #[error("verification of `{check}` failed{}", .witness.as_ref().map(|w| format!(" at {w}")).unwrap_or_default())]
    Verification { check: String, witness: Option<Witness> },

    #[error("unsupported configuration: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn verification(check: impl Into<String>, witness: Option<Witness>) -> Self {
        Error::Verification { check: check.into(), witness }
    }
}
