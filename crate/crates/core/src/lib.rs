//! Exact rational computations with quadratic Hom-Lie algebras.

pub mod algebra;
pub mod constructions;
pub mod error;
pub mod io;
pub mod lieify;
pub mod linalg;
pub mod report;
pub mod structure;

pub use algebra::{HomLieAlgebra, StructureTensor};
pub use error::{Error, Result};
pub use linalg::{Mat, Rat, Subspace};
pub use report::{Check, CheckReport, Outcome, Witness};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/linear-algebra.md")]
    struct LinearAlgebra;
    #[doc = include_str!("../../../book/src/hom-lie.md")]
    struct HomLie;
    #[doc = include_str!("../../../book/src/constructions.md")]
    struct Constructions;
    #[doc = include_str!("../../../book/src/structure.md")]
    struct Structure;
    #[doc = include_str!("../../../book/src/lieification.md")]
    struct Lieification;
    #[doc = include_str!("../../../book/src/files-and-cli.md")]
    struct FilesAndCli;
}
