//! Exact dense linear algebra over the rationals.

mod mat;
mod quadratic;
mod rat;
mod subspace;
pub mod vector;

pub use mat::Mat;
pub use quadratic::{
    flat_map, gram, is_in_orthogonal_algebra, is_nondegenerate, is_totally_isotropic,
    orthogonal_complement, witt_split, WittSplit,
};
pub use rat::{format_rat, frac, int, one, parse_rat, zero, Rat};
pub use subspace::{complement, image, kernel, rref_solve, Solution, Subspace};
pub use vector::Vector;
