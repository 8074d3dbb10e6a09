//! Double-extension constructors.
//!
//! [`DoubleExtensionData`] builds `s ⊕ h ⊕ s*` from a quadratic Hom-Lie
//! algebra `h`, a quadratic Lie algebra `s`, a map `f: s -> h`, an action
//! `rho: s -> o(B_h)` and a scalar `eta`. [`OneDimExtensionData`] builds
//! `Fd ⊕ h ⊕ Fc` from `h`, a skew map `D` and a pair `(v', lambda')`.
//! Both validate their hypotheses and refuse to build on failure.

mod double;
mod examples;
mod one_dim;
pub mod samples;

pub use double::DoubleExtensionData;
pub use examples::{example_one_dim, example_one_dim_data, example_sl2, example_sl2_data, sl2_table};
pub use one_dim::OneDimExtensionData;

use crate::linalg::Mat;
use crate::report::Witness;

/// First nonzero column of `diff`, reported with `prefix` plus the column.
pub(crate) fn column_witness(prefix: &[usize], diff: &Mat) -> Option<Witness> {
    (0..diff.cols()).find_map(|c| {
        let col = diff.column(c);
        if crate::linalg::vector::is_zero(&col) {
            None
        } else {
            let mut idx = prefix.to_vec();
            idx.push(c);
            Some(Witness::new(idx, col))
        }
    })
}
