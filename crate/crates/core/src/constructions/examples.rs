use super::double::abelian_quadratic;
use super::{DoubleExtensionData, OneDimExtensionData};
use crate::algebra::{HomLieAlgebra, StructureTensor};
use crate::linalg::{int, vector, Mat, Rat};

/// `sl2` in the basis with `[x1, x2] = x3`, `[x2, x3] = x1`, `[x3, x1] = x2`.
pub fn sl2_table() -> StructureTensor {
    let mut t = StructureTensor::zero(3);
    t.set_sparse(0, 1, &[(2, int(1))]).expect("valid");
    t.set_sparse(1, 2, &[(0, int(1))]).expect("valid");
    t.set_sparse(0, 2, &[(1, int(-1))]).expect("valid");
    t
}

/// `sl2` acting on an abelian 3-dimensional `h` with identity forms,
/// `f = 0` and `L = 0`.
pub fn example_sl2_data(eta: Rat) -> DoubleExtensionData {
    let h = abelian_quadratic("v", Mat::identity(3), Mat::zeros(3, 3)).expect("valid");
    // columns are images of v1, v2, v3
    let rho = vec![
        Mat::from_ints(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]]),
        Mat::from_ints(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]]),
        Mat::from_ints(&[&[0, 0, 1], &[0, 0, 0], &[-1, 0, 0]]),
    ];
    DoubleExtensionData::new(h, sl2_table(), Mat::identity(3), Mat::zeros(3, 3), rho, eta).expect("valid")
}

/// The 9-dimensional algebra `sl2 ⊕ h ⊕ sl2*`, basis
/// `x1, x2, x3, v1, v2, v3, xi1, xi2, xi3`.
pub fn example_sl2(eta: Rat) -> HomLieAlgebra {
    example_sl2_data(eta).build().expect("hypotheses hold").with_name("sl2_example")
}

/// Abelian `h = span{e1, e2}` with identity form, `L = 0`, the rotation
/// `D(e1) = -e2, D(e2) = e1`, `v' = 0`, `lambda' = 1`.
pub fn example_one_dim_data() -> OneDimExtensionData {
    let h = abelian_quadratic("e", Mat::identity(2), Mat::zeros(2, 2)).expect("valid");
    let d = Mat::from_ints(&[&[0, 1], &[-1, 0]]);
    OneDimExtensionData::new(h, d, vector::zeros(2), int(1)).expect("valid")
}

/// The 4-dimensional algebra with basis `d, e1, e2, c`.
pub fn example_one_dim() -> HomLieAlgebra {
    example_one_dim_data().build().expect("hypotheses hold").with_name("one_dim_example")
}
