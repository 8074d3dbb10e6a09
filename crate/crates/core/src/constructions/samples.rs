//! Random valid inputs for the two constructions.
//!
//! The core `h` is abelian with `L = 0` and `f = 0`, so every compatibility
//! condition has a zero side and any action by skew maps is admissible.

use rand::Rng;

use super::double::abelian_quadratic;
use super::{sl2_table, DoubleExtensionData, OneDimExtensionData};
use crate::algebra::StructureTensor;
use crate::linalg::{frac, int, vector, Mat, Rat};

/// Small rational with numerator in `-3..=3` and denominator in `1..=3`.
pub fn small_rat<R: Rng + ?Sized>(rng: &mut R) -> Rat {
    frac(rng.gen_range(-3..=3), rng.gen_range(1..=3))
}

fn nonzero_small_rat<R: Rng + ?Sized>(rng: &mut R) -> Rat {
    loop {
        let x = small_rat(rng);
        if x != int(0) {
            return x;
        }
    }
}

/// Diagonal form with nonzero small entries.
pub fn diagonal_form<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Mat {
    let mut b = Mat::zeros(n, n);
    for i in 0..n {
        b[(i, i)] = nonzero_small_rat(rng);
    }
    b
}

/// Random element of `o(B)` for an invertible symmetric `B`: `B^-1 K` with
/// `K` skew, since then `B S = K` is skew.
pub fn random_skew_for<R: Rng + ?Sized>(rng: &mut R, b: &Mat) -> Mat {
    let n = b.rows();
    let mut k = Mat::zeros(n, n);
    for i in 0..n {
        for j in (i + 1)..n {
            let x = int(rng.gen_range(-2..=2));
            k[(j, i)] = -x.clone();
            k[(i, j)] = x;
        }
    }
    b.inverse().expect("form is nondegenerate").mul(&k)
}

/// `s` is either `sl2` with a scaled identity form or abelian of dimension
/// 1 or 2 with a random diagonal form; `h` has dimension `0..=4`.
pub fn random_double_extension<R: Rng + ?Sized>(rng: &mut R) -> DoubleExtensionData {
    let (s_bracket, s_form) = if rng.gen_bool(0.5) {
        (sl2_table(), Mat::scalar(3, &nonzero_small_rat(rng)))
    } else {
        let r = rng.gen_range(1..=2);
        (StructureTensor::zero(r), diagonal_form(rng, r))
    };
    let r = s_bracket.dim();
    let m = rng.gen_range(0..=4);
    let bh = diagonal_form(rng, m);
    let rho = (0..r).map(|_| random_skew_for(rng, &bh)).collect();
    let h = abelian_quadratic("v", bh, Mat::zeros(m, m)).expect("valid");
    let eta = small_rat(rng);
    DoubleExtensionData::new(h, s_bracket, s_form, Mat::zeros(m, r), rho, eta).expect("shapes agree")
}

/// `h` abelian of dimension `0..=4`, `v' = 0`, random `D ∈ o(B_h)` and
/// random `lambda'`.
pub fn random_one_dim_extension<R: Rng + ?Sized>(rng: &mut R) -> OneDimExtensionData {
    let m = rng.gen_range(0..=4);
    let bh = diagonal_form(rng, m);
    let d = random_skew_for(rng, &bh);
    let h = abelian_quadratic("e", bh, Mat::zeros(m, m)).expect("valid");
    OneDimExtensionData::new(h, d, vector::zeros(m), small_rat(rng)).expect("shapes agree")
}
