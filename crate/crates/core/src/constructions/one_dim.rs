use super::column_witness;
use crate::algebra::{HomLieAlgebra, StructureTensor};
use crate::error::{Error, Result};
use crate::linalg::vector::{self, Vector};
use crate::linalg::{is_in_orthogonal_algebra, one, Mat, Rat};
use crate::report::{CheckReport, Witness};

/// Inputs of the `Fd ⊕ h ⊕ Fc` construction: a skew map `D` of `h` and the
/// pair `(v', lambda')` defining `T(d) = v' + lambda' c`.
#[derive(Clone, Debug)]
pub struct OneDimExtensionData {
    h: HomLieAlgebra,
    d: Mat,
    vprime: Vector,
    lambda_prime: Rat,
}

impl OneDimExtensionData {
    pub fn new(h: HomLieAlgebra, d: Mat, vprime: Vector, lambda_prime: Rat) -> Result<Self> {
        let m = h.dim();
        if h.form().is_none() {
            return Err(Error::MissingForm);
        }
        if !d.is_square() {
            return Err(Error::NotSquare { rows: d.rows(), cols: d.cols() });
        }
        if d.rows() != m {
            return Err(Error::DimensionMismatch { expected: m, found: d.rows() });
        }
        if vprime.len() != m {
            return Err(Error::DimensionMismatch { expected: m, found: vprime.len() });
        }
        Ok(OneDimExtensionData { h, d, vprime, lambda_prime })
    }

    pub fn h(&self) -> &HomLieAlgebra {
        &self.h
    }
    pub fn d(&self) -> &Mat {
        &self.d
    }
    pub fn vprime(&self) -> &[Rat] {
        &self.vprime
    }
    pub fn lambda_prime(&self) -> &Rat {
        &self.lambda_prime
    }

    fn h_form(&self) -> &Mat {
        self.h.form().expect("checked in new")
    }

    /// Structural checks (`h` axioms, `D ∈ o(B_h)`), then the three
    /// compatibility conditions, skipped when a structural check fails.
    pub fn validate(&self) -> CheckReport {
        let mut report = CheckReport::new();
        for check in self.h.check_axioms().checks {
            report.push(format!("h_{}", check.name), check.outcome);
        }
        let b = self.h_form();
        report.record(
            "d_in_orthogonal_algebra",
            if is_in_orthogonal_algebra(b, &self.d) {
                None
            } else {
                column_witness(&[], &self.d.transpose().mul(b).add(&b.mul(&self.d)))
            },
        );
        let names = ["l_d_commute_with_ad_vprime", "ad_vprime_derivation", "vprime_in_kernel_of_d"];
        if !report.all_passed() {
            for name in names {
                report.skip(name, "structural check failed");
            }
            return report;
        }

        let l = self.h.twist();
        let ad_v = self.h.bracket().ad(&self.vprime);
        let commute = column_witness(&[0], &l.mul(&self.d).sub(&ad_v))
            .or_else(|| column_witness(&[1], &self.d.mul(l).sub(&ad_v)));
        report.record(names[0], commute);
        report.record(names[1], self.h.derivation_witness(&ad_v).expect("shapes checked in new"));
        let dv = self.d.mul_vec(&self.vprime);
        report.record(names[2], (!vector::is_zero(&dv)).then(|| Witness::new(vec![], dv)));
        report
    }

    /// Validates, then builds the algebra in basis order `(d, h, c)`.
    pub fn build(&self) -> Result<HomLieAlgebra> {
        let report = self.validate();
        if !report.all_passed() {
            return Err(Error::Hypotheses(report));
        }
        Ok(self.assemble())
    }

    fn assemble(&self) -> HomLieAlgebra {
        let m = self.h.dim();
        let n = m + 2;
        let c = m + 1;
        let b = self.h_form();
        let mut bracket = StructureTensor::zero(n);
        // [d, u] = D u
        for a in 0..m {
            let mut v = vector::zeros(n);
            for (k, x) in self.d.column(a).into_iter().enumerate() {
                v[1 + k] = x;
            }
            bracket.set(0, 1 + a, v).expect("ordered");
        }
        // [u, v] = [u, v]_h + B_h(D u, v) c
        let dt_b = self.d.transpose().mul(b);
        for a in 0..m {
            for bb in (a + 1)..m {
                let mut v = vector::zeros(n);
                for (k, x) in self.h.bracket().stored(a, bb).iter().enumerate() {
                    v[1 + k] = x.clone();
                }
                v[c] = dt_b[(a, bb)].clone();
                bracket.set(1 + a, 1 + bb, v).expect("ordered");
            }
        }

        let mut twist = Mat::zeros(n, n);
        for (k, x) in self.vprime.iter().enumerate() {
            twist[(1 + k, 0)] = x.clone();
        }
        twist[(c, 0)] = self.lambda_prime.clone();
        let l = self.h.twist();
        let bv = b.mul_vec(&self.vprime);
        for a in 0..m {
            for k in 0..m {
                twist[(1 + k, 1 + a)] = l[(k, a)].clone();
            }
            twist[(c, 1 + a)] = bv[a].clone();
        }

        let mut form = Mat::zeros(n, n);
        form[(0, c)] = one();
        form[(c, 0)] = one();
        for a in 0..m {
            for bb in 0..m {
                form[(1 + a, 1 + bb)] = b[(a, bb)].clone();
            }
        }

        let mut names = vec!["d".to_string()];
        names.extend(self.h.basis_names().iter().cloned());
        names.push("c".to_string());
        HomLieAlgebra::new("one_dim_extension", names, bracket, twist, Some(form))
            .expect("shapes are consistent by construction")
    }
}
