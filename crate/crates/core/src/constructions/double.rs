use num_traits::Zero;

use super::column_witness;
use crate::algebra::{default_names, HomLieAlgebra, StructureTensor};
use crate::error::{Error, Result};
use crate::linalg::vector::{self, Vector};
use crate::linalg::{is_in_orthogonal_algebra, is_nondegenerate, Mat, Rat};
use crate::report::{CheckReport, Witness};

/// Inputs of the `s ⊕ h ⊕ s*` construction.
///
/// `f` is `dim h x dim s`, `rho[i]` is the action of the i-th basis vector
/// of `s` on `h`. Shapes are checked on construction; the algebraic
/// hypotheses are checked by [`validate`](Self::validate).
#[derive(Clone, Debug)]
pub struct DoubleExtensionData {
    h: HomLieAlgebra,
    s_bracket: StructureTensor,
    s_form: Mat,
    f: Mat,
    rho: Vec<Mat>,
    eta: Rat,
    s_names: Vec<String>,
    dual_names: Vec<String>,
}

fn expect_shape(m: &Mat, rows: usize, cols: usize) -> Result<()> {
    if m.rows() != rows {
        return Err(Error::DimensionMismatch { expected: rows, found: m.rows() });
    }
    if m.cols() != cols {
        return Err(Error::DimensionMismatch { expected: cols, found: m.cols() });
    }
    Ok(())
}

fn one_based(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

impl DoubleExtensionData {
    pub fn new(
        h: HomLieAlgebra,
        s_bracket: StructureTensor,
        s_form: Mat,
        f: Mat,
        rho: Vec<Mat>,
        eta: Rat,
    ) -> Result<Self> {
        let m = h.dim();
        let r = s_bracket.dim();
        if h.form().is_none() {
            return Err(Error::MissingForm);
        }
        expect_shape(&s_form, r, r)?;
        expect_shape(&f, m, r)?;
        if rho.len() != r {
            return Err(Error::DimensionMismatch { expected: r, found: rho.len() });
        }
        for map in &rho {
            expect_shape(map, m, m)?;
        }
        Ok(DoubleExtensionData {
            h,
            s_bracket,
            s_form,
            f,
            rho,
            eta,
            s_names: one_based("x", r),
            dual_names: one_based("xi", r),
        })
    }

    /// Names for the `s` basis and the dual basis (defaults `x1..`, `xi1..`).
    pub fn with_names(mut self, s_names: Vec<String>, dual_names: Vec<String>) -> Result<Self> {
        let r = self.s_dim();
        for names in [&s_names, &dual_names] {
            if names.len() != r {
                return Err(Error::DimensionMismatch { expected: r, found: names.len() });
            }
        }
        self.s_names = s_names;
        self.dual_names = dual_names;
        Ok(self)
    }

    pub fn h(&self) -> &HomLieAlgebra {
        &self.h
    }
    pub fn s_bracket(&self) -> &StructureTensor {
        &self.s_bracket
    }
    pub fn s_form(&self) -> &Mat {
        &self.s_form
    }
    pub fn f(&self) -> &Mat {
        &self.f
    }
    pub fn rho(&self) -> &[Mat] {
        &self.rho
    }
    pub fn eta(&self) -> &Rat {
        &self.eta
    }
    pub fn s_dim(&self) -> usize {
        self.s_bracket.dim()
    }
    pub fn h_dim(&self) -> usize {
        self.h.dim()
    }

    fn h_form(&self) -> &Mat {
        self.h.form().expect("checked in new")
    }

    /// `rho` extended linearly to a vector of `s`.
    fn rho_of(&self, x: &[Rat]) -> Mat {
        let m = self.h_dim();
        let mut out = Mat::zeros(m, m);
        for (c, map) in x.iter().zip(&self.rho) {
            if !c.is_zero() {
                out = out.add(&map.scale(c));
            }
        }
        out
    }

    /// Structural checks on the inputs, then the three compatibility
    /// conditions between `f`, `rho` and `L`. The conditions are skipped
    /// when a structural check fails.
    pub fn validate(&self) -> CheckReport {
        let mut report = CheckReport::new();
        for check in self.h.check_axioms().checks {
            report.push(format!("h_{}", check.name), check.outcome);
        }
        report.record(
            "s_jacobi",
            self.s_bracket.jacobi_witness().map(|(i, j, k, d)| Witness::new(vec![i, j, k], d)),
        );
        report.record("s_form_symmetric", (!self.s_form.is_symmetric()).then(|| Witness::new(vec![], vec![])));
        report.record(
            "s_form_nondegenerate",
            (!is_nondegenerate(&self.s_form))
                .then(|| Witness::new(vec![], crate::linalg::kernel(&self.s_form).basis().row(0).to_vec())),
        );
        report.record("s_form_invariant", self.s_form_invariance_witness());
        report.record("rho_in_orthogonal_algebra", self.rho_orthogonality_witness());

        if !report.all_passed() {
            for name in [
                "f_intertwines_action",
                "l_rho_commute_with_ad_f",
                "l_rho_derivation",
                "rho_bracket_on_image_of_l",
            ] {
                report.skip(name, "structural check failed");
            }
            return report;
        }
        report.record("f_intertwines_action", self.intertwining_witness());
        report.record("l_rho_commute_with_ad_f", self.commutation_witness());
        report.record("l_rho_derivation", self.derivation_witness());
        report.record("rho_bracket_on_image_of_l", self.bracket_on_image_witness());
        report
    }

    fn s_form_invariance_witness(&self) -> Option<Witness> {
        let r = self.s_dim();
        for i in 0..r {
            for j in 0..r {
                let ij = self.s_bracket.basis_bracket(i, j);
                for k in 0..r {
                    let left = self.s_form.bilinear(&ij, &vector::unit(r, k));
                    let right = self.s_form.bilinear(&vector::unit(r, i), &self.s_bracket.basis_bracket(j, k));
                    if left != right {
                        return Some(Witness::new(vec![i, j, k], vec![left - right]));
                    }
                }
            }
        }
        None
    }

    fn rho_orthogonality_witness(&self) -> Option<Witness> {
        let b = self.h_form();
        self.rho.iter().enumerate().find_map(|(i, s)| {
            if is_in_orthogonal_algebra(b, s) {
                None
            } else {
                column_witness(&[i], &s.transpose().mul(b).add(&b.mul(s)))
            }
        })
    }

    /// `f ∘ ad_s(x_i) = rho(x_i) ∘ f`.
    fn intertwining_witness(&self) -> Option<Witness> {
        (0..self.s_dim()).find_map(|i| {
            let diff = self.f.mul(&self.s_bracket.ad_basis(i)).sub(&self.rho[i].mul(&self.f));
            column_witness(&[i], &diff)
        })
    }

    /// `L ∘ rho(x_i) = ad_h(f(x_i)) = rho(x_i) ∘ L`; the second index is 0
    /// for the left equality and 1 for the right one.
    fn commutation_witness(&self) -> Option<Witness> {
        let l = self.h.twist();
        (0..self.s_dim()).find_map(|i| {
            let ad_f = self.h.bracket().ad(&self.f.column(i));
            column_witness(&[i, 0], &l.mul(&self.rho[i]).sub(&ad_f))
                .or_else(|| column_witness(&[i, 1], &ad_f.sub(&self.rho[i].mul(l))))
        })
    }

    /// `L ∘ rho(x_i)` is a derivation of `h`.
    fn derivation_witness(&self) -> Option<Witness> {
        let l = self.h.twist();
        (0..self.s_dim()).find_map(|i| {
            let d = l.mul(&self.rho[i]);
            self.h.derivation_witness(&d).expect("shapes checked in new").map(|w| {
                let mut idx = vec![i];
                idx.extend(w.indices);
                Witness::new(idx, w.defect)
            })
        })
    }

    /// `rho([x_i, x_j]) ∘ L = [rho(x_i), rho(x_j)] ∘ L` for `i < j`.
    fn bracket_on_image_witness(&self) -> Option<Witness> {
        let l = self.h.twist();
        let r = self.s_dim();
        for i in 0..r {
            for j in (i + 1)..r {
                let left = self.rho_of(self.s_bracket.stored(i, j)).mul(l);
                let right = self.rho[i].commutator(&self.rho[j]).mul(l);
                if let Some(w) = column_witness(&[i, j], &left.sub(&right)) {
                    return Some(w);
                }
            }
        }
        None
    }

    /// Validates, then builds the algebra on `s ⊕ h ⊕ s*` in that basis
    /// order, with `xi^j(x_k) = δ_jk`.
    pub fn build(&self) -> Result<HomLieAlgebra> {
        let report = self.validate();
        if !report.all_passed() {
            return Err(Error::Hypotheses(report));
        }
        Ok(self.assemble())
    }

    fn assemble(&self) -> HomLieAlgebra {
        let r = self.s_dim();
        let m = self.h_dim();
        let n = 2 * r + m;
        let (h0, d0) = (r, r + m);
        let bh = self.h_form();
        let mut bracket = StructureTensor::zero(n);
        let place = |v: &mut Vector, offset: usize, part: &[Rat]| {
            for (k, c) in part.iter().enumerate() {
                v[offset + k] += c;
            }
        };

        // s x s
        for i in 0..r {
            for j in (i + 1)..r {
                let mut v = vector::zeros(n);
                place(&mut v, 0, self.s_bracket.stored(i, j));
                bracket.set(i, j, v).expect("ordered");
            }
        }
        // s x h: [x_i, v_a] = rho(x_i) v_a
        for i in 0..r {
            for a in 0..m {
                let mut v = vector::zeros(n);
                place(&mut v, h0, &self.rho[i].column(a));
                bracket.set(i, h0 + a, v).expect("ordered");
            }
        }
        // s x s*: [x_i, xi^j] = -xi^j ∘ ad(x_i) = -Σ_k c(i,k)^j xi^k
        for i in 0..r {
            for j in 0..r {
                let mut v = vector::zeros(n);
                for k in 0..r {
                    v[d0 + k] = -self.s_bracket.coefficient(i, k, j);
                }
                bracket.set(i, d0 + j, v).expect("ordered");
            }
        }
        // h x h: [u, v]_h + Σ_j B_h(rho(x_j) u, v) xi^j
        let rho_t_b: Vec<Mat> = self.rho.iter().map(|s| s.transpose().mul(bh)).collect();
        for a in 0..m {
            for b in (a + 1)..m {
                let mut v = vector::zeros(n);
                place(&mut v, h0, self.h.bracket().stored(a, b));
                for (j, g) in rho_t_b.iter().enumerate() {
                    v[d0 + j] = g[(a, b)].clone();
                }
                bracket.set(h0 + a, h0 + b, v).expect("ordered");
            }
        }

        let mut twist = Mat::zeros(n, n);
        // T(x_i) = f(x_i) + eta B_s(x_i, .)
        for i in 0..r {
            for a in 0..m {
                twist[(h0 + a, i)] = self.f[(a, i)].clone();
            }
            for j in 0..r {
                twist[(d0 + j, i)] = &self.eta * &self.s_form[(i, j)];
            }
        }
        // T(v) = L v + Σ_j B_h(v, f(x_j)) xi^j
        let l = self.h.twist();
        let ft_b = self.f.transpose().mul(bh);
        for a in 0..m {
            for b in 0..m {
                twist[(h0 + b, h0 + a)] = l[(b, a)].clone();
            }
            for j in 0..r {
                twist[(d0 + j, h0 + a)] = ft_b[(j, a)].clone();
            }
        }

        let mut form = Mat::zeros(n, n);
        for i in 0..r {
            form[(i, d0 + i)] = crate::linalg::one();
            form[(d0 + i, i)] = crate::linalg::one();
        }
        for a in 0..m {
            for b in 0..m {
                form[(h0 + a, h0 + b)] = bh[(a, b)].clone();
            }
        }

        let mut names = self.s_names.clone();
        names.extend(self.h.basis_names().iter().cloned());
        names.extend(self.dual_names.iter().cloned());
        HomLieAlgebra::new("double_extension", names, bracket, twist, Some(form))
            .expect("shapes are consistent by construction")
    }
}

/// Abelian quadratic algebra with the given form and twist, named `prefix1..`.
pub(crate) fn abelian_quadratic(prefix: &str, form: Mat, twist: Mat) -> Result<HomLieAlgebra> {
    let n = form.rows();
    let names = if prefix.is_empty() { default_names("e", n) } else { one_based(prefix, n) };
    HomLieAlgebra::new("h", names, StructureTensor::zero(n), twist, Some(form))
}
