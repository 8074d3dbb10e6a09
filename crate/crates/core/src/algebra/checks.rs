use num_traits::Zero;

use super::HomLieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::vector::{self, Vector};
use crate::linalg::{is_in_orthogonal_algebra, kernel, Mat, Rat};
use crate::report::{CheckReport, Witness};

/// Names of the entries produced by [`HomLieAlgebra::check_axioms`], in order.
pub const CHECK_NAMES: [&str; 6] =
    ["hom_jacobi", "equivariance", "symmetric", "nondegenerate", "invariance", "self_adjoint"];

/// Cached basis-level data for exhaustive scans.
pub(crate) struct BasisTables {
    pub n: usize,
    /// `[e_i, e_j]` for all ordered pairs, row-major.
    pub brackets: Vec<Vector>,
    /// `T e_i`.
    pub twist_cols: Vec<Vector>,
}

impl BasisTables {
    pub fn new(a: &HomLieAlgebra) -> Self {
        let n = a.dim();
        let mut brackets = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                brackets.push(a.bracket().basis_bracket(i, j));
            }
        }
        BasisTables { n, brackets, twist_cols: a.twist().column_vectors() }
    }

    pub fn br(&self, i: usize, j: usize) -> &Vector {
        &self.brackets[i * self.n + j]
    }
}

impl HomLieAlgebra {
    /// Exhaustive check of the quadratic Hom-Lie axioms over basis tuples.
    ///
    /// Entries, in order: `hom_jacobi` (triples `i <= j <= k`),
    /// `equivariance` (all ordered pairs), then, when a form is present,
    /// `symmetric`, `nondegenerate`, `invariance` (all triples) and
    /// `self_adjoint` (pairs `i < j`). Without a form the last four are
    /// skipped. Each failure carries the lexicographically smallest failing
    /// index tuple.
    pub fn check_axioms(&self) -> CheckReport {
        let tables = BasisTables::new(self);
        let mut report = CheckReport::new();
        report.record("hom_jacobi", self.hom_jacobi_witness_with(&tables));
        report.record("equivariance", self.equivariance_witness_with(&tables));
        match self.form() {
            None => {
                for name in &CHECK_NAMES[2..] {
                    report.skip(*name, "no bilinear form");
                }
            }
            Some(b) => {
                report.record("symmetric", symmetric_witness(b));
                report.record("nondegenerate", nondegenerate_witness(b));
                report.record("invariance", invariance_witness(&tables, b));
                report.record("self_adjoint", self_adjoint_witness(&tables, b));
            }
        }
        report
    }

    pub fn hom_jacobi_witness(&self) -> Option<Witness> {
        self.hom_jacobi_witness_with(&BasisTables::new(self))
    }

    fn hom_jacobi_witness_with(&self, t: &BasisTables) -> Option<Witness> {
        let n = t.n;
        let br = |x: &[Rat], y: &[Rat]| self.bracket().bracket(x, y);
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    let mut d = br(&t.twist_cols[i], t.br(j, k));
                    d = vector::add(&d, &br(&t.twist_cols[j], t.br(k, i)));
                    d = vector::add(&d, &br(&t.twist_cols[k], t.br(i, j)));
                    if !vector::is_zero(&d) {
                        return Some(Witness::new(vec![i, j, k], d));
                    }
                }
            }
        }
        None
    }

    /// `T([x, y]) = [T(x), y]` on all basis pairs.
    pub fn equivariance_witness(&self) -> Option<Witness> {
        self.equivariance_witness_with(&BasisTables::new(self))
    }

    fn equivariance_witness_with(&self, t: &BasisTables) -> Option<Witness> {
        for i in 0..t.n {
            let ad_ti = self.bracket().ad(&t.twist_cols[i]);
            for j in 0..t.n {
                let lhs = self.twist().mul_vec(t.br(i, j));
                let rhs = ad_ti.column(j);
                let d = vector::sub(&lhs, &rhs);
                if !vector::is_zero(&d) {
                    return Some(Witness::new(vec![i, j], d));
                }
            }
        }
        None
    }

    pub fn is_equivariant(&self) -> bool {
        self.equivariance_witness().is_none()
    }

    pub fn is_hom_lie(&self) -> bool {
        self.hom_jacobi_witness().is_none()
    }

    /// Whether `D([x, y]) = [D(x), y] + [x, D(y)]` on all basis pairs; the
    /// witness is the first failing pair `i < j`.
    pub fn derivation_witness(&self, d: &Mat) -> Result<Option<Witness>> {
        let n = self.dim();
        if d.rows() != n || d.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: d.rows().max(d.cols()) });
        }
        let dcols = d.column_vectors();
        for i in 0..n {
            for j in (i + 1)..n {
                let ei = self.basis_vector(i);
                let ej = self.basis_vector(j);
                let lhs = d.mul_vec(&self.bracket().basis_bracket(i, j));
                let r1 = self.bracket().bracket(&dcols[i], &ej);
                let r2 = self.bracket().bracket(&ei, &dcols[j]);
                let defect = vector::sub(&lhs, &vector::add(&r1, &r2));
                if !vector::is_zero(&defect) {
                    return Ok(Some(Witness::new(vec![i, j], defect)));
                }
            }
        }
        Ok(None)
    }

    pub fn is_derivation(&self, d: &Mat) -> Result<bool> {
        Ok(self.derivation_witness(d)?.is_none())
    }
}

/// `S ∈ o(B)`.
pub fn is_in_ob(b: &Mat, s: &Mat) -> bool {
    is_in_orthogonal_algebra(b, s)
}

fn symmetric_witness(b: &Mat) -> Option<Witness> {
    for i in 0..b.rows() {
        for j in (i + 1)..b.cols() {
            if b[(i, j)] != b[(j, i)] {
                return Some(Witness::new(vec![i, j], vec![&b[(i, j)] - &b[(j, i)]]));
            }
        }
    }
    None
}

fn nondegenerate_witness(b: &Mat) -> Option<Witness> {
    let k = kernel(b);
    (!k.is_zero()).then(|| Witness::new(vec![], k.basis().row(0).to_vec()))
}

/// `B([e_i, e_j], e_k) = B(e_i, [e_j, e_k])` on all triples.
fn invariance_witness(t: &BasisTables, b: &Mat) -> Option<Witness> {
    let n = t.n;
    // B(v, e_k) is the k-th entry of B^T v = B v for symmetric B.
    for i in 0..n {
        for j in 0..n {
            let left = b.mul_vec(t.br(i, j));
            for k in 0..n {
                let right = vector::dot(b.row(i), t.br(j, k));
                let d = &left[k] - &right;
                if !d.is_zero() {
                    return Some(Witness::new(vec![i, j, k], vec![d]));
                }
            }
        }
    }
    None
}

/// `B(T e_i, e_j) = B(e_i, T e_j)` for `i < j`.
fn self_adjoint_witness(t: &BasisTables, b: &Mat) -> Option<Witness> {
    let n = t.n;
    for i in 0..n {
        for j in (i + 1)..n {
            let lhs = vector::dot(&t.twist_cols[i], &b.column(j));
            let rhs = vector::dot(b.row(i), &t.twist_cols[j]);
            let d = lhs - rhs;
            if !d.is_zero() {
                return Some(Witness::new(vec![i, j], vec![d]));
            }
        }
    }
    None
}
