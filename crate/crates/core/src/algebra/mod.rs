//! Hom-Lie algebras `(g, [.,.], T, B)` and the predicates on them.
//!
//! A Hom-Lie algebra here is a skew bilinear product stored as structure
//! constants, a twist map `T` and, for the quadratic case, a symmetric
//! bilinear form `B`. None of the axioms are enforced by the type; they are
//! checked exhaustively by [`HomLieAlgebra::check_axioms`] and reported with
//! deterministic witnesses.

mod checks;
mod ideals;
mod tensor;

pub use checks::{is_in_ob, CHECK_NAMES};
pub use ideals::{IdealViolation, Quotient};
pub use tensor::StructureTensor;

use crate::error::{Error, Result};
use crate::linalg::vector::{self, Vector};
use crate::linalg::{Mat, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomLieAlgebra {
    name: String,
    basis_names: Vec<String>,
    bracket: StructureTensor,
    twist: Mat,
    form: Option<Mat>,
}

impl HomLieAlgebra {
    /// Assembles an algebra, checking only shapes and the symmetry of `form`.
    pub fn new(
        name: impl Into<String>,
        basis_names: Vec<String>,
        bracket: StructureTensor,
        twist: Mat,
        form: Option<Mat>,
    ) -> Result<Self> {
        let n = bracket.dim();
        if basis_names.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: basis_names.len() });
        }
        if !twist.is_square() {
            return Err(Error::NotSquare { rows: twist.rows(), cols: twist.cols() });
        }
        if twist.rows() != n {
            return Err(Error::DimensionMismatch { expected: n, found: twist.rows() });
        }
        if let Some(b) = &form {
            if !b.is_square() {
                return Err(Error::NotSquare { rows: b.rows(), cols: b.cols() });
            }
            if b.rows() != n {
                return Err(Error::DimensionMismatch { expected: n, found: b.rows() });
            }
            if !b.is_symmetric() {
                return Err(Error::NotSymmetric);
            }
        }
        Ok(HomLieAlgebra { name: name.into(), basis_names, bracket, twist, form })
    }

    /// Ordinary Lie algebra data: identity twist, optional form.
    pub fn lie(name: impl Into<String>, bracket: StructureTensor, form: Option<Mat>) -> Result<Self> {
        let n = bracket.dim();
        Self::new(name, default_names("e", n), bracket, Mat::identity(n), form)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn bracket(&self) -> &StructureTensor {
        &self.bracket
    }

    pub fn twist(&self) -> &Mat {
        &self.twist
    }

    pub fn form(&self) -> Option<&Mat> {
        self.form.as_ref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_basis_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: names.len() });
        }
        self.basis_names = names;
        Ok(self)
    }

    pub fn with_twist(self, twist: Mat) -> Result<Self> {
        Self::new(self.name, self.basis_names, self.bracket, twist, self.form)
    }

    pub fn with_form(self, form: Option<Mat>) -> Result<Self> {
        Self::new(self.name, self.basis_names, self.bracket, self.twist, form)
    }

    pub fn with_bracket(self, bracket: StructureTensor) -> Result<Self> {
        Self::new(self.name, self.basis_names, bracket, self.twist, self.form)
    }

    /// Index of a basis vector by name.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis_names.iter().position(|n| n == name)
    }

    /// Standard basis vector `e_i`.
    pub fn basis_vector(&self, i: usize) -> Vector {
        vector::unit(self.dim(), i)
    }

    fn check_len(&self, v: &[Rat]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: v.len() });
        }
        Ok(())
    }

    /// `[x, y]`.
    pub fn bracket_eval(&self, x: &[Rat], y: &[Rat]) -> Result<Vector> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.bracket.bracket(x, y))
    }

    /// Matrix of `ad(x) = [x, .]`.
    pub fn adjoint_matrix(&self, x: &[Rat]) -> Result<Mat> {
        self.check_len(x)?;
        Ok(self.bracket.ad(x))
    }

    pub fn apply_twist(&self, x: &[Rat]) -> Vector {
        self.twist.mul_vec(x)
    }

    /// `[T x, [y, z]] + [T y, [z, x]] + [T z, [x, y]]`.
    pub fn hom_jacobi_defect(&self, x: &[Rat], y: &[Rat], z: &[Rat]) -> Result<Vector> {
        self.check_len(x)?;
        self.check_len(y)?;
        self.check_len(z)?;
        let br = |a: &[Rat], b: &[Rat]| self.bracket.bracket(a, b);
        let t = |a: &[Rat]| self.twist.mul_vec(a);
        let a = br(&t(x), &br(y, z));
        let b = br(&t(y), &br(z, x));
        let c = br(&t(z), &br(x, y));
        Ok(vector::add(&vector::add(&a, &b), &c))
    }

    /// `[x, [y, z]] + [y, [z, x]] + [z, [x, y]]`.
    pub fn jacobi_defect(&self, x: &[Rat], y: &[Rat], z: &[Rat]) -> Result<Vector> {
        self.check_len(x)?;
        self.check_len(y)?;
        self.check_len(z)?;
        Ok(self.bracket.jacobiator(x, y, z))
    }
}

/// `prefix0, prefix1, ...`
pub fn default_names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}
