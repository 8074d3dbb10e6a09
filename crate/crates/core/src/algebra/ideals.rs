use std::fmt;

use super::{HomLieAlgebra, StructureTensor};
use crate::error::{Error, Result};
use crate::linalg::vector::{self, Vector};
use crate::linalg::{complement, kernel, Mat, Subspace};

/// Why a subspace fails to be an ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealViolation {
    /// `[e_i, w_k]` is not in the subspace, where `w_k` is the k-th echelon
    /// basis vector of the subspace.
    Bracket { basis: usize, member: usize, image: Vector },
    /// `T(w_k)` is not in the subspace.
    Twist { member: usize, image: Vector },
}

impl fmt::Display for IdealViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &Vector| v.iter().map(crate::linalg::format_rat).collect::<Vec<_>>().join(", ");
        match self {
            IdealViolation::Bracket { basis, member, image } => {
                write!(f, "[e{basis}, w{member}] = [{}] leaves the subspace", show(image))
            }
            IdealViolation::Twist { member, image } => {
                write!(f, "T(w{member}) = [{}] leaves the subspace", show(image))
            }
        }
    }
}

/// `g / I` in the coordinates of the index-ordered complement of `I`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: HomLieAlgebra,
    /// `q x n`: coordinates of `x + I` in the representative basis.
    pub projection: Mat,
    /// `n x q`: representatives as vectors of `g`.
    pub inclusion: Mat,
}

impl HomLieAlgebra {
    fn check_ambient(&self, s: &Subspace) -> Result<()> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: s.ambient_dim() });
        }
        Ok(())
    }

    /// First violation of `[g, I] ⊂ I` or `T(I) ⊂ I`, scanning ideal basis
    /// vectors in order and, for each, the brackets before the twist.
    pub fn ideal_violation(&self, ideal: &Subspace) -> Result<Option<IdealViolation>> {
        self.check_ambient(ideal)?;
        for (k, w) in ideal.basis_vectors().iter().enumerate() {
            let ad_w = self.bracket().ad(w);
            for i in 0..self.dim() {
                // [e_i, w] = -[w, e_i]
                let image = vector::neg(&ad_w.column(i));
                if !ideal.contains(&image) {
                    return Ok(Some(IdealViolation::Bracket { basis: i, member: k, image }));
                }
            }
            let image = self.apply_twist(w);
            if !ideal.contains(&image) {
                return Ok(Some(IdealViolation::Twist { member: k, image }));
            }
        }
        Ok(None)
    }

    pub fn is_ideal(&self, ideal: &Subspace) -> Result<bool> {
        Ok(self.ideal_violation(ideal)?.is_none())
    }

    /// Smallest subspace containing `s` that is stable under every `ad(e_i)`
    /// and under `T`.
    pub fn ideal_closure(&self, s: &Subspace) -> Result<Subspace> {
        self.check_ambient(s)?;
        let n = self.dim();
        let ads: Vec<Mat> = (0..n).map(|i| self.bracket().ad_basis(i)).collect();
        let mut span = s.clone();
        let mut queue: Vec<Vector> = s.basis_vectors();
        while let Some(v) = queue.pop() {
            if span.is_full() {
                break;
            }
            let images = ads.iter().map(|ad| ad.mul_vec(&v)).chain(std::iter::once(self.apply_twist(&v)));
            for image in images {
                if !span.contains(&image) {
                    span = span.sum(&Subspace::span(n, std::slice::from_ref(&image)));
                    queue.push(image);
                }
            }
        }
        Ok(span)
    }

    /// The quotient algebra; the form is dropped.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient> {
        if let Some(v) = self.ideal_violation(ideal)? {
            return Err(Error::NotIdeal(v.to_string()));
        }
        let n = self.dim();
        let reps = complement(ideal);
        let rep_idx: Vec<usize> = reps.pivots().to_vec();
        let q = rep_idx.len();
        let mut cols: Vec<Vector> = rep_idx.iter().map(|&i| vector::unit(n, i)).collect();
        cols.extend(ideal.basis_vectors());
        let change = Mat::from_columns(n, &cols);
        let inv = change.inverse().expect("complement and ideal span the space");
        let projection = inv.select(&(0..q).collect::<Vec<_>>(), &(0..n).collect::<Vec<_>>());
        let inclusion = Mat::from_columns(n, &cols[..q]);

        let mut bracket = StructureTensor::zero(q);
        for a in 0..q {
            for b in (a + 1)..q {
                let v = self.bracket().basis_bracket(rep_idx[a], rep_idx[b]);
                bracket.set(a, b, projection.mul_vec(&v))?;
            }
        }
        let twist = projection.mul(self.twist()).mul(&inclusion);
        let names = rep_idx.iter().map(|&i| self.basis_names()[i].clone()).collect();
        let algebra = HomLieAlgebra::new(format!("{}/I", self.name()), names, bracket, twist, None)?;
        Ok(Quotient { algebra, projection, inclusion })
    }

    /// `{x : [x, e_j] = 0 for all j}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        // Row block j holds the map x -> [x, e_j] = -ad(e_j) x.
        let mut stacked = Mat::zeros(0, n);
        for j in 0..n {
            stacked = stacked.vstack(&self.bracket().ad_basis(j));
        }
        kernel(&stacked)
    }

    /// `[A, B]`, the span of brackets of basis vectors.
    pub fn bracket_of_subspaces(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let n = self.dim();
        let mut out = Vec::new();
        for x in a.basis_vectors() {
            let ad = self.bracket().ad(&x);
            for y in b.basis_vectors() {
                out.push(ad.mul_vec(&y));
            }
        }
        Subspace::span(n, &out)
    }

    /// `[g, g]`.
    pub fn derived_subalgebra(&self) -> Subspace {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                out.push(self.bracket().stored(i, j).to_vec());
            }
        }
        Subspace::span(n, &out)
    }

    /// `g^1 = g, g^2 = [g, g], g^(k+1) = [g, g^k]`, up to and including the
    /// first term that repeats its predecessor.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let n = self.dim();
        let full = Subspace::full(n);
        let mut series = vec![full.clone()];
        loop {
            let last = series.last().expect("series is nonempty");
            let next = self.bracket_of_subspaces(&full, last);
            let stable = &next == last;
            series.push(next);
            if stable || series.last().unwrap().is_zero() {
                break;
            }
        }
        if series.len() >= 2 && series[series.len() - 1] == series[series.len() - 2] {
            series.pop();
        }
        series
    }

    /// First `m` with `g^m = 0`, when the series reaches zero.
    pub fn is_nilpotent(&self) -> Option<usize> {
        let series = self.lower_central_series();
        series.iter().position(Subspace::is_zero).map(|p| p + 1)
    }
}
