//! Linear subspaces of `K^m` held in reduced row-echelon canonical form.
//!
//! Two subspaces are equal as sets iff their stored bases are identical, so
//! `==` on [`Subspace`] is set equality.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: FieldSpec,
    ambient_dim: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

/// How [`Subspace::relate`] combines two subspaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Contains,
    Equal,
    Sum,
    Intersect,
}

/// Outcome of [`Subspace::relate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Relate {
    Bool(bool),
    Space(Subspace),
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace { field, ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        let mut s = Self::zero(field, ambient_dim);
        for i in 0..ambient_dim {
            s.insert(unit_vector(field, ambient_dim, i));
        }
        s
    }

    /// Canonical basis of the span of `vectors`.
    pub fn span(field: FieldSpec, ambient_dim: usize, vectors: impl IntoIterator<Item = Vec<Scalar>>) -> Result<Self> {
        let mut s = Self::zero(field, ambient_dim);
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch(format!(
                    "vector of length {} in K^{ambient_dim}",
                    v.len()
                )));
            }
            if v.iter().any(|x| !field.contains(x)) {
                return Err(Error::FieldMismatch);
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after eliminating every pivot coordinate.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, y) in r.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        r
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        v.len() == self.ambient_dim && self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Adds `v` to the span, keeping the basis canonical. Returns whether the
    /// dimension grew.
    pub(crate) fn insert(&mut self, v: Vec<Scalar>) -> bool {
        debug_assert_eq!(v.len(), self.ambient_dim);
        let mut r = self.reduce(&v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inverse().expect("nonzero");
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for b in self.basis.iter_mut() {
            if b[p].is_zero() {
                continue;
            }
            let f = b[p].clone();
            for (x, y) in b.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, r);
        true
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "subspaces of K^{} and K^{}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        Ok(())
    }

    /// `self ⊇ other`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(other.basis.iter().all(|v| self.contains_vector(v)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let mut s = self.clone();
        for v in &other.basis {
            s.insert(v.clone());
        }
        Ok(s)
    }

    /// `self ∩ other`, read off the kernel of the matrix whose columns are
    /// both bases.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.field, self.ambient_dim));
        }
        let cols: Vec<Vec<Scalar>> = self.basis.iter().chain(&other.basis).cloned().collect();
        let m = Matrix::from_columns(self.field, &cols)?;
        let da = self.dim();
        let common = m.kernel().into_iter().map(|coeffs| {
            let mut v = vec![self.field.zero(); self.ambient_dim];
            for (c, b) in coeffs[..da].iter().zip(&self.basis) {
                if c.is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(b) {
                    *x = &*x + &(c * y);
                }
            }
            v
        });
        Subspace::span(self.field, self.ambient_dim, common)
    }

    pub fn relate(&self, other: &Subspace, mode: Relation) -> Result<Relate> {
        Ok(match mode {
            Relation::Contains => Relate::Bool(self.contains(other)?),
            Relation::Equal => {
                self.check_compatible(other)?;
                Relate::Bool(self == other)
            }
            Relation::Sum => Relate::Space(self.sum(other)?),
            Relation::Intersect => Relate::Space(self.intersect(other)?),
        })
    }

    /// Extends a list of independent vectors of `self` to a basis of `self`,
    /// drawing candidates first from `preferred` and then from the standard
    /// basis in index order.
    pub fn extend_basis(&self, start: &[Vec<Scalar>], preferred: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
        let mut chosen = start.to_vec();
        let mut acc = Subspace::span(self.field, self.ambient_dim, start.iter().cloned())
            .expect("start vectors in ambient space");
        let std = (0..self.ambient_dim).map(|i| unit_vector(self.field, self.ambient_dim, i));
        for cand in preferred.iter().cloned().chain(std) {
            if acc.dim() == self.dim() {
                break;
            }
            if self.contains_vector(&cand) && acc.insert(cand.clone()) {
                chosen.push(cand);
            }
        }
        chosen
    }
}

pub fn unit_vector(field: FieldSpec, m: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); m];
    v[i] = field.one();
    v
}
