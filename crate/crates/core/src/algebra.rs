//! Unital subalgebras of `M_n(K)` and their ideals.
//!
//! An algebra is stored as a canonical [`Subspace`] of `K^{n²}` under the
//! row-major flattening of matrices, so equality of algebras is set equality.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;
use crate::subspace::Subspace;

/// Anything that is a linear space of `n × n` matrices.
pub trait MatrixSpace {
    fn n(&self) -> usize;
    fn space(&self) -> &Subspace;

    fn field(&self) -> FieldSpec {
        self.space().field()
    }

    fn dim(&self) -> usize {
        self.space().dim()
    }

    fn basis_matrices(&self) -> Vec<Matrix> {
        let (f, n) = (self.field(), self.n());
        self.space().basis().iter().map(|v| Matrix::from_flat(f, n, v.clone())).collect()
    }

    fn contains_matrix(&self, m: &Matrix) -> bool {
        m.rows() == self.n() && m.cols() == self.n() && self.space().contains_vector(m.entries())
    }
}

/// A bare matrix space with no algebraic guarantees (products, powers).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatSpace {
    pub n: usize,
    pub space: Subspace,
}

impl MatrixSpace for MatSpace {
    fn n(&self) -> usize {
        self.n
    }
    fn space(&self) -> &Subspace {
        &self.space
    }
}

impl MatSpace {
    pub fn zero(field: FieldSpec, n: usize) -> Self {
        MatSpace { n, space: Subspace::zero(field, n * n) }
    }

    pub fn from_matrices<'a>(field: FieldSpec, n: usize, ms: impl IntoIterator<Item = &'a Matrix>) -> Result<Self> {
        let mut vs = Vec::new();
        for m in ms {
            check_square(field, n, m)?;
            vs.push(m.to_flat());
        }
        Ok(MatSpace { n, space: Subspace::span(field, n * n, vs)? })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatSubalgebra {
    n: usize,
    space: Subspace,
    unital: bool,
}

impl MatrixSpace for MatSubalgebra {
    fn n(&self) -> usize {
        self.n
    }
    fn space(&self) -> &Subspace {
        &self.space
    }
}

fn check_square(field: FieldSpec, n: usize, m: &Matrix) -> Result<()> {
    if m.field() != field {
        return Err(Error::FieldMismatch);
    }
    if m.rows() != n || m.cols() != n {
        return Err(Error::ShapeMismatch(format!(
            "expected {n}x{n}, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

impl MatSubalgebra {
    /// Wraps a span of matrices, verifying multiplicative closure.
    pub fn from_basis(field: FieldSpec, n: usize, basis: &[Matrix]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("matrix size must be positive".into()));
        }
        let ms = MatSpace::from_matrices(field, n, basis)?;
        Self::from_space(n, ms.space)
    }

    /// Wraps a canonical subspace of `K^{n²}`, verifying multiplicative closure.
    pub fn from_space(n: usize, space: Subspace) -> Result<Self> {
        if space.ambient_dim() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "subspace of K^{} is not a space of {n}x{n} matrices",
                space.ambient_dim()
            )));
        }
        let candidate = MatSpace { n, space };
        let basis = candidate.basis_matrices();
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                if !candidate.contains_matrix(&a.mul(b)) {
                    return Err(Error::ClosureViolation { left: i, right: j });
                }
            }
        }
        let unital = candidate.contains_matrix(&Matrix::identity(candidate.field(), n));
        Ok(MatSubalgebra { n, space: candidate.space, unital })
    }

    /// Internal constructor for spaces already known to be closed.
    pub(crate) fn from_closed_space(n: usize, space: Subspace) -> Self {
        let unital = space.contains_vector(Matrix::identity(space.field(), n).entries());
        debug_assert!(Self::from_space(n, space.clone()).is_ok());
        MatSubalgebra { n, space, unital }
    }

    /// Smallest unital subalgebra containing `generators`, by saturating
    /// `span{I, generators}` under products of basis pairs until the
    /// dimension is stable.
    pub fn unital_closure(field: FieldSpec, n: usize, generators: &[Matrix]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("matrix size must be positive".into()));
        }
        let mut seed = vec![Matrix::identity(field, n)];
        seed.extend(generators.iter().cloned());
        let mut cur = MatSpace::from_matrices(field, n, &seed)?;
        loop {
            let basis = cur.basis_matrices();
            let mut next = cur.space.clone();
            for a in &basis {
                for b in &basis {
                    next.insert(a.mul(b).to_flat());
                }
            }
            if next.dim() == cur.dim() {
                return Ok(MatSubalgebra { n, space: cur.space, unital: true });
            }
            cur.space = next;
        }
    }

    pub fn full(field: FieldSpec, n: usize) -> Self {
        MatSubalgebra { n, space: Subspace::full(field, n * n), unital: true }
    }

    pub fn scalars(field: FieldSpec, n: usize) -> Self {
        let space = Subspace::span(field, n * n, [Matrix::identity(field, n).to_flat()]).expect("identity");
        MatSubalgebra { n, space, unital: true }
    }

    pub fn is_unital(&self) -> bool {
        self.unital
    }

    /// Whether every pair of basis elements commutes.
    pub fn is_commutative(&self) -> bool {
        let b = self.basis_matrices();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                if !b[i].commutator(&b[j]).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Smallest two-sided ideal containing `seed`.
    pub fn two_sided_ideal(&self, seed: &[Matrix]) -> Result<IdealSpace> {
        for s in seed {
            check_square(self.field(), self.n, s)?;
            if !self.contains_matrix(s) {
                return Err(Error::NotInAlgebra);
            }
        }
        let parent_basis = self.basis_matrices();
        let mut cur = MatSpace::from_matrices(self.field(), self.n, seed)?.space;
        loop {
            let mut next = cur.clone();
            for x in (MatSpace { n: self.n, space: cur.clone() }).basis_matrices() {
                for a in &parent_basis {
                    next.insert(a.mul(&x).to_flat());
                    next.insert(x.mul(a).to_flat());
                }
            }
            if next.dim() == cur.dim() {
                break;
            }
            cur = next;
        }
        Ok(IdealSpace { parent: self.clone(), space: cur })
    }

    /// The ideal generated by all commutators; basis pairs suffice by
    /// bilinearity.
    pub fn commutator_ideal(&self) -> IdealSpace {
        let b = self.basis_matrices();
        let mut seed = Vec::new();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                let c = b[i].commutator(&b[j]);
                if !c.is_zero() {
                    seed.push(c);
                }
            }
        }
        self.two_sided_ideal(&seed).expect("commutators lie in the algebra")
    }

    /// Jacobson radical as the kernel of the trace form `(x, y) ↦ tr(xy)`
    /// restricted to the algebra. Valid in characteristic 0 or `p > n`.
    pub fn radical(&self) -> Result<IdealSpace> {
        let f = self.field();
        if let FieldSpec::Prime(p) = f {
            if p as u128 <= self.n as u128 {
                return Err(Error::UnsupportedCharacteristic { p, n: self.n });
            }
        }
        let b = self.basis_matrices();
        let d = b.len();
        let mut gram = Matrix::zeros(f, d, d);
        for i in 0..d {
            for j in i..d {
                let t = b[i].mul(&b[j]).trace();
                gram.set(j, i, t.clone());
                gram.set(i, j, t);
            }
        }
        let members = gram.kernel().into_iter().map(|coeffs| {
            let mut acc = Matrix::zeros(f, self.n, self.n);
            for (c, m) in coeffs.iter().zip(&b) {
                if !c.is_zero() {
                    acc = acc.add(&m.scale(c));
                }
            }
            acc.to_flat()
        });
        let space = Subspace::span(f, self.n * self.n, members)?;
        Ok(IdealSpace { parent: self.clone(), space })
    }

    /// `{X ∈ M_n(K) : Xb = bX for every basis element b}`, the nullspace of
    /// the stacked commutation equations.
    pub fn centralizer(&self) -> MatSubalgebra {
        let (f, n) = (self.field(), self.n);
        let basis = self.basis_matrices();
        let mut eqs = Matrix::zeros(f, (basis.len() * n * n).max(1), n * n);
        let mut row = 0;
        for b in &basis {
            for i in 0..n {
                for j in 0..n {
                    // (Xb − bX)_{ij} = Σ_k X_{ik} b_{kj} − Σ_k b_{ik} X_{kj}
                    for k in 0..n {
                        let idx = i * n + k;
                        let v = eqs.get(row, idx) + b.get(k, j);
                        eqs.set(row, idx, v);
                        let idx = k * n + j;
                        let v = eqs.get(row, idx) - b.get(i, k);
                        eqs.set(row, idx, v);
                    }
                    row += 1;
                }
            }
        }
        let space = Subspace::span(f, n * n, eqs.kernel()).expect("kernel vectors have length n²");
        MatSubalgebra { n, space, unital: true }
    }

    /// `X⁻¹·A·X`.
    pub fn conjugate(&self, x: &Matrix) -> Result<MatSubalgebra> {
        check_square(self.field(), self.n, x)?;
        let inv = x.invert()?;
        let images: Vec<Matrix> = self.basis_matrices().iter().map(|b| inv.mul(b).mul(x)).collect();
        let space = MatSpace::from_matrices(self.field(), self.n, &images)?.space;
        Ok(MatSubalgebra { n: self.n, space, unital: self.unital })
    }

    /// The whole algebra viewed as an ideal of itself.
    pub fn as_ideal(&self) -> IdealSpace {
        IdealSpace { parent: self.clone(), space: self.space.clone() }
    }

    /// Checks that `space` is a two-sided ideal of this algebra.
    pub fn ideal_from_space(&self, space: Subspace) -> Result<IdealSpace> {
        if space.field() != self.field() {
            return Err(Error::FieldMismatch);
        }
        if space.ambient_dim() != self.n * self.n {
            return Err(Error::DimensionMismatch("ideal lives in a different matrix size".into()));
        }
        if !self.space.contains(&space)? {
            return Err(Error::NotAnIdeal);
        }
        let cand = MatSpace { n: self.n, space };
        for x in cand.basis_matrices() {
            for a in self.basis_matrices() {
                if !cand.contains_matrix(&a.mul(&x)) || !cand.contains_matrix(&x.mul(&a)) {
                    return Err(Error::NotAnIdeal);
                }
            }
        }
        Ok(IdealSpace { parent: self.clone(), space: cand.space })
    }
}

/// A two-sided ideal of a [`MatSubalgebra`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSpace {
    parent: MatSubalgebra,
    space: Subspace,
}

impl MatrixSpace for IdealSpace {
    fn n(&self) -> usize {
        self.parent.n
    }
    fn space(&self) -> &Subspace {
        &self.space
    }
}

impl IdealSpace {
    pub fn parent(&self) -> &MatSubalgebra {
        &self.parent
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    /// `I^k` for `k ≥ 1`, each computed as `I^{k−1}·I`.
    pub fn power(&self, k: usize) -> Result<Subspace> {
        if k == 0 {
            return Err(Error::InvalidInput("ideal powers start at 1".into()));
        }
        let mut cur = self.space.clone();
        for _ in 1..k {
            cur = product_space(&MatSpace { n: self.n(), space: cur }, self)?;
        }
        Ok(cur)
    }

    /// Least `q ≥ 1` with `I^q = 0`, or `None` when the powers stabilise at a
    /// nonzero space. Powers of an ideal are nested, so at most `n` products
    /// are needed before either happens.
    pub fn nilpotency_index(&self) -> Option<usize> {
        let ladder = self.power_ladder();
        ladder.last().filter(|s| s.is_zero()).map(|_| ladder.len().max(1))
    }

    /// `[I, I², …]` up to and including the first zero power, or up to the
    /// first repeated power when `I` is not nilpotent.
    pub fn power_ladder(&self) -> Vec<Subspace> {
        if self.space.is_zero() {
            return vec![self.space.clone()];
        }
        let mut ladder = vec![self.space.clone()];
        loop {
            let last = ladder.last().expect("nonempty");
            let next = product_space(&MatSpace { n: self.n(), space: last.clone() }, self)
                .expect("same field and size");
            if next.is_zero() {
                ladder.push(next);
                return ladder;
            }
            if next.dim() == last.dim() {
                return ladder;
            }
            ladder.push(next);
        }
    }
}

/// `span{x·y : x ∈ basis(a), y ∈ basis(b)}`.
pub fn product_space(a: &impl MatrixSpace, b: &impl MatrixSpace) -> Result<Subspace> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch(format!("matrix sizes {} and {}", a.n(), b.n())));
    }
    let (xs, ys) = (a.basis_matrices(), b.basis_matrices());
    let mut out = Subspace::zero(a.field(), a.n() * a.n());
    for x in &xs {
        for y in &ys {
            out.insert(x.mul(y).to_flat());
        }
    }
    Ok(out)
}

/// `S·W = span{M·w}` for a matrix space `S` and a subspace `W ⊆ K^n`.
pub fn apply_to_subspace(s: &impl MatrixSpace, w: &Subspace) -> Subspace {
    let mut out = Subspace::zero(s.field(), s.n());
    for m in s.basis_matrices() {
        for v in w.basis() {
            out.insert(m.apply(v));
        }
    }
    out
}

/// `S·K^n`, the span of all columns of all elements of `S`.
pub fn column_span(s: &impl MatrixSpace) -> Subspace {
    let mut out = Subspace::zero(s.field(), s.n());
    for m in s.basis_matrices() {
        for j in 0..s.n() {
            out.insert(m.column(j));
        }
    }
    out
}

/// Sum of `c_i · m_i`.
pub fn linear_combination(field: FieldSpec, n: usize, coeffs: &[Scalar], ms: &[Matrix]) -> Matrix {
    let mut acc = Matrix::zeros(field, n, n);
    for (c, m) in coeffs.iter().zip(ms) {
        if !c.is_zero() {
            acc = acc.add(&m.scale(c));
        }
    }
    acc
}
