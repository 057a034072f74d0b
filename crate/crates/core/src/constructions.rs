//! Constructors for the concrete algebras: canonical maximum-dimension
//! commutative algebras `C^k_n`, block-type algebras, the balanced
//! maximum-dimension D_q examples and two named examples.

use std::fmt;

use crate::algebra::{MatSpace, MatSubalgebra, MatrixSpace};
use crate::classification::admissible_k;
use crate::dq::BlockType;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matrix::Matrix;
use crate::subspace::Subspace;

/// Names the canonical commutative algebra `C^k_n(K)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalBlockId {
    pub n: usize,
    pub k: usize,
}

impl CanonicalBlockId {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n == 0 || !admissible_k(n).contains(&k) {
            return Err(Error::InadmissibleId { n, k });
        }
        Ok(CanonicalBlockId { n, k })
    }

    /// For odd `n ≥ 3`, `C^1_n` and `C^2_n` are isomorphic as abstract
    /// algebras (transpose the rectangular strip) but not conjugate. This
    /// is metadata only; conjugacy decisions never use it.
    pub fn abstract_isomorphism_partner(&self) -> Option<CanonicalBlockId> {
        match (self.n % 2, self.n >= 3, self.k) {
            (1, true, 1) => Some(CanonicalBlockId { n: self.n, k: 2 }),
            (1, true, 2) => Some(CanonicalBlockId { n: self.n, k: 1 }),
            _ => None,
        }
    }

    /// For algebras of the form `K·I + [[0_r, M_{r×s}], [0, 0_s]]`, the
    /// strip height `r`.
    pub fn strip_rows(&self) -> Option<usize> {
        let half = self.n / 2;
        match (self.n, self.k) {
            (_, 1) => Some(half),
            (n, 2) if n % 2 == 1 => Some(half + 1),
            _ => None,
        }
    }
}

impl fmt::Display for CanonicalBlockId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C^{}_{}", self.k, self.n)
    }
}

/// `K·I_n + [[0_r, M_{r×(n−r)}], [0, 0]]`.
fn strip_algebra(field: FieldSpec, n: usize, r: usize) -> MatSubalgebra {
    let mut basis = vec![Matrix::identity(field, n)];
    for i in 0..r {
        for j in r..n {
            basis.push(Matrix::unit(field, n, i, j));
        }
    }
    span_closed(field, n, &basis)
}

fn span_closed(field: FieldSpec, n: usize, basis: &[Matrix]) -> MatSubalgebra {
    let space = MatSpace::from_matrices(field, n, basis).expect("well-formed basis").space;
    MatSubalgebra::from_closed_space(n, space)
}

/// The canonical maximum-dimension commutative subalgebra `C^k_n(K)`, of
/// dimension `⌊n²/4⌋ + 1`.
pub fn canonical_commutative(field: FieldSpec, id: CanonicalBlockId) -> Result<MatSubalgebra> {
    let id = CanonicalBlockId::new(id.n, id.k)?;
    let n = id.n;
    if let Some(r) = id.strip_rows() {
        return Ok(strip_algebra(field, n, r));
    }
    let e = |i: usize, j: usize| Matrix::unit(field, n, i - 1, j - 1);
    let alg = match (n, id.k) {
        (2, 2) => span_closed(field, 2, &[e(1, 1), e(2, 2)]),
        (3, 3) => span_closed(field, 3, &[Matrix::identity(field, 3), e(1, 2).add(&e(2, 3)), e(1, 3)]),
        (3, 4) => span_closed(field, 3, &[e(1, 1).add(&e(2, 2)), e(3, 3), e(1, 2)]),
        (3, 5) => span_closed(field, 3, &[e(1, 1), e(2, 2), e(3, 3)]),
        _ => unreachable!("admissible ids are covered"),
    };
    Ok(alg)
}

/// Every admissible id with `n ≤ max_n`, ordered by `(n, k)`.
pub fn all_canonical_ids(max_n: usize) -> Vec<CanonicalBlockId> {
    (1..=max_n).flat_map(|n| admissible_k(n).into_iter().map(move |k| CanonicalBlockId { n, k })).collect()
}

/// The algebra with diagonal blocks `blocks[i]`, full off-diagonal blocks
/// `M_{n_i×n_j}` above the diagonal and zeros below.
pub fn block_type_algebra(ty: &BlockType, blocks: &[MatSubalgebra]) -> Result<MatSubalgebra> {
    if blocks.len() != ty.q() {
        return Err(Error::ShapeMismatch(format!("{} blocks for type {ty}", blocks.len())));
    }
    let field = blocks[0].field();
    for (i, (b, &ni)) in blocks.iter().zip(ty.parts()).enumerate() {
        if b.n() != ni {
            return Err(Error::ShapeMismatch(format!("block {} is {}x{}, type wants {ni}", i + 1, b.n(), b.n())));
        }
        if b.field() != field {
            return Err(Error::FieldMismatch);
        }
    }
    let n = ty.n();
    let mut basis = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        let off = ty.offset(i);
        for m in b.basis_matrices() {
            let mut strip = Matrix::zeros(field, n, n);
            strip.set_block(off, off, &m);
            basis.push(strip);
        }
    }
    for r in 0..n {
        for c in 0..n {
            if ty.block_of(r) < ty.block_of(c) {
                basis.push(Matrix::unit(field, n, r, c));
            }
        }
    }
    MatSubalgebra::from_basis(field, n, &basis)
}

/// Block-type algebra with canonical diagonal blocks.
pub fn canonical_block_type_algebra(field: FieldSpec, ids: &[CanonicalBlockId]) -> Result<MatSubalgebra> {
    let ty = BlockType::new(ids.iter().map(|id| id.n).collect())?;
    let blocks = ids.iter().map(|&id| canonical_commutative(field, id)).collect::<Result<Vec<_>>>()?;
    block_type_algebra(&ty, &blocks)
}

/// Block-type algebra with every diagonal block the full `M_{n_i}(K)`.
pub fn full_type_algebra(field: FieldSpec, ty: &BlockType) -> MatSubalgebra {
    let blocks: Vec<MatSubalgebra> = ty.parts().iter().map(|&ni| MatSubalgebra::full(field, ni)).collect();
    block_type_algebra(ty, &blocks).expect("full blocks always fit")
}

/// `U_n(K)`, the upper triangular matrices.
pub fn upper_triangular(field: FieldSpec, n: usize) -> MatSubalgebra {
    full_type_algebra(field, &BlockType::new(vec![1; n]).expect("n ≥ 1"))
}

/// The balanced type with `q − r` parts `⌊n/q⌋` followed by `r` parts
/// `⌊n/q⌋ + 1`, where `n = q⌊n/q⌋ + r`.
pub fn balanced_type(n: usize, q: usize) -> Result<BlockType> {
    if q == 0 || q > n {
        return Err(Error::InvalidQ { n, q });
    }
    let (m, r) = (n / q, n % q);
    let mut parts = vec![m; q - r];
    parts.extend(std::iter::repeat_n(m + 1, r));
    BlockType::new(parts)
}

/// A D_q subalgebra of `M_n(K)` of maximum dimension: the balanced type with
/// `C^1` blocks.
pub fn max_dim_example(field: FieldSpec, n: usize, q: usize) -> Result<MatSubalgebra> {
    if q < 2 || q > n {
        return Err(Error::InvalidQ { n, q });
    }
    let ty = balanced_type(n, q)?;
    let ids: Vec<CanonicalBlockId> = ty.parts().iter().map(|&ni| CanonicalBlockId { n: ni, k: 1 }).collect();
    canonical_block_type_algebra(field, &ids)
}

/// The staircase space: blocks `(a, b)` with `b − a ≥ i` full, all else zero.
/// For a block-type algebra with self-centralizing commutative blocks this is
/// the `i`-th power of the commutator ideal.
pub fn staircase_space(field: FieldSpec, ty: &BlockType, i: usize) -> MatSpace {
    let n = ty.n();
    let mut s = Subspace::zero(field, n * n);
    for r in 0..n {
        for c in 0..n {
            if ty.block_of(c) >= ty.block_of(r) + i {
                let v = Matrix::unit(field, n, r, c).to_flat();
                s = s.sum(&Subspace::span(field, n * n, [v]).expect("unit")).expect("same ambient");
            }
        }
    }
    MatSpace { n, space: s }
}

/// Named algebras reproduced as test fixtures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedExample {
    /// `M_2(K[x]/(x²))` embedded in `M_4(K)` via `a + b·x ↦ [[a, b], [0, a]]`.
    M2DualNumbers,
    /// A 16-parameter subalgebra of `U_9(K)` with dependent diagonal blocks.
    NineByNine,
}

impl NamedExample {
    pub fn slug(&self) -> &'static str {
        match self {
            NamedExample::M2DualNumbers => "m2-dual-numbers",
            NamedExample::NineByNine => "nine-by-nine",
        }
    }

    pub fn from_slug(s: &str) -> Option<Self> {
        match s {
            "m2-dual-numbers" => Some(NamedExample::M2DualNumbers),
            "nine-by-nine" => Some(NamedExample::NineByNine),
            _ => None,
        }
    }
}

pub fn named_example(field: FieldSpec, id: NamedExample) -> MatSubalgebra {
    match id {
        NamedExample::M2DualNumbers => m2_dual_numbers(field),
        NamedExample::NineByNine => nine_by_nine(field),
    }
}

fn m2_dual_numbers(field: FieldSpec) -> MatSubalgebra {
    // Entry (i, j) of the 2×2 outer matrix occupies rows/cols 2i, 2i+1.
    let mut basis = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            let (r, c) = (2 * i, 2 * j);
            let a = Matrix::unit(field, 4, r, c).add(&Matrix::unit(field, 4, r + 1, c + 1));
            basis.push(a);
            basis.push(Matrix::unit(field, 4, r, c + 1));
        }
    }
    MatSubalgebra::from_basis(field, 4, &basis).expect("M_2(K[x]/(x^2)) is closed")
}

fn nine_by_nine(field: FieldSpec) -> MatSubalgebra {
    // Each parameter is a list of (row, col) positions (1-based) holding it.
    const PATTERN: [&[(usize, usize)]; 16] = [
        // a: the diagonal
        &[(1, 1), (2, 2), (3, 3), (4, 4), (5, 5), (6, 6), (7, 7), (8, 8), (9, 9)],
        // b, c, d: repeated in the three diagonal blocks
        &[(1, 2), (4, 5), (7, 8)],
        &[(1, 3), (4, 6), (7, 9)],
        &[(2, 3), (5, 6), (8, 9)],
        // e, f, g, h: block (1,2)
        &[(1, 4), (2, 5), (3, 6)],
        &[(1, 5)],
        &[(1, 6)],
        &[(2, 6)],
        // p, q, r, s: block (2,3)
        &[(4, 7), (5, 8), (6, 9)],
        &[(4, 8)],
        &[(4, 9)],
        &[(5, 9)],
        // t, u, v, w: block (1,3)
        &[(1, 7), (2, 8), (3, 9)],
        &[(1, 8)],
        &[(1, 9)],
        &[(2, 9)],
    ];
    let basis: Vec<Matrix> = PATTERN
        .iter()
        .map(|cells| {
            let mut m = Matrix::zeros(field, 9, 9);
            for &(i, j) in cells.iter() {
                m.set(i - 1, j - 1, field.one());
            }
            m
        })
        .collect();
    MatSubalgebra::from_basis(field, 9, &basis).expect("nine-by-nine transcription is closed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classification::schur_bound;

    const Q: FieldSpec = FieldSpec::Rational;

    #[test]
    fn small_canonical_algebras() {
        let k = canonical_commutative(Q, CanonicalBlockId { n: 1, k: 1 }).unwrap();
        assert_eq!(k.dim(), 1);
        let c4 = canonical_commutative(Q, CanonicalBlockId { n: 4, k: 1 }).unwrap();
        assert_eq!(c4.dim(), 5);
        let c33 = canonical_commutative(Q, CanonicalBlockId { n: 3, k: 3 }).unwrap();
        let e = |i: usize, j: usize| Matrix::unit(Q, 3, i - 1, j - 1);
        let expected =
            MatSubalgebra::from_basis(Q, 3, &[Matrix::identity(Q, 3), e(1, 2).add(&e(2, 3)), e(1, 3)]).unwrap();
        assert_eq!(c33, expected);
    }

    #[test]
    fn canonical_algebras_are_max_dim_commutative() {
        for id in all_canonical_ids(7) {
            let c = canonical_commutative(Q, id).unwrap();
            assert_eq!(c.dim(), schur_bound(id.n), "{id}");
            assert!(c.is_commutative(), "{id}");
            assert!(c.is_unital(), "{id}");
        }
    }

    #[test]
    fn inadmissible_ids_are_rejected() {
        assert_eq!(CanonicalBlockId::new(4, 2), Err(Error::InadmissibleId { n: 4, k: 2 }));
        assert!(CanonicalBlockId::new(3, 6).is_err());
        assert!(canonical_commutative(Q, CanonicalBlockId { n: 2, k: 3 }).is_err());
    }

    #[test]
    fn block_type_examples() {
        let k = canonical_commutative(Q, CanonicalBlockId { n: 1, k: 1 }).unwrap();
        let u2 = block_type_algebra(&BlockType::new(vec![1, 1]).unwrap(), &[k.clone(), k]).unwrap();
        assert_eq!(u2, upper_triangular(Q, 2));
        assert_eq!(u2.dim(), 3);
        let ids = [CanonicalBlockId { n: 2, k: 1 }, CanonicalBlockId { n: 3, k: 1 }];
        assert_eq!(canonical_block_type_algebra(Q, &ids).unwrap().dim(), 11);
        let full = full_type_algebra(Q, &BlockType::new(vec![2, 2]).unwrap());
        assert_eq!(full.dim(), 12);
    }

    #[test]
    fn block_type_shape_errors() {
        let k = MatSubalgebra::scalars(Q, 2);
        let ty = BlockType::new(vec![1, 1]).unwrap();
        assert!(matches!(block_type_algebra(&ty, &[k.clone(), k.clone()]), Err(Error::ShapeMismatch(_))));
        assert!(matches!(block_type_algebra(&ty, &[k]), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn full_type_extremes() {
        assert_eq!(full_type_algebra(Q, &BlockType::new(vec![3]).unwrap()), MatSubalgebra::full(Q, 3));
        assert_eq!(upper_triangular(Q, 4).dim(), 10);
    }

    #[test]
    fn max_dim_examples() {
        assert_eq!(balanced_type(5, 2).unwrap().parts(), &[2, 3]);
        assert_eq!(max_dim_example(Q, 5, 2).unwrap().dim(), 11);
        assert_eq!(balanced_type(14, 5).unwrap().parts(), &[2, 3, 3, 3, 3]);
        assert_eq!(max_dim_example(Q, 2, 2).unwrap(), upper_triangular(Q, 2));
        assert!(matches!(max_dim_example(Q, 3, 1), Err(Error::InvalidQ { .. })));
        assert!(matches!(max_dim_example(Q, 3, 4), Err(Error::InvalidQ { .. })));
    }

    #[test]
    fn named_examples_have_expected_dimensions() {
        assert_eq!(named_example(Q, NamedExample::M2DualNumbers).dim(), 8);
        assert_eq!(named_example(Q, NamedExample::NineByNine).dim(), 16);
        for ex in [NamedExample::M2DualNumbers, NamedExample::NineByNine] {
            assert_eq!(NamedExample::from_slug(ex.slug()), Some(ex));
        }
    }

    #[test]
    fn isomorphism_partner_metadata() {
        let c = CanonicalBlockId::new(5, 1).unwrap();
        assert_eq!(c.abstract_isomorphism_partner(), Some(CanonicalBlockId { n: 5, k: 2 }));
        assert_eq!(CanonicalBlockId::new(4, 1).unwrap().abstract_isomorphism_partner(), None);
        assert_eq!(CanonicalBlockId::new(3, 3).unwrap().abstract_isomorphism_partner(), None);
    }
}
