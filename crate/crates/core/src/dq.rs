//! D_q structure: minimal q, brute-force identity checks, block
//! triangulation along the filtration `I^{q−1}V ⊂ … ⊂ IV ⊂ V`, type
//! detection and the maximality decision.

use std::fmt;

use crate::algebra::{column_span, IdealSpace, MatSpace, MatSubalgebra, MatrixSpace};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::Matrix;
use crate::subspace::Subspace;

/// Default cap on the number of `2q`-tuples [`check_dq_bruteforce`] evaluates.
pub const DEFAULT_BRUTE_FORCE_BUDGET: u128 = 1_000_000;

/// Block sizes `(n_1, …, n_q)` of a block upper-triangular shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockType {
    parts: Vec<usize>,
}

impl BlockType {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidInput("a block type needs at least one block".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidInput("block sizes must be positive".into()));
        }
        Ok(BlockType { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn q(&self) -> usize {
        self.parts.len()
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `N_i = n_1 + … + n_i` for `i = 1..q`.
    pub fn partial_sums(&self) -> Vec<usize> {
        self.parts
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }

    /// 0-based row index where block `i` starts.
    pub fn offset(&self, i: usize) -> usize {
        self.parts[..i].iter().sum()
    }

    /// Block index of a 0-based row/column index.
    pub fn block_of(&self, idx: usize) -> usize {
        let mut acc = 0;
        for (b, &p) in self.parts.iter().enumerate() {
            acc += p;
            if idx < acc {
                return b;
            }
        }
        panic!("index {idx} outside a matrix of size {}", self.n());
    }

    /// Zero below the block diagonal.
    pub fn is_block_upper(&self, m: &Matrix) -> bool {
        self.all_zero_where(m, |bi, bj| bi > bj)
    }

    /// Zero on and below the block diagonal.
    pub fn is_strictly_block_upper(&self, m: &Matrix) -> bool {
        self.all_zero_where(m, |bi, bj| bi >= bj)
    }

    fn all_zero_where(&self, m: &Matrix, pred: impl Fn(usize, usize) -> bool) -> bool {
        let n = self.n();
        if m.rows() != n || m.cols() != n {
            return false;
        }
        (0..n).all(|i| (0..n).all(|j| !pred(self.block_of(i), self.block_of(j)) || m.get(i, j).is_zero()))
    }

    /// `Σ_{i<j} n_i n_j`, the dimension of the strictly block-upper part.
    pub fn off_diagonal_dim(&self) -> usize {
        let mut total = 0;
        for i in 0..self.q() {
            for j in i + 1..self.q() {
                total += self.parts[i] * self.parts[j];
            }
        }
        total
    }
}

impl fmt::Display for BlockType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Output of [`block_triangulate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangulationResult {
    /// Columns are the adapted basis `v_1, …, v_n`.
    pub conjugator: Matrix,
    pub block_type: BlockType,
    /// `X⁻¹·A·X`.
    pub conjugated: MatSubalgebra,
    /// `X⁻¹·I·X`.
    pub conjugated_ideal: MatSpace,
    /// `dim I^{q−1}V, …, dim IV, dim V`.
    pub filtration_dims: Vec<usize>,
}

/// Least `q` such that `a` satisfies the D_q identity: 1 for commutative
/// algebras, otherwise the nilpotency index of the commutator ideal. `None`
/// when the commutator ideal is not nilpotent.
pub fn min_dq(a: &MatSubalgebra) -> Option<usize> {
    if a.is_commutative() {
        return Some(1);
    }
    a.commutator_ideal().nilpotency_index()
}

/// Evaluates `[x1,y1]···[xq,yq]` on every `2q`-tuple of basis elements.
/// The identity is multilinear, so vanishing on basis tuples is equivalent
/// to vanishing everywhere.
pub fn check_dq_bruteforce(a: &MatSubalgebra, q: usize, budget: u128) -> Result<bool> {
    if q == 0 {
        return Err(Error::InvalidInput("q must be at least 1".into()));
    }
    let basis = a.basis_matrices();
    let d = basis.len() as u128;
    let needed = u32::try_from(2 * q)
        .ok()
        .and_then(|e| d.checked_pow(e))
        .ok_or(Error::Overflow("tuple count"))?;
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut comms = Vec::with_capacity(basis.len() * basis.len());
    for x in &basis {
        for y in &basis {
            comms.push(x.commutator(y));
        }
    }
    Ok(all_products_vanish(None, &comms, q))
}

// Depth-first over commutator sequences. A zero prefix product covers every
// completion of that prefix at once.
fn all_products_vanish(prefix: Option<&Matrix>, comms: &[Matrix], remaining: usize) -> bool {
    if remaining == 0 {
        return prefix.is_some_and(Matrix::is_zero);
    }
    for c in comms {
        if c.is_zero() {
            continue;
        }
        let next = match prefix {
            Some(p) => p.mul(c),
            None => c.clone(),
        };
        if next.is_zero() {
            continue;
        }
        if !all_products_vanish(Some(&next), comms, remaining - 1) {
            return false;
        }
    }
    true
}

/// Conjugates `a` into block upper-triangular form adapted to the filtration
/// `0 ⊂ I^{q−1}V ⊂ … ⊂ IV ⊂ V` of a nonzero nilpotent ideal `I` of index `q`.
///
/// The adapted basis is built greedily: each filtration step keeps the basis
/// chosen so far and adds vectors from the canonical basis of the next space,
/// then standard basis vectors in index order.
pub fn block_triangulate(a: &MatSubalgebra, ideal: &IdealSpace) -> Result<TriangulationResult> {
    let ideal = if ideal.parent() == a { ideal.clone() } else { a.ideal_from_space(ideal.space().clone())? };
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let ladder = ideal.power_ladder();
    if !ladder.last().is_some_and(Subspace::is_zero) {
        return Err(Error::NotNilpotent);
    }
    let q = ladder.len();
    let (f, n) = (a.field(), a.n());

    // filtration[k] = I^{q−1−k}V for k = 0..q, ending with V itself.
    let mut filtration: Vec<Subspace> = ladder[..q - 1]
        .iter()
        .rev()
        .map(|p| column_span(&MatSpace { n, space: p.clone() }))
        .collect();
    filtration.push(Subspace::full(f, n));

    let mut chosen: Vec<Vec<Scalar>> = Vec::new();
    for w in &filtration {
        chosen = w.extend_basis(&chosen, w.basis());
    }
    let filtration_dims: Vec<usize> = filtration.iter().map(Subspace::dim).collect();
    let parts: Vec<usize> = filtration_dims
        .iter()
        .scan(0, |prev, &d| {
            let jump = d - *prev;
            *prev = d;
            Some(jump)
        })
        .collect();
    let block_type = BlockType::new(parts)?;
    let conjugator = Matrix::from_columns(f, &chosen)?;
    let conjugated = a.conjugate(&conjugator)?;
    let inv = conjugator.invert()?;
    let images: Vec<Matrix> = ideal.basis_matrices().iter().map(|m| inv.mul(m).mul(&conjugator)).collect();
    let conjugated_ideal = MatSpace::from_matrices(f, n, &images)?;

    debug_assert!(conjugated.basis_matrices().iter().all(|m| block_type.is_block_upper(m)));
    debug_assert!(conjugated_ideal.basis_matrices().iter().all(|m| block_type.is_strictly_block_upper(m)));
    Ok(TriangulationResult { conjugator, block_type, conjugated, conjugated_ideal, filtration_dims })
}

/// The filtration tuple `n_i = dim C^{q−i}V − dim C^{q−i+1}V` of the
/// commutator ideal `C`. `(n)` for commutative algebras, `None` when `a`
/// satisfies no D_q identity. Canonical for maximal D_q algebras and a
/// conjugation invariant in general.
pub fn detect_type(a: &MatSubalgebra) -> Option<BlockType> {
    let q = min_dq(a)?;
    if q == 1 {
        return Some(BlockType::new(vec![a.n()]).expect("n ≥ 1"));
    }
    let c = a.commutator_ideal();
    let ladder = c.power_ladder();
    let n = a.n();
    let mut dims: Vec<usize> =
        ladder[..q - 1].iter().rev().map(|p| column_span(&MatSpace { n, space: p.clone() }).dim()).collect();
    dims.push(n);
    let parts = dims
        .iter()
        .scan(0, |prev, &d| {
            let jump = d - *prev;
            *prev = d;
            Some(jump)
        })
        .collect();
    BlockType::new(parts).ok()
}

/// Which ideal drove a triangulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangulationIdeal {
    Commutator,
    Radical,
}

/// Diagonal-block data read off a block upper-triangular algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockStructure {
    /// Projections `Ā_ii` of the algebra onto each diagonal block.
    pub diagonal_blocks: Vec<MatSubalgebra>,
    /// `Σ dim Ā_ii + Σ_{i<j} n_i n_j`: the dimension the algebra would have
    /// with independent diagonal blocks and full off-diagonal blocks.
    pub block_type_dim: usize,
    /// Whether the algebra equals the block-type algebra built from its
    /// diagonal projections.
    pub independent: bool,
}

/// Splits a block upper-triangular algebra into its diagonal projections and
/// checks whether it is exactly the block-type algebra they generate.
pub fn block_structure(b: &MatSubalgebra, ty: &BlockType) -> Result<BlockStructure> {
    let (f, n) = (b.field(), b.n());
    if ty.n() != n {
        return Err(Error::ShapeMismatch(format!("type {ty} does not fit {n}x{n} matrices")));
    }
    let basis = b.basis_matrices();
    if !basis.iter().all(|m| ty.is_block_upper(m)) {
        return Err(Error::ShapeMismatch(format!("algebra is not block upper triangular for {ty}")));
    }
    let mut blocks = Vec::with_capacity(ty.q());
    for (i, &ni) in ty.parts().iter().enumerate() {
        let off = ty.offset(i);
        let proj: Vec<Matrix> = basis.iter().map(|m| m.submatrix(off, off, ni, ni)).collect();
        let space = MatSpace::from_matrices(f, ni, &proj)?.space;
        blocks.push(MatSubalgebra::from_space(ni, space)?);
    }
    let block_type_dim = blocks.iter().map(MatrixSpace::dim).sum::<usize>() + ty.off_diagonal_dim();

    let mut independent = block_type_dim == b.dim();
    if independent {
        'strips: for (i, blk) in blocks.iter().enumerate() {
            let off = ty.offset(i);
            for m in blk.basis_matrices() {
                let mut strip = Matrix::zeros(f, n, n);
                strip.set_block(off, off, &m);
                if !b.contains_matrix(&strip) {
                    independent = false;
                    break 'strips;
                }
            }
        }
    }
    if independent {
        'units: for r in 0..n {
            for c in 0..n {
                if ty.block_of(r) < ty.block_of(c) && !b.contains_matrix(&Matrix::unit(f, n, r, c)) {
                    independent = false;
                    break 'units;
                }
            }
        }
    }
    Ok(BlockStructure { diagonal_blocks: blocks, block_type_dim, independent })
}

/// Verdict of [`is_maximal_dq`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalityReport {
    pub maximal: bool,
    pub min_q: Option<usize>,
    pub witness: Option<TriangulationResult>,
    pub triangulated_by: Option<TriangulationIdeal>,
    pub structure: Option<BlockStructure>,
    /// Whether the per-block maximal-commutativity test was reached.
    pub blocks_checked: bool,
}

/// Decides whether `a` is a maximal D_q subalgebra of `M_n(K)` for its
/// minimal `q`: triangulate along the commutator ideal, then require the
/// result to be a block-type algebra whose diagonal blocks are each equal to
/// their own centralizer.
///
/// A commutative algebra (q = 1) is maximal iff it is self-centralizing.
/// When `a` satisfies no D_q identity the answer is `false`; the report then
/// still carries a radical triangulation when one is available.
pub fn is_maximal_dq(a: &MatSubalgebra) -> MaximalityReport {
    let min_q = min_dq(a);
    match min_q {
        None => {
            let witness = a.radical().ok().filter(|j| !j.is_zero()).and_then(|j| block_triangulate(a, &j).ok());
            let structure = witness.as_ref().and_then(|w| block_structure(&w.conjugated, &w.block_type).ok());
            MaximalityReport {
                maximal: false,
                min_q,
                triangulated_by: witness.as_ref().map(|_| TriangulationIdeal::Radical),
                witness,
                structure,
                blocks_checked: false,
            }
        }
        Some(1) => {
            let ty = BlockType::new(vec![a.n()]).expect("n ≥ 1");
            let structure = block_structure(a, &ty).ok();
            MaximalityReport {
                maximal: a.centralizer() == *a,
                min_q,
                witness: None,
                triangulated_by: None,
                structure,
                blocks_checked: true,
            }
        }
        Some(_) => {
            let c = a.commutator_ideal();
            let w = block_triangulate(a, &c).expect("commutator ideal of a D_q algebra is nilpotent and nonzero");
            let structure = block_structure(&w.conjugated, &w.block_type).expect("triangulated algebra is block upper");
            let (maximal, blocks_checked) = if structure.independent {
                let ok = structure.diagonal_blocks.iter().all(|blk| blk.is_commutative() && blk.centralizer() == *blk);
                (ok, true)
            } else {
                (false, false)
            };
            MaximalityReport {
                maximal,
                min_q,
                witness: Some(w),
                triangulated_by: Some(TriangulationIdeal::Commutator),
                structure: Some(structure),
                blocks_checked,
            }
        }
    }
}
