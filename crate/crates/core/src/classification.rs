//! Dimension formulas, maximum-dimension type enumeration, class counting,
//! canonical block recognition and the conjugacy decision for block-type
//! D_q algebras with maximum-dimension commutative diagonal blocks.
//!
//! Every classification statement here is exact only over algebraically
//! closed fields. Computations run over Q or GF(p), so results carry
//! [`field_caveat`].

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{column_span, product_space, IdealSpace, MatSpace, MatSubalgebra, MatrixSpace};
use crate::constructions::{canonical_commutative, CanonicalBlockId};
use crate::dq::{block_structure, block_triangulate, detect_type, min_dq, BlockType};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;
use crate::subspace::Subspace;

/// Whether classification claims over `field` hold only under the
/// algebraically closed reading. True for every field this crate supports.
pub fn field_caveat(_field: FieldSpec) -> bool {
    true
}

/// `⌊n²/4⌋ + 1`, the largest dimension of a commutative subalgebra of `M_n`.
pub fn schur_bound(n: usize) -> usize {
    n * n / 4 + 1
}

/// `q + Σ ⌊n_i²/4⌋ + Σ_{i<j} n_i n_j`.
pub fn type_dimension(ty: &BlockType) -> usize {
    ty.q() + ty.parts().iter().map(|&p| p * p / 4).sum::<usize>() + ty.off_diagonal_dim()
}

/// Largest dimension of a D_q subalgebra of `M_n`, in closed form with
/// `n = q·m + r`.
pub fn max_dim_formula(n: usize, q: usize) -> Result<usize> {
    if q == 0 || q > n {
        return Err(Error::InvalidQ { n, q });
    }
    let (m, r) = (n / q, n % q);
    let off = (n * n - (q - r) * m * m - r * (m + 1) * (m + 1)) / 2;
    Ok(off + q + (q - r) * (m * m / 4) + r * ((m + 1) * (m + 1) / 4))
}

/// Lower bound on the dimension of a faithful module of a D_q algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomokosBound {
    /// `(dim A − q) / (1/2 − 1/(4q))`.
    pub radicand: BigRational,
    /// Least integer `k` with `k² ≥ radicand`.
    pub bound: u64,
}

pub fn domokos_module_bound(dim_a: usize, q: usize) -> Result<DomokosBound> {
    if q == 0 || dim_a < q {
        return Err(Error::InvalidInput(format!("need q ≥ 1 and dim ≥ q, got dim {dim_a}, q {q}")));
    }
    let num = BigInt::from((dim_a - q) as u64) * BigInt::from(4 * q as u64);
    let den = BigInt::from(2 * q as u64 - 1);
    let radicand = BigRational::new(num.clone(), den.clone());
    let target = num.div_ceil(&den);
    let mut k = target.sqrt();
    if &k * &k < target {
        k += 1;
    }
    let bound = k.to_u64().ok_or(Error::Overflow("module bound"))?;
    Ok(DomokosBound { radicand, bound })
}

/// `k` values for which `C^k_n` is defined.
pub fn admissible_k(n: usize) -> Vec<usize> {
    match n {
        0 => vec![],
        1 => vec![1],
        2 => vec![1, 2],
        3 => vec![1, 2, 3, 4, 5],
        n if n % 2 == 0 => vec![1],
        _ => vec![1, 2],
    }
}

/// Which parameter family produced the tuples of a [`TypeEnumeration`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationCase {
    /// `⌊n/q⌋` even; tuples indexed by `s`.
    EvenQuotient,
    /// `⌊n/q⌋` odd; tuples indexed by `t`.
    OddQuotient,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeEntry {
    /// Nondecreasing representative.
    pub tuple: BlockType,
    /// Number of distinct orderings of the tuple.
    pub ordered_count: u128,
    /// The value of `s` or `t` that generated the tuple.
    pub parameter: usize,
}

/// All block types of maximum dimension for given `n` and `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeEnumeration {
    pub n: usize,
    pub q: usize,
    pub m: usize,
    pub r: usize,
    pub case: EnumerationCase,
    pub entries: Vec<TypeEntry>,
}

impl TypeEnumeration {
    pub fn sorted_tuples(&self) -> Vec<&BlockType> {
        self.entries.iter().map(|e| &e.tuple).collect()
    }

    pub fn ordered_counts(&self) -> Vec<u128> {
        self.entries.iter().map(|e| e.ordered_count).collect()
    }

    pub fn total_ordered(&self) -> u128 {
        self.entries.iter().map(|e| e.ordered_count).sum()
    }

    /// Every ordering of every tuple, each tuple's orderings in lexicographic
    /// order.
    pub fn ordered_tuples(&self) -> Vec<BlockType> {
        let mut out = Vec::new();
        for e in &self.entries {
            let mut p = e.tuple.parts().to_vec();
            loop {
                out.push(BlockType::new(p.clone()).expect("positive parts"));
                if !next_permutation(&mut p) {
                    break;
                }
            }
        }
        out
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Number of distinct orderings of `parts`.
pub fn multiset_permutations(parts: &[usize]) -> Result<u128> {
    let mut counts: BTreeMap<usize, u128> = BTreeMap::new();
    for &p in parts {
        *counts.entry(p).or_default() += 1;
    }
    let mut total: u128 = 0;
    let mut acc: u128 = 1;
    for &c in counts.values() {
        for i in 1..=c {
            total += 1;
            acc = acc.checked_mul(total).ok_or(Error::Overflow("ordered count"))? / i;
        }
    }
    Ok(acc)
}

/// Whether every pair of parts obeys the pairwise gap rule of maximum types:
/// difference 0 or 2 when both are even, 0 or 1 otherwise.
pub fn satisfies_gap_rule(parts: &[usize]) -> bool {
    parts.iter().enumerate().all(|(i, &a)| {
        parts[i + 1..].iter().all(|&b| {
            let d = a.abs_diff(b);
            if a % 2 == 0 && b % 2 == 0 {
                d == 0 || d == 2
            } else {
                d <= 1
            }
        })
    })
}

/// Sorted maximum-dimension types from the closed-form parametrization.
pub fn enumerate_max_types(n: usize, q: usize) -> Result<TypeEnumeration> {
    if q < 2 || q > n {
        return Err(Error::InvalidQ { n, q });
    }
    let (m, r) = (n / q, n % q);
    let mut raw: Vec<(usize, Vec<usize>)> = Vec::new();
    let case = if m % 2 == 0 {
        for s in 0..=r / 2 {
            let mut p = vec![m; q - r + s];
            p.extend(std::iter::repeat_n(m + 1, r - 2 * s));
            p.extend(std::iter::repeat_n(m + 2, s));
            raw.push((s, p));
        }
        EnumerationCase::EvenQuotient
    } else {
        for t in 0..=(q - r) / 2 {
            if m == 1 && t > 0 {
                break;
            }
            let mut p = vec![m - 1; t];
            p.extend(std::iter::repeat_n(m, q - r - 2 * t));
            p.extend(std::iter::repeat_n(m + 1, r + t));
            raw.push((t, p));
        }
        EnumerationCase::OddQuotient
    };
    let entries = raw
        .into_iter()
        .map(|(parameter, p)| {
            Ok(TypeEntry { ordered_count: multiset_permutations(&p)?, tuple: BlockType::new(p)?, parameter })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TypeEnumeration { n, q, m, r, case, entries })
}

/// Sorted maximum-dimension types found by exhaustive search over the
/// partitions of `n` into `q` parts, keeping those that attain the largest
/// [`type_dimension`] and obey [`satisfies_gap_rule`].
pub fn max_types_by_search(n: usize, q: usize) -> Result<Vec<BlockType>> {
    if q < 2 || q > n {
        return Err(Error::InvalidQ { n, q });
    }
    let mut parts = Vec::new();
    partitions(n, q, 1, &mut Vec::new(), &mut parts);
    let best = parts.iter().map(|p| type_dimension(&BlockType::new(p.clone()).expect("positive"))).max();
    let mut out: Vec<BlockType> = parts
        .into_iter()
        .filter(|p| Some(type_dimension(&BlockType::new(p.clone()).expect("positive"))) == best)
        .filter(|p| satisfies_gap_rule(p))
        .map(|p| BlockType::new(p).expect("positive"))
        .collect();
    out.sort();
    Ok(out)
}

fn partitions(rest: usize, slots: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if slots == 0 {
        if rest == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let mut v = min;
    while v * slots <= rest {
        cur.push(v);
        partitions(rest - v, slots - 1, v, cur, out);
        cur.pop();
        v += 1;
    }
}

/// Number of conjugacy classes of maximum-dimension D_q subalgebras of `M_n`
/// over an algebraically closed field: a sum over ordered maximum types of
/// the number of canonical choices for each diagonal block.
pub fn count_iso_classes(n: usize, q: usize) -> Result<u128> {
    let e = enumerate_max_types(n, q)?;
    let mut total: u128 = 0;
    for entry in &e.entries {
        let choices: u128 = entry.tuple.parts().iter().map(|&p| admissible_k(p).len() as u128).product();
        let add = choices.checked_mul(entry.ordered_count).ok_or(Error::Overflow("class count"))?;
        total = total.checked_add(add).ok_or(Error::Overflow("class count"))?;
    }
    Ok(total)
}

/// The invariants [`recognize_block`] reads.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockInvariants {
    /// `dim a − dim J(a)`.
    pub semisimple_dim: usize,
    /// `dim J(a)²`.
    pub radical_square_dim: usize,
    /// `dim J(a)·V`.
    pub radical_image_dim: usize,
}

pub fn block_invariants(a: &MatSubalgebra) -> Result<BlockInvariants> {
    let j = a.radical()?;
    Ok(BlockInvariants {
        semisimple_dim: a.dim() - j.dim(),
        radical_square_dim: product_space(&j, &j)?.dim(),
        radical_image_dim: column_span(&j).dim(),
    })
}

/// Names the canonical form of a maximum-dimension commutative subalgebra.
pub fn recognize_block(a: &MatSubalgebra) -> Result<CanonicalBlockId> {
    let n = a.n();
    if !a.is_commutative() || a.dim() != schur_bound(n) {
        return Err(Error::NotCanonical);
    }
    if n == 1 {
        return Ok(CanonicalBlockId { n, k: 1 });
    }
    let inv = block_invariants(a)?;
    let (t, d2, v) = (inv.semisimple_dim, inv.radical_square_dim, inv.radical_image_dim);
    let k = match n {
        2 if t == 1 => 1,
        2 => 2,
        3 => match (t, d2, v) {
            (3, _, _) => 5,
            (2, _, _) => 4,
            (1, 1, _) => 3,
            (1, 0, 1) => 1,
            (1, 0, 2) => 2,
            _ => return Err(Error::NotCanonical),
        },
        _ if t != 1 || d2 != 0 => return Err(Error::NotCanonical),
        _ if v == n / 2 => 1,
        _ if n % 2 == 1 && v == n / 2 + 1 => 2,
        _ => return Err(Error::NotCanonical),
    };
    Ok(CanonicalBlockId { n, k })
}

/// Conjugation-invariant dimensions used to tell D_q algebras apart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxDims {
    pub radical: usize,
    pub commutator: usize,
    pub radical_times_commutator: usize,
    pub commutator_times_radical: usize,
    /// `dim C^{q−1}·J` for the minimal `q ≥ 2`.
    pub top_power_times_radical: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoInvariantVector {
    pub block_type: Option<BlockType>,
    /// Canonical names of the diagonal blocks after triangulation, when every
    /// block is a recognizable maximum-dimension commutative algebra.
    pub block_ids: Option<Vec<CanonicalBlockId>>,
    pub aux_dims: AuxDims,
    pub field_caveat: bool,
}

pub fn iso_invariants(a: &MatSubalgebra) -> Result<IsoInvariantVector> {
    let j = a.radical()?;
    let c = a.commutator_ideal();
    let q = min_dq(a);
    let top_power_times_radical = match q {
        Some(q) if q >= 2 => {
            let top = c.power(q - 1)?;
            Some(product_space(&MatSpace { n: a.n(), space: top }, &j)?.dim())
        }
        _ => None,
    };
    let aux_dims = AuxDims {
        radical: j.dim(),
        commutator: c.dim(),
        radical_times_commutator: product_space(&j, &c)?.dim(),
        commutator_times_radical: product_space(&c, &j)?.dim(),
        top_power_times_radical,
    };
    let block_ids = diagonal_blocks(a)?.and_then(|(_, _, blocks)| {
        blocks.iter().map(|b| recognize_block(b).ok()).collect::<Option<Vec<_>>>()
    });
    Ok(IsoInvariantVector { block_type: detect_type(a), block_ids, aux_dims, field_caveat: field_caveat(a.field()) })
}

/// Conjugator and diagonal blocks of `a` after triangulating along its
/// commutator ideal, provided `a` is then exactly the block-type algebra of
/// those blocks. Commutative algebras are their own single block.
fn diagonal_blocks(a: &MatSubalgebra) -> Result<Option<(Matrix, BlockType, Vec<MatSubalgebra>)>> {
    let n = a.n();
    match min_dq(a) {
        None => Ok(None),
        Some(1) => Ok(Some((Matrix::identity(a.field(), n), BlockType::new(vec![n])?, vec![a.clone()]))),
        Some(_) => {
            let w = block_triangulate(a, &a.commutator_ideal())?;
            let s = block_structure(&w.conjugated, &w.block_type)?;
            Ok(s.independent.then_some((w.conjugator, w.block_type, s.diagonal_blocks)))
        }
    }
}

/// Block-diagonal `diag(X_1, …, X_q)`.
pub fn build_block_conjugator(ty: &BlockType, per_block: &[Matrix]) -> Result<Matrix> {
    if per_block.len() != ty.q() {
        return Err(Error::ShapeMismatch(format!("{} blocks for type {ty}", per_block.len())));
    }
    let field = per_block[0].field();
    let mut x = Matrix::zeros(field, ty.n(), ty.n());
    for (i, (b, &ni)) in per_block.iter().zip(ty.parts()).enumerate() {
        if b.rows() != ni || b.cols() != ni {
            return Err(Error::ShapeMismatch(format!(
                "block {} is {}x{}, type wants {ni}x{ni}",
                i + 1,
                b.rows(),
                b.cols()
            )));
        }
        if b.field() != field {
            return Err(Error::FieldMismatch);
        }
        if !b.is_invertible() {
            return Err(Error::Singular);
        }
        let off = ty.offset(i);
        x.set_block(off, off, b);
    }
    Ok(x)
}

/// An invertible `Z` with `Z⁻¹·a·Z = C^k_n` for `id = (n, k)`, when one can
/// be found over the base field. `None` when `a` does not split there.
pub fn conjugator_to_canonical(a: &MatSubalgebra, id: CanonicalBlockId) -> Result<Option<Matrix>> {
    let (f, n) = (a.field(), a.n());
    let target = canonical_commutative(f, id)?;
    let j = a.radical()?;
    let cols: Option<Vec<Vec<Scalar>>> = if id.strip_rows().is_some() {
        let w = column_span(&j);
        Some(Subspace::full(f, n).extend_basis(w.basis(), &[]))
    } else if (n, id.k) == (3, 3) {
        cyclic_basis(&j)?
    } else {
        split_basis(a, &j)
    };
    let Some(cols) = cols else {
        return Ok(None);
    };
    let z = Matrix::from_columns(f, &cols)?;
    if !z.is_invertible() {
        return Ok(None);
    }
    Ok((a.conjugate(&z)? == target).then_some(z))
}

// [y²v, yv, v] for y ∈ J \ J² and y²v ≠ 0.
fn cyclic_basis(j: &IdealSpace) -> Result<Option<Vec<Vec<Scalar>>>> {
    let j2 = product_space(j, j)?;
    let n = j.n();
    let Some(y) = j.basis_matrices().into_iter().find(|m| !j2.contains_vector(&m.to_flat())) else {
        return Ok(None);
    };
    let y2 = y.mul(&y);
    let Some(col) = (0..n).find(|&c| !y2.column(c).iter().all(Scalar::is_zero)) else {
        return Ok(None);
    };
    let v = crate::subspace::unit_vector(j.field(), n, col);
    let yv = y.apply(&v);
    Ok(Some(vec![y.apply(&yv), yv, v]))
}

// Generalized eigenspaces of a generic element, with the radical image
// leading inside each summand.
fn split_basis(a: &MatSubalgebra, j: &IdealSpace) -> Option<Vec<Vec<Scalar>>> {
    let (f, n) = (a.field(), a.n());
    let t = a.dim() - j.dim();
    let basis = a.basis_matrices();
    for seed in 2..40i64 {
        let mut u = Matrix::zeros(f, n, n);
        let mut c = f.one();
        for b in &basis {
            u = u.add(&b.scale(&c));
            c = &c * &f.from_i64(seed);
        }
        let Some(roots) = field_roots(&char_poly(&u)) else {
            continue;
        };
        if roots.len() != t {
            continue;
        }
        let mut spaces: Vec<Subspace> = roots
            .iter()
            .map(|lam| {
                let shifted = u.sub(&Matrix::identity(f, n).scale(lam));
                let mut p = Matrix::identity(f, n);
                for _ in 0..n {
                    p = p.mul(&shifted);
                }
                Subspace::span(f, n, p.kernel()).expect("kernel vectors")
            })
            .collect();
        if spaces.iter().map(Subspace::dim).sum::<usize>() != n {
            continue;
        }
        // Larger summands first so that C^4_3 gets its 2-dimensional part on top.
        spaces.sort_by_key(|s| std::cmp::Reverse(s.dim()));
        let image = column_span(j);
        let mut cols = Vec::new();
        for s in &spaces {
            let lead = s.intersect(&image).expect("same ambient");
            cols.extend(s.extend_basis(lead.basis(), s.basis()));
        }
        return Some(cols);
    }
    None
}

/// Coefficients `c_0, …, c_n` of `det(λI − u)`, lowest degree first.
fn char_poly(u: &Matrix) -> Vec<Scalar> {
    let (f, n) = (u.field(), u.rows());
    let mut c = vec![f.zero(); n + 1];
    c[n] = f.one();
    let mut m = Matrix::zeros(f, n, n);
    for k in 1..=n {
        m = u.mul(&m).add(&Matrix::identity(f, n).scale(&c[n - k + 1]));
        let tr = u.mul(&m).trace();
        let kinv = f.from_i64(k as i64).inverse().expect("characteristic exceeds n");
        c[n - k] = -&(&tr * &kinv);
    }
    c
}

fn eval(poly: &[Scalar], x: &Scalar) -> Scalar {
    poly.iter().rev().fold(x.field().zero(), |acc, c| &(&acc * x) + c)
}

/// Distinct roots of `poly` in its field, or `None` when they cannot be
/// listed cheaply. Roots are returned even if the polynomial does not split.
fn field_roots(poly: &[Scalar]) -> Option<Vec<Scalar>> {
    let f = poly[0].field();
    match f {
        FieldSpec::Prime(p) => {
            if p > 1 << 20 {
                return None;
            }
            Some((0..p as i64).map(|x| f.from_i64(x)).filter(|x| eval(poly, x).is_zero()).collect())
        }
        FieldSpec::Rational => rational_roots(poly),
    }
}

fn rational_roots(poly: &[Scalar]) -> Option<Vec<Scalar>> {
    let f = FieldSpec::Rational;
    let rats: Vec<&BigRational> = poly.iter().map(|s| s.as_rational().expect("rational")).collect();
    let lcm = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = rats.iter().map(|r| (r.numer() * &lcm) / r.denom()).collect();
    let mut roots = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero())?;
    if low > 0 {
        roots.push(f.zero());
    }
    let a0 = ints[low].abs().to_i128()?;
    let an = ints.last()?.abs().to_i128()?;
    const LIMIT: i128 = 1 << 40;
    if a0 > LIMIT || an > LIMIT {
        return None;
    }
    let divisors = |x: i128| -> Vec<i128> {
        let mut d = Vec::new();
        let mut i = 1;
        while i * i <= x {
            if x % i == 0 {
                d.push(i);
                d.push(x / i);
            }
            i += 1;
        }
        d
    };
    let mut seen = std::collections::BTreeSet::new();
    for num in divisors(a0) {
        for den in divisors(an) {
            for sign in [1, -1] {
                let r = BigRational::new(BigInt::from(sign * num), BigInt::from(den));
                if seen.insert(r.clone()) {
                    let x = Scalar::Rational(r);
                    if eval(poly, &x).is_zero() {
                        roots.push(x);
                    }
                }
            }
        }
    }
    Some(roots)
}

/// Outcome of [`is_isomorphic_maxdim`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoVerdict {
    pub isomorphic: bool,
    /// `W` with `W⁻¹·a·W = b`, when both algebras split over the base field.
    pub certificate: Option<Matrix>,
    pub type_a: BlockType,
    pub type_b: BlockType,
    pub blocks_a: Vec<CanonicalBlockId>,
    pub blocks_b: Vec<CanonicalBlockId>,
    pub field_caveat: bool,
}

struct MaxDimForm {
    conjugator: Matrix,
    ty: BlockType,
    blocks: Vec<MatSubalgebra>,
    ids: Vec<CanonicalBlockId>,
}

fn max_dim_form(a: &MatSubalgebra) -> Result<MaxDimForm> {
    let (conjugator, ty, blocks) = diagonal_blocks(a)?.ok_or(Error::NotBlockTypeMaxDim)?;
    if !blocks.iter().all(|b| b.is_commutative() && b.dim() == schur_bound(b.n())) {
        return Err(Error::NotBlockTypeMaxDim);
    }
    let ids = blocks.iter().map(recognize_block).collect::<Result<Vec<_>>>()?;
    Ok(MaxDimForm { conjugator, ty, blocks, ids })
}

// D with D⁻¹·(block-type algebra of `blocks`)·D canonical.
fn canonicalizer(form: &MaxDimForm) -> Result<Option<Matrix>> {
    let mut per_block = Vec::with_capacity(form.blocks.len());
    for (b, &id) in form.blocks.iter().zip(&form.ids) {
        match conjugator_to_canonical(b, id)? {
            Some(z) => per_block.push(z),
            None => return Ok(None),
        }
    }
    build_block_conjugator(&form.ty, &per_block).map(Some)
}

/// Decides whether two block-type D_q algebras with maximum-dimension
/// commutative diagonal blocks are conjugate: same type and the same
/// canonical block in every position.
pub fn is_isomorphic_maxdim(a: &MatSubalgebra, b: &MatSubalgebra) -> Result<IsoVerdict> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    let fa = max_dim_form(a)?;
    let fb = max_dim_form(b)?;
    let isomorphic = fa.ty == fb.ty && fa.ids == fb.ids;
    let certificate = if isomorphic {
        match (canonicalizer(&fa)?, canonicalizer(&fb)?) {
            (Some(da), Some(db)) => {
                let w = fa.conjugator.mul(&da).mul(&db.invert()?).mul(&fb.conjugator.invert()?);
                (a.conjugate(&w)? == *b).then_some(w)
            }
            _ => None,
        }
    } else {
        None
    };
    Ok(IsoVerdict {
        isomorphic,
        certificate,
        type_a: fa.ty,
        type_b: fb.ty,
        blocks_a: fa.ids,
        blocks_b: fb.ids,
        field_caveat: field_caveat(a.field()),
    })
}

impl fmt::Display for IsoVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = |ids: &[CanonicalBlockId]| ids.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        write!(
            f,
            "{} {}[{}] vs {}[{}]",
            if self.isomorphic { "conjugate" } else { "not conjugate" },
            self.type_a,
            names(&self.blocks_a),
            self.type_b,
            names(&self.blocks_b)
        )
    }
}
