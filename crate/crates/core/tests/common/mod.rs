#![allow(dead_code)]

use dqalg::classification::admissible_k;
use dqalg::constructions::{canonical_block_type_algebra, full_type_algebra, CanonicalBlockId};
use dqalg::dq::BlockType;
use dqalg::{FieldSpec, MatSubalgebra, Matrix};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const P: u64 = 101;

pub fn gf() -> FieldSpec {
    FieldSpec::prime(P).unwrap()
}

pub fn random_matrix(rng: &mut ChaCha8Rng, f: FieldSpec, n: usize) -> Matrix {
    let rows = (0..n).map(|_| (0..n).map(|_| f.from_i64(rng.gen_range(0..P as i64))).collect()).collect();
    Matrix::from_rows(f, rows).unwrap()
}

pub fn random_invertible(rng: &mut ChaCha8Rng, f: FieldSpec, n: usize) -> Matrix {
    loop {
        let x = random_matrix(rng, f, n);
        if x.is_invertible() {
            return x;
        }
    }
}

pub fn random_invertible_upper(rng: &mut ChaCha8Rng, f: FieldSpec, n: usize) -> Matrix {
    let mut x = Matrix::zeros(f, n, n);
    for i in 0..n {
        x.set(i, i, f.from_i64(rng.gen_range(1..P as i64)));
        for j in i + 1..n {
            x.set(i, j, f.from_i64(rng.gen_range(0..P as i64)));
        }
    }
    x
}

pub fn random_composition(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut parts = vec![1];
    for _ in 1..n {
        if rng.gen_bool(0.5) {
            parts.push(1);
        } else {
            *parts.last_mut().unwrap() += 1;
        }
    }
    parts
}

pub fn random_canonical_ids(rng: &mut ChaCha8Rng, parts: &[usize]) -> Vec<CanonicalBlockId> {
    parts
        .iter()
        .map(|&p| {
            let ks = admissible_k(p);
            CanonicalBlockId::new(p, ks[rng.gen_range(0..ks.len())]).unwrap()
        })
        .collect()
}

/// A mix of block-type algebras with canonical or full blocks and unital
/// closures of random upper triangular matrices.
pub fn random_algebra(rng: &mut ChaCha8Rng, f: FieldSpec, max_n: usize) -> MatSubalgebra {
    let n = rng.gen_range(1..=max_n);
    match rng.gen_range(0..3) {
        0 => {
            let parts = random_composition(rng, n);
            let ids = random_canonical_ids(rng, &parts);
            canonical_block_type_algebra(f, &ids).unwrap()
        }
        1 => full_type_algebra(f, &BlockType::new(random_composition(rng, n)).unwrap()),
        _ => {
            let gens: Vec<Matrix> = (0..rng.gen_range(1..=2))
                .map(|_| {
                    let mut m = Matrix::zeros(f, n, n);
                    for i in 0..n {
                        for j in i..n {
                            if rng.gen_bool(0.4) {
                                m.set(i, j, f.from_i64(rng.gen_range(0..P as i64)));
                            }
                        }
                    }
                    m
                })
                .collect();
            MatSubalgebra::unital_closure(f, n, &gens).unwrap()
        }
    }
}

/// Compositions of `n` into exactly `q` positive parts.
pub fn compositions(n: usize, q: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for v in 1..=rest.saturating_sub(slots - 1) {
            cur.push(v);
            go(rest - v, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, q, &mut Vec::new(), &mut out);
    out
}

/// Dimension of the block-type algebra of `parts` with maximum-dimension
/// commutative blocks, counted directly.
pub fn block_dim(parts: &[usize]) -> usize {
    let n: usize = parts.iter().sum();
    let squares: usize = parts.iter().map(|p| p * p).sum();
    parts.len() + parts.iter().map(|p| p * p / 4).sum::<usize>() + (n * n - squares) / 2
}
