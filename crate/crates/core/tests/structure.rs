mod common;

use common::*;
use dqalg::algebra::{product_space, MatrixSpace};
use dqalg::classification::*;
use dqalg::constructions::*;
use dqalg::dq::*;
use dqalg::{Error, FieldSpec, MatSubalgebra, Matrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn id(n: usize, k: usize) -> CanonicalBlockId {
    CanonicalBlockId::new(n, k).unwrap()
}

#[test]
fn random_algebras_satisfy_core_invariants() {
    let f = gf();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..60 {
        let a = random_algebra(&mut rng, f, 4);
        let basis = a.basis_matrices();
        for x in &basis {
            for y in &basis {
                assert!(a.contains_matrix(&x.mul(y)));
            }
        }
        assert_eq!(a.commutator_ideal().is_zero(), a.is_commutative());
        let j = a.radical().unwrap();
        assert!(a.ideal_from_space(j.space().clone()).is_ok());
        assert!(j.nilpotency_index().is_some());
        let cc = a.centralizer().centralizer();
        assert!(cc.space().contains(a.space()).unwrap());
        if a.is_commutative() {
            assert!(a.centralizer().space().contains(a.space()).unwrap());
        }

        let x = random_invertible(&mut rng, f, a.n());
        let b = a.conjugate(&x).unwrap();
        assert_eq!(b.dim(), a.dim());
        assert_eq!(b.is_commutative(), a.is_commutative());
        assert_eq!(b.radical().unwrap().dim(), j.dim());
        assert_eq!(b.commutator_ideal().dim(), a.commutator_ideal().dim());
        assert_eq!(detect_type(&b), detect_type(&a));
    }
}

#[test]
fn min_dq_agrees_with_brute_force() {
    let f = gf();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut checked = 0;
    while checked < 40 {
        let a = random_algebra(&mut rng, f, 5);
        let Some(q) = min_dq(&a) else { continue };
        if q > 3 {
            continue;
        }
        assert!(q <= a.n());
        match check_dq_bruteforce(&a, q, DEFAULT_BRUTE_FORCE_BUDGET) {
            Ok(holds) => assert!(holds),
            Err(Error::BudgetExceeded { .. }) => continue,
            Err(e) => panic!("{e:?}"),
        }
        if q > 1 {
            assert!(!check_dq_bruteforce(&a, q - 1, DEFAULT_BRUTE_FORCE_BUDGET).unwrap());
        }
        checked += 1;
    }
}

#[test]
fn scrambled_d2_in_u5_triangulates_back() {
    let f = gf();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for ids in [[id(2, 1), id(3, 2)], [id(3, 4), id(2, 2)], [id(1, 1), id(4, 1)]] {
        let a = canonical_block_type_algebra(f, &ids).unwrap();
        let b = a.conjugate(&random_invertible(&mut rng, f, 5)).unwrap();
        let w = block_triangulate(&b, &b.commutator_ideal()).unwrap();
        assert_eq!(w.block_type.parts(), &[ids[0].n, ids[1].n]);
        assert!(w.conjugated.basis_matrices().iter().all(|m| w.block_type.is_block_upper(m)));
        assert!(w.conjugated_ideal.basis_matrices().iter().all(|m| w.block_type.is_strictly_block_upper(m)));
        assert_eq!(b.conjugate(&w.conjugator).unwrap(), w.conjugated);
        let r = is_maximal_dq(&b);
        assert!(r.maximal, "{ids:?}");
        assert_eq!(r.min_q, Some(2));
    }
}

#[test]
fn maximality_decisions() {
    let f = FieldSpec::Rational;
    assert!(is_maximal_dq(&max_dim_example(f, 5, 2).unwrap()).maximal);
    assert!(is_maximal_dq(&upper_triangular(f, 4)).maximal);
    assert!(is_maximal_dq(&canonical_commutative(f, id(3, 3)).unwrap()).maximal);
    assert!(!is_maximal_dq(&MatSubalgebra::scalars(f, 3)).maximal);
    assert!(!is_maximal_dq(&MatSubalgebra::full(f, 2)).maximal);
    // A non-maximal commutative diagonal block.
    let k = MatSubalgebra::scalars(f, 2);
    let a = block_type_algebra(&BlockType::new(vec![2, 1]).unwrap(), &[k, MatSubalgebra::scalars(f, 1)]).unwrap();
    let r = is_maximal_dq(&a);
    assert_eq!(r.min_q, Some(2));
    assert!(!r.maximal);
}

#[test]
fn commutative_block_types_are_dq() {
    let f = gf();
    for parts in [vec![1, 1, 1], vec![1, 2], vec![2, 1, 1]] {
        let ty = BlockType::new(parts.clone()).unwrap();
        let blocks: Vec<MatSubalgebra> = parts.iter().map(|&p| MatSubalgebra::scalars(f, p)).collect();
        let a = block_type_algebra(&ty, &blocks).unwrap();
        let q = ty.q();
        assert!(check_dq_bruteforce(&a, q, DEFAULT_BRUTE_FORCE_BUDGET).unwrap());
        assert_eq!(min_dq(&a), Some(q));
    }
}

#[test]
fn invariants_survive_conjugation_up_to_six() {
    let f = gf();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..25 {
        let a = random_algebra(&mut rng, f, 6);
        let b = a.conjugate(&random_invertible(&mut rng, f, a.n())).unwrap();
        assert_eq!(iso_invariants(&a).unwrap(), iso_invariants(&b).unwrap());
    }
}

#[test]
fn conjugacy_certificates_are_valid() {
    let f = gf();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..25 {
        let n = rng.gen_range(2..=6);
        let parts = random_composition(&mut rng, n);
        let ids = random_canonical_ids(&mut rng, &parts);
        let a = canonical_block_type_algebra(f, &ids).unwrap();
        let b = a.conjugate(&random_invertible(&mut rng, f, n)).unwrap();
        for (x, y) in [(&a, &b), (&b, &a), (&b, &b)] {
            let v = is_isomorphic_maxdim(x, y).unwrap();
            assert!(v.isomorphic, "{ids:?}");
            assert!(v.field_caveat);
            let w = v.certificate.expect("split algebras have a certificate");
            assert_eq!(x.conjugate(&w).unwrap(), *y);
        }
    }
}

#[test]
fn conjugacy_negative_cases() {
    let f = FieldSpec::Rational;
    let a = canonical_block_type_algebra(f, &[id(2, 1), id(3, 1)]).unwrap();
    let b = canonical_block_type_algebra(f, &[id(3, 1), id(2, 1)]).unwrap();
    let v = is_isomorphic_maxdim(&a, &b).unwrap();
    assert!(!v.isomorphic);
    assert!(v.certificate.is_none());
    assert!(!is_isomorphic_maxdim(&b, &a).unwrap().isomorphic);
    let same = is_isomorphic_maxdim(&a, &a).unwrap();
    assert_eq!(same.certificate, Some(Matrix::identity(f, 5)));
    let m2 = named_example(f, NamedExample::M2DualNumbers);
    assert_eq!(is_isomorphic_maxdim(&m2, &m2).unwrap_err(), Error::NotBlockTypeMaxDim);
    let thin = upper_triangular(f, 2).conjugate(&Matrix::identity(f, 2)).unwrap();
    assert!(is_isomorphic_maxdim(&thin, &upper_triangular(f, 2)).unwrap().isomorphic);
}

#[test]
fn block_conjugator_restores_canonical_block() {
    let f = FieldSpec::Rational;
    let ty = BlockType::new(vec![2, 3]).unwrap();
    let y = Matrix::from_i64(f, &[&[1, 1, 0], &[0, 1, 2], &[1, 0, 1]]).unwrap();
    let moved = canonical_commutative(f, id(3, 1)).unwrap().conjugate(&y).unwrap();
    let a = block_type_algebra(&ty, &[canonical_commutative(f, id(2, 1)).unwrap(), moved]).unwrap();
    let x = build_block_conjugator(&ty, &[Matrix::identity(f, 2), y.invert().unwrap()]).unwrap();
    let back = a.conjugate(&x).unwrap();
    assert_eq!(back, canonical_block_type_algebra(f, &[id(2, 1), id(3, 1)]).unwrap());
    assert_eq!(build_block_conjugator(&ty, &[Matrix::identity(f, 2), Matrix::identity(f, 3)]).unwrap(), Matrix::identity(f, 5));
}

#[test]
fn odd_strip_pairs_share_radical_shape() {
    let f = gf();
    for n in [3, 5, 7] {
        let c1 = canonical_commutative(f, id(n, 1)).unwrap();
        let c2 = canonical_commutative(f, id(n, 2)).unwrap();
        let (j1, j2) = (c1.radical().unwrap(), c2.radical().unwrap());
        assert_eq!(c1.dim(), c2.dim());
        assert_eq!(j1.dim(), j2.dim());
        assert_eq!(product_space(&j1, &j1).unwrap().dim(), product_space(&j2, &j2).unwrap().dim());
        assert_ne!(block_invariants(&c1).unwrap(), block_invariants(&c2).unwrap());
        assert_eq!(id(n, 1).abstract_isomorphism_partner(), Some(id(n, 2)));
    }
}

#[test]
fn recognition_survives_upper_triangular_conjugation() {
    let f = gf();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..20 {
        let c = canonical_commutative(f, id(3, 4)).unwrap();
        let x = random_invertible_upper(&mut rng, f, 3);
        assert_eq!(recognize_block(&c.conjugate(&x).unwrap()).unwrap(), id(3, 4));
    }
}
