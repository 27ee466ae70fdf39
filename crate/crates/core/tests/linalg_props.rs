use invkoszul::complexes::build_inverted_koszul;
use invkoszul::linalg::{bareiss_rank, determinant};
use invkoszul::{ExactField, QMatrix, SparseMatrix, F2, F3, F5, Q};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

/// Small integer matrix, roughly half zeros.
fn int_matrix(max_dim: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
        prop::collection::vec(
            prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -4i64..=4], c),
            r,
        )
    })
}

fn to_matrix<F: ExactField>(m: &[Vec<i64>]) -> SparseMatrix<F> {
    let dense: Vec<Vec<F>> = m.iter().map(|row| row.iter().map(|&v| F::from_i64(v)).collect()).collect();
    SparseMatrix::from_dense(&dense)
}

fn to_bigint(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter().map(|row| row.iter().map(|&v| BigInt::from(v)).collect()).collect()
}

/// Rank of a low-rank product `U·V`, so rank deficiency is exercised.
fn low_rank(rows: usize, cols: usize, k: usize, seed: &[i64]) -> Vec<Vec<i64>> {
    let at = |i: usize| seed[i % seed.len()];
    (0..rows)
        .map(|r| {
            (0..cols)
                .map(|c| (0..k).map(|j| at(r * 7 + j) * at(c * 3 + j + 11)).sum())
                .collect()
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rank_is_transpose_invariant(m in int_matrix(9)) {
        let q = to_matrix::<Q>(&m);
        prop_assert_eq!(q.rank(), q.transpose().rank());
        let f = to_matrix::<F3>(&m);
        prop_assert_eq!(f.rank(), f.transpose().rank());
    }

    #[test]
    fn sparse_rank_matches_dense_bareiss(m in int_matrix(10)) {
        prop_assert_eq!(to_matrix::<Q>(&m).rank(), bareiss_rank(to_bigint(&m)));
    }

    #[test]
    fn low_rank_products(rows in 1usize..12, cols in 1usize..12, k in 0usize..5,
                         seed in prop::collection::vec(-3i64..=3, 1..20)) {
        let m = low_rank(rows, cols, k, &seed);
        let r = to_matrix::<Q>(&m).rank();
        prop_assert!(r <= k);
        prop_assert_eq!(r, bareiss_rank(to_bigint(&m)));
    }

    #[test]
    fn rational_rank_bounds_modular_rank(m in int_matrix(8)) {
        let q = to_matrix::<Q>(&m);
        let r = q.rank();
        prop_assert!(q.reduce_mod::<2>().unwrap().rank() <= r);
        prop_assert!(q.reduce_mod::<3>().unwrap().rank() <= r);
        prop_assert!(q.reduce_mod::<5>().unwrap().rank() <= r);
        prop_assert_eq!(q.reduce_mod::<5>().unwrap(), to_matrix::<F5>(&m));
    }

    #[test]
    fn multiplication_is_associative(a in int_matrix(6), b_cols in 1usize..6, c_cols in 1usize..6,
                                     seed in prop::collection::vec(-2i64..=2, 1..40)) {
        let a = to_matrix::<Q>(&a);
        let fill = |r: usize, c: usize, off: usize| -> QMatrix {
            let dense: Vec<Vec<Q>> = (0..r)
                .map(|i| (0..c).map(|j| Q::from_i64(seed[(i * c + j + off) % seed.len()])).collect())
                .collect();
            SparseMatrix::from_dense(&dense)
        };
        let b = fill(a.cols(), b_cols, 1);
        let c = fill(b_cols, c_cols, 5);
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn transpose_reverses_products(a in int_matrix(6), b in int_matrix(6)) {
        let a = to_matrix::<F3>(&a);
        let b = to_matrix::<F3>(&b);
        if a.cols() == b.rows() {
            let ab = a.multiply(&b).unwrap();
            prop_assert_eq!(ab.transpose(), b.transpose().multiply(&a.transpose()).unwrap());
        } else {
            prop_assert!(a.multiply(&b).is_err());
        }
    }

    #[test]
    fn determinant_detects_full_rank(m in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 4)) {
        let dense: Vec<Vec<Q>> = m.iter().map(|r| r.iter().map(|&v| Q::from_i64(v)).collect()).collect();
        let full = SparseMatrix::from_dense(&dense).rank() == 4;
        prop_assert_eq!(!determinant(&dense).is_zero(), full);
    }

    #[test]
    fn triplets_round_trip(m in int_matrix(7)) {
        let q = to_matrix::<Q>(&m);
        let again = SparseMatrix::from_triplets(q.rows(), q.cols(), q.triplets()).unwrap();
        prop_assert_eq!(&again, &q);
        prop_assert_eq!(q.nnz(), m.iter().flatten().filter(|v| **v != 0).count());
    }
}

#[test]
fn generated_differentials_have_field_independent_ranks() {
    for n in 1..=3 {
        for t in 1..=4 {
            let q = build_inverted_koszul::<Q>(n, t, true).unwrap();
            let f2 = build_inverted_koszul::<F2>(n, t, true).unwrap();
            let f3 = build_inverted_koszul::<F3>(n, t, true).unwrap();
            for k in 0..q.differentials.len() {
                let mq = &q.differentials[k].matrix;
                let r = mq.rank();
                assert_eq!(mq.reduce_mod::<2>().unwrap(), f2.differentials[k].matrix);
                assert_eq!(f2.differentials[k].matrix.rank(), r, "n={n} t={t} k={k}");
                assert_eq!(f3.differentials[k].matrix.rank(), r, "n={n} t={t} k={k}");
                if mq.rows() * mq.cols() <= 40_000 {
                    let dense: Vec<Vec<BigInt>> = mq
                        .to_dense()
                        .iter()
                        .map(|row| row.iter().map(|v| v.to_integer()).collect())
                        .collect();
                    assert_eq!(bareiss_rank(dense), r);
                }
            }
        }
    }
}

#[test]
fn rank_of_zero_and_identity() {
    assert_eq!(QMatrix::zero(5, 3).rank(), 0);
    assert_eq!(QMatrix::zero(0, 4).rank(), 0);
    assert_eq!(SparseMatrix::<F2>::identity(17).rank(), 17);
    assert_eq!(bareiss_rank(vec![vec![BigInt::zero(); 3]; 2]), 0);
}
