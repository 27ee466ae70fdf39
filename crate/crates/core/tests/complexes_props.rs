use std::collections::HashMap;

use invkoszul::complexes::{
    bar_dual_complex, bar_dual_differential, build_inverted_koszul, delta, filtration_levels,
    koszul_slice,
};
use invkoszul::multilinear::{build_t, TensorWord};
use invkoszul::{ExactField, SparseMatrix, F2, Q};
use proptest::prelude::*;

/// Integer entries of a ±1 rational matrix as `(row, col) -> value`.
fn integer_entries(m: &SparseMatrix<Q>) -> Vec<(usize, usize, i64)> {
    m.triplets()
        .into_iter()
        .map(|(r, c, v)| {
            assert!(v.is_integer());
            (r, c, i64::try_from(v.to_integer()).unwrap())
        })
        .collect()
}

/// `b·a` through hash maps, independent of the library product.
fn product_is_zero(b: &SparseMatrix<Q>, a: &SparseMatrix<Q>) -> bool {
    let mut a_by_row: HashMap<usize, Vec<(usize, i64)>> = HashMap::new();
    for (r, c, v) in integer_entries(a) {
        a_by_row.entry(r).or_default().push((c, v));
    }
    let mut acc: HashMap<(usize, usize), i64> = HashMap::new();
    for (r, k, v) in integer_entries(b) {
        for &(c, w) in a_by_row.get(&k).into_iter().flatten() {
            *acc.entry((r, c)).or_default() += v * w;
        }
    }
    acc.values().all(|&x| x == 0)
}

#[test]
fn delta_squares_to_zero_up_to_n4_t6() {
    for n in 1..=4 {
        for t in 1..=6 {
            let c = build_inverted_koszul::<Q>(n, t, true).unwrap();
            for k in 1..c.differentials.len() {
                assert!(
                    product_is_zero(&c.differentials[k].matrix, &c.differentials[k - 1].matrix),
                    "n={n} t={t} k={k}"
                );
            }
        }
    }
}

#[test]
fn delta_entries_are_units_with_expected_support() {
    for n in 1..=4 {
        for t in 2..=5 {
            for p in 1..t {
                let d = delta::<Q>(n, t, p).unwrap();
                for (col, entries) in d.matrix.columns().iter().enumerate() {
                    let word = d.source.word(col);
                    // each factor of size m splits in 2^m − 2 ways
                    let expected: usize = word.factors().iter().map(|a| (1usize << a.len()) - 2).sum();
                    assert_eq!(entries.len(), expected, "{word}");
                    assert!(entries.iter().all(|(_, v)| *v == Q::from_i64(1) || *v == Q::from_i64(-1)));
                }
            }
        }
    }
}

#[test]
fn filtration_is_compatible() {
    for n in 1..=3 {
        for t in 1..=5 {
            assert!(filtration_levels::<Q>(n, t).unwrap().is_compatible(), "n={n} t={t}");
        }
    }
}

#[test]
fn bar_dual_complex_squares_to_zero_and_negates_delta() {
    for n in 1..=3 {
        for t in 1..=4 {
            let c = bar_dual_complex::<Q>(n, t).unwrap();
            c.check_square_zero().unwrap();
            for p in 1..t {
                let bar = bar_dual_differential::<F2>(n, t, p).unwrap();
                assert_eq!(bar.matrix, delta::<F2>(n, t, p).unwrap().matrix, "over F2 −1 = 1");
            }
        }
    }
}

#[test]
fn koszul_slice_squares_to_zero() {
    for n in 1..=4 {
        for t in 1..=6 {
            koszul_slice::<Q>(n, t).unwrap().check_square_zero().unwrap();
        }
    }
}

/// `δ` applied to a single word, as a map from image words to coefficients.
fn apply_delta(n: usize, word: &TensorWord) -> HashMap<TensorWord, i64> {
    let (deg, len) = (word.degree(), word.len());
    if len == deg {
        return HashMap::new();
    }
    let d = delta::<Q>(n, deg, len).unwrap();
    let col = d.source.index_of_word(word).unwrap();
    d.matrix
        .column(col)
        .iter()
        .map(|(r, v)| (d.target.word(*r).clone(), i64::try_from(v.to_integer()).unwrap()))
        .collect()
}

fn concat(a: &TensorWord, b: &TensorWord) -> TensorWord {
    TensorWord(a.factors().iter().chain(b.factors()).copied().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// `δ(x ⊗ y) = δx ⊗ y + (−1)^{len x} x ⊗ δy`.
    #[test]
    fn delta_is_a_graded_derivation(n in 1usize..=4, t in 2usize..=6, p_sel in any::<prop::sample::Index>(),
                                    w_sel in any::<prop::sample::Index>(), cut_sel in any::<prop::sample::Index>()) {
        let p = 2 + p_sel.index(t - 1);
        let space = build_t(n, t, p.min(t)).unwrap();
        prop_assume!(space.dim() > 0);
        let word = space.word(w_sel.index(space.dim())).clone();
        let cut = 1 + cut_sel.index(word.len() - 1);
        let x = TensorWord(word.factors()[..cut].to_vec());
        let y = TensorWord(word.factors()[cut..].to_vec());

        let mut expected: HashMap<TensorWord, i64> = HashMap::new();
        for (img, c) in apply_delta(n, &x) {
            *expected.entry(concat(&img, &y)).or_default() += c;
        }
        let sign = if cut % 2 == 0 { 1 } else { -1 };
        for (img, c) in apply_delta(n, &y) {
            *expected.entry(concat(&x, &img)).or_default() += sign * c;
        }
        expected.retain(|_, v| *v != 0);
        prop_assert_eq!(apply_delta(n, &word), expected);
    }
}

#[test]
fn modular_complexes_square_to_zero() {
    fn check<F: ExactField>() {
        for n in 1..=3 {
            for t in 1..=5 {
                build_inverted_koszul::<F>(n, t, true).unwrap().check_square_zero().unwrap();
            }
        }
    }
    check::<invkoszul::F2>();
    check::<invkoszul::F3>();
    check::<invkoszul::F5>();
    check::<invkoszul::F7>();
}
