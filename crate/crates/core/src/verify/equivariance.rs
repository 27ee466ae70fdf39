use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use super::Verdict;
use crate::complexes::build_inverted_koszul;
use crate::error::Result;
use crate::linalg::{determinant, SparseMatrix};
use crate::multilinear::{gl_action, LinearMapOnBasis};
use crate::scalar::ExactField;

/// Integer matrix with entries in `[−3, 3]`, redrawn until it is invertible
/// over `F`.
pub fn random_invertible<F: ExactField>(n: usize, rng: &mut impl Rng) -> SparseMatrix<F> {
    loop {
        let dense: Vec<Vec<F>> = (0..n)
            .map(|_| (0..n).map(|_| F::from_i64(rng.random_range(-3..=3))).collect())
            .collect();
        if !determinant(&dense).is_zero() {
            return SparseMatrix::from_dense(&dense);
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EquivarianceReport {
    pub n: usize,
    pub t: usize,
    pub seed: u64,
    pub trials: usize,
    /// Trial indices where some map failed to commute with `g`.
    pub failures: Vec<usize>,
}

impl Verdict for EquivarianceReport {
    fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn details(&self) -> Value {
        serde_json::to_value(self).expect("serializable")
    }
}

fn commutes<F: ExactField>(g: &SparseMatrix<F>, map: &LinearMapOnBasis<F>) -> Result<bool> {
    let g_src = gl_action(g, &map.source)?;
    let g_tgt = gl_action(g, &map.target)?;
    let left = g_tgt.matrix.multiply(&map.matrix)?;
    let right = map.matrix.multiply(&g_src.matrix)?;
    Ok(left == right)
}

/// `g ∘ δ = δ ∘ g` and `g ∘ π = π ∘ g` for seeded random `g ∈ GL_n`.
pub fn equivariance_check<F: ExactField>(
    n: usize,
    t: usize,
    trials: usize,
    seed: u64,
) -> Result<EquivarianceReport> {
    let complex = build_inverted_koszul::<F>(n, t, true)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for trial in 0..trials {
        let g = random_invertible::<F>(n, &mut rng);
        let mut ok = true;
        for d in &complex.differentials {
            if !commutes(&g, d)? {
                ok = false;
                break;
            }
        }
        if !ok {
            failures.push(trial);
        }
    }
    Ok(EquivarianceReport {
        n,
        t,
        seed,
        trials,
        failures,
    })
}

/// Commutation with a caller-chosen `g`, for fixed test cases.
pub fn commutes_with<F: ExactField>(g: &SparseMatrix<F>, maps: &[LinearMapOnBasis<F>]) -> Result<bool> {
    for m in maps {
        if !commutes(g, m)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{F3, Q};

    #[test]
    fn identity_and_diagonal_commute() {
        let c = build_inverted_koszul::<Q>(2, 3, true).unwrap();
        assert!(commutes_with(&SparseMatrix::identity(2), &c.differentials).unwrap());
        let diag = SparseMatrix::from_dense(&[
            vec![Q::from_i64(2), Q::from_i64(0)],
            vec![Q::from_i64(0), Q::from_i64(3)],
        ]);
        assert!(commutes_with(&diag, &c.differentials).unwrap());
    }

    #[test]
    fn random_trials_pass() {
        assert!(equivariance_check::<Q>(3, 3, 3, 11).unwrap().passed());
        assert!(equivariance_check::<F3>(2, 3, 3, 11).unwrap().passed());
    }

    #[test]
    fn seeded_draws_are_reproducible() {
        let mut a = ChaCha8Rng::seed_from_u64(5);
        let mut b = ChaCha8Rng::seed_from_u64(5);
        assert_eq!(random_invertible::<Q>(3, &mut a), random_invertible::<Q>(3, &mut b));
    }

    #[test]
    fn breaking_delta_is_detected() {
        let c = build_inverted_koszul::<Q>(3, 2, true).unwrap();
        let mut d = c.differentials[0].clone();
        // keep only the first nonzero entry of δ(e1∧e2)
        let col0 = d.matrix.column(0)[0].clone();
        d.matrix = SparseMatrix::from_triplets(d.matrix.rows(), d.matrix.cols(), [(col0.0, 0, col0.1)]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = random_invertible::<Q>(3, &mut rng);
        assert!(!commutes_with(&g, &[d]).unwrap());
    }
}
