use serde::Serialize;
use serde_json::{json, Value};

use super::Verdict;
use crate::combinatorics::binomial;
use crate::complexes::{build_inverted_koszul, koszul_slice, ChainComplex};
use crate::error::{Error, Result};
use crate::scalar::ExactField;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeCohomology {
    pub degree: i64,
    pub label: String,
    pub dim: usize,
    pub kernel_dim: usize,
    pub incoming_rank: usize,
    pub cohomology: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    pub degrees: Vec<DegreeCohomology>,
    /// Ranks of the differentials, in order.
    pub ranks: Vec<usize>,
}

impl CohomologyReport {
    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.cohomology).collect()
    }

    pub fn is_acyclic(&self) -> bool {
        self.degrees.iter().all(|d| d.cohomology == 0)
    }
}

/// Cohomology of each term: `dim ker(outgoing) − rank(incoming)`, with zero
/// maps at both ends. Fails if the complex does not square to zero.
pub fn cohomology<F: ExactField>(complex: &ChainComplex<F>) -> Result<CohomologyReport> {
    complex.check_square_zero()?;
    let ranks: Vec<usize> = complex.differentials.iter().map(|d| d.matrix.rank()).collect();
    let degrees = complex
        .terms
        .iter()
        .enumerate()
        .map(|(k, term)| {
            let out_rank = ranks.get(k).copied().unwrap_or(0);
            let incoming_rank = if k == 0 { 0 } else { ranks[k - 1] };
            let kernel_dim = term.dim() - out_rank;
            debug_assert!(kernel_dim >= incoming_rank);
            DegreeCohomology {
                degree: complex.start_degree + k as i64,
                label: term.label().to_string(),
                dim: term.dim(),
                kernel_dim,
                incoming_rank,
                cohomology: kernel_dim - incoming_rank,
            }
        })
        .collect();
    Ok(CohomologyReport { degrees, ranks })
}

pub fn sym_dim(n: usize, t: usize) -> usize {
    if t == 0 {
        return 1;
    }
    binomial(n + t - 1, t) as usize
}

#[derive(Clone, Debug, Serialize)]
pub struct SquareZeroReport {
    pub n: usize,
    pub t: usize,
    pub products_checked: usize,
    pub nonzero_products: Vec<usize>,
    /// Every differential entry is `±1`.
    pub unit_entries: bool,
}

impl Verdict for SquareZeroReport {
    fn passed(&self) -> bool {
        self.nonzero_products.is_empty() && self.unit_entries
    }

    fn details(&self) -> Value {
        serde_json::to_value(self).expect("serializable")
    }
}

/// `δδ = 0` and `πδ = 0` on the full complex `T_t^• → S^t`.
pub fn square_zero<F: ExactField>(n: usize, t: usize) -> Result<SquareZeroReport> {
    let complex = build_inverted_koszul::<F>(n, t, true)?;
    square_zero_of(n, t, &complex)
}

pub(crate) fn square_zero_of<F: ExactField>(
    n: usize,
    t: usize,
    complex: &ChainComplex<F>,
) -> Result<SquareZeroReport> {
    let mut nonzero = Vec::new();
    let d = &complex.differentials;
    for k in 1..d.len() {
        if !d[k].matrix.multiply(&d[k - 1].matrix)?.is_zero() {
            nonzero.push(k);
        }
    }
    let one = F::one();
    let minus_one = -F::one();
    let unit_entries = d.iter().all(|m| {
        m.matrix
            .columns()
            .iter()
            .flatten()
            .all(|(_, v)| *v == one || *v == minus_one)
    });
    Ok(SquareZeroReport {
        n,
        t,
        products_checked: d.len().saturating_sub(1),
        nonzero_products: nonzero,
        unit_entries,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ExactnessReport {
    pub n: usize,
    pub t: usize,
    pub field: String,
    pub truncated: CohomologyReport,
    pub sym_dim: usize,
    pub rank_pi: usize,
    pub kernel_pi: usize,
    /// Rank of `δ: T_t^{t−1} → T_t^t` (zero for `t = 1`).
    pub rank_last_delta: usize,
    pub pi_delta_zero: bool,
}

impl ExactnessReport {
    pub fn lower_degrees_vanish(&self) -> bool {
        let k = self.truncated.degrees.len();
        self.truncated.degrees[..k - 1].iter().all(|d| d.cohomology == 0)
    }

    pub fn top_cohomology(&self) -> usize {
        self.truncated.degrees.last().map_or(0, |d| d.cohomology)
    }
}

impl Verdict for ExactnessReport {
    fn passed(&self) -> bool {
        self.lower_degrees_vanish()
            && self.top_cohomology() == self.sym_dim
            && self.rank_pi == self.sym_dim
            && self.kernel_pi == self.rank_last_delta
            && self.pi_delta_zero
    }

    fn details(&self) -> Value {
        json!({
            "dims": self.truncated.degrees.iter().map(|d| d.dim).collect::<Vec<_>>(),
            "cohomology": self.truncated.dims(),
            "ranks": self.truncated.ranks,
            "sym_dim": self.sym_dim,
            "rank_pi": self.rank_pi,
            "kernel_pi": self.kernel_pi,
            "rank_last_delta": self.rank_last_delta,
        })
    }
}

/// Cohomology of the truncated complex is `0` below the top and `S^t` at the
/// top, with `π` identifying the top cohomology with `S^t`.
pub fn verify_exactness<F: ExactField>(n: usize, t: usize) -> Result<ExactnessReport> {
    let full = build_inverted_koszul::<F>(n, t, true)?;
    verify_exactness_of(n, t, &full)
}

pub(crate) fn verify_exactness_of<F: ExactField>(
    n: usize,
    t: usize,
    full: &ChainComplex<F>,
) -> Result<ExactnessReport> {
    let truncated = ChainComplex::new(
        format!("T_{t}"),
        1,
        full.terms[..t].to_vec(),
        full.differentials[..t - 1].to_vec(),
    )?;
    let report = cohomology(&truncated)?;
    let pi = &full.differentials[t - 1];
    let rank_pi = pi.matrix.rank();
    let kernel_pi = pi.matrix.cols() - rank_pi;
    let rank_last_delta = if t >= 2 { report.ranks[t - 2] } else { 0 };
    let pi_delta_zero = if t >= 2 {
        pi.matrix
            .multiply(&full.differentials[t - 2].matrix)?
            .is_zero()
    } else {
        true
    };
    Ok(ExactnessReport {
        n,
        t,
        field: F::field_spec().token(),
        truncated: report,
        sym_dim: sym_dim(n, t),
        rank_pi,
        kernel_pi,
        rank_last_delta,
        pi_delta_zero,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct KoszulReport {
    pub n: usize,
    pub t: usize,
    pub dims: Vec<usize>,
    pub cohomology: Vec<usize>,
    pub sym_dim: usize,
}

impl Verdict for KoszulReport {
    fn passed(&self) -> bool {
        let k = self.cohomology.len();
        self.cohomology[..k - 1].iter().all(|&h| h == 0) && self.cohomology[k - 1] == self.sym_dim
    }

    fn details(&self) -> Value {
        serde_json::to_value(self).expect("serializable")
    }
}

/// The degree-`t` Koszul slice squares to zero and its only cohomology is
/// `S^t` at the `∧^1 ⊗ S^{t−1}` end.
pub fn koszul_exactness<F: ExactField>(n: usize, t: usize) -> Result<KoszulReport> {
    let slice = koszul_slice::<F>(n, t)?;
    let report = match cohomology(&slice) {
        Ok(r) => r,
        Err(Error::NotAComplex(..)) => {
            return Ok(KoszulReport {
                n,
                t,
                dims: slice.dims(),
                cohomology: vec![usize::MAX; slice.terms.len()],
                sym_dim: sym_dim(n, t),
            })
        }
        Err(e) => return Err(e),
    };
    Ok(KoszulReport {
        n,
        t,
        dims: slice.dims(),
        cohomology: report.dims(),
        sym_dim: sym_dim(n, t),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multilinear::BasedSpace;
    use crate::multilinear::LinearMapOnBasis;
    use crate::scalar::{F2, Q};
    use std::sync::Arc;

    #[test]
    fn truncated_t2_n2() {
        let c = build_inverted_koszul::<Q>(2, 2, false).unwrap();
        assert_eq!(cohomology(&c).unwrap().dims(), vec![0, 3]);
    }

    #[test]
    fn full_complex_is_acyclic() {
        for (n, t) in [(2, 3), (3, 2), (3, 3)] {
            let c = build_inverted_koszul::<Q>(n, t, true).unwrap();
            assert!(cohomology(&c).unwrap().is_acyclic());
        }
    }

    #[test]
    fn zero_differentials_give_terms() {
        let a = Arc::new(BasedSpace::new("a", 2, crate::multilinear::sym_basis(2, 2).unwrap().basis().to_vec()));
        let b = Arc::new(BasedSpace::new("b", 2, crate::multilinear::sym_basis(2, 1).unwrap().basis().to_vec()));
        let c = ChainComplex::<Q>::new("z", 0, vec![a.clone(), b.clone()], vec![LinearMapOnBasis::zero(a, b)]).unwrap();
        assert_eq!(cohomology(&c).unwrap().dims(), vec![3, 2]);
    }

    #[test]
    fn exactness_examples() {
        let r = verify_exactness::<Q>(3, 2).unwrap();
        assert!(r.passed());
        assert_eq!(r.top_cohomology(), 6);
        assert_eq!(r.truncated.ranks, vec![3]);
        assert_eq!(r.rank_pi, 6);

        let r = verify_exactness::<F2>(2, 4).unwrap();
        assert!(r.passed());
        assert_eq!(r.top_cohomology(), 5);

        for n in 1..=4 {
            assert!(verify_exactness::<Q>(n, 1).unwrap().passed());
        }
    }

    #[test]
    fn koszul_slice_exact() {
        for n in 1..=3 {
            for t in 1..=4 {
                assert!(koszul_exactness::<Q>(n, t).unwrap().passed(), "n={n} t={t}");
            }
        }
    }
}
