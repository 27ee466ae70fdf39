//! Comparison of `δ` with the dual normalized bar differential of `∧(V*)`,
//! and `Ext_{∧(V*)}(k, k)` from the bar side alone.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use super::exactness::{cohomology, sym_dim};
use super::Verdict;
use crate::combinatorics::{ordered_bipartitions, sign_s, Subset};
use crate::complexes::{bar_dual_complex, bar_dual_differential, delta, delta_wedge};
use crate::error::{Error, Result};
use crate::multilinear::{det_pairing_vectors, wedge_coordinates, TensorWord};
use crate::scalar::ExactField;

/// One evaluation of `⟨δ(v_1 ∧ ⋯ ∧ v_i), λ̄_1 ⊗ λ̄_2⟩` three ways.
#[derive(Clone, Debug, Serialize)]
pub struct LaplaceSample {
    pub i: usize,
    pub split: (usize, usize),
    /// Through the matrix of `δ` on coordinates.
    pub via_delta: String,
    /// Through the matrix of `d*_2` on coordinates.
    pub via_bar: String,
    /// `Σ_{A,B} s(A,B) ⟨v_A, λ̄_1⟩⟨v_B, λ̄_2⟩`.
    pub laplace_sum: String,
    /// `det(⟨v_j, v*_k⟩)`.
    pub determinant: String,
    pub ok: bool,
}

/// Random vectors `v_1..v_i` and covectors `v*_1..v*_i` with entries in
/// `[−5, 5]`; `λ_1 = v*_1 ∧ ⋯ ∧ v*_{i_1}`, `λ_2` the rest.
pub fn laplace_spot_check<F: ExactField>(
    n: usize,
    i: usize,
    i1: usize,
    rng: &mut impl Rng,
) -> Result<LaplaceSample> {
    if i < 2 || i > n || i1 == 0 || i1 >= i {
        return Err(Error::OutOfRange {
            what: "i",
            value: i as i64,
            range: format!("2..={n} with 1 <= i1 < i"),
        });
    }
    let mut random_vec = || -> Vec<F> {
        (0..n).map(|_| F::from_i64(rng.random_range(-5..=5))).collect()
    };
    let v: Vec<Vec<F>> = (0..i).map(|_| random_vec()).collect();
    let w: Vec<Vec<F>> = (0..i).map(|_| random_vec()).collect();

    let alpha = wedge_coordinates(n, &v);
    let lambda1 = wedge_coordinates(n, &w[..i1]);
    let lambda2 = wedge_coordinates(n, &w[i1..]);

    let pair = |map: &crate::multilinear::LinearMapOnBasis<F>| -> F {
        let mut total = F::zero();
        for (a, ca) in &alpha {
            let col = map
                .source
                .index_of_word(&TensorWord(vec![*a]))
                .expect("alpha coordinate in source");
            for (r, val) in map.matrix.column(col) {
                let word = map.target.word(*r);
                let (b, c) = (word.factors()[0], word.factors()[1]);
                if b.len() != i1 {
                    continue;
                }
                let lb = lambda1.iter().find(|(s, _)| *s == b).map(|(_, x)| x.clone());
                let lc = lambda2.iter().find(|(s, _)| *s == c).map(|(_, x)| x.clone());
                if let (Some(lb), Some(lc)) = (lb, lc) {
                    total = total + ca.clone() * val.clone() * lb * lc;
                }
            }
        }
        total
    };
    let via_delta = pair(&delta_wedge::<F>(n, i)?);
    let via_bar = pair(&bar_dual_differential::<F>(n, i, 1)?);

    // positions 1..i, split into A (size i1) and B (size i − i1)
    let positions = Subset::new(i, &(1..=i).collect::<Vec<_>>())?;
    let mut laplace = F::zero();
    for (a, b) in ordered_bipartitions(&positions) {
        if a.len() != i1 {
            continue;
        }
        let va: Vec<Vec<F>> = a.elements().map(|k| v[k - 1].clone()).collect();
        let vb: Vec<Vec<F>> = b.elements().map(|k| v[k - 1].clone()).collect();
        let s = F::from_i64(sign_s(&a, &b)?);
        laplace = laplace
            + s * det_pairing_vectors(&va, &w[..i1])? * det_pairing_vectors(&vb, &w[i1..])?;
    }
    let det = det_pairing_vectors(&v, &w)?;

    let ok = via_delta == det && laplace == det && via_bar == -det.clone();
    Ok(LaplaceSample {
        i,
        split: (i1, i - i1),
        via_delta: via_delta.render(),
        via_bar: via_bar.render(),
        laplace_sum: laplace.render(),
        determinant: det.render(),
        ok,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BarReport {
    pub n: usize,
    pub t: usize,
    pub seed: u64,
    /// Partial degrees `p` where `d*_{p+1} ≠ −δ`.
    pub mismatched_p: Vec<usize>,
    pub laplace_samples: usize,
    pub laplace_failures: Vec<LaplaceSample>,
    /// Top cohomology of the bar-dual complex and of `T_t^•`.
    pub bar_top: usize,
    pub koszul_top: usize,
}

impl Verdict for BarReport {
    fn passed(&self) -> bool {
        self.mismatched_p.is_empty()
            && self.laplace_failures.is_empty()
            && self.bar_top == self.koszul_top
    }

    fn details(&self) -> Value {
        serde_json::to_value(self).expect("serializable")
    }
}

/// `d*_{p+1} = −δ` on `T_t^p` for every `1 ≤ p ≤ t − 1`, plus randomized
/// Laplace-expansion checks of the pairing identity.
pub fn bar_comparison<F: ExactField>(
    n: usize,
    t: usize,
    samples: usize,
    seed: u64,
) -> Result<BarReport> {
    if t < 2 {
        return Err(Error::OutOfRange {
            what: "t",
            value: t as i64,
            range: "t >= 2".into(),
        });
    }
    let mut mismatched = Vec::new();
    let mut deltas = Vec::new();
    for p in 1..t {
        let bar = bar_dual_differential::<F>(n, t, p)?;
        let d = delta::<F>(n, t, p)?;
        if bar.matrix != d.matrix.neg() {
            mismatched.push(p);
        }
        deltas.push(d.matrix.rank());
    }
    let bar_complex = bar_dual_complex::<F>(n, t)?;
    let bar_top = *cohomology(&bar_complex)?.dims().last().expect("nonempty");
    let koszul_top = crate::multilinear::t_dim(n, t, t) as usize - deltas.last().copied().unwrap_or(0);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_i = n.min(t);
    let mut failures = Vec::new();
    let mut count = 0;
    if max_i >= 2 {
        for _ in 0..samples {
            let i = rng.random_range(2..=max_i);
            let i1 = rng.random_range(1..i);
            let sample = laplace_spot_check::<F>(n, i, i1, &mut rng)?;
            count += 1;
            if !sample.ok {
                failures.push(sample);
            }
        }
    }
    Ok(BarReport {
        n,
        t,
        seed,
        mismatched_p: mismatched,
        laplace_samples: count,
        laplace_failures: failures,
        bar_top,
        koszul_top,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtReport {
    pub n: usize,
    pub t: usize,
    pub field: String,
    /// Cohomology of the degree-`t` bar-dual complex in degrees `0..=t`.
    pub cohomology: Vec<usize>,
    pub ext: usize,
    pub expected: usize,
}

impl Verdict for ExtReport {
    fn passed(&self) -> bool {
        let t = self.t;
        self.ext == self.expected
            && self
                .cohomology
                .iter()
                .enumerate()
                .all(|(p, &h)| p == t || h == 0)
    }

    fn details(&self) -> Value {
        json!({
            "cohomology": self.cohomology,
            "ext": self.ext,
            "expected": self.expected,
        })
    }
}

/// `dim Ext^t` in internal degree `t`, from ranks of the bar-dual
/// differentials only.
pub fn ext_dims<F: ExactField>(n: usize, t: usize) -> Result<ExtReport> {
    let complex = bar_dual_complex::<F>(n, t)?;
    let report = cohomology(&complex)?;
    let dims = report.dims();
    let offset = (t as i64 - complex.start_degree) as usize;
    Ok(ExtReport {
        n,
        t,
        field: F::field_spec().token(),
        ext: dims[offset],
        cohomology: dims,
        expected: sym_dim(n, t),
    })
}
