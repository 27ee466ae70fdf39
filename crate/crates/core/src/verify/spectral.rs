//! Pages `E_0`, `E_1`, `E_2` of the spectral sequence of `T_t^•` filtered by
//! the degree of the first tensor factor.
//!
//! Positions are indexed by `(f, p)`: filtration level `f` and partial
//! degree `p`. `E_0` is the associated graded complex, `E_1` its cohomology
//! (one entry per column, at `p = t − f + 1`), and `E_2` the cohomology of
//! the induced `d_1: E_1^{f} → E_1^{f−1}`.

use std::collections::{BTreeMap, HashMap};

use serde_json::{json, Value};

use super::exactness::sym_dim;
use super::Verdict;
use crate::combinatorics::{binomial, Subset};
use crate::complexes::{filtration_levels, graded_tensor_model, koszul_slice};
use crate::error::{Error, Result};
use crate::linalg::SparseMatrix;
use crate::multilinear::{wedge_sym_basis, BasisElement, Monomial, TensorWord};
use crate::scalar::ExactField;

#[derive(Clone, Debug)]
pub struct PageMap<F> {
    pub from: (usize, usize),
    pub to: (usize, usize),
    pub matrix: SparseMatrix<F>,
}

#[derive(Clone, Debug)]
pub struct SpectralPage<F> {
    pub page: u8,
    /// Dimension at each `(f, p)`; absent entries are zero.
    pub dims: BTreeMap<(usize, usize), usize>,
    pub differentials: Vec<PageMap<F>>,
}

impl<F> SpectralPage<F> {
    pub fn nonzero(&self) -> Vec<((usize, usize), usize)> {
        self.dims
            .iter()
            .filter(|(_, &d)| d > 0)
            .map(|(&k, &d)| (k, d))
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct SpectralPages<F> {
    pub n: usize,
    pub t: usize,
    pub e0: SpectralPage<F>,
    pub e1: SpectralPage<F>,
    pub e2: SpectralPage<F>,
    /// `d_0` equals `1 ⊗ (−δ)` in every column.
    pub e0_matches_tensor_model: bool,
    /// `E_1` sits at `p = t − f + 1` with dimension `C(n, f)·dim S^{t−f}`.
    pub e1_concentrated: bool,
    /// The lift-apply-project map kills the image of `d_0`.
    pub d1_well_defined: bool,
    /// `d_1` equals the Koszul-slice differential entrywise.
    pub d1_matches_koszul: bool,
    /// `E_2` is a single entry of dimension `dim S^t`.
    pub e2_single_corner: bool,
}

impl<F: ExactField> Verdict for SpectralPages<F> {
    fn passed(&self) -> bool {
        self.e0_matches_tensor_model
            && self.e1_concentrated
            && self.d1_well_defined
            && self.d1_matches_koszul
            && self.e2_single_corner
    }

    fn details(&self) -> Value {
        let grid = |p: &SpectralPage<F>| {
            p.nonzero()
                .into_iter()
                .map(|((f, q), d)| json!({"f": f, "p": q, "dim": d}))
                .collect::<Vec<_>>()
        };
        json!({
            "e0": grid(&self.e0),
            "e1": grid(&self.e1),
            "e2": grid(&self.e2),
            "e0_matches_tensor_model": self.e0_matches_tensor_model,
            "e1_concentrated": self.e1_concentrated,
            "d1_well_defined": self.d1_well_defined,
            "d1_matches_koszul": self.d1_matches_koszul,
            "e2_single_corner": self.e2_single_corner,
        })
    }
}

pub fn spectral_pages<F: ExactField>(n: usize, t: usize) -> Result<SpectralPages<F>> {
    if t < 2 {
        return Err(Error::OutOfRange {
            what: "t",
            value: t as i64,
            range: "t >= 2".into(),
        });
    }
    let fc = filtration_levels::<F>(n, t)?;

    // E_0: graded pieces and their differentials
    let mut e0 = SpectralPage {
        page: 0,
        dims: BTreeMap::new(),
        differentials: Vec::new(),
    };
    let mut e0_matches = true;
    let mut column_ranks: HashMap<(usize, usize), usize> = HashMap::new();
    for f in 1..=t {
        for p in 1..=t {
            let (space, d0) = fc.graded_piece(f, p)?;
            e0.dims.insert((f, p), space.dim());
            let model = graded_tensor_model::<F>(&d0.source, &d0.target)?;
            if model != d0.matrix {
                e0_matches = false;
            }
            column_ranks.insert((f, p), d0.matrix.rank());
            if p < t {
                e0.differentials.push(PageMap {
                    from: (f, p),
                    to: (f, p + 1),
                    matrix: d0.matrix,
                });
            }
        }
    }

    // E_1: cohomology of each column
    let mut e1 = SpectralPage {
        page: 1,
        dims: BTreeMap::new(),
        differentials: Vec::new(),
    };
    let mut concentrated = true;
    for f in 1..=t {
        for p in 1..=t {
            let incoming = if p > 1 { column_ranks[&(f, p - 1)] } else { 0 };
            let h = e0.dims[&(f, p)] - column_ranks[&(f, p)] - incoming;
            e1.dims.insert((f, p), h);
            let expected = if p == t - f + 1 {
                binomial(n, f) as usize * sym_dim(n, t - f)
            } else {
                0
            };
            if h != expected {
                concentrated = false;
            }
        }
    }

    // d_1 by lift-apply-project, compared with the Koszul slice
    let koszul = koszul_slice::<F>(n, t)?;
    let mut well_defined = true;
    let mut matches_koszul = true;
    let mut d1_ranks = Vec::new();
    for f in (2..=t).rev() {
        let top = t - f + 1;
        let source_e1 = wedge_sym_basis(n, f, t - f)?;
        let target_e1 = wedge_sym_basis(n, f - 1, t - f + 1)?;
        let (top_space, _) = fc.graded_piece(f, top)?;
        let delta = &fc.base.differentials[top - 1];
        let next_levels = &fc.levels[top];

        // level-(f−1) component of δ on every top word, pushed to ∧^{f−1} ⊗ S^{t−f+1}
        let top_cols = fc.level_indices(top, f);
        let mut triplets = Vec::new();
        for (col, &k) in top_cols.iter().enumerate() {
            for (r, v) in delta.matrix.column(k) {
                if next_levels[*r] != f - 1 {
                    continue;
                }
                let w = delta.target.word(*r);
                let (head, tail) = w.factors().split_first().expect("nonempty word");
                let m = Monomial::from_indices(n, tail.iter().flat_map(Subset::elements));
                let row = target_e1
                    .index_of(&BasisElement::WedgeSym(*head, m))
                    .expect("projected image lies in the next E_1 term");
                triplets.push((row, col, v.clone()));
            }
        }
        let lifted =
            SparseMatrix::from_triplets(target_e1.dim(), top_space.dim(), triplets)?;

        // well defined on classes: kills the image of d_0 into the top slot
        if top >= 2 {
            let (_, d0_in) = fc.graded_piece(f, top - 1)?;
            if !lifted.multiply(&d0_in.matrix)?.is_zero() {
                well_defined = false;
            }
        }

        // restrict to the canonical lifts e_A ⊗ e_{a_1} ⊗ ⋯ with a_1 ≤ a_2 ≤ ⋯
        let lift_cols: Vec<usize> = source_e1
            .basis()
            .iter()
            .map(|b| {
                let BasisElement::WedgeSym(a, m) = b else {
                    unreachable!()
                };
                let mut factors = vec![*a];
                factors.extend(m.sorted_indices().into_iter().map(|e| Subset::singleton(n, e)));
                top_space
                    .index_of_word(&TensorWord(factors))
                    .expect("canonical lift is a top word")
            })
            .collect();
        let all_rows: Vec<usize> = (0..target_e1.dim()).collect();
        let d1 = lifted.submatrix(&all_rows, &lift_cols);

        let k = t - f;
        if koszul.differentials[k].matrix != d1 {
            matches_koszul = false;
        }
        d1_ranks.push(d1.rank());
        e1.differentials.push(PageMap {
            from: (f, top),
            to: (f - 1, top + 1),
            matrix: d1,
        });
    }

    // d_1 ∘ d_1 = 0
    for w in e1.differentials.windows(2) {
        if !w[1].matrix.multiply(&w[0].matrix)?.is_zero() {
            well_defined = false;
        }
    }

    // E_2: cohomology of the E_1 row, indexed by f = t, ..., 1
    let mut e2 = SpectralPage {
        page: 2,
        dims: BTreeMap::new(),
        differentials: Vec::new(),
    };
    for (idx, f) in (1..=t).rev().enumerate() {
        let top = t - f + 1;
        let out = d1_ranks.get(idx).copied().unwrap_or(0);
        let incoming = if idx > 0 { d1_ranks[idx - 1] } else { 0 };
        let dim = e1.dims[&(f, top)];
        e2.dims.insert((f, top), dim - out - incoming);
    }
    let nz = e2.nonzero();
    let e2_single = nz == vec![((1, t), sym_dim(n, t))];

    Ok(SpectralPages {
        n,
        t,
        e0,
        e1,
        e2,
        e0_matches_tensor_model: e0_matches,
        e1_concentrated: concentrated,
        d1_well_defined: well_defined,
        d1_matches_koszul: matches_koszul,
        e2_single_corner: e2_single,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{F2, Q};

    #[test]
    fn pages_for_small_cases() {
        for n in 1..=3 {
            for t in 2..=4 {
                let pages = spectral_pages::<Q>(n, t).unwrap();
                assert!(pages.passed(), "n={n} t={t}: {}", pages.details());
            }
        }
        assert!(spectral_pages::<F2>(2, 3).unwrap().passed());
    }

    #[test]
    fn e2_for_n2_t3() {
        let pages = spectral_pages::<Q>(2, 3).unwrap();
        assert_eq!(pages.e2.nonzero(), vec![((1, 3), 4)]);
    }

    #[test]
    fn e1_row_for_t4() {
        let pages = spectral_pages::<Q>(4, 4).unwrap();
        // ∧⁴⊗S⁰, ∧³⊗S¹, ∧²⊗S², ∧¹⊗S³
        assert_eq!(
            pages.e1.nonzero(),
            vec![((1, 4), 80), ((2, 3), 60), ((3, 2), 16), ((4, 1), 1)]
        );
    }

    #[test]
    fn d1_on_top_wedge() {
        let pages = spectral_pages::<Q>(2, 2).unwrap();
        let d1 = &pages.e1.differentials[0];
        assert_eq!((d1.from, d1.to), ((2, 1), (1, 2)));
        // e1∧e2 ⊗ 1 ↦ e1 ⊗ e2 − e2 ⊗ e1
        assert_eq!(
            d1.matrix.to_dense(),
            vec![vec![Q::from_i64(0)], vec![Q::from_i64(1)], vec![Q::from_i64(-1)], vec![Q::from_i64(0)]]
        );
    }

    #[test]
    fn rejects_t1() {
        assert!(spectral_pages::<Q>(3, 1).is_err());
    }
}
