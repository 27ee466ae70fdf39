//! The differential `δ` on tensor products of exterior powers, the complexes
//! built from it, the first-factor filtration with its graded pieces, the
//! degree-`t` Koszul slice, and the dual bar differentials over `∧(V*)`.

use std::sync::Arc;

use crate::combinatorics::{ordered_bipartitions, sign_unchecked, Subset};
use crate::error::{Error, Result};
use crate::linalg::SparseMatrix;
use crate::multilinear::{
    build_t, det_pairing, projection_pi, wedge_sym_basis, BasedSpace, BasisElement,
    LinearMapOnBasis, TensorWord,
};
use crate::scalar::ExactField;

/// Consecutive terms with differentials `terms[k] → terms[k + 1]`.
#[derive(Clone, Debug)]
pub struct ChainComplex<F> {
    pub label: String,
    /// Degree of `terms[0]`.
    pub start_degree: i64,
    pub terms: Vec<Arc<BasedSpace>>,
    pub differentials: Vec<LinearMapOnBasis<F>>,
}

impl<F: ExactField> ChainComplex<F> {
    pub fn new(
        label: impl Into<String>,
        start_degree: i64,
        terms: Vec<Arc<BasedSpace>>,
        differentials: Vec<LinearMapOnBasis<F>>,
    ) -> Result<Self> {
        if differentials.len() + 1 != terms.len().max(1) {
            return Err(Error::DimensionMismatch(format!(
                "{} terms need {} differentials, got {}",
                terms.len(),
                terms.len().saturating_sub(1),
                differentials.len()
            )));
        }
        for (k, d) in differentials.iter().enumerate() {
            if d.matrix.cols() != terms[k].dim() || d.matrix.rows() != terms[k + 1].dim() {
                return Err(Error::DimensionMismatch(format!(
                    "differential {k} is {}x{} between terms of dims {} and {}",
                    d.matrix.rows(),
                    d.matrix.cols(),
                    terms[k].dim(),
                    terms[k + 1].dim()
                )));
            }
        }
        Ok(ChainComplex {
            label: label.into(),
            start_degree,
            terms,
            differentials,
        })
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.dim()).collect()
    }

    /// Checks `d_{k+1} ∘ d_k = 0` for every consecutive pair.
    pub fn check_square_zero(&self) -> Result<()> {
        for k in 1..self.differentials.len() {
            let prod = self.differentials[k]
                .matrix
                .multiply(&self.differentials[k - 1].matrix)?;
            if !prod.is_zero() {
                return Err(Error::NotAComplex(k - 1, k));
            }
        }
        Ok(())
    }
}

/// Apply `δ` to one word: `Σ_j (−1)^{j−1}` (slot `j` split by every ordered
/// bipartition, weighted by `s(B, C)`).
pub(crate) fn delta_of_word(w: &TensorWord) -> Vec<(TensorWord, i64)> {
    let mut out = Vec::new();
    for (j, a) in w.factors().iter().enumerate() {
        let slot_sign = if j % 2 == 0 { 1 } else { -1 };
        for (b, c) in ordered_bipartitions(a) {
            let mut f = Vec::with_capacity(w.len() + 1);
            f.extend_from_slice(&w.factors()[..j]);
            f.push(b);
            f.push(c);
            f.extend_from_slice(&w.factors()[j + 1..]);
            out.push((TensorWord(f), slot_sign * sign_unchecked(&b, &c)));
        }
    }
    out
}

/// Matrix of `δ` between two prebuilt spaces `T_t^p → T_t^{p+1}`.
pub fn delta_between<F: ExactField>(
    source: &Arc<BasedSpace>,
    target: &Arc<BasedSpace>,
) -> Result<LinearMapOnBasis<F>> {
    let mut triplets = Vec::new();
    for col in 0..source.dim() {
        for (w, c) in delta_of_word(source.word(col)) {
            let row = target.index_of_word(&w).ok_or_else(|| {
                Error::DimensionMismatch(format!("{w} is not in {}", target.label()))
            })?;
            triplets.push((row, col, F::from_i64(c)));
        }
    }
    let matrix = SparseMatrix::from_triplets(target.dim(), source.dim(), triplets)?;
    LinearMapOnBasis::new(source.clone(), target.clone(), matrix)
}

/// `δ: ∧^i → T_i^2`, `e_A ↦ Σ s(B, C) e_B ⊗ e_C`; the zero map for `i = 1`.
pub fn delta_wedge<F: ExactField>(n: usize, i: usize) -> Result<LinearMapOnBasis<F>> {
    if i == 0 {
        return Err(Error::OutOfRange {
            what: "i",
            value: 0,
            range: "i >= 1".into(),
        });
    }
    let source = Arc::new(build_t(n, i, 1)?);
    let target = Arc::new(build_t(n, i, 2)?);
    delta_between(&source, &target)
}

fn check_p(p: usize, t: usize) -> Result<()> {
    if p < 1 || p + 1 > t {
        return Err(Error::OutOfRange {
            what: "p",
            value: p as i64,
            range: format!("1..={}", t as i64 - 1),
        });
    }
    Ok(())
}

/// `δ: T_t^p → T_t^{p+1}` for `1 ≤ p ≤ t − 1`.
pub fn delta<F: ExactField>(n: usize, t: usize, p: usize) -> Result<LinearMapOnBasis<F>> {
    check_p(p, t)?;
    let source = Arc::new(build_t(n, t, p)?);
    let target = Arc::new(build_t(n, t, p + 1)?);
    delta_between(&source, &target)
}

/// `0 → T_t^1 → ⋯ → T_t^t (→ S^t) → 0`; the projection to `S^t` is
/// appended when `with_projection` is set.
pub fn build_inverted_koszul<F: ExactField>(
    n: usize,
    t: usize,
    with_projection: bool,
) -> Result<ChainComplex<F>> {
    if t == 0 {
        return Err(Error::OutOfRange {
            what: "t",
            value: 0,
            range: "t >= 1".into(),
        });
    }
    let terms: Vec<Arc<BasedSpace>> = (1..=t)
        .map(|p| build_t(n, t, p).map(Arc::new))
        .collect::<Result<_>>()?;
    let mut differentials = Vec::with_capacity(t);
    for p in 1..t {
        differentials.push(delta_between(&terms[p - 1], &terms[p])?);
    }
    let mut terms = terms;
    let label = if with_projection {
        let pi = projection_pi::<F>(n, t)?;
        // reuse the already-built T_t^t so the map shares the term's Arc
        let pi = LinearMapOnBasis::new(terms[t - 1].clone(), pi.target.clone(), pi.matrix)?;
        terms.push(pi.target.clone());
        differentials.push(pi);
        format!("T_{t} -> S^{t}")
    } else {
        format!("T_{t}")
    };
    ChainComplex::new(label, 1, terms, differentials)
}

/// The degree-`t` slice `∧^t ⊗ S^0 → ∧^{t−1} ⊗ S^1 → ⋯ → ∧^1 ⊗ S^{t−1}`
/// of the Koszul complex, with
/// `e_A ⊗ m ↦ Σ_{a∈A} s(A∖{a}, {a}) e_{A∖{a}} ⊗ e_a m`.
/// `terms[k]` is `∧^{t−k} ⊗ S^k`, in degree `k + 1`.
pub fn koszul_slice<F: ExactField>(n: usize, t: usize) -> Result<ChainComplex<F>> {
    if t == 0 {
        return Err(Error::OutOfRange {
            what: "t",
            value: 0,
            range: "t >= 1".into(),
        });
    }
    let terms: Vec<Arc<BasedSpace>> = (1..=t)
        .rev()
        .map(|f| wedge_sym_basis(n, f, t - f).map(Arc::new))
        .collect::<Result<_>>()?;
    let mut differentials = Vec::new();
    for k in 0..t - 1 {
        let (source, target) = (&terms[k], &terms[k + 1]);
        let mut triplets = Vec::new();
        for (col, elem) in source.basis().iter().enumerate() {
            let BasisElement::WedgeSym(a, m) = elem else {
                unreachable!("koszul slice terms hold wedge-sym elements")
            };
            for e in a.elements() {
                let rest = a.without(e);
                let single = Subset::singleton(n, e);
                let sign = sign_unchecked(&rest, &single);
                let image = BasisElement::WedgeSym(rest, m.times(e));
                let row = target.index_of(&image).expect("image lies in the next term");
                triplets.push((row, col, F::from_i64(sign)));
            }
        }
        let matrix = SparseMatrix::from_triplets(target.dim(), source.dim(), triplets)?;
        differentials.push(LinearMapOnBasis::new(source.clone(), target.clone(), matrix)?);
    }
    ChainComplex::new(format!("Koszul_{t}"), 1, terms, differentials)
}

/// The truncated complex `T_t^•` with every basis word tagged by its
/// filtration level `f = i_1`, the degree of its first factor.
#[derive(Clone, Debug)]
pub struct FilteredComplex<F> {
    pub n: usize,
    pub t: usize,
    pub base: ChainComplex<F>,
    /// `levels[p − 1][k]` is the level of basis word `k` of `T_t^p`.
    pub levels: Vec<Vec<usize>>,
}

pub fn filtration_levels<F: ExactField>(n: usize, t: usize) -> Result<FilteredComplex<F>> {
    let base = build_inverted_koszul::<F>(n, t, false)?;
    Ok(FilteredComplex::from_complex(n, t, base))
}

impl<F: ExactField> FilteredComplex<F> {
    pub fn from_complex(n: usize, t: usize, base: ChainComplex<F>) -> Self {
        let levels = base
            .terms
            .iter()
            .map(|space| {
                (0..space.dim())
                    .map(|k| space.word(k).factors()[0].len())
                    .collect()
            })
            .collect();
        FilteredComplex { n, t, base, levels }
    }

    /// Basis indices of `T_t^p` at exactly level `f`.
    pub fn level_indices(&self, p: usize, f: usize) -> Vec<usize> {
        self.levels[p - 1]
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == f)
            .map(|(k, _)| k)
            .collect()
    }

    /// `δ(F^f) ⊆ F^f` for every term and level: every column at level `f`
    /// has support at levels `≤ f`.
    pub fn is_compatible(&self) -> bool {
        self.base.differentials.iter().enumerate().all(|(k, d)| {
            let (src, tgt) = (&self.levels[k], &self.levels[k + 1]);
            d.matrix
                .columns()
                .iter()
                .enumerate()
                .all(|(c, col)| col.iter().all(|(r, _)| tgt[*r] <= src[c]))
        })
    }

    /// `G^f(T_t^p)` and the induced differential into `G^f(T_t^{p+1})`.
    pub fn graded_piece(&self, f: usize, p: usize) -> Result<(Arc<BasedSpace>, LinearMapOnBasis<F>)> {
        let t = self.t;
        if f < 1 || f > t || p < 1 || p > t {
            return Err(Error::OutOfRange {
                what: "(f, p)",
                value: f as i64,
                range: format!("1..={t}"),
            });
        }
        let space = self.graded_space(f, p);
        let next = if p < t {
            self.graded_space(f, p + 1)
        } else {
            Arc::new(BasedSpace::zero(format!("G^{f}(T_{t}^{})", p + 1), self.n))
        };
        let map = if p < t {
            let rows = self.level_indices(p + 1, f);
            let cols = self.level_indices(p, f);
            let matrix = self.base.differentials[p - 1].matrix.submatrix(&rows, &cols);
            LinearMapOnBasis::new(space.clone(), next, matrix)?
        } else {
            LinearMapOnBasis::zero(space.clone(), next)
        };
        Ok((space, map))
    }

    fn graded_space(&self, f: usize, p: usize) -> Arc<BasedSpace> {
        let term = &self.base.terms[p - 1];
        let basis = self
            .level_indices(p, f)
            .into_iter()
            .map(|k| term.basis()[k].clone())
            .collect();
        Arc::new(BasedSpace::new(format!("G^{f}(T_{}^{p})", self.t), self.n, basis))
    }
}

/// Standalone form of [`FilteredComplex::graded_piece`].
pub fn graded_piece<F: ExactField>(
    n: usize,
    t: usize,
    f: usize,
    p: usize,
) -> Result<(Arc<BasedSpace>, LinearMapOnBasis<F>)> {
    filtration_levels::<F>(n, t)?.graded_piece(f, p)
}

/// `1 ⊗ (−δ): ∧^f ⊗ T_{t−f}^{p−1} → ∧^f ⊗ T_{t−f}^p`, written in the bases
/// of `G^f(T_t^p)` and `G^f(T_t^{p+1})` through the bijection
/// `e_A ⊗ (e_{A_2} ⊗ ⋯) ↔ e_A ⊗ e_{A_2} ⊗ ⋯`.
pub fn graded_tensor_model<F: ExactField>(
    source: &BasedSpace,
    target: &BasedSpace,
) -> Result<SparseMatrix<F>> {
    let mut triplets = Vec::new();
    for col in 0..source.dim() {
        let w = source.word(col);
        let (head, tail) = w.factors().split_first().expect("graded words are nonempty");
        let residual = TensorWord(tail.to_vec());
        for (img, c) in delta_of_word(&residual) {
            let mut f = Vec::with_capacity(img.len() + 1);
            f.push(*head);
            f.extend_from_slice(img.factors());
            let row = target.index_of_word(&TensorWord(f)).ok_or_else(|| {
                Error::DimensionMismatch(format!("image word not in {}", target.label()))
            })?;
            triplets.push((row, col, F::from_i64(-c)));
        }
    }
    SparseMatrix::from_triplets(target.dim(), source.dim(), triplets)
}

/// Product of two basis words of `∧(V*)`: the sign is the parity of the
/// inversions of the concatenated index sequence; `None` when an index
/// repeats.
pub fn exterior_product(b: &Subset, c: &Subset) -> Option<(i64, Subset)> {
    let seq: Vec<usize> = b.elements().chain(c.elements()).collect();
    let mut inversions = 0usize;
    for (k, x) in seq.iter().enumerate() {
        for y in &seq[k + 1..] {
            if x == y {
                return None;
            }
            if x > y {
                inversions += 1;
            }
        }
    }
    let mut sorted = seq;
    sorted.sort_unstable();
    let merged = Subset::new(b.ambient(), &sorted).ok()?;
    Some((if inversions.is_multiple_of(2) { 1 } else { -1 }, merged))
}

/// Augmentation `ε: ∧(V*) → k` on a basis word: `1` in degree zero.
fn augmentation<F: ExactField>(b: &Subset) -> F {
    if b.is_empty() {
        F::one()
    } else {
        F::zero()
    }
}

/// Degree-`t` component of `d*_{p+1}: (Λ̄*)^{⊗p} → (Λ̄*)^{⊗(p+1)}` for
/// `Λ = ∧(V*)`, obtained by dualizing the normalized bar differential.
///
/// Row `B = (B_1, ..., B_{p+1})` (a dual word) and column
/// `A = (A_1, ..., A_p)` hold `⟨d*(e_A), e*_B⟩ = ⟨e_A, ∂(1 ⊗ e*_B)⟩`, where
/// `∂(1 ⊗ λ̄_1 ⊗ ⋯ ⊗ λ̄_{p+1})` is
/// `λ_1 ⊗ λ̄_2 ⊗ ⋯ + Σ_j (−1)^j 1 ⊗ ⋯ ⊗ (λ_j λ_{j+1})‾ ⊗ ⋯
///  + (−1)^{p+1} ε(λ_{p+1}) 1 ⊗ λ̄_1 ⊗ ⋯ ⊗ λ̄_p`
/// and a cochain on `Λ ⊗ M` acts through `ε` on the `Λ` factor.
pub fn bar_dual_differential<F: ExactField>(
    n: usize,
    t: usize,
    p: usize,
) -> Result<LinearMapOnBasis<F>> {
    check_p(p, t)?;
    let source = Arc::new(bar_dual_term(n, t, p)?);
    let target = Arc::new(bar_dual_term(n, t, p + 1)?);
    let mut triplets: Vec<(usize, usize, F)> = Vec::new();

    // pairs a cochain word with a chain word, or zero when no source word matches
    let pair_with_source = |chain: &[Subset]| -> Result<Option<(usize, F)>> {
        let word = TensorWord(chain.to_vec());
        let Some(col) = source.index_of_word(&word) else {
            return Ok(None);
        };
        let alpha = source.word(col);
        let mut value = F::one();
        for (a, b) in alpha.factors().iter().zip(chain) {
            value = value * det_pairing::<F>(a, b)?;
        }
        Ok(Some((col, value)))
    };

    for row in 0..target.dim() {
        let dual = target.word(row).factors();
        // λ_1 ⊗ λ̄_2 ⊗ ⋯: the cochain sees ε(λ_1)
        let eps_first = augmentation::<F>(&dual[0]);
        if !eps_first.is_zero() {
            if let Some((col, v)) = pair_with_source(&dual[1..])? {
                triplets.push((row, col, eps_first * v));
            }
        }
        for j in 0..p {
            let Some((sign, merged)) = exterior_product(&dual[j], &dual[j + 1]) else {
                continue;
            };
            let mut chain = Vec::with_capacity(p);
            chain.extend_from_slice(&dual[..j]);
            chain.push(merged);
            chain.extend_from_slice(&dual[j + 2..]);
            if let Some((col, v)) = pair_with_source(&chain)? {
                // the j-th merge (1-based j + 1) carries (−1)^{j+1}
                let s = if j % 2 == 0 { -sign } else { sign };
                triplets.push((row, col, F::from_i64(s) * v));
            }
        }
        let eps_last = augmentation::<F>(&dual[p]);
        if !eps_last.is_zero() {
            if let Some((col, v)) = pair_with_source(&dual[..p])? {
                let s = if (p + 1).is_multiple_of(2) { 1 } else { -1 };
                triplets.push((row, col, F::from_i64(s) * eps_last * v));
            }
        }
    }
    let matrix = SparseMatrix::from_triplets(target.dim(), source.dim(), triplets)?;
    LinearMapOnBasis::new(source, target, matrix)
}

/// Degree-`t` part of `(Λ̄*)^{⊗p}`: dual words over compositions of `t`
/// into `p` positive parts, in the same order as `T_t^p`.
pub fn bar_dual_term(n: usize, t: usize, p: usize) -> Result<BasedSpace> {
    let space = build_t(n, t, p)?;
    Ok(BasedSpace::new(
        format!("B_{t}^{p}"),
        n,
        space.basis().to_vec(),
    ))
}

/// The degree-`t` part of the cochain complex computing `Ext_{∧(V*)}(k, k)`,
/// in cohomological degrees `0..=t`.
pub fn bar_dual_complex<F: ExactField>(n: usize, t: usize) -> Result<ChainComplex<F>> {
    if t == 0 {
        let k = Arc::new(bar_dual_term(n, 0, 0)?);
        return ChainComplex::new("Bar_0", 0, vec![k], Vec::new());
    }
    let mut terms = vec![Arc::new(BasedSpace::zero(format!("B_{t}^0"), n))];
    let mut differentials = Vec::with_capacity(t);
    let first = Arc::new(bar_dual_term(n, t, 1)?);
    // d*_1 = 0
    differentials.push(LinearMapOnBasis::zero(terms[0].clone(), first.clone()));
    terms.push(first);
    for p in 1..t {
        let d = bar_dual_differential::<F>(n, t, p)?;
        let d = LinearMapOnBasis::new(terms[p].clone(), d.target.clone(), d.matrix)?;
        terms.push(d.target.clone());
        differentials.push(d);
    }
    ChainComplex::new(format!("Bar_{t}"), 0, terms, differentials)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{F2, Q};

    fn q(v: i64) -> Q {
        Q::from_i64(v)
    }

    fn word(n: usize, parts: &[&[usize]]) -> TensorWord {
        TensorWord(parts.iter().map(|p| Subset::new(n, p).unwrap()).collect())
    }

    fn entry(d: &LinearMapOnBasis<Q>, src: &TensorWord, tgt: &TensorWord) -> Q {
        let c = d.source.index_of_word(src).unwrap();
        let r = d.target.index_of_word(tgt).unwrap();
        d.matrix.get(r, c)
    }

    #[test]
    fn delta_on_degree_one_vanishes() {
        let d = delta_wedge::<Q>(3, 1).unwrap();
        assert_eq!(d.matrix.rows(), 0);
        assert_eq!(d.matrix.cols(), 3);
        assert!(d.matrix.is_zero());
    }

    #[test]
    fn delta_on_wedge_two() {
        let d = delta_wedge::<Q>(2, 2).unwrap();
        let a = word(2, &[&[1, 2]]);
        assert_eq!(entry(&d, &a, &word(2, &[&[1], &[2]])), q(1));
        assert_eq!(entry(&d, &a, &word(2, &[&[2], &[1]])), q(-1));
        assert_eq!(d.matrix.nnz(), 2);
    }

    #[test]
    fn delta_reproduces_fourteen_signed_terms() {
        let d = delta_wedge::<Q>(4, 4).unwrap();
        let a = word(4, &[&[1, 2, 3, 4]]);
        let expected: [(&[&[usize]], i64); 14] = [
            (&[&[1, 2, 3], &[4]], 1),
            (&[&[1, 2, 4], &[3]], -1),
            (&[&[1, 3, 4], &[2]], 1),
            (&[&[2, 3, 4], &[1]], -1),
            (&[&[1, 2], &[3, 4]], 1),
            (&[&[1, 3], &[2, 4]], -1),
            (&[&[1, 4], &[2, 3]], 1),
            (&[&[2, 3], &[1, 4]], 1),
            (&[&[2, 4], &[1, 3]], -1),
            (&[&[3, 4], &[1, 2]], 1),
            (&[&[1], &[2, 3, 4]], 1),
            (&[&[2], &[1, 3, 4]], -1),
            (&[&[3], &[1, 2, 4]], 1),
            (&[&[4], &[1, 2, 3]], -1),
        ];
        for (parts, sign) in expected {
            assert_eq!(entry(&d, &a, &word(4, parts)), q(sign), "{parts:?}");
        }
        assert_eq!(d.matrix.nnz(), 14);
    }

    #[test]
    fn delta_leibniz_sign_on_second_slot() {
        let d = delta::<Q>(2, 3, 2).unwrap();
        let src = word(2, &[&[1], &[1, 2]]);
        assert_eq!(entry(&d, &src, &word(2, &[&[1], &[1], &[2]])), q(-1));
        assert_eq!(entry(&d, &src, &word(2, &[&[1], &[2], &[1]])), q(1));
        assert_eq!(d.matrix.column(d.source.index_of_word(&src).unwrap()).len(), 2);
    }

    #[test]
    fn delta_p1_matches_delta_wedge() {
        for n in 1..=4 {
            for i in 2..=4 {
                assert_eq!(
                    delta::<Q>(n, i, 1).unwrap().matrix,
                    delta_wedge::<Q>(n, i).unwrap().matrix
                );
            }
        }
    }

    #[test]
    fn delta_rejects_bad_p() {
        assert!(delta::<Q>(2, 3, 0).is_err());
        assert!(delta::<Q>(2, 3, 3).is_err());
    }

    #[test]
    fn inverted_koszul_dims() {
        let c = build_inverted_koszul::<Q>(2, 2, true).unwrap();
        assert_eq!(c.dims(), vec![1, 4, 3]);
        let c = build_inverted_koszul::<Q>(3, 3, true).unwrap();
        assert_eq!(c.dims(), vec![1, 18, 27, 10]);
        let c = build_inverted_koszul::<F2>(2, 4, true).unwrap();
        assert_eq!(c.dims(), vec![0, 1, 12, 16, 5]);
        c.check_square_zero().unwrap();
        let c = build_inverted_koszul::<Q>(2, 4, false).unwrap();
        assert_eq!(c.dims(), vec![0, 1, 12, 16]);
    }

    #[test]
    fn koszul_slice_examples() {
        let k = koszul_slice::<Q>(2, 2).unwrap();
        assert_eq!(k.dims(), vec![1, 4]);
        let d = &k.differentials[0].matrix;
        // basis of ∧¹⊗S¹: {1}|1 0, {1}|0 1, {2}|1 0, {2}|0 1
        assert_eq!(d.to_dense(), vec![vec![q(0)], vec![q(1)], vec![q(-1)], vec![q(0)]]);
        assert_eq!(koszul_slice::<Q>(4, 4).unwrap().dims(), vec![1, 16, 60, 80]);
    }

    #[test]
    fn filtration_examples() {
        let fc = filtration_levels::<Q>(3, 3).unwrap();
        let t32 = &fc.base.terms[1];
        let k = t32.index_of_word(&word(3, &[&[1, 2], &[3]])).unwrap();
        assert_eq!(fc.levels[1][k], 2);
        assert!(fc.is_compatible());
        let fc = filtration_levels::<Q>(4, 4).unwrap();
        // every word sits at some level in 1..=t
        assert!(fc.levels.iter().flatten().all(|&l| (1..=4).contains(&l)));
        // columns of the first diagram: levels 4, 3, 2, 1
        let by_level = |f| (1..=4).map(|p| fc.level_indices(p, f).len()).collect::<Vec<_>>();
        assert_eq!(by_level(4), vec![1, 0, 0, 0]);
        assert_eq!(by_level(3), vec![0, 16, 0, 0]);
        assert_eq!(by_level(2), vec![0, 36, 96, 0]);
        assert_eq!(by_level(1), vec![0, 16, 192, 256]);
    }

    #[test]
    fn graded_piece_examples() {
        let (g, _) = graded_piece::<Q>(3, 3, 3, 1).unwrap();
        assert_eq!(g.dim(), 1);
        for p in 2..=3 {
            let (g, _) = graded_piece::<Q>(3, 3, 3, p).unwrap();
            assert_eq!(g.dim(), 0);
        }
        let (g, d) = graded_piece::<Q>(2, 3, 1, 2).unwrap();
        assert_eq!(g.dim(), 2);
        let model = graded_tensor_model::<Q>(&d.source, &d.target).unwrap();
        assert_eq!(d.matrix, model);
    }

    #[test]
    fn exterior_product_signs() {
        let s = |e: &[usize]| Subset::new(4, e).unwrap();
        assert_eq!(exterior_product(&s(&[2]), &s(&[1])), Some((-1, s(&[1, 2]))));
        assert_eq!(exterior_product(&s(&[1, 3]), &s(&[2, 4])), Some((-1, s(&[1, 2, 3, 4]))));
        assert_eq!(exterior_product(&s(&[1, 3]), &s(&[3])), None);
        assert_eq!(exterior_product(&s(&[3, 4]), &s(&[1, 2])), Some((1, s(&[1, 2, 3, 4]))));
        assert_eq!(exterior_product(&s(&[2, 3, 4]), &s(&[1])), Some((-1, s(&[1, 2, 3, 4]))));
    }

    #[test]
    fn bar_dual_small_case() {
        let d = bar_dual_differential::<Q>(2, 2, 1).unwrap();
        let src = word(2, &[&[1, 2]]);
        assert_eq!(entry(&d, &src, &word(2, &[&[1], &[2]])), q(-1));
        assert_eq!(entry(&d, &src, &word(2, &[&[2], &[1]])), q(1));
        let d = bar_dual_differential::<Q>(2, 3, 1).unwrap();
        let delta = delta::<Q>(2, 3, 1).unwrap();
        assert_eq!(d.matrix, delta.matrix.neg());
    }

    #[test]
    fn bar_dual_complex_shape() {
        let c = bar_dual_complex::<Q>(2, 0).unwrap();
        assert_eq!(c.dims(), vec![1]);
        let c = bar_dual_complex::<Q>(3, 3).unwrap();
        assert_eq!(c.dims(), vec![0, 1, 18, 27]);
        c.check_square_zero().unwrap();
    }
}
