//! Canonical bases of `∧^i V`, `S^t V`, `T_t^p` and `∧^f ⊗ S^m`, the
//! induced `GL(V)`-action on them, the projection `V^{⊗t} → S^t`, and the
//! determinant pairing between `∧^i V` and `∧^i V*`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::combinatorics::{
    binomial, check_ambient, enumerate_compositions, subsets_of_size, Subset,
};
use crate::error::{Error, Result};
use crate::linalg::{determinant, SparseMatrix};
use crate::scalar::ExactField;

/// A decomposable basis tensor `e_{A_1} ⊗ ⋯ ⊗ e_{A_p}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorWord(pub Vec<Subset>);

impl TensorWord {
    pub fn factors(&self) -> &[Subset] {
        &self.0
    }

    /// Partial degree.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total degree.
    pub fn degree(&self) -> usize {
        self.0.iter().map(Subset::len).sum()
    }

    /// The composition `(|A_1|, ..., |A_p|)`.
    pub fn shape(&self) -> Vec<usize> {
        self.0.iter().map(Subset::len).collect()
    }
}

impl fmt::Display for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        for (k, s) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("|")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A monomial `e_1^{m_1} ⋯ e_n^{m_n}` of `S^t V`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> usize {
        self.0.iter().map(|&m| m as usize).sum()
    }

    /// Monomial counting the indices of a word of basis vectors `e_{a_1} ⋯ e_{a_t}`.
    pub fn from_indices(n: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut exps = vec![0u32; n];
        for a in indices {
            exps[a - 1] += 1;
        }
        Monomial(exps)
    }

    /// The multiplication `e_a · m`.
    pub fn times(&self, a: usize) -> Self {
        let mut exps = self.0.clone();
        exps[a - 1] += 1;
        Monomial(exps)
    }

    /// The nondecreasing index word with this content.
    pub fn sorted_indices(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(k, &m)| std::iter::repeat_n(k + 1, m as usize))
            .collect()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, m) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum BasisElement {
    Word(TensorWord),
    Monomial(Monomial),
    /// `e_A ⊗ m` in `∧^f ⊗ S^m`.
    WedgeSym(Subset, Monomial),
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisElement::Word(w) => write!(f, "{w}"),
            BasisElement::Monomial(m) => write!(f, "{m}"),
            BasisElement::WedgeSym(a, m) => write!(f, "{a}|{m}"),
        }
    }
}

/// A vector space with an ordered basis.
#[derive(Clone, Debug)]
pub struct BasedSpace {
    label: String,
    n: usize,
    basis: Vec<BasisElement>,
    index: HashMap<BasisElement, usize>,
}

impl BasedSpace {
    pub fn new(label: impl Into<String>, n: usize, basis: Vec<BasisElement>) -> Self {
        let index: HashMap<_, _> = basis
            .iter()
            .enumerate()
            .map(|(k, b)| (b.clone(), k))
            .collect();
        assert_eq!(index.len(), basis.len(), "duplicate basis elements");
        BasedSpace {
            label: label.into(),
            n,
            basis,
            index,
        }
    }

    pub fn zero(label: impl Into<String>, n: usize) -> Self {
        Self::new(label, n, Vec::new())
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn index_of(&self, e: &BasisElement) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn index_of_word(&self, w: &TensorWord) -> Option<usize> {
        // cheap clone: words are short vectors of Copy subsets
        self.index.get(&BasisElement::Word(w.clone())).copied()
    }

    pub fn word(&self, k: usize) -> &TensorWord {
        match &self.basis[k] {
            BasisElement::Word(w) => w,
            other => panic!("basis element {other} of {} is not a tensor word", self.label),
        }
    }

    /// One basis element per line.
    pub fn export_listing(&self) -> String {
        let mut out = String::new();
        for b in &self.basis {
            out.push_str(&b.to_string());
            out.push('\n');
        }
        out
    }
}

/// A linear map given by its matrix in the canonical bases: column `j` is
/// the image of source basis element `j`.
#[derive(Clone, Debug)]
pub struct LinearMapOnBasis<F> {
    pub source: Arc<BasedSpace>,
    pub target: Arc<BasedSpace>,
    pub matrix: SparseMatrix<F>,
}

impl<F: ExactField> LinearMapOnBasis<F> {
    pub fn new(
        source: Arc<BasedSpace>,
        target: Arc<BasedSpace>,
        matrix: SparseMatrix<F>,
    ) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix for a map {} (dim {}) -> {} (dim {})",
                matrix.rows(),
                matrix.cols(),
                source.label(),
                source.dim(),
                target.label(),
                target.dim()
            )));
        }
        Ok(LinearMapOnBasis {
            source,
            target,
            matrix,
        })
    }

    pub fn zero(source: Arc<BasedSpace>, target: Arc<BasedSpace>) -> Self {
        let matrix = SparseMatrix::zero(target.dim(), source.dim());
        LinearMapOnBasis {
            source,
            target,
            matrix,
        }
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearMapOnBasis<F>) -> Result<LinearMapOnBasis<F>> {
        let matrix = self.matrix.multiply(&inner.matrix)?;
        Ok(LinearMapOnBasis {
            source: inner.source.clone(),
            target: self.target.clone(),
            matrix,
        })
    }
}

/// `∧^i V` with basis the `i`-subsets in lexicographic order (each as a
/// one-factor word).
pub fn wedge_basis(n: usize, i: i64) -> Result<BasedSpace> {
    check_ambient(n)?;
    let label = format!("L^{i}");
    if i < 0 || i as usize > n {
        return Ok(BasedSpace::zero(label, n));
    }
    let basis = subsets_of_size(n, i as usize)
        .into_iter()
        .map(|s| BasisElement::Word(TensorWord(vec![s])))
        .collect();
    Ok(BasedSpace::new(label, n, basis))
}

/// Monomials of degree `t`, ordered as their nondecreasing index words
/// (`e_1^2 < e_1 e_2 < e_2^2`).
pub fn monomials(n: usize, t: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(t);
    fill_monomials(n, t, 1, &mut word, &mut out);
    out
}

fn fill_monomials(n: usize, t: usize, min: usize, word: &mut Vec<usize>, out: &mut Vec<Monomial>) {
    if word.len() == t {
        out.push(Monomial::from_indices(n, word.iter().copied()));
        return;
    }
    for a in min..=n {
        word.push(a);
        fill_monomials(n, t, a, word, out);
        word.pop();
    }
}

/// `S^t V`.
pub fn sym_basis(n: usize, t: i64) -> Result<BasedSpace> {
    check_ambient(n)?;
    let label = format!("S^{t}");
    if t < 0 {
        return Ok(BasedSpace::zero(label, n));
    }
    let basis = monomials(n, t as usize)
        .into_iter()
        .map(BasisElement::Monomial)
        .collect();
    Ok(BasedSpace::new(label, n, basis))
}

/// The words of one composition block, first factor outermost.
pub(crate) fn words_for_composition(n: usize, parts: &[usize]) -> Vec<TensorWord> {
    let mut words = vec![TensorWord(Vec::with_capacity(parts.len()))];
    for &i in parts {
        let subs = subsets_of_size(n, i);
        let mut next = Vec::with_capacity(words.len() * subs.len());
        for w in &words {
            for s in &subs {
                let mut f = w.0.clone();
                f.push(*s);
                next.push(TensorWord(f));
            }
        }
        words = next;
    }
    words
}

/// `T_t^p = ⊕ ∧^{i_1} ⊗ ⋯ ⊗ ∧^{i_p}` over compositions of `t` into `p`
/// parts in `1..=n`.
pub fn build_t(n: usize, t: usize, p: usize) -> Result<BasedSpace> {
    check_ambient(n)?;
    let label = format!("T_{t}^{p}");
    let basis = enumerate_compositions(t, p, n)
        .iter()
        .flat_map(|c| words_for_composition(n, c.parts()))
        .map(BasisElement::Word)
        .collect();
    Ok(BasedSpace::new(label, n, basis))
}

/// `dim T_t^p` from the composition count, without building the basis.
pub fn t_dim(n: usize, t: usize, p: usize) -> u128 {
    enumerate_compositions(t, p, n)
        .iter()
        .map(|c| c.parts().iter().map(|&i| binomial(n, i)).product::<u128>())
        .sum()
}

/// `∧^f ⊗ S^m`, ordered with the subset outermost.
pub fn wedge_sym_basis(n: usize, f: usize, m: usize) -> Result<BasedSpace> {
    check_ambient(n)?;
    let label = format!("L^{f}(x)S^{m}");
    let mons = monomials(n, m);
    let basis = if f > n {
        Vec::new()
    } else {
        subsets_of_size(n, f)
            .into_iter()
            .flat_map(|a| mons.iter().map(move |mo| BasisElement::WedgeSym(a, mo.clone())))
            .collect()
    };
    Ok(BasedSpace::new(label, n, basis))
}

fn dense_square<F: ExactField>(g: &SparseMatrix<F>, n: usize) -> Result<Vec<Vec<F>>> {
    if g.rows() != n || g.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "group element is {}x{}, expected {n}x{n}",
            g.rows(),
            g.cols()
        )));
    }
    Ok(g.to_dense())
}

/// Image of `e_A` under `∧^{|A|} g`: `Σ_B det(g[B, A]) e_B`.
fn wedge_image<F: ExactField>(g: &[Vec<F>], a: &Subset) -> Vec<(Subset, F)> {
    let n = g.len();
    let cols: Vec<usize> = a.elements().map(|e| e - 1).collect();
    subsets_of_size(n, a.len())
        .into_iter()
        .filter_map(|b| {
            let minor: Vec<Vec<F>> = b
                .elements()
                .map(|r| cols.iter().map(|&c| g[r - 1][c].clone()).collect())
                .collect();
            let d = determinant(&minor);
            (!d.is_zero()).then_some((b, d))
        })
        .collect()
}

type Poly<F> = HashMap<Vec<u32>, F>;

fn poly_mul<F: ExactField>(x: &Poly<F>, y: &Poly<F>) -> Poly<F> {
    let mut out: Poly<F> = HashMap::new();
    for (ex, cx) in x {
        for (ey, cy) in y {
            let e: Vec<u32> = ex.iter().zip(ey).map(|(a, b)| a + b).collect();
            let slot = out.entry(e).or_insert_with(F::zero);
            *slot = slot.clone() + cx.clone() * cy.clone();
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Image of a monomial under the substitution `e_j ↦ Σ_i g[i][j] e_i`.
fn sym_image<F: ExactField>(g: &[Vec<F>], m: &Monomial) -> Poly<F> {
    let n = g.len();
    let mut acc: Poly<F> = HashMap::from([(vec![0; n], F::one())]);
    for j in m.sorted_indices() {
        let lin: Poly<F> = (0..n)
            .filter(|&i| !g[i][j - 1].is_zero())
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                (e, g[i][j - 1].clone())
            })
            .collect();
        acc = poly_mul(&acc, &lin);
    }
    acc
}

/// The induced action of `g ∈ GL(V)` on a wedge, symmetric, tensor or
/// `∧ ⊗ S` space: minors on `∧^i`, factorwise on tensors, substitution on
/// `S^t`.
pub fn gl_action<F: ExactField>(
    g: &SparseMatrix<F>,
    space: &Arc<BasedSpace>,
) -> Result<LinearMapOnBasis<F>> {
    let n = space.ambient();
    let g = dense_square(g, n)?;
    let mut wedge_cache: HashMap<Subset, Vec<(Subset, F)>> = HashMap::new();
    let mut wedge = |a: &Subset| -> Vec<(Subset, F)> {
        wedge_cache
            .entry(*a)
            .or_insert_with(|| wedge_image(&g, a))
            .clone()
    };
    let mut triplets = Vec::new();
    for (col, elem) in space.basis().iter().enumerate() {
        let image: Vec<(BasisElement, F)> = match elem {
            BasisElement::Word(w) => {
                let mut acc: Vec<(Vec<Subset>, F)> = vec![(Vec::new(), F::one())];
                for a in w.factors() {
                    let img = wedge(a);
                    let mut next = Vec::with_capacity(acc.len() * img.len());
                    for (prefix, c) in &acc {
                        for (b, d) in &img {
                            let mut f = prefix.clone();
                            f.push(*b);
                            next.push((f, c.clone() * d.clone()));
                        }
                    }
                    acc = next;
                }
                acc.into_iter()
                    .map(|(f, c)| (BasisElement::Word(TensorWord(f)), c))
                    .collect()
            }
            BasisElement::Monomial(m) => sym_image(&g, m)
                .into_iter()
                .map(|(e, c)| (BasisElement::Monomial(Monomial(e)), c))
                .collect(),
            BasisElement::WedgeSym(a, m) => {
                let wi = wedge(a);
                let si = sym_image(&g, m);
                wi.iter()
                    .flat_map(|(b, d)| {
                        si.iter().map(move |(e, c)| {
                            (
                                BasisElement::WedgeSym(*b, Monomial(e.clone())),
                                d.clone() * c.clone(),
                            )
                        })
                    })
                    .collect()
            }
        };
        for (e, c) in image {
            let row = space.index_of(&e).ok_or_else(|| {
                Error::DimensionMismatch(format!("{e} not in the basis of {}", space.label()))
            })?;
            triplets.push((row, col, c));
        }
    }
    let matrix = SparseMatrix::from_triplets(space.dim(), space.dim(), triplets)?;
    LinearMapOnBasis::new(space.clone(), space.clone(), matrix)
}

/// The natural projection `π: V^{⊗t} → S^t`.
pub fn projection_pi<F: ExactField>(n: usize, t: usize) -> Result<LinearMapOnBasis<F>> {
    if t == 0 {
        return Err(Error::OutOfRange {
            what: "t",
            value: 0,
            range: "t >= 1".into(),
        });
    }
    let source = Arc::new(build_t(n, t, t)?);
    let target = Arc::new(sym_basis(n, t as i64)?);
    let triplets = (0..source.dim()).map(|col| {
        let w = source.word(col);
        let m = Monomial::from_indices(n, w.factors().iter().flat_map(|s| s.elements()));
        let row = target
            .index_of(&BasisElement::Monomial(m))
            .expect("every degree-t monomial is in S^t");
        (row, col, F::one())
    });
    let matrix = SparseMatrix::from_triplets(target.dim(), source.dim(), triplets.collect::<Vec<_>>())?;
    LinearMapOnBasis::new(source, target, matrix)
}

/// `⟨e_A, e*_B⟩ = det(⟨e_{a_j}, e*_{b_k}⟩)`, which is `1` if `A = B` and `0`
/// otherwise.
pub fn det_pairing<F: ExactField>(alpha: &Subset, dual_word: &Subset) -> Result<F> {
    if alpha.ambient() != dual_word.ambient() {
        return Err(Error::AmbientMismatch(alpha.ambient(), dual_word.ambient()));
    }
    if alpha.len() != dual_word.len() {
        return Err(Error::DimensionMismatch(format!(
            "pairing a {}-vector with a {}-covector",
            alpha.len(),
            dual_word.len()
        )));
    }
    let gram: Vec<Vec<F>> = alpha
        .elements()
        .map(|a| {
            dual_word
                .elements()
                .map(|b| if a == b { F::one() } else { F::zero() })
                .collect()
        })
        .collect();
    Ok(determinant(&gram))
}

/// `⟨v_1 ∧ ⋯ ∧ v_i, v*_1 ∧ ⋯ ∧ v*_i⟩ = det(⟨v_j, v*_k⟩)` for coordinate
/// vectors and covectors.
pub fn det_pairing_vectors<F: ExactField>(vectors: &[Vec<F>], covectors: &[Vec<F>]) -> Result<F> {
    if vectors.len() != covectors.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} vectors against {} covectors",
            vectors.len(),
            covectors.len()
        )));
    }
    let gram: Vec<Vec<F>> = vectors
        .iter()
        .map(|v| {
            covectors
                .iter()
                .map(|w| {
                    assert_eq!(v.len(), w.len(), "vector and covector lengths differ");
                    v.iter()
                        .zip(w)
                        .fold(F::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
                })
                .collect()
        })
        .collect();
    Ok(determinant(&gram))
}

/// Coordinates of `v_1 ∧ ⋯ ∧ v_i` in the subset basis: the `i×i` minors of
/// the `n×i` matrix with columns `v_j`.
pub fn wedge_coordinates<F: ExactField>(n: usize, vectors: &[Vec<F>]) -> Vec<(Subset, F)> {
    subsets_of_size(n, vectors.len())
        .into_iter()
        .filter_map(|b| {
            let minor: Vec<Vec<F>> = b
                .elements()
                .map(|r| vectors.iter().map(|v| v[r - 1].clone()).collect())
                .collect();
            let d = determinant(&minor);
            (!d.is_zero()).then_some((b, d))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Q;

    fn q(v: i64) -> Q {
        Q::from_i64(v)
    }

    fn sub(n: usize, e: &[usize]) -> Subset {
        Subset::new(n, e).unwrap()
    }

    #[test]
    fn wedge_basis_examples() {
        let w = wedge_basis(3, 2).unwrap();
        assert_eq!(w.dim(), 3);
        let listed: Vec<_> = w.basis().iter().map(|b| b.to_string()).collect();
        assert_eq!(listed, ["{1,2}", "{1,3}", "{2,3}"]);
        assert_eq!(wedge_basis(2, 3).unwrap().dim(), 0);
        assert_eq!(wedge_basis(4, 0).unwrap().dim(), 1);
        assert_eq!(wedge_basis(4, -1).unwrap().dim(), 0);
    }

    #[test]
    fn sym_basis_examples() {
        assert_eq!(sym_basis(2, 4).unwrap().dim(), 5);
        assert_eq!(sym_basis(3, 0).unwrap().dim(), 1);
        for n in 1..6 {
            assert_eq!(sym_basis(n, 1).unwrap().dim(), n);
        }
        assert_eq!(sym_basis(2, -1).unwrap().dim(), 0);
        let listed: Vec<_> = sym_basis(2, 2)
            .unwrap()
            .basis()
            .iter()
            .map(|b| b.to_string())
            .collect();
        assert_eq!(listed, ["2 0", "1 1", "0 2"]);
    }

    #[test]
    fn build_t_examples() {
        assert_eq!(build_t(3, 3, 2).unwrap().dim(), 18);
        for n in 1..=3 {
            for t in 1..=4 {
                assert_eq!(build_t(n, t, t).unwrap().dim(), n.pow(t as u32));
                assert_eq!(build_t(n, t, 1).unwrap().dim() as u128, binomial(n, t));
            }
        }
        let t = build_t(2, 4, 2).unwrap();
        assert_eq!(t.dim(), 1);
        assert_eq!(t.basis()[0].to_string(), "{1,2}|{1,2}");
        assert_eq!(build_t(3, 0, 0).unwrap().dim(), 1);
        assert_eq!(build_t(3, 2, 0).unwrap().dim(), 0);
        assert_eq!(build_t(2, 5, 2).unwrap().dim(), 0);
    }

    #[test]
    fn t_basis_order_is_composition_then_product_lex() {
        let t = build_t(2, 3, 2).unwrap();
        let listed: Vec<_> = t.basis().iter().map(|b| b.to_string()).collect();
        assert_eq!(
            listed,
            ["{1}|{1,2}", "{2}|{1,2}", "{1,2}|{1}", "{1,2}|{2}"]
        );
    }

    #[test]
    fn gl_identity_acts_trivially() {
        let id = SparseMatrix::<Q>::identity(3);
        for space in [
            wedge_basis(3, 2).unwrap(),
            sym_basis(3, 3).unwrap(),
            build_t(3, 4, 2).unwrap(),
            wedge_sym_basis(3, 2, 2).unwrap(),
        ] {
            let space = Arc::new(space);
            let act = gl_action(&id, &space).unwrap();
            assert_eq!(act.matrix, SparseMatrix::identity(space.dim()));
        }
    }

    #[test]
    fn gl_swap_on_top_wedge_is_determinant() {
        let g = SparseMatrix::from_dense(&[vec![q(0), q(1)], vec![q(1), q(0)]]);
        let space = Arc::new(wedge_basis(2, 2).unwrap());
        let act = gl_action(&g, &space).unwrap();
        assert_eq!(act.matrix.to_dense(), vec![vec![q(-1)]]);
    }

    #[test]
    fn gl_shear_on_sym2() {
        let g = SparseMatrix::from_dense(&[vec![q(1), q(1)], vec![q(0), q(1)]]);
        let space = Arc::new(sym_basis(2, 2).unwrap());
        let act = gl_action(&g, &space).unwrap();
        // basis e1², e1e2, e2²; columns are images
        assert_eq!(
            act.matrix.to_dense(),
            vec![
                vec![q(1), q(1), q(1)],
                vec![q(0), q(1), q(2)],
                vec![q(0), q(0), q(1)],
            ]
        );
    }

    #[test]
    fn gl_rejects_wrong_size() {
        let g = SparseMatrix::<Q>::identity(3);
        let space = Arc::new(wedge_basis(2, 1).unwrap());
        assert!(gl_action(&g, &space).is_err());
    }

    #[test]
    fn projection_examples() {
        let pi = projection_pi::<Q>(2, 2).unwrap();
        // e1⊗e2 and e2⊗e1 both land on e1e2
        assert_eq!(pi.matrix.get(1, 1), q(1));
        assert_eq!(pi.matrix.get(1, 2), q(1));
        assert_eq!(pi.matrix.rank(), 3);
        let pi1 = projection_pi::<Q>(4, 1).unwrap();
        assert_eq!(pi1.matrix, SparseMatrix::identity(4));
        assert!(projection_pi::<Q>(2, 0).is_err());
    }

    #[test]
    fn det_pairing_examples() {
        assert_eq!(det_pairing::<Q>(&sub(3, &[1, 3]), &sub(3, &[1, 3])).unwrap(), q(1));
        assert_eq!(det_pairing::<Q>(&sub(3, &[1, 2]), &sub(3, &[1, 3])).unwrap(), q(0));
        assert!(det_pairing::<Q>(&sub(3, &[1, 2]), &sub(3, &[1])).is_err());
        let v = vec![vec![q(1), q(0)], vec![q(0), q(1)]];
        let w = vec![vec![q(1), q(1)], vec![q(1), q(1)]];
        // all four pairings equal 1: rank-one Gram matrix
        assert_eq!(det_pairing_vectors(&v, &w).unwrap(), q(0));
    }

    #[test]
    fn wedge_coordinates_are_minors() {
        let v = vec![vec![q(1), q(2), q(0)], vec![q(0), q(1), q(3)]];
        let coords = wedge_coordinates(3, &v);
        // {1,2}: 1·1 − 0·2 = 1; {1,3}: 1·3 − 0·0 = 3; {2,3}: 2·3 − 1·0 = 6
        assert_eq!(
            coords,
            vec![(sub(3, &[1, 2]), q(1)), (sub(3, &[1, 3]), q(3)), (sub(3, &[2, 3]), q(6))]
        );
    }
}
