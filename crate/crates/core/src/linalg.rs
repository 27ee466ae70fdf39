//! Sparse exact matrices and the rank computations every check reduces to.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{rational_mod, ExactField, FieldSpec, Fp};

/// Matrix over an exact field, stored column-wise. Each column is sorted by
/// row index and never holds an explicit zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix<F> {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, F)>>,
}

impl<F: ExactField> SparseMatrix<F> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            rows: n,
            cols: n,
            columns: (0..n).map(|j| vec![(j, F::one())]).collect(),
        }
    }

    /// Build from `(row, col, value)` entries; duplicates are summed and
    /// zeros dropped.
    pub fn from_triplets<I>(rows: usize, cols: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, F)>,
    {
        let mut acc: Vec<BTreeMap<usize, F>> = vec![BTreeMap::new(); cols];
        for (r, c, v) in entries {
            if r >= rows || c >= cols {
                return Err(Error::DimensionMismatch(format!(
                    "entry ({r}, {c}) outside a {rows}x{cols} matrix"
                )));
            }
            let slot = acc[c].entry(r).or_insert_with(F::zero);
            *slot = slot.clone() + v;
        }
        let columns = acc
            .into_iter()
            .map(|col| col.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        Ok(SparseMatrix {
            rows,
            cols,
            columns,
        })
    }

    /// Build from columns given as `row -> value` maps.
    pub fn from_column_maps(rows: usize, columns: Vec<BTreeMap<usize, F>>) -> Self {
        let cols = columns.len();
        let columns = columns
            .into_iter()
            .map(|col| {
                col.into_iter()
                    .inspect(|(r, _)| assert!(*r < rows, "row {r} out of bounds ({rows})"))
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        SparseMatrix {
            rows,
            cols,
            columns,
        }
    }

    pub fn from_dense(rows: &[Vec<F>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut columns = vec![Vec::new(); ncols];
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged dense matrix");
            for (c, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    columns[c].push((r, v.clone()));
                }
            }
        }
        SparseMatrix {
            rows: nrows,
            cols: ncols,
            columns,
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<F>> {
        let mut out = vec![vec![F::zero(); self.cols]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                out[*r][c] = v.clone();
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        F::field_spec()
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn column(&self, c: usize) -> &[(usize, F)] {
        &self.columns[c]
    }

    pub fn columns(&self) -> &[Vec<(usize, F)>] {
        &self.columns
    }

    pub fn get(&self, r: usize, c: usize) -> F {
        match self.columns[c].binary_search_by_key(&r, |(i, _)| *i) {
            Ok(k) => self.columns[c][k].1.clone(),
            Err(_) => F::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    /// Entries sorted by `(row, col)`.
    pub fn triplets(&self) -> Vec<(usize, usize, F)> {
        let mut out: Vec<_> = self
            .columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v.clone())))
            .collect();
        out.sort_by_key(|&(r, c, _)| (r, c));
        out
    }

    pub fn transpose(&self) -> Self {
        let mut columns = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                columns[*r].push((c, v.clone()));
            }
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            columns,
        }
    }

    /// `self · rhs`.
    pub fn multiply(&self, rhs: &SparseMatrix<F>) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let columns = rhs
            .columns
            .iter()
            .map(|rcol| {
                let mut acc: BTreeMap<usize, F> = BTreeMap::new();
                for (k, b) in rcol {
                    for (r, a) in &self.columns[*k] {
                        let slot = acc.entry(*r).or_insert_with(F::zero);
                        *slot = slot.clone() + a.clone() * b.clone();
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        Ok(SparseMatrix {
            rows: self.rows,
            cols: rhs.cols,
            columns,
        })
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return Self::zero(self.rows, self.cols);
        }
        self.map_entries(|v| v.clone() * s.clone())
    }

    pub fn neg(&self) -> Self {
        self.map_entries(|v| -v.clone())
    }

    pub fn add(&self, rhs: &SparseMatrix<F>) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let entries = self
            .triplets()
            .into_iter()
            .chain(rhs.triplets());
        Self::from_triplets(self.rows, self.cols, entries)
    }

    pub fn sub(&self, rhs: &SparseMatrix<F>) -> Result<Self> {
        self.add(&rhs.neg())
    }

    fn map_entries(&self, f: impl Fn(&F) -> F) -> Self {
        let columns = self
            .columns
            .iter()
            .map(|col| {
                col.iter()
                    .map(|(r, v)| (*r, f(v)))
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            columns,
        }
    }

    /// Restriction to the given rows and columns, re-indexed in the order
    /// supplied.
    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> Self {
        let mut row_map = HashMap::with_capacity(row_idx.len());
        for (k, &r) in row_idx.iter().enumerate() {
            row_map.insert(r, k);
        }
        let columns = col_idx
            .iter()
            .map(|&c| {
                let mut col: Vec<(usize, F)> = self.columns[c]
                    .iter()
                    .filter_map(|(r, v)| row_map.get(r).map(|&k| (k, v.clone())))
                    .collect();
                col.sort_by_key(|(r, _)| *r);
                col
            })
            .collect();
        SparseMatrix {
            rows: row_idx.len(),
            cols: col_idx.len(),
            columns,
        }
    }

    pub fn rank(&self) -> usize {
        // eliminate along the shorter side
        if self.rows < self.cols {
            F::rank_of_vectors(&self.transpose().columns)
        } else {
            F::rank_of_vectors(&self.columns)
        }
    }

    /// `cols − rank`.
    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    /// Bit-exact text export: header `rows cols nnz`, then one `r c v` line
    /// per entry with 1-based indices, sorted by `(r, c)`.
    pub fn export_text(&self) -> String {
        let entries = self.triplets();
        let mut out = String::new();
        writeln!(out, "{} {} {}", self.rows, self.cols, entries.len()).unwrap();
        for (r, c, v) in entries {
            writeln!(out, "{} {} {}", r + 1, c + 1, v.render()).unwrap();
        }
        out
    }
}

impl SparseMatrix<BigRational> {
    /// Entrywise reduction modulo `P`.
    pub fn reduce_mod<const P: u32>(&self) -> Result<SparseMatrix<Fp<P>>> {
        let mut columns = Vec::with_capacity(self.cols);
        for col in &self.columns {
            let mut out = Vec::with_capacity(col.len());
            for (r, v) in col {
                let red = rational_mod::<P>(v)?;
                if !red.is_zero() {
                    out.push((*r, red));
                }
            }
            columns.push(out);
        }
        Ok(SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            columns,
        })
    }
}

/// Rank over a field by incremental sparse echelon reduction: each vector
/// is reduced against the pivots keyed by their leading index.
pub fn echelon_rank<F: ExactField>(vectors: &[Vec<(usize, F)>]) -> usize {
    let mut pivots: HashMap<usize, Vec<(usize, F)>> = HashMap::new();
    for v in vectors {
        let mut v = v.clone();
        while let Some((lead, coeff)) = v.first().cloned() {
            match pivots.get(&lead) {
                Some(p) => {
                    // p is monic at lead
                    v = axpy(&v, &(-coeff), p);
                }
                None => {
                    let inv = coeff.inverse().expect("nonzero leading entry");
                    let monic = v.into_iter().map(|(i, x)| (i, x * inv.clone())).collect();
                    pivots.insert(lead, monic);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// `x + s·y` on sorted sparse vectors.
fn axpy<F: ExactField>(x: &[(usize, F)], s: &F, y: &[(usize, F)]) -> Vec<(usize, F)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i].clone());
            i += 1;
        } else if take_y {
            let v = s.clone() * y[j].1.clone();
            if !v.is_zero() {
                out.push((y[j].0, v));
            }
            j += 1;
        } else {
            let v = x[i].1.clone() + s.clone() * y[j].1.clone();
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank over the rationals without fractions: vectors are scaled to
/// primitive integer vectors and eliminated by cross-multiplication, with
/// the content divided out after every step so entries stay small.
pub fn fraction_free_rank(vectors: &[Vec<(usize, BigRational)>]) -> usize {
    let mut pivots: HashMap<usize, Vec<(usize, BigInt)>> = HashMap::new();
    for v in vectors {
        let mut v = primitive_integer_vector(v);
        while let Some((lead, a)) = v.first().cloned() {
            match pivots.get(&lead) {
                Some(p) => {
                    let b = &p[0].1;
                    let g = a.gcd(b);
                    let (mul_v, mul_p) = (b / &g, a / &g);
                    v = integer_combination(&v, &mul_v, p, &mul_p);
                    make_primitive(&mut v);
                }
                None => {
                    pivots.insert(lead, v);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// `s·x − t·y`, dropping zeros.
fn integer_combination(
    x: &[(usize, BigInt)],
    s: &BigInt,
    y: &[(usize, BigInt)],
    t: &BigInt,
) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        let (idx, v) = if take_x {
            i += 1;
            (x[i - 1].0, s * &x[i - 1].1)
        } else if take_y {
            j += 1;
            (y[j - 1].0, -(t * &y[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (x[i - 1].0, s * &x[i - 1].1 - t * &y[j - 1].1)
        };
        if !v.is_zero() {
            out.push((idx, v));
        }
    }
    out
}

fn primitive_integer_vector(v: &[(usize, BigRational)]) -> Vec<(usize, BigInt)> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, (_, x)| acc.lcm(x.denom()));
    let mut out: Vec<(usize, BigInt)> = v
        .iter()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (*i, x.numer() * (&lcm / x.denom())))
        .collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(v: &mut [(usize, BigInt)]) {
    let mut g = BigInt::zero();
    for (_, x) in v.iter() {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() {
        return;
    }
    if v[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, x) in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Dense Bareiss elimination on an integer matrix; returns the rank.
/// Every intermediate division is exact.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pr) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, pr);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let val = &m[rank][c] * &m[r][k] - &m[r][c] * &m[rank][k];
                m[r][k] = val / &prev;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Determinant of a square dense matrix by Gaussian elimination.
pub fn determinant<F: ExactField>(m: &[Vec<F>]) -> F {
    let n = m.len();
    let mut a: Vec<Vec<F>> = m.to_vec();
    let mut det = F::one();
    for c in 0..n {
        assert_eq!(a[c].len(), n, "determinant of a non-square matrix");
        let Some(pr) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return F::zero();
        };
        if pr != c {
            a.swap(pr, c);
            det = -det;
        }
        let pivot = a[c][c].clone();
        det = det * pivot.clone();
        let inv = pivot.inverse().expect("nonzero pivot");
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let factor = a[r][c].clone() * inv.clone();
            let (upper, lower) = a.split_at_mut(r);
            for (x, y) in lower[0][c..].iter_mut().zip(&upper[c][c..]) {
                *x = x.clone() - factor.clone() * y.clone();
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{F2, F3, Q};

    fn q(v: i64) -> Q {
        Q::from_i64(v)
    }

    /// π for n = 2, t = 2: rows e1², e1e2, e2²; cols e1⊗e1, e1⊗e2, e2⊗e1, e2⊗e2.
    fn pi_2_2() -> SparseMatrix<Q> {
        SparseMatrix::from_dense(&[
            vec![q(1), q(0), q(0), q(0)],
            vec![q(0), q(1), q(1), q(0)],
            vec![q(0), q(0), q(0), q(1)],
        ])
    }

    #[test]
    fn rank_examples() {
        assert_eq!(SparseMatrix::<Q>::identity(3).rank(), 3);
        assert_eq!(pi_2_2().rank(), 3);
        assert_eq!(SparseMatrix::<Q>::zero(0, 5).rank(), 0);
        assert_eq!(SparseMatrix::<F2>::identity(4).rank(), 4);
    }

    #[test]
    fn kernel_dim_examples() {
        assert_eq!(SparseMatrix::<Q>::identity(4).kernel_dim(), 0);
        assert_eq!(pi_2_2().kernel_dim(), 1);
        assert_eq!(SparseMatrix::<Q>::zero(3, 7).kernel_dim(), 7);
    }

    #[test]
    fn multiply_examples() {
        let m = pi_2_2();
        assert_eq!(SparseMatrix::identity(3).multiply(&m).unwrap(), m);
        let empty = SparseMatrix::<Q>::zero(4, 0);
        let prod = m.multiply(&empty).unwrap();
        assert_eq!((prod.rows(), prod.cols()), (3, 0));
        assert!(matches!(
            m.multiply(&m),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn reduce_mod_examples() {
        // δ(e1∧e2) = e1⊗e2 − e2⊗e1
        let d = SparseMatrix::from_triplets(4, 1, [(1, 0, q(1)), (2, 0, q(-1))]).unwrap();
        let d2 = d.reduce_mod::<2>().unwrap();
        assert_eq!(d2.get(1, 0).value(), 1);
        assert_eq!(d2.get(2, 0).value(), 1);
        let z = SparseMatrix::<Q>::zero(2, 3).reduce_mod::<3>().unwrap();
        assert!(z.is_zero());
        let half = SparseMatrix::from_triplets(1, 1, [(0, 0, Q::new(1.into(), 2.into()))]).unwrap();
        assert!(half.reduce_mod::<2>().is_err());
        assert_eq!(half.reduce_mod::<3>().unwrap().get(0, 0).value(), 2);
    }

    #[test]
    fn triplets_merge_and_drop_zeros() {
        let m = SparseMatrix::from_triplets(2, 2, [(0, 0, q(1)), (0, 0, q(-1)), (1, 1, q(2))])
            .unwrap();
        assert_eq!(m.nnz(), 1);
        assert!(SparseMatrix::from_triplets(2, 2, [(2, 0, q(1))]).is_err());
    }

    #[test]
    fn export_format() {
        let d = SparseMatrix::from_triplets(4, 1, [(2, 0, q(-1)), (1, 0, q(1))]).unwrap();
        assert_eq!(d.export_text(), "4 1 2\n2 1 1\n3 1 -1\n");
        assert_eq!(SparseMatrix::<F3>::zero(5, 0).export_text(), "5 0 0\n");
        let r = SparseMatrix::from_triplets(1, 1, [(0, 0, Q::new(3.into(), (-6).into()))]).unwrap();
        assert_eq!(r.export_text(), "1 1 1\n1 1 -1/2\n");
    }

    #[test]
    fn determinant_small() {
        let m = vec![vec![q(2), q(1)], vec![q(1), q(1)]];
        assert_eq!(determinant(&m), q(1));
        let m = vec![vec![q(1), q(1)], vec![q(1), q(1)]];
        assert_eq!(determinant(&m), q(0));
        let m = vec![vec![q(0), q(1)], vec![q(1), q(0)]];
        assert_eq!(determinant(&m), q(-1));
        assert_eq!(determinant::<Q>(&[]), q(1));
    }

    #[test]
    fn bareiss_matches_known_ranks() {
        let b = |rows: Vec<Vec<i64>>| {
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect::<Vec<Vec<BigInt>>>()
        };
        assert_eq!(bareiss_rank(b(vec![vec![1, 2], vec![2, 4]])), 1);
        assert_eq!(bareiss_rank(b(vec![vec![0, 1, 2], vec![1, 0, 3], vec![1, 1, 5]])), 2);
        assert_eq!(bareiss_rank(b(vec![])), 0);
    }
}
