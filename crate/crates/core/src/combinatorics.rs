//! Index sets for exterior-power bases, the wedge reordering sign, and
//! compositions with their multiplicity bookkeeping.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

pub const MAX_AMBIENT: usize = 64;

/// A subset of `{1, ..., n}`, indexing the basis vector `e_A` of `∧^|A| V`.
///
/// Stored as a bitmask (bit `k - 1` set iff `k ∈ A`) together with the
/// ambient dimension.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subset {
    bits: u64,
    n: u8,
}

impl Subset {
    pub fn new(n: usize, elements: &[usize]) -> Result<Self> {
        check_ambient(n)?;
        let mut bits = 0u64;
        let mut prev = 0usize;
        for &e in elements {
            if e == 0 || e > n {
                return Err(Error::ElementOutOfRange { element: e, n });
            }
            if e <= prev {
                return Err(Error::Usage(format!(
                    "subset elements must be strictly increasing, got {elements:?}"
                )));
            }
            prev = e;
            bits |= 1 << (e - 1);
        }
        Ok(Subset { bits, n: n as u8 })
    }

    pub fn empty(n: usize) -> Self {
        debug_assert!((1..=MAX_AMBIENT).contains(&n));
        Subset { bits: 0, n: n as u8 }
    }

    pub fn singleton(n: usize, e: usize) -> Self {
        debug_assert!(e >= 1 && e <= n);
        Subset {
            bits: 1 << (e - 1),
            n: n as u8,
        }
    }

    pub(crate) fn from_bits(n: usize, bits: u64) -> Self {
        Subset { bits, n: n as u8 }
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn ambient(&self) -> usize {
        self.n as usize
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, e: usize) -> bool {
        e >= 1 && e <= self.ambient() && self.bits & (1 << (e - 1)) != 0
    }

    /// Elements in increasing order.
    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let k = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(k + 1)
            }
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.elements().collect()
    }

    pub fn is_disjoint(&self, other: &Subset) -> bool {
        self.bits & other.bits == 0
    }

    pub fn union(&self, other: &Subset) -> Subset {
        Subset {
            bits: self.bits | other.bits,
            n: self.n,
        }
    }

    pub fn without(&self, e: usize) -> Subset {
        Subset {
            bits: self.bits & !(1 << (e - 1)),
            n: self.n,
        }
    }
}

impl Ord for Subset {
    /// Lexicographic on the increasing element sequence.
    fn cmp(&self, other: &Self) -> Ordering {
        self.elements().cmp(other.elements())
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, e) in self.elements().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

pub(crate) fn check_ambient(n: usize) -> Result<()> {
    if n == 0 || n > MAX_AMBIENT {
        Err(Error::UnsupportedDimension(n))
    } else {
        Ok(())
    }
}

/// The sign `s(A, B)` with `e_{A∪B} = s(A, B) e_A ∧ e_B`, i.e. `(-1)^inv`
/// where `inv` counts pairs `(a, b) ∈ A × B` with `a > b`.
pub fn sign_s(a: &Subset, b: &Subset) -> Result<i64> {
    if a.n != b.n {
        return Err(Error::AmbientMismatch(a.ambient(), b.ambient()));
    }
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySubset);
    }
    if !a.is_disjoint(b) {
        return Err(Error::OverlappingSubsets(a.to_vec(), b.to_vec()));
    }
    Ok(sign_unchecked(a, b))
}

/// `sign_s` without validation; empty sets give `+1`.
#[inline]
pub(crate) fn sign_unchecked(a: &Subset, b: &Subset) -> i64 {
    let mut inv = 0u32;
    for e in b.elements() {
        // elements of A strictly above e
        let above = if e >= 64 { 0 } else { a.bits >> e };
        inv += above.count_ones();
    }
    if inv.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// All ordered pairs `(B, C)` of nonempty disjoint subsets with `B ∪ C = A`,
/// ordered by `|B|` and then lexicographically on `B`.
pub fn ordered_bipartitions(a: &Subset) -> Vec<(Subset, Subset)> {
    if a.len() < 2 {
        return Vec::new();
    }
    let n = a.ambient();
    let mut out = Vec::with_capacity((1usize << a.len()) - 2);
    let mut sub = (a.bits - 1) & a.bits;
    while sub != 0 {
        let b = Subset::from_bits(n, sub);
        let c = Subset::from_bits(n, a.bits & !sub);
        out.push((b, c));
        sub = (sub - 1) & a.bits;
    }
    out.sort_by(|x, y| x.0.len().cmp(&y.0.len()).then_with(|| x.0.cmp(&y.0)));
    out
}

/// All `k`-element subsets of `{1..n}` in lexicographic order.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<Subset> {
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (1..=k).collect();
    loop {
        out.push(Subset::from_bits(
            n,
            idx.iter().fold(0u64, |acc, &e| acc | (1 << (e - 1))),
        ));
        // advance to the next combination
        let mut j = k;
        loop {
            if j == 0 {
                return out;
            }
            j -= 1;
            if idx[j] < n - (k - 1 - j) {
                idx[j] += 1;
                for l in j + 1..k {
                    idx[l] = idx[l - 1] + 1;
                }
                break;
            }
        }
    }
}

/// An ordered tuple of positive integers `(i_1, ..., i_p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Usage(format!(
                "composition parts must be positive, got {parts:?}"
            )));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Total degree.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Partial degree (number of parts).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// Compositions of `t` into exactly `p` parts from `1..=max_part`, in
/// lexicographic order.
pub fn enumerate_compositions(t: usize, p: usize, max_part: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    if p > t || t > p.saturating_mul(max_part) {
        return out;
    }
    let mut current = Vec::with_capacity(p);
    fill_compositions(t, p, max_part, &mut current, &mut out);
    out
}

fn fill_compositions(
    remaining: usize,
    slots: usize,
    max_part: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Composition>,
) {
    if slots == 0 {
        if remaining == 0 {
            out.push(Composition {
                parts: current.clone(),
            });
        }
        return;
    }
    // each remaining slot needs at least 1 and at most max_part
    let lo = remaining.saturating_sub((slots - 1) * max_part).max(1);
    let hi = max_part.min(remaining.saturating_sub(slots - 1));
    for part in lo..=hi {
        current.push(part);
        fill_compositions(remaining - part, slots - 1, max_part, current, out);
        current.pop();
    }
}

/// Multiplicities `(ℓ_1, ..., ℓ_n)` of each part size in a composition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    counts: Vec<usize>,
}

impl Signature {
    pub fn from_counts(counts: Vec<usize>) -> Self {
        Signature { counts }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.iter().enumerate().map(|(k, l)| (k + 1) * l).sum()
    }

    pub fn parts(&self) -> usize {
        self.counts.iter().sum()
    }
}

pub fn signature_of(c: &Composition, n: usize) -> Result<Signature> {
    let mut counts = vec![0; n];
    for &part in c.parts() {
        if part > n {
            return Err(Error::PartExceedsDimension { part, n });
        }
        counts[part - 1] += 1;
    }
    Ok(Signature { counts })
}

/// All signatures `(ℓ_1, ..., ℓ_n)` with `Σ k·ℓ_k = t` and `Σ ℓ_k = p`,
/// enumerated directly (not via compositions), `ℓ_1` descending first.
pub fn enumerate_signatures(t: usize, p: usize, n: usize) -> Vec<Signature> {
    let mut out = Vec::new();
    let mut counts = vec![0; n];
    fill_signatures(0, t, p, &mut counts, &mut out);
    out
}

fn fill_signatures(
    k: usize,
    weight: usize,
    parts: usize,
    counts: &mut Vec<usize>,
    out: &mut Vec<Signature>,
) {
    let n = counts.len();
    if k == n {
        if weight == 0 && parts == 0 {
            out.push(Signature {
                counts: counts.clone(),
            });
        }
        return;
    }
    let size = k + 1;
    let max = parts.min(weight / size);
    for l in (0..=max).rev() {
        counts[k] = l;
        fill_signatures(k + 1, weight - l * size, parts - l, counts, out);
    }
    counts[k] = 0;
}

/// `(ℓ_1 + ... + ℓ_n)! / (ℓ_1! ⋯ ℓ_n!)`.
pub fn multinomial(sig: &Signature) -> BigUint {
    let mut acc = BigUint::one();
    let mut running = 0usize;
    for &l in sig.counts() {
        for j in 1..=l {
            running += 1;
            acc *= BigUint::from(running);
            acc /= BigUint::from(j);
        }
    }
    acc
}

/// Binomial coefficient, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc * (n - j) as u128 / (j as u128 + 1);
    }
    acc
}
