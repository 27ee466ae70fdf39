//! The Euler-characteristic identity and the Hilbert-series identities, in
//! dimension mode and in character mode at a diagonal point
//! `diag(x_1, ..., x_n)`, where `∧^i` evaluates to `e_i(x)` and `S^t` to
//! `h_t(x)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::Value;

use super::Verdict;
use crate::combinatorics::{binomial, enumerate_compositions, subsets_of_size};
use crate::multilinear::{monomials, t_dim};
use crate::scalar::{ExactField, Q};

/// `e_i(x)`, summed over `i`-subsets.
pub fn elementary_symmetric(x: &[Q], i: usize) -> Q {
    subsets_of_size(x.len(), i)
        .iter()
        .map(|s| s.elements().fold(Q::one(), |acc, k| acc * x[k - 1].clone()))
        .fold(Q::zero(), |acc, v| acc + v)
}

/// `h_t(x)`, summed over degree-`t` monomials.
pub fn complete_homogeneous(x: &[Q], t: usize) -> Q {
    monomials(x.len(), t)
        .iter()
        .map(|m| {
            m.0.iter()
                .enumerate()
                .fold(Q::one(), |acc, (k, &e)| acc * pow(&x[k], e))
        })
        .fold(Q::zero(), |acc, v| acc + v)
}

fn pow(x: &Q, e: u32) -> Q {
    (0..e).fold(Q::one(), |acc, _| acc * x.clone())
}

/// Character of `T_t^p` at the point: `Σ_compositions Π e_{i_j}(x)`.
fn t_character(x: &[Q], e: &[Q], t: usize, p: usize) -> Q {
    enumerate_compositions(t, p, x.len())
        .iter()
        .map(|c| c.parts().iter().fold(Q::one(), |acc, &i| acc * e[i].clone()))
        .fold(Q::zero(), |acc, v| acc + v)
}

pub fn default_point(n: usize) -> Vec<Q> {
    (1..=n as i64).map(Q::from_i64).collect()
}

fn render(v: &[Q]) -> Vec<String> {
    v.iter().map(|q| q.render()).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct EulerReport {
    pub n: usize,
    pub t: usize,
    pub t_dims: Vec<u128>,
    pub sym_dim: u128,
    pub alternating_sum: i128,
    pub point: Vec<String>,
    pub character_sum: String,
}

impl Verdict for EulerReport {
    fn passed(&self) -> bool {
        self.alternating_sum == 0 && self.character_sum == "0"
    }

    fn details(&self) -> Value {
        serde_json::to_value(self).expect("serializable")
    }
}

/// `T_t^1 − T_t^2 + ⋯ + (−1)^{t−1} T_t^t + (−1)^t S^t = 0`, checked on
/// dimensions and on characters at `point` (default `(1, ..., n)`).
pub fn euler_identity(n: usize, t: usize, point: Option<&[Q]>) -> EulerReport {
    let x = point.map_or_else(|| default_point(n), <[Q]>::to_vec);
    assert_eq!(x.len(), n, "evaluation point must have n coordinates");
    let t_dims: Vec<u128> = (1..=t).map(|p| t_dim(n, t, p)).collect();
    let sym = binomial(n + t - 1, t);
    let sign = |k: usize| if k.is_multiple_of(2) { 1i128 } else { -1 };
    let mut alternating: i128 = t_dims
        .iter()
        .enumerate()
        .map(|(k, &d)| sign(k) * d as i128)
        .sum();
    alternating += sign(t) * sym as i128;

    let e: Vec<Q> = (0..=n).map(|i| elementary_symmetric(&x, i)).collect();
    let signq = |k: usize| if k.is_multiple_of(2) { Q::one() } else { -Q::one() };
    let mut chi = Q::zero();
    for p in 1..=t {
        chi += signq(p - 1) * t_character(&x, &e, t, p);
    }
    chi += signq(t) * complete_homogeneous(&x, t);

    EulerReport {
        n,
        t,
        t_dims,
        sym_dim: sym,
        alternating_sum: alternating,
        point: render(&x),
        character_sum: chi.render(),
    }
}

/// Product of two power series truncated at degree `max`.
fn series_mul(a: &[Q], b: &[Q], max: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); max + 1];
    for (i, x) in a.iter().enumerate().take(max + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(max + 1 - i) {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct SeriesMode {
    /// `(Σ S^t x^t)(Σ (−1)^i ∧^i x^i)` through the truncation degree.
    pub product: Vec<String>,
    /// Degrees `(t, p)` where the `x^t` coefficient of `(Σ_{i≥1} ∧^i x^i)^p`
    /// disagrees with `T_t^p`.
    pub coefficient_mismatches: Vec<(usize, usize)>,
    /// `Σ_t (−1)^t S^t x^t = Σ_p (−1)^p (Σ_{i≥1} ∧^i x^i)^p` holds.
    pub inversion_holds: bool,
}

impl SeriesMode {
    fn ok(&self) -> bool {
        self.product.first().is_some_and(|c| c == "1")
            && self.product.iter().skip(1).all(|c| c == "0")
            && self.coefficient_mismatches.is_empty()
            && self.inversion_holds
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HilbertReport {
    pub n: usize,
    pub max_degree: usize,
    pub point: Vec<String>,
    pub dimension: SeriesMode,
    pub character: SeriesMode,
}

impl Verdict for HilbertReport {
    fn passed(&self) -> bool {
        self.dimension.ok() && self.character.ok()
    }

    fn details(&self) -> Value {
        serde_json::to_value(self).expect("serializable")
    }
}

fn series_checks(
    wedge: &[Q],
    sym: &[Q],
    t_value: impl Fn(usize, usize) -> Q,
    max: usize,
) -> SeriesMode {
    let n = wedge.len() - 1;
    let koszul: Vec<Q> = (0..=n)
        .map(|i| if i % 2 == 0 { wedge[i].clone() } else { -wedge[i].clone() })
        .collect();
    let product = series_mul(sym, &koszul, max);

    // W(x) = Σ_{i ≥ 1} ∧^i x^i
    let mut w = wedge.to_vec();
    w[0] = Q::zero();
    let mut power = vec![Q::zero(); max + 1];
    power[0] = Q::one();
    let mut mismatches = Vec::new();
    let mut inverse = vec![Q::zero(); max + 1];
    for p in 0..=max {
        for t in 0..=max {
            let expected = if p == 0 {
                if t == 0 {
                    Q::one()
                } else {
                    Q::zero()
                }
            } else {
                t_value(t, p)
            };
            if power[t] != expected {
                mismatches.push((t, p));
            }
            let term = if p % 2 == 0 { power[t].clone() } else { -power[t].clone() };
            inverse[t] = inverse[t].clone() + term;
        }
        power = series_mul(&power, &w, max);
    }
    let alternating_sym: Vec<Q> = sym
        .iter()
        .enumerate()
        .map(|(t, s)| if t % 2 == 0 { s.clone() } else { -s.clone() })
        .collect();
    SeriesMode {
        product: product.iter().map(ExactField::render).collect(),
        coefficient_mismatches: mismatches,
        inversion_holds: inverse == alternating_sym,
    }
}

/// `(Σ_t S^t x^t)(1 − V x + ∧^2 x^2 − ⋯) = 1` and its inversion
/// `Σ_t (−1)^t S^t x^t = Σ_p (−1)^p (V x + ∧^2 x^2 + ⋯)^p`, whose `(t, p)`
/// coefficient is `T_t^p`, through degree `max_degree`.
pub fn hilbert_identity(n: usize, max_degree: usize, point: Option<&[Q]>) -> HilbertReport {
    let x = point.map_or_else(|| default_point(n), <[Q]>::to_vec);
    assert_eq!(x.len(), n, "evaluation point must have n coordinates");

    let int = |v: u128| Q::from_integer(BigInt::from(v));
    let wedge_dims: Vec<Q> = (0..=n).map(|i| int(binomial(n, i))).collect();
    let sym_dims: Vec<Q> = (0..=max_degree)
        .map(|t| int(if t == 0 { 1 } else { binomial(n + t - 1, t) }))
        .collect();
    let dimension = series_checks(&wedge_dims, &sym_dims, |t, p| int(t_dim(n, t, p)), max_degree);

    let e: Vec<Q> = (0..=n).map(|i| elementary_symmetric(&x, i)).collect();
    let h: Vec<Q> = (0..=max_degree).map(|t| complete_homogeneous(&x, t)).collect();
    let character = series_checks(&e, &h, |t, p| t_character(&x, &e, t, p), max_degree);

    HilbertReport {
        n,
        max_degree,
        point: render(&x),
        dimension,
        character,
    }
}
