use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("subsets {0:?} and {1:?} overlap")]
    OverlappingSubsets(Vec<usize>, Vec<usize>),

    #[error("expected a nonempty subset")]
    EmptySubset,

    #[error("element {element} is outside 1..={n}")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("ambient dimension {0} is unsupported (must be in 1..=64)")]
    UnsupportedDimension(usize),

    #[error("subsets live in different ambient spaces ({0} vs {1})")]
    AmbientMismatch(usize, usize),

    #[error("composition part {part} exceeds n = {n}")]
    PartExceedsDimension { part: usize, n: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("denominator {den} is divisible by {p}")]
    DenominatorDivisible { den: String, p: u32 },

    #[error("unsupported field modulus {0} (expected one of 2, 3, 5, 7)")]
    InvalidPrime(u32),

    #[error("{what} = {value} is out of range ({range})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        range: String,
    },

    #[error("not a complex: differential {0} composed with {1} is nonzero")]
    NotAComplex(usize, usize),

    #[error("configuration exceeds cap: {total} basis elements > {cap}")]
    CapExceeded { total: u128, cap: u128 },

    #[error("{0}")]
    Usage(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
