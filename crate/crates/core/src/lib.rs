//! Exact construction and verification of the `GL(V)`-equivariant
//! resolution
//!
//! ```text
//! 0 → T_t^1 → T_t^2 → ⋯ → T_t^t → S^t V → 0,   T_t^p = ⊕ ∧^{i_1}V ⊗ ⋯ ⊗ ∧^{i_p}V
//! ```
//!
//! of the symmetric powers of `V = k^n` by tensor products of exterior
//! powers, together with the Koszul complex, the first-factor filtration and
//! its spectral sequence, and the dual normalized bar complex of `∧(V*)`.
//!
//! All linear algebra is exact and generic over [`ExactField`]; the crate
//! root exposes concrete aliases for the rationals and the prime fields.

pub mod cli;
pub mod combinatorics;
pub mod complexes;
pub mod error;
pub mod export;
pub mod linalg;
pub mod multilinear;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::SparseMatrix;
pub use scalar::{ExactField, FieldSpec, Fp, F2, F3, F5, F7, Q};

/// Matrices over the rationals.
pub type QMatrix = SparseMatrix<Q>;
/// Matrices over `F_2`.
pub type F2Matrix = SparseMatrix<F2>;
/// Matrices over `F_3`.
pub type F3Matrix = SparseMatrix<F3>;
/// Matrices over `F_5`.
pub type F5Matrix = SparseMatrix<F5>;
/// Matrices over `F_7`.
pub type F7Matrix = SparseMatrix<F7>;
