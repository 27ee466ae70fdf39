//! Checks that turn each claimed property of the resolution into exact
//! computations on finite instances.

mod bar;
mod equivariance;
mod exactness;
mod series;
mod spectral;

pub use bar::{bar_comparison, ext_dims, laplace_spot_check, BarReport, ExtReport, LaplaceSample};
pub use equivariance::{commutes_with, equivariance_check, random_invertible, EquivarianceReport};
pub use exactness::{
    cohomology, sym_dim, koszul_exactness, square_zero, verify_exactness, CohomologyReport,
    DegreeCohomology, ExactnessReport, KoszulReport, SquareZeroReport,
};
pub use series::{
    complete_homogeneous, elementary_symmetric, euler_identity, hilbert_identity,
    EulerReport, HilbertReport,
};
pub use spectral::{spectral_pages, PageMap, SpectralPage, SpectralPages};

use serde_json::Value;

/// Common surface of every check report.
pub trait Verdict {
    fn passed(&self) -> bool;
    fn details(&self) -> Value;
}
