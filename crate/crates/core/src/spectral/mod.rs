//! A_α matrices, their spectra, quotient matrices and the closed-form
//! polynomials and bounds used by the verification suites.

mod alpha;
mod bounds;
mod eigen;
mod matrix;
mod poly;
mod quotient;

use thiserror::Error;

use crate::graph::GraphError;

pub use alpha::{alpha_matrix, signless_laplacian, AlphaMatrix};
pub use bounds::{
    bipartite_bound, closed_form_bounds, complete_bipartite_index, star_bound, ClosedFormBounds,
};
pub use eigen::{
    full_spectrum, index, jacobi_eigen, spectral_radius, spectral_radius_with, Eigen,
    SpectralResult,
};
pub use matrix::DenseMatrix;
pub use poly::{
    largest_real_root, largest_real_root_with, p_alpha_coeffs, signless_cubic_coeffs, PolyCoeffs,
};
pub use quotient::{is_equitable, quotient_matrix, Partition, QuotientMatrix};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectralError {
    #[error("alpha = {0} lies outside [0, 1]")]
    AlphaOutOfRange(f64),
    #[error("matrix must be non-empty")]
    Empty,
    #[error("eigensolver did not converge after {iterations} iterations (residual {residual:e})")]
    NonConvergence { iterations: usize, residual: f64 },
    #[error("eigenpair residual {residual:e} exceeds tolerance {tol:e}")]
    Residual { residual: f64, tol: f64 },
    #[error("Perron vector has a non-positive entry {value:e} at vertex {vertex}")]
    NotPositive { vertex: usize, value: f64 },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition is not equitable: block {row_block} rows disagree on block {col_block}")]
    NotEquitable { row_block: usize, col_block: usize },
    #[error("no sign change of the polynomial in [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },
    #[error("polynomial must have a nonzero leading coefficient")]
    DegeneratePolynomial,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub type Result<T> = std::result::Result<T, SpectralError>;

/// Numerical tolerances used throughout the crate.
///
/// Values are `f64`; routines running in `f32` widen them to a multiple of
/// machine epsilon where the requested value is not attainable.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// Jacobi stops when the off-diagonal Frobenius norm drops below this
    /// (relative to `max(1, ‖A‖_F)`).
    pub jacobi_off_diagonal: f64,
    pub jacobi_max_sweeps: usize,
    /// Bound on `‖Ax − λx‖∞` for a returned eigenpair.
    pub eigen_residual: f64,
    pub power_tol: f64,
    pub power_max_iterations: usize,
    /// Absolute accuracy target for polynomial roots.
    pub root_tol: f64,
    /// Graphs whose index differs by at most this are treated as tied.
    pub tie: f64,
    /// Minimum gap between a unique winner and the runner-up.
    pub uniqueness_gap: f64,
    /// Minimum margin for strict inequalities.
    pub strict_margin: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            jacobi_off_diagonal: 1e-12,
            jacobi_max_sweeps: 100,
            eigen_residual: 1e-9,
            power_tol: 1e-12,
            power_max_iterations: 1_000_000,
            root_tol: 1e-12,
            tie: 1e-9,
            uniqueness_gap: 1e-7,
            strict_margin: 1e-10,
        }
    }
}
