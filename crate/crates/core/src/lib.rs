//! A_α spectral radius, dissociation number, extremal graph families and
//! exhaustive checks of the extremal results that tie them together.
//!
//! Numeric code is generic over [`scalar::Scalar`] (`f32` or `f64`); the
//! aliases below fix the precision.

pub mod graph;
pub mod scalar;
pub mod spectral;
pub mod dissociation;
pub mod families;
pub mod transforms;
pub mod random;
pub mod enumeration;
pub mod verify;

pub type AlphaMatrix64 = spectral::AlphaMatrix<f64>;
pub type AlphaMatrix32 = spectral::AlphaMatrix<f32>;
pub type DenseMatrix64 = spectral::DenseMatrix<f64>;
pub type DenseMatrix32 = spectral::DenseMatrix<f32>;
pub type SpectralResult64 = spectral::SpectralResult<f64>;
pub type SpectralResult32 = spectral::SpectralResult<f32>;
pub type QuotientMatrix64 = spectral::QuotientMatrix<f64>;
pub type QuotientMatrix32 = spectral::QuotientMatrix<f32>;
pub type PolyCoeffs64 = spectral::PolyCoeffs<f64>;
pub type PolyCoeffs32 = spectral::PolyCoeffs<f32>;
