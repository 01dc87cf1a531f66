//! Periodic AKNS-ZS nonlinear Fourier transform and its combinatorics.
//!
//! The transform maps a signal on `[0, 1]` to a sequence of 2×2 matrices
//! indexed by an integer spectral parameter `n`; at first order it reduces to
//! the ordinary Fourier transform. This crate implements
//!
//! - the continuous transform for constant and step signals, its Dyson
//!   (iterated-integral) series, and its expansion over polytope volumes
//!   ([`transforms`]),
//! - two discretizations: an Euler-type product of `N` factors and an
//!   SU(2)-valued exponential-splitting product ([`transforms`]),
//! - exact counts of ordered alternating partitions with distinct and
//!   non-distinct parts, which the discretizations encode as power-series
//!   coefficients ([`partitions`]),
//! - coefficient-extraction machinery (truncated jets, multivariate
//!   truncated polynomials, a matrix-valued inverse DFT) that recovers those
//!   counts and multinomial probabilities from the transforms
//!   ([`extraction`]),
//! - the continuous beta density, the volumes of alternating-sum polytope
//!   slices, and a discrete beta distribution built from two binomial
//!   coefficients that converges to the continuous density
//!   ([`distributions`]).
//!
//! Everything cross-checks against brute-force enumeration at desk scale.
//! Spectral tables, extraction grids, and Monte Carlo estimates run in
//! parallel via rayon when the `parallel` feature (default) is enabled, and
//! fall back to sequential loops without it.

pub mod distributions;
mod error;
pub mod extraction;
pub mod jet;
pub mod mat2;
pub mod multipoly;
pub mod par;
pub mod partitions;
pub mod signal;
pub mod transforms;

pub use error::Error;
pub use mat2::Mat2;
pub use signal::{Signal, SpectralSequence};

/// Convenience alias: every fallible operation in this crate uses [`Error`].
pub type Result<T> = std::result::Result<T, Error>;
