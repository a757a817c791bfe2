//! Link-level simulator and analytical performance library for a dual-hop
//! UAV relay. The ground-to-air hop selects the best mirror-activation
//! pattern (MAP) of a reconfigurable antenna from shadowing information;
//! the air-to-ground hop carries the decoded index with media-based
//! modulation. Both hops see product Nakagami shadowing x fading
//! (generalized-K) channels with an elevation-dependent air-to-ground
//! path-loss model.
//!
//! The crate provides, side by side and cross-validated:
//! - closed-form and semi-numerical symbol-error-probability expressions
//!   ([`analysis`]),
//! - an end-to-end Monte-Carlo simulator with reproducible parallel
//!   streams ([`simulator`]),
//! - the special functions the closed forms need ([`specfun`]),
//! - sweep orchestration, figure presets and CSV emission ([`cli`]).
//!
//! Numeric code is generic over the scalar ([`Real`]): `f64` in
//! production, [`DoubleDouble`] where validation tolerances exceed what
//! `f64` can certify.

pub mod analysis;
pub mod channel;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod real;
pub mod simulator;
pub mod specfun;

pub use error::{Error, Result};
pub use real::{DoubleDouble, Real};

/// Scalar used by default on production evaluation paths.
pub type Scalar = f64;
/// Extended-precision scalar used by the verification paths.
pub type Extended = DoubleDouble;
