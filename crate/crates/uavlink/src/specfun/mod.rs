//! Special functions backing the closed-form error analysis.
//!
//! Everything here is pure and deterministic; all evaluation routes are
//! validated against independent oracles in the tests (half-integer
//! closed forms, integral representations, Barnes' lemma, frozen
//! high-precision references).

mod bessel;
mod gamma;
mod gauss;
mod hyperu;
mod meijer;

pub use bessel::{bessel_k, bessel_k01, bessel_k_int_seq};
pub use gamma::{
    binomial, erfc, gamma_r, gaussian_q, ln_binomial, ln_gamma, ln_gamma_complex_re, ln_gamma_r,
    temme_gammas,
};
pub use gauss::{gauss_legendre, gauss_legendre_r, integrate_adaptive, QuadratureRule};
pub use hyperu::{ln_tricomi_u, tricomi_u, whittaker_w};
pub use meijer::{meijer_g_factor, meijer_g_zeta};
