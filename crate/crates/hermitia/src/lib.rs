//! Numerical library for Hermite functions of arbitrary complex degree,
//! the generalized Hermite moment functional, and the Gamma function
//! recovered through real-line and complex-contour integral representations.
//!
//! The crate is organized bottom-up:
//!
//! * [`gamma`] — complex Gamma function (Lanczos approximation plus the
//!   reflection identity), its reciprocal, and Pochhammer symbols.
//! * [`hypergeometric`] — Kummer's confluent series ``1F1``, the Gauss
//!   series ``2F1`` at unit argument, and the Laplace transform of ``1F1``.
//! * [`hermite`] — the Hermite function `H_tau(z)` for arbitrary complex
//!   degree: confluent-hypergeometric form, defining power series,
//!   large-argument asymptotic series, and a dispatching evaluator.
//! * [`functional`] — the generalized Hermite moment functional, its
//!   moment sequence, the differential-equation residuals it satisfies,
//!   and the even/odd decomposition of functions on the line.
//! * [`quadrature`] — adaptive tanh-sinh quadrature on a half line and the
//!   weighted Hermite integrals it evaluates (including a Gamma-function
//!   representation on the positive real axis).
//! * [`contour`] — complex contour paths around the origin, branch-tracked
//!   powers, contour moments, and three loop representations of
//!   `Gamma(tau+1)` and its reciprocal.
//! * [`verify`] — the identity-verification harness behind the `verify`
//!   CLI subcommand; runs named identity checks over a degree grid and
//!   assembles a deterministic report.
//!
//! Everything is plain `f64`/[`Complex64`] arithmetic. Operations that can
//! fail (poles, divergent series, integrands leaving the supported domain)
//! return [`Result`] with a descriptive [`Error`].

pub mod contour;
pub mod error;
pub mod functional;
pub mod gamma;
pub mod hermite;
pub mod hypergeometric;
pub mod quadrature;
pub mod verify;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Convenience constructor for a [`Complex64`] value.
#[inline]
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}
