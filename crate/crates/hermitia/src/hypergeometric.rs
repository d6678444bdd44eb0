//! Confluent and Gauss hypergeometric series.
//!
//! Three evaluators live here:
//!
//! * [`kummer_1f1`] — Kummer's confluent function
//!   `M(a; b; z) = sum_k (a)_k z^k / ((b)_k k!)`, summed by term recurrence
//!   with compensated accumulation. Terminating cases (`a` a nonpositive
//!   integer) are summed exactly; a nonpositive-integer `b` reached before
//!   termination is reported as [`Error::ParameterPole`].
//! * [`gauss_2f1_at_unit`] — the Gauss sum
//!   `2F1(a, b; c; 1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b))`,
//!   valid for `Re(c - a - b) > 0`.
//! * [`laplace_1f1`] — the weighted half-line integral
//!   `int_0^inf e^{-s t} t^{alpha-1} M(a; b; t) dt
//!    = Gamma(alpha) s^{-alpha} 2F1(a, alpha; b; 1/s)`,
//!   evaluated through the Gauss series for `|1/s| < 1`, the finite sum
//!   when `a` is a nonpositive integer, and the unit-argument closed form
//!   when `s = 1`. Arguments with `|1/s| > 1` and a non-terminating series
//!   are outside the supported domain.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gamma::gamma;

/// Default relative tolerance for series summation.
pub const SERIES_TOL: f64 = 1e-16;

/// Hard cap on the number of series terms before reporting non-convergence.
const MAX_TERMS: usize = 10_000;

/// Window for detecting integer-valued series parameters.
const INT_WINDOW: f64 = 1e-12;

/// Number of consecutive negligible terms required before a series is
/// declared converged (guards against accidental zero terms).
const SMALL_STREAK: usize = 3;

/// Nonnegative `n` such that `v` lies within `INT_WINDOW` of `-n`, if any.
fn nonpositive_integer_index(v: Complex64) -> Option<u32> {
    if v.im.abs() > INT_WINDOW {
        return None;
    }
    let nearest = v.re.round();
    if nearest <= 0.0 && (v.re - nearest).abs() <= INT_WINDOW && nearest >= -(u32::MAX as f64) {
        Some((-nearest) as u32)
    } else {
        None
    }
}

/// Compensated (Kahan) accumulator for complex series.
pub(crate) struct Compensated {
    pub(crate) sum: Complex64,
    carry: Complex64,
}

impl Compensated {
    pub(crate) fn new(initial: Complex64) -> Self {
        Compensated {
            sum: initial,
            carry: Complex64::new(0.0, 0.0),
        }
    }

    pub(crate) fn add(&mut self, term: Complex64) {
        let y = term - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }
}

/// Kummer's confluent hypergeometric function `M(a; b; z)` at the default
/// tolerance [`SERIES_TOL`].
///
/// # Example
///
/// ```
/// use hermitia::{c64, hypergeometric::kummer_1f1};
/// // M(1; 1; z) = exp(z).
/// let m = kummer_1f1(c64(1.0, 0.0), c64(1.0, 0.0), c64(0.5, 0.0)).unwrap();
/// assert!((m.re - 0.5f64.exp()).abs() < 1e-14);
/// ```
pub fn kummer_1f1(a: Complex64, b: Complex64, z: Complex64) -> Result<Complex64> {
    kummer_1f1_tol(a, b, z, SERIES_TOL)
}

/// `M(a; b; z)` summed to an explicit relative tolerance.
///
/// The series terminates exactly when `a` lies within `1e-12` of a
/// nonpositive integer `-j` (the sum then runs over `k = 0..=j`). If `b`
/// lies within the same window of a nonpositive integer `-m` that the sum
/// would actually reach (`m < j`, or any `m` for a non-terminating series),
/// the function is undefined and [`Error::ParameterPole`] is returned.
pub fn kummer_1f1_tol(a: Complex64, b: Complex64, z: Complex64, tol: f64) -> Result<Complex64> {
    let terminate_at = nonpositive_integer_index(a);
    if let Some(m) = nonpositive_integer_index(b) {
        let pole_reached = match terminate_at {
            Some(j) => j > m,
            None => true,
        };
        if pole_reached {
            return Err(Error::ParameterPole { b });
        }
    }

    let mut term = Complex64::new(1.0, 0.0);
    let mut acc = Compensated::new(term);

    if let Some(j) = terminate_at {
        for k in 0..j {
            let kf = k as f64;
            term *= (a + kf) * z / ((b + kf) * (kf + 1.0));
            acc.add(term);
        }
        return Ok(acc.sum);
    }

    let mut streak = 0;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        term *= (a + kf) * z / ((b + kf) * (kf + 1.0));
        if !term.norm().is_finite() {
            return Err(Error::non_convergence(format!(
                "confluent series M({a}; {b}; {z}) overflowed at term {k}"
            )));
        }
        acc.add(term);
        if term.norm() <= tol * acc.sum.norm() {
            streak += 1;
            if streak >= SMALL_STREAK {
                return Ok(acc.sum);
            }
        } else {
            streak = 0;
        }
    }
    Err(Error::non_convergence(format!(
        "confluent series M({a}; {b}; {z}) after {MAX_TERMS} terms"
    )))
}

/// Gauss hypergeometric value at unit argument,
/// `2F1(a, b; c; 1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b))`.
///
/// Requires `Re(c - a - b) > 0`; any Gamma pole among the four factors is
/// reported as [`Error::Pole`].
///
/// # Example
///
/// ```
/// use hermitia::{c64, hypergeometric::gauss_2f1_at_unit};
/// let f = gauss_2f1_at_unit(c64(-1.0, 0.0), c64(1.0, 0.0), c64(3.0, 0.0)).unwrap();
/// assert!((f.re - 2.0 / 3.0).abs() < 1e-14);
/// ```
pub fn gauss_2f1_at_unit(a: Complex64, b: Complex64, c: Complex64) -> Result<Complex64> {
    let excess = c - a - b;
    if excess.re <= 0.0 {
        return Err(Error::domain(format!(
            "2F1 at unit argument requires Re(c - a - b) > 0; got {}",
            excess.re
        )));
    }
    Ok(gamma(c)? * gamma(excess)? / (gamma(c - a)? * gamma(c - b)?))
}

/// Gauss series `2F1(a, b; c; x)` by term recurrence; converges for `|x| < 1`
/// and terminates exactly when `a` or `b` is a nonpositive integer.
fn gauss_2f1_series(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    x: Complex64,
    tol: f64,
) -> Result<Complex64> {
    let terminate_at = match (nonpositive_integer_index(a), nonpositive_integer_index(b)) {
        (Some(ja), Some(jb)) => Some(ja.min(jb)),
        (Some(ja), None) => Some(ja),
        (None, Some(jb)) => Some(jb),
        (None, None) => None,
    };
    if let Some(m) = nonpositive_integer_index(c) {
        let pole_reached = match terminate_at {
            Some(j) => j > m,
            None => true,
        };
        if pole_reached {
            return Err(Error::ParameterPole { b: c });
        }
    }

    let mut term = Complex64::new(1.0, 0.0);
    let mut acc = Compensated::new(term);

    if let Some(j) = terminate_at {
        for k in 0..j {
            let kf = k as f64;
            term *= (a + kf) * (b + kf) * x / ((c + kf) * (kf + 1.0));
            acc.add(term);
        }
        return Ok(acc.sum);
    }

    if x.norm() >= 1.0 {
        return Err(Error::domain(format!(
            "Gauss series requires |x| < 1 for non-terminating parameters; got |x| = {}",
            x.norm()
        )));
    }

    let mut streak = 0;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) * x / ((c + kf) * (kf + 1.0));
        if !term.norm().is_finite() {
            return Err(Error::non_convergence(format!(
                "Gauss series 2F1({a}, {b}; {c}; {x}) overflowed at term {k}"
            )));
        }
        acc.add(term);
        if term.norm() <= tol * acc.sum.norm() {
            streak += 1;
            if streak >= SMALL_STREAK {
                return Ok(acc.sum);
            }
        } else {
            streak = 0;
        }
    }
    Err(Error::non_convergence(format!(
        "Gauss series 2F1({a}, {b}; {c}; {x}) after {MAX_TERMS} terms"
    )))
}

/// Laplace-type weighted integral of the confluent function:
///
/// ```text
/// int_0^inf e^{-s t} t^{alpha - 1} M(a; b; t) dt
///   = Gamma(alpha) s^{-alpha} 2F1(a, alpha; b; 1/s).
/// ```
///
/// Requires `Re(alpha) > 0` and `Re(s) > 0`. The right-hand side is
/// evaluated through:
///
/// * the unit-argument closed form when `|s - 1| <= 1e-12`,
/// * the exact finite sum when `a` is a nonpositive integer (any `s`),
/// * the Gauss series when `|1/s| < 1`.
///
/// Non-terminating arguments with `|1/s| >= 1` are outside the supported
/// domain, and values of `s` very close to (but not at) `1` may exhaust the
/// series term budget; both cases return errors rather than inaccurate
/// values.
pub fn laplace_1f1(
    a: Complex64,
    b: Complex64,
    alpha: Complex64,
    s: Complex64,
) -> Result<Complex64> {
    if alpha.re <= 0.0 {
        return Err(Error::domain(format!(
            "Laplace-side exponent requires Re(alpha) > 0; got {}",
            alpha.re
        )));
    }
    if s.re <= 0.0 {
        return Err(Error::domain(format!(
            "Laplace-side evaluation requires Re(s) > 0; got {}",
            s.re
        )));
    }
    let one = Complex64::new(1.0, 0.0);
    let f = if (s - one).norm() <= INT_WINDOW {
        gauss_2f1_at_unit(a, alpha, b)?
    } else {
        let x = one / s;
        if nonpositive_integer_index(a).is_some() || x.norm() < 1.0 {
            gauss_2f1_series(a, alpha, b, x, SERIES_TOL)?
        } else {
            return Err(Error::domain(format!(
                "Laplace-side evaluation supports |1/s| < 1 (or a terminating series); got s = {s}"
            )));
        }
    };
    let prefactor = gamma(alpha)? * (-alpha * s.ln()).exp();
    Ok(prefactor * f)
}
