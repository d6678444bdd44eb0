//! Adaptive tanh-sinh quadrature and the weighted half-line integrals.
//!
//! The engine integrates complex-valued functions over a finite interval
//! through the transformation `x(t) = c + d tanh((pi/2) sinh t)`, which
//! pushes endpoint singularities to doubly-exponentially small weights.
//! Nodes are generated level by level (`h = 2^-level`), reusing previous
//! evaluations, until two successive level estimates agree to tolerance.
//!
//! On top of the engine sit the half-line integrals of the Hermite weight:
//!
//! ```text
//! W(z, tau) = int_0^R x^z H_tau(x) e^{-x^2} dx,
//! ```
//!
//! their closed form
//! `W = sqrt(pi) Gamma(z+1) / (2^{z-tau+1} Gamma((z-tau)/2 + 1))`, the
//! even-symmetry full-line variant, the polynomial pairing of the moment
//! functional as an explicit integral, and the Gamma function recovered
//! from the diagonal `z = tau`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::functional::Polynomial;
use crate::gamma::{gamma, reciprocal_gamma};
use crate::hermite::{hermite, HermiteEvalConfig};
use crate::hypergeometric::Compensated;

/// Largest parameter value on the tanh-sinh axis; beyond it every node
/// underflows to the interval endpoints.
const T_MAX: f64 = 6.0;

/// Minimum refinement level before convergence may be declared.
const MIN_LEVELS: usize = 3;

/// Largest imaginary part allowed in a power-law exponent before the
/// half-line integrand is considered too oscillatory for this quadrature.
pub(crate) const OSCILLATION_LIMIT: f64 = 3.0;

/// Tolerances and truncation controls for the quadrature routines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    rel_tol: f64,
    abs_tol: f64,
    truncation_radius: Option<f64>,
    max_levels: usize,
}

impl QuadratureConfig {
    /// Builds a configuration, validating every field:
    ///
    /// * `rel_tol` must lie in `(0, 1)`;
    /// * `abs_tol` must be positive;
    /// * `truncation_radius`, when given, must be positive and finite
    ///   (`None` selects an automatic radius from the integrand's decay);
    /// * `max_levels` must lie in `4..=16`.
    pub fn new(
        rel_tol: f64,
        abs_tol: f64,
        truncation_radius: Option<f64>,
        max_levels: usize,
    ) -> Result<Self> {
        if !rel_tol.is_finite() || rel_tol <= 0.0 || rel_tol >= 1.0 {
            return Err(Error::domain(format!(
                "relative tolerance must lie in (0, 1); got {rel_tol}"
            )));
        }
        if !abs_tol.is_finite() || abs_tol <= 0.0 {
            return Err(Error::domain(format!(
                "absolute tolerance must be positive; got {abs_tol}"
            )));
        }
        if let Some(radius) = truncation_radius {
            if !radius.is_finite() || radius <= 0.0 {
                return Err(Error::domain(format!(
                    "truncation radius must be positive and finite; got {radius}"
                )));
            }
        }
        if !(4..=16).contains(&max_levels) {
            return Err(Error::domain(format!(
                "refinement level cap must lie in 4..=16; got {max_levels}"
            )));
        }
        Ok(QuadratureConfig {
            rel_tol,
            abs_tol,
            truncation_radius,
            max_levels,
        })
    }

    /// Relative tolerance on successive level estimates.
    pub fn rel_tol(&self) -> f64 {
        self.rel_tol
    }

    /// Absolute tolerance on successive level estimates.
    pub fn abs_tol(&self) -> f64 {
        self.abs_tol
    }

    /// Explicit half-line truncation radius, if any.
    pub fn truncation_radius(&self) -> Option<f64> {
        self.truncation_radius
    }

    /// Maximum tanh-sinh refinement level.
    pub fn max_levels(&self) -> usize {
        self.max_levels
    }
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            rel_tol: 1e-10,
            abs_tol: 1e-14,
            truncation_radius: None,
            max_levels: 12,
        }
    }
}

/// Successive level estimates produced by the tanh-sinh refinement, and
/// whether the final pair met the configured tolerance.
#[derive(Debug, Clone)]
pub struct RefinementTrace {
    /// `I_level` for `level = 0, 1, ...` in order of computation.
    pub estimates: Vec<Complex64>,
    /// True when the last two estimates agreed to tolerance.
    pub converged: bool,
}

/// Automatic truncation radius for integrands decaying like
/// `x^exponent_sum e^{-x^2}`: generous enough that the discarded tail sits
/// far below `abs_tol`, and never below 8.
pub fn auto_truncation_radius(abs_tol: f64, exponent_sum: f64) -> f64 {
    let digits = (1.0 / abs_tol).ln().max(1.0);
    (digits.sqrt() + 2.0 + exponent_sum.abs() / 4.0).max(8.0)
}

/// Evaluates one tanh-sinh node: parameter `t` on `(a, b)` maps to the
/// abscissa (computed as an offset from the nearer endpoint, so it never
/// rounds onto a singular endpoint) and the transformed weight.
/// Returns `None` when the node underflows into an endpoint.
fn node(t: f64, a: f64, b: f64) -> Option<(f64, f64)> {
    let half_width = (b - a) / 2.0;
    let u = std::f64::consts::FRAC_PI_2 * t.sinh();
    // tanh u = 1 - 2 / (e^{2u} + 1); fold both signs onto an offset from
    // the closer endpoint.
    let (x, cosh_u) = if u >= 0.0 {
        let offset = 2.0 * half_width / ((2.0 * u).exp() + 1.0);
        (b - offset, u.cosh())
    } else {
        let offset = 2.0 * half_width / ((-2.0 * u).exp() + 1.0);
        (a + offset, u.cosh())
    };
    if x <= a || x >= b {
        return None;
    }
    let weight = half_width * std::f64::consts::FRAC_PI_2 * t.cosh() / (cosh_u * cosh_u);
    if weight == 0.0 || !weight.is_finite() {
        return None;
    }
    Some((x, weight))
}

/// Core refinement loop shared by [`tanh_sinh`] and
/// [`tanh_sinh_refinements`].
///
/// `noise_floor` is an absolute bound on the evaluation noise of the
/// integrand itself (zero for exactly evaluable integrands): successive
/// level estimates cannot be expected to agree below it, so it joins the
/// tolerances in the convergence test. The returned value still carries
/// only noise-level error: once the discretization error has fallen to the
/// floor, further refinement is pure jitter.
fn refine<F>(
    f: F,
    a: f64,
    b: f64,
    config: &QuadratureConfig,
    noise_floor: f64,
) -> Result<RefinementTrace>
where
    F: Fn(f64) -> Result<Complex64>,
{
    if !a.is_finite() || !b.is_finite() || a >= b {
        return Err(Error::domain(format!(
            "integration interval must be finite with a < b; got ({a}, {b})"
        )));
    }

    let mut weighted_sum = Compensated::new(Complex64::new(0.0, 0.0));
    let mut estimates: Vec<Complex64> = Vec::new();

    for level in 0..=config.max_levels {
        let h = 0.5f64.powi(level as i32);
        let count = (T_MAX / h).floor() as i64;
        // Level 0 uses every integer multiple of h; deeper levels add only
        // the odd multiples, ascending in t.
        let mut k = -count;
        while k <= count {
            let is_new = level == 0 || k % 2 != 0;
            if is_new {
                let t = k as f64 * h;
                if let Some((x, weight)) = node(t, a, b) {
                    let value = f(x)?;
                    if !value.re.is_finite() || !value.im.is_finite() {
                        return Err(Error::SingularIntegrand { x });
                    }
                    weighted_sum.add(weight * value);
                }
            }
            k += 1;
        }

        let estimate = h * weighted_sum.sum;
        estimates.push(estimate);

        if level >= MIN_LEVELS {
            let previous = estimates[level - 1];
            let difference = (estimate - previous).norm();
            let allowed = config
                .abs_tol
                .max(config.rel_tol * estimate.norm())
                .max(noise_floor);
            if difference <= allowed {
                return Ok(RefinementTrace {
                    estimates,
                    converged: true,
                });
            }
        }
    }

    Ok(RefinementTrace {
        estimates,
        converged: false,
    })
}

/// Integrates `f` over the finite interval `(a, b)` by tanh-sinh
/// refinement. Endpoint singularities that the transformation suppresses
/// (for example `x^{-1/2}` at an endpoint) are handled without special
/// casing; a non-finite value at an interior node is reported as
/// [`Error::SingularIntegrand`], and failure to meet tolerance within
/// `config.max_levels()` as [`Error::NonConvergence`].
pub fn tanh_sinh<F>(f: F, a: f64, b: f64, config: &QuadratureConfig) -> Result<Complex64>
where
    F: Fn(f64) -> Result<Complex64>,
{
    tanh_sinh_noise_floored(f, a, b, config, 0.0)
}

/// Same as [`tanh_sinh`] but with an absolute `noise_floor` joined to the
/// convergence tolerances, for integrands whose evaluation carries known
/// numerical noise that no amount of refinement can reduce. The returned
/// value is accurate to roughly the floor itself: once the discretization
/// error falls to that scale, the superlinear refinement has already pushed
/// the quadrature error far below it.
pub(crate) fn tanh_sinh_noise_floored<F>(
    f: F,
    a: f64,
    b: f64,
    config: &QuadratureConfig,
    noise_floor: f64,
) -> Result<Complex64>
where
    F: Fn(f64) -> Result<Complex64>,
{
    let trace = refine(f, a, b, config, noise_floor)?;
    if !trace.converged {
        return Err(Error::non_convergence(format!(
            "tanh-sinh refinement on ({a}, {b}) exhausted {} levels",
            config.max_levels()
        )));
    }
    Ok(*trace.estimates.last().unwrap())
}

/// Runs the same refinement as [`tanh_sinh`] but returns every level
/// estimate along with the convergence flag, for inspecting the refinement
/// behaviour itself.
pub fn tanh_sinh_refinements<F>(
    f: F,
    a: f64,
    b: f64,
    config: &QuadratureConfig,
) -> Result<RefinementTrace>
where
    F: Fn(f64) -> Result<Complex64>,
{
    refine(f, a, b, config, 0.0)
}

/// Safety margin applied to the integrated noise bound used as the
/// convergence floor for weighted integrals.
const NOISE_MARGIN: f64 = 4.0;

/// Exponent `e` such that `x^e` bounds the algebraic factor multiplying
/// `eps` in the absolute evaluation noise of `H_tau(x) e^{-x^2}` computed
/// through the confluent form. The two series branches contribute terms of
/// size `x^{Re tau}` and `x^{-Re tau - 1}` relative to `e^{x^2}`; below the
/// first power both are bounded by a constant.
fn hermite_noise_exponent(tau_re: f64) -> f64 {
    tau_re.max(-tau_re - 1.0).max(0.0)
}

/// Absolute noise floor for `int_0^radius g(x) * H_tau(x) e^{-x^2} dx`
/// where the algebraic factor `g` is bounded coefficient-wise by
/// `sum_j c_j x^{p_j}` (each `c_j >= 0`, each `p_j > -1`). Integrates the
/// pointwise noise model `eps * g(x) * x^{noise exponent}` up to the
/// large-argument switch of `eval`, beyond which the evaluation error is
/// relative to the integrand itself and therefore negligible.
pub(crate) fn weighted_noise_floor(
    terms: &[(f64, f64)],
    tau_re: f64,
    radius: f64,
    eval: &HermiteEvalConfig,
) -> f64 {
    let cutoff = radius.min(eval.asymptotic_threshold());
    let extra = hermite_noise_exponent(tau_re);
    let mut total = 0.0;
    for &(coefficient, power) in terms {
        // Exponents at or below zero can only arise from negative-power
        // prefactors whose noise lives near the origin and stays at eps
        // scale; clamping keeps the integrated bound finite there.
        let exponent = (power + extra + 1.0).max(0.5);
        total += coefficient * cutoff.powf(exponent) / exponent;
    }
    NOISE_MARGIN * f64::EPSILON * total
}

/// Weighted half-line integral `int_0^R x^z H_tau(x) e^{-x^2} dx`, with `R`
/// taken from the configuration or chosen automatically from the
/// integrand's decay.
///
/// Requires `Re(z) > -1` for integrability at the origin; exponents with
/// `|Im(z)|` beyond `3` make `x^z` oscillate too rapidly near the origin
/// for reliable refinement and are refused.
pub fn hermite_weight_integral(
    z: Complex64,
    tau: Complex64,
    config: &QuadratureConfig,
) -> Result<Complex64> {
    if z.re <= -1.0 {
        return Err(Error::domain(format!(
            "weight integral requires Re(z) > -1; got {}",
            z.re
        )));
    }
    if z.im.abs() > OSCILLATION_LIMIT {
        return Err(Error::non_convergence(format!(
            "power exponent Im(z) = {} oscillates beyond the supported band |Im| <= {OSCILLATION_LIMIT}",
            z.im
        )));
    }
    let radius = config
        .truncation_radius
        .unwrap_or_else(|| auto_truncation_radius(config.abs_tol, z.re + tau.re));
    let eval = crate::hermite::integrand_eval_config();
    let floor = weighted_noise_floor(&[(1.0, z.re)], tau.re, radius, &eval);
    tanh_sinh_noise_floored(
        |x| {
            let power = (z * x.ln()).exp();
            let h = hermite(tau, Complex64::new(x, 0.0), &eval)?;
            Ok(power * h * (-x * x).exp())
        },
        0.0,
        radius,
        config,
        floor,
    )
}

/// Closed form of the weighted half-line integral:
///
/// ```text
/// int_0^inf x^z H_tau(x) e^{-x^2} dx
///   = sqrt(pi) Gamma(z+1) / (2^{z-tau+1} Gamma((z-tau)/2 + 1)).
/// ```
///
/// The reciprocal of the denominator Gamma is evaluated as an entire
/// function, so parameter combinations on its poles give an exact zero
/// (these are the orthogonality cases).
pub fn weight_integral_closed_form(z: Complex64, tau: Complex64) -> Result<Complex64> {
    let numerator = gamma(z + 1.0)?;
    let denominator_reciprocal = reciprocal_gamma((z - tau) / 2.0 + 1.0);
    let power = ((z - tau + 1.0) * std::f64::consts::LN_2).exp();
    Ok(std::f64::consts::PI.sqrt() * numerator * denominator_reciprocal / power)
}

/// Full-line integral `int_-inf^inf |x|^z H_tau(|x|) e^{-x^2} dx`, reduced
/// by even symmetry to twice the half-line value.
pub fn hermite_weight_integral_fullline(
    z: Complex64,
    tau: Complex64,
    config: &QuadratureConfig,
) -> Result<Complex64> {
    Ok(2.0 * hermite_weight_integral(z, tau, config)?)
}

/// The moment functional applied to `p`, evaluated as the explicit
/// integral
///
/// ```text
/// (1 / (sqrt(pi) Gamma(tau+1))) int_0^R q(x) x^tau H_tau(x) e^{-x^2} dx
/// ```
///
/// with `q` twice the even part of `p` (odd parts pair to zero by
/// symmetry). Requires `Re(tau) > -1`; degrees with `|Im(tau)|` beyond `3`
/// are refused as too oscillatory.
pub fn apply_via_quadrature(
    tau: Complex64,
    p: &Polynomial,
    config: &QuadratureConfig,
) -> Result<Complex64> {
    if tau.re <= -1.0 {
        return Err(Error::domain(format!(
            "integral pairing requires Re(tau) > -1; got {}",
            tau.re
        )));
    }
    if tau.im.abs() > OSCILLATION_LIMIT {
        return Err(Error::non_convergence(format!(
            "power exponent Im(tau) = {} oscillates beyond the supported band |Im| <= {OSCILLATION_LIMIT}",
            tau.im
        )));
    }
    let q = p.doubled_even_part();
    if q.coeffs() == [Complex64::new(0.0, 0.0)] {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let radius = config
        .truncation_radius
        .unwrap_or_else(|| auto_truncation_radius(config.abs_tol, q.degree() as f64 + tau.re));
    let eval = crate::hermite::integrand_eval_config();
    let bounds: Vec<(f64, f64)> = q
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| (c.norm(), j as f64 + tau.re))
        .collect();
    let floor = weighted_noise_floor(&bounds, tau.re, radius, &eval);
    let integral = tanh_sinh_noise_floored(
        |x| {
            let power = (tau * x.ln()).exp();
            let h = hermite(tau, Complex64::new(x, 0.0), &eval)?;
            Ok(q.eval(Complex64::new(x, 0.0)) * power * h * (-x * x).exp())
        },
        0.0,
        radius,
        config,
        floor,
    )?;
    let normalization = std::f64::consts::PI.sqrt() * gamma(tau + 1.0)?;
    Ok(integral / normalization)
}

/// `Gamma(tau + 1)` recovered from the diagonal weighted integral:
/// `Gamma(tau+1) = (2/sqrt(pi)) int_0^inf x^tau H_tau(x) e^{-x^2} dx`.
/// Requires `Re(tau) > -1`.
pub fn gamma_via_realline(tau: Complex64, config: &QuadratureConfig) -> Result<Complex64> {
    let integral = hermite_weight_integral(tau, tau, config)?;
    Ok(2.0 / std::f64::consts::PI.sqrt() * integral)
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;
    use crate::c64;

    fn rel_err(got: Complex64, want: Complex64) -> f64 {
        (got - want).norm() / want.norm().max(f64::MIN_POSITIVE)
    }

    fn config() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn config_validation() {
        assert!(QuadratureConfig::new(1e-10, 1e-14, None, 12).is_ok());
        assert!(QuadratureConfig::new(0.0, 1e-14, None, 12).is_err());
        assert!(QuadratureConfig::new(1.5, 1e-14, None, 12).is_err());
        assert!(QuadratureConfig::new(1e-10, 0.0, None, 12).is_err());
        assert!(QuadratureConfig::new(1e-10, 1e-14, Some(-2.0), 12).is_err());
        assert!(QuadratureConfig::new(1e-10, 1e-14, Some(f64::INFINITY), 12).is_err());
        assert!(QuadratureConfig::new(1e-10, 1e-14, None, 3).is_err());
        assert!(QuadratureConfig::new(1e-10, 1e-14, None, 17).is_err());
    }

    #[test]
    fn gaussian_integral() {
        // int_0^8 e^{-x^2} dx = sqrt(pi)/2 up to an ~1e-28 tail;
        // frozen 30-digit reference 0.886226925452758013649083741671.
        let got = tanh_sinh(|x| Ok(c64((-x * x).exp(), 0.0)), 0.0, 8.0, &config()).unwrap();
        assert!(rel_err(got, c64(0.886_226_925_452_758_014, 0.0)) < 1e-12);
    }

    #[test]
    fn endpoint_singularity_square_root() {
        // int_0^1 x^{-1/2} dx = 2 despite the infinite endpoint value.
        let got = tanh_sinh(|x| Ok(c64(1.0 / x.sqrt(), 0.0)), 0.0, 1.0, &config()).unwrap();
        assert!(rel_err(got, c64(2.0, 0.0)) < 1e-10);
    }

    #[test]
    fn singular_weighted_gaussian() {
        // int_0^inf x^{-1/2} e^{-x^2} dx = Gamma(1/4)/2
        //   = 1.81280495411095415596534257794 (30-digit reference).
        let got = tanh_sinh(
            |x| Ok(c64(1.0 / x.sqrt() * (-x * x).exp(), 0.0)),
            0.0,
            8.0,
            &config(),
        )
        .unwrap();
        assert!(rel_err(got, c64(1.812_804_954_110_954_156, 0.0)) < 1e-10);
    }

    #[test]
    fn polynomial_is_captured_exactly() {
        let got = tanh_sinh(
            |x| Ok(c64(3.0 * x * x - 2.0 * x + 1.0, 0.0)),
            0.0,
            1.0,
            &config(),
        )
        .unwrap();
        assert!(rel_err(got, c64(1.0, 0.0)) < 1e-13);
    }

    #[test]
    fn complex_valued_integrand() {
        // int_0^1 e^{ix} dx = sin 1 + i (1 - cos 1).
        let got = tanh_sinh(|x| Ok(c64(x.cos(), x.sin())), 0.0, 1.0, &config()).unwrap();
        let want = c64(1f64.sin(), 1.0 - 1f64.cos());
        assert!(rel_err(got, want) < 1e-12);
    }

    #[test]
    fn interior_singularity_is_reported() {
        // The level-0 midpoint node lands exactly on x = 1/2.
        let got = tanh_sinh(|x| Ok(c64(1.0 / (x - 0.5), 0.0)), 0.0, 1.0, &config());
        assert!(matches!(got, Err(Error::SingularIntegrand { .. })));
    }

    #[test]
    fn integrand_errors_propagate() {
        let got = tanh_sinh(
            |_| Err(Error::domain("synthetic failure")),
            0.0,
            1.0,
            &config(),
        );
        assert!(matches!(got, Err(Error::Domain { .. })));
    }

    #[test]
    fn level_cap_reports_nonconvergence() {
        // A sharp interior peak of width ~1e-3 cannot be resolved by the
        // node spacing four levels allow.
        let tight = QuadratureConfig::new(1e-14, 1e-16, None, 4).unwrap();
        let got = tanh_sinh(
            |x| Ok(c64(1.0 / (1e-6 + (x - 0.3) * (x - 0.3)), 0.0)),
            0.0,
            1.0,
            &tight,
        );
        assert!(matches!(got, Err(Error::NonConvergence { .. })));
    }

    #[test]
    fn refinement_differences_shrink_geometrically() {
        // Unreachable tolerances force refinement until two successive
        // estimates agree bitwise. From the first comparison level on, each
        // difference must fall at least four-fold per level until it hits
        // the rounding floor, and the flatline must sit on the true value.
        let tight = QuadratureConfig::new(1e-300, 1e-300, None, 12).unwrap();
        let trace = tanh_sinh_refinements(
            |x| Ok(c64((-x * x).exp(), 0.0)),
            0.0,
            8.0,
            &tight,
        )
        .unwrap();
        let estimates = &trace.estimates;
        assert!(estimates.len() >= 5, "expected several refinement levels");
        if trace.converged {
            // The only way to satisfy a 1e-300 tolerance is bitwise
            // equality of the last two estimates.
            let last = estimates[estimates.len() - 1];
            let previous = estimates[estimates.len() - 2];
            assert_eq!(last, previous);
        } else {
            assert_eq!(estimates.len(), 13);
        }
        let reference = c64(0.886226925452758013649083741671, 0.0);
        assert!(rel_err(*estimates.last().unwrap(), reference) < 5e-16);
        let magnitude = reference.norm();
        let mut previous_difference = f64::INFINITY;
        for level in 3..estimates.len() {
            let difference = (estimates[level] - estimates[level - 1]).norm();
            let allowed = (previous_difference / 4.0).max(5e-16 * magnitude);
            assert!(
                difference <= allowed,
                "difference {difference:.3e} at level {level} exceeds {allowed:.3e}"
            );
            previous_difference = difference.max(5e-16 * magnitude);
        }
    }

    #[test]
    fn weight_integral_matches_closed_form_on_grid() {
        let zs = [c64(0.0, 0.0), c64(0.5, 0.0), c64(1.0, 0.0), c64(2.3, 0.0)];
        let taus = [c64(-0.5, 0.0), c64(0.5, 0.0), c64(1.3, 0.0), c64(2.7, 0.0)];
        for &z in &zs {
            for &tau in &taus {
                let numeric = hermite_weight_integral(z, tau, &config()).unwrap();
                let closed = weight_integral_closed_form(z, tau).unwrap();
                assert!(
                    rel_err(numeric, closed) < 1e-8,
                    "weight integral off at z = {z}, tau = {tau}: {numeric} vs {closed}"
                );
            }
        }
        // Diagonal z = tau.
        for &tau in &taus {
            if tau.re <= -1.0 {
                continue;
            }
            let numeric = hermite_weight_integral(tau, tau, &config()).unwrap();
            let closed = weight_integral_closed_form(tau, tau).unwrap();
            assert!(rel_err(numeric, closed) < 1e-8, "diagonal off at tau = {tau}");
        }
    }

    #[test]
    fn closed_form_hits_orthogonality_zeros() {
        // z - tau = -2, -4, ... lands on the denominator Gamma poles; the
        // closed form is exactly zero and the quadrature agrees to
        // tolerance.
        let closed = weight_integral_closed_form(c64(0.0, 0.0), c64(2.0, 0.0)).unwrap();
        assert_eq!(closed, c64(0.0, 0.0));
        let numeric = hermite_weight_integral(c64(0.0, 0.0), c64(2.0, 0.0), &config()).unwrap();
        assert!(numeric.norm() < 1e-10);

        let closed = weight_integral_closed_form(c64(1.0, 0.0), c64(3.0, 0.0)).unwrap();
        assert_eq!(closed, c64(0.0, 0.0));
        let numeric = hermite_weight_integral(c64(1.0, 0.0), c64(3.0, 0.0), &config()).unwrap();
        assert!(numeric.norm() < 1e-10);
    }

    #[test]
    fn fullline_is_twice_halfline() {
        let half = hermite_weight_integral(c64(1.3, 0.0), c64(0.7, 0.0), &config()).unwrap();
        let full = hermite_weight_integral_fullline(c64(1.3, 0.0), c64(0.7, 0.0), &config())
            .unwrap();
        assert_eq!(full, 2.0 * half);
    }

    #[test]
    fn weight_integral_domain_and_oscillation_guards() {
        assert!(matches!(
            hermite_weight_integral(c64(-1.5, 0.0), c64(0.5, 0.0), &config()),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            hermite_weight_integral(c64(0.5, 4.0), c64(0.5, 0.0), &config()),
            Err(Error::NonConvergence { .. })
        ));
    }

    #[test]
    fn pairing_matches_moment_functional() {
        use crate::functional::GeneralizedHermiteFunctional;
        let taus = [c64(-0.5, 0.0), c64(0.5, 0.0), c64(1.3, 0.0), c64(2.7, 0.0)];
        for &tau in &taus {
            let functional = GeneralizedHermiteFunctional::new(tau).unwrap();
            for degree in [0usize, 2, 4, 8, 12] {
                let p = Polynomial::monomial(degree);
                let integral = apply_via_quadrature(tau, &p, &config()).unwrap();
                let exact = functional.apply(&p);
                assert!(
                    rel_err(integral, exact) < 1e-8,
                    "pairing off at tau = {tau}, degree {degree}: {integral} vs {exact}"
                );
            }
            // A mixed polynomial, including odd terms that integrate away.
            let p = Polynomial::from_real(&[1.0, -2.0, 0.5, 3.0, 0.25]);
            let integral = apply_via_quadrature(tau, &p, &config()).unwrap();
            let exact = functional.apply(&p);
            assert!(rel_err(integral, exact) < 1e-8, "mixed pairing off at tau = {tau}");
        }
    }

    #[test]
    fn pairing_annihilates_odd_polynomials_exactly() {
        let p = Polynomial::from_real(&[0.0, 1.0, 0.0, -3.0]);
        let got = apply_via_quadrature(c64(0.7, 0.0), &p, &config()).unwrap();
        assert_eq!(got, c64(0.0, 0.0));
    }

    #[test]
    fn pairing_guards() {
        let p = Polynomial::monomial(2);
        assert!(matches!(
            apply_via_quadrature(c64(-1.5, 0.0), &p, &config()),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            apply_via_quadrature(c64(0.5, 3.5), &p, &config()),
            Err(Error::NonConvergence { .. })
        ));
    }

    #[test]
    fn gamma_recovered_from_diagonal() {
        for &tau in &[c64(-0.5, 0.0), c64(0.3, 0.0), c64(0.5, 0.0), c64(1.3, 0.0), c64(2.7, 0.0)]
        {
            let via_integral = gamma_via_realline(tau, &config()).unwrap();
            let reference = gamma(tau + 1.0).unwrap();
            assert!(
                rel_err(via_integral, reference) < 1e-8,
                "Gamma via half-line off at tau = {tau}: {via_integral} vs {reference}"
            );
        }
    }

    #[test]
    fn laplace_transform_consistency() {
        // Independent check of the Laplace-side evaluation: quadrature over
        // (0, T) plus an analytic large-argument tail, against the closed
        // unit-argument form. Draws keep Re(alpha) and the convergence
        // margin b - a - alpha safely positive.
        use crate::hypergeometric::{kummer_1f1, laplace_1f1};
        use rand::{Rng, SeedableRng};
        use crate::gamma::pochhammer;

        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0201);
        let t_split = 80.0;
        let tail_terms = 17u32;
        for _ in 0..8 {
            let a = c64(rng.gen_range(0.2..1.6), 0.0);
            let alpha = c64(rng.gen_range(0.6..2.2), 0.0);
            let margin = rng.gen_range(0.6..5.0);
            let b = a + alpha + margin;

            let claimed = laplace_1f1(a, b, alpha, c64(1.0, 0.0)).unwrap();

            let head = tanh_sinh(
                |t| {
                    let m = kummer_1f1(a, b, c64(t, 0.0))?;
                    Ok((alpha.re - 1.0).mul_add(t.ln(), -t).exp() * m)
                },
                0.0,
                t_split,
                &config(),
            )
            .unwrap();

            // Tail from M(a;b;t) ~ Gamma(b)/Gamma(a) e^t t^{a-b} x
            //   sum_k (b-a)_k (1-a)_k / (k! t^k):
            // each power integrates to T^{alpha+a-b-k} / (k + b - a - alpha).
            let mut tail = c64(0.0, 0.0);
            let mut factorial = 1.0;
            for k in 0..=tail_terms {
                if k > 0 {
                    factorial *= k as f64;
                }
                let kf = k as f64;
                let power = ((alpha + a - b - kf) * t_split.ln()).exp();
                tail += pochhammer(b - a, k) * pochhammer(1.0 - a, k) / factorial * power
                    / (kf + (b - a - alpha).re);
            }
            tail *= gamma(b).unwrap() / gamma(a).unwrap();

            let reference = head + tail;
            assert!(
                rel_err(claimed, reference) < 2e-8,
                "Laplace value off at a = {a}, b = {b}, alpha = {alpha}: \
                 {claimed} vs {reference} (rel {})",
                rel_err(claimed, reference)
            );
        }
    }
}
