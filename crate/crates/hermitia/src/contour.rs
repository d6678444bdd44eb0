//! Complex-plane contours and the integral representations evaluated on
//! them: moments of the even Hermite weight over an indented real axis,
//! the moment-functional pairing, and three keyhole-loop representations
//! of the Gamma function and its reciprocal.
//!
//! Two contour shapes appear. The *indented axis* runs along the real
//! axis from `+R` to `-R`, detouring over the origin on a small upper
//! semicircle; the weight carried over it, `|zeta|^tau H_tau(|zeta|)
//! e^{-zeta^2}`, is holomorphic nowhere off the real axis, so the value
//! of the detour is defined as its vanishing-radius limit (which is zero;
//! the removed stretches of the axis are restored by direct integration).
//! The *keyhole* runs in along the upper lip of the positive real axis,
//! once counterclockwise around the origin, and back out along the lower
//! lip with the argument advanced by `2 pi`; the branch-tracked power
//! `zeta^tau` picks up `e^{2 pi i tau}` between the lips, and the
//! integrands there are holomorphic, so the keyhole value is genuinely
//! independent of the indentation radius.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::functional::Polynomial;
use crate::gamma::gamma;
use crate::hermite::{hermite, integrand_eval_config};
use crate::hypergeometric::Compensated;
use crate::quadrature::{
    auto_truncation_radius, tanh_sinh, tanh_sinh_noise_floored, weighted_noise_floor,
    QuadratureConfig, OSCILLATION_LIMIT,
};

/// Positional tolerance for contour continuity checks.
const CONTINUITY_TOL: f64 = 1e-12;

/// Minimum number of trapezoid refinements before an arc integral may be
/// declared converged.
const ROMBERG_MIN_LEVELS: usize = 3;

/// Divisors smaller than this (|e^{2 pi i tau} - 1| or |sin(pi tau)|)
/// indicate an integer degree, where the loop representations degenerate.
const DEGENERATE_DIVISOR: f64 = 1e-8;

/// One piece of a contour: a straight line carrying a constant tracked
/// argument, or an origin-centered circular arc along which the tracked
/// argument follows the polar angle.
///
/// The tracked argument exists so that branch-following powers
/// `zeta^tau = exp(tau (ln|zeta| + i arg))` can be evaluated continuously
/// along a path that winds around the origin; integrands that do not need
/// it simply ignore the second argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ContourSegment {
    /// Straight line from `from` to `to`. Every point carries the tracked
    /// argument `arg` (the lines used here lie on rays from the origin).
    Line {
        from: Complex64,
        to: Complex64,
        arg: f64,
    },
    /// Arc of `|zeta| = radius` from polar angle `theta_from` to
    /// `theta_to` (counterclockwise when increasing); a point at polar
    /// angle `theta` carries the tracked argument `arg_offset + theta`.
    Arc {
        radius: f64,
        theta_from: f64,
        theta_to: f64,
        arg_offset: f64,
    },
}

impl ContourSegment {
    /// Starting point and tracked argument.
    fn start(&self) -> (Complex64, f64) {
        match *self {
            ContourSegment::Line { from, arg, .. } => (from, arg),
            ContourSegment::Arc {
                radius,
                theta_from,
                arg_offset,
                ..
            } => (
                radius * Complex64::new(theta_from.cos(), theta_from.sin()),
                arg_offset + theta_from,
            ),
        }
    }

    /// Final point and tracked argument.
    fn end(&self) -> (Complex64, f64) {
        match *self {
            ContourSegment::Line { to, arg, .. } => (to, arg),
            ContourSegment::Arc {
                radius,
                theta_to,
                arg_offset,
                ..
            } => (
                radius * Complex64::new(theta_to.cos(), theta_to.sin()),
                arg_offset + theta_to,
            ),
        }
    }
}

/// A connected chain of contour segments together with the indentation
/// radius and outer truncation radius it was built with.
#[derive(Debug, Clone, PartialEq)]
pub struct ContourPath {
    segments: Vec<ContourSegment>,
    epsilon: f64,
    truncation: f64,
}

impl ContourPath {
    /// Builds a path from explicit segments, checking that consecutive
    /// segments agree on both position and tracked argument.
    pub fn from_segments(
        segments: Vec<ContourSegment>,
        epsilon: f64,
        truncation: f64,
    ) -> Result<Self> {
        if segments.is_empty() {
            return Err(Error::domain("a contour needs at least one segment"));
        }
        for pair in segments.windows(2) {
            let (tail, tail_arg) = pair[0].end();
            let (head, head_arg) = pair[1].start();
            if (tail - head).norm() > CONTINUITY_TOL || (tail_arg - head_arg).abs() > CONTINUITY_TOL
            {
                return Err(Error::domain(format!(
                    "contour is disconnected: segment ends at {tail} (arg {tail_arg}) \
                     but the next starts at {head} (arg {head_arg})"
                )));
            }
        }
        Ok(ContourPath {
            segments,
            epsilon,
            truncation,
        })
    }

    /// The segments, in traversal order.
    pub fn segments(&self) -> &[ContourSegment] {
        &self.segments
    }

    /// Indentation radius around the origin.
    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// Outer truncation radius standing in for infinity.
    pub fn truncation(&self) -> f64 {
        self.truncation
    }
}

fn validate_shape(epsilon: f64, radius: f64) -> Result<()> {
    if !epsilon.is_finite() || epsilon <= 0.0 || epsilon >= 1.0 {
        return Err(Error::domain(format!(
            "indentation radius must lie in (0, 1); got {epsilon}"
        )));
    }
    if !radius.is_finite() || radius < 1.0 {
        return Err(Error::domain(format!(
            "truncation radius must be finite and at least 1; got {radius}"
        )));
    }
    Ok(())
}

/// The real axis from `+radius` to `-radius`, indented over the origin by
/// an upper semicircle of radius `epsilon`. The tracked argument is `0` on
/// the positive half, follows the semicircle to `pi`, and stays `pi` on
/// the negative half.
pub fn indented_axis_path(epsilon: f64, radius: f64) -> Result<ContourPath> {
    validate_shape(epsilon, radius)?;
    let segments = vec![
        ContourSegment::Line {
            from: Complex64::new(radius, 0.0),
            to: Complex64::new(epsilon, 0.0),
            arg: 0.0,
        },
        ContourSegment::Arc {
            radius: epsilon,
            theta_from: 0.0,
            theta_to: std::f64::consts::PI,
            arg_offset: 0.0,
        },
        ContourSegment::Line {
            from: Complex64::new(-epsilon, 0.0),
            to: Complex64::new(-radius, 0.0),
            arg: std::f64::consts::PI,
        },
    ];
    ContourPath::from_segments(segments, epsilon, radius)
}

/// Keyhole loop around the positive real axis: in from `+radius` to
/// `+epsilon` with tracked argument `0`, once counterclockwise around the
/// origin, and back out to `+radius` with tracked argument `2 pi`.
pub fn keyhole_path(epsilon: f64, radius: f64) -> Result<ContourPath> {
    validate_shape(epsilon, radius)?;
    let tau = 2.0 * std::f64::consts::PI;
    let segments = vec![
        ContourSegment::Line {
            from: Complex64::new(radius, 0.0),
            to: Complex64::new(epsilon, 0.0),
            arg: 0.0,
        },
        ContourSegment::Arc {
            radius: epsilon,
            theta_from: 0.0,
            theta_to: tau,
            arg_offset: 0.0,
        },
        ContourSegment::Line {
            from: Complex64::new(epsilon, 0.0),
            to: Complex64::new(radius, 0.0),
            arg: tau,
        },
    ];
    ContourPath::from_segments(segments, epsilon, radius)
}

/// Trapezoid refinement with Richardson extrapolation on a finite
/// interval. The arc integrands are analytic in the angle but not
/// `2 pi`-periodic once a branch-tracked power is present, so the bare
/// trapezoid rule converges only quadratically; extrapolation restores
/// high order without the tanh-sinh change of variables (which the
/// endpoint-regular arcs do not need).
fn romberg<F>(
    f: F,
    a: f64,
    b: f64,
    config: &QuadratureConfig,
    noise_floor: f64,
) -> Result<Complex64>
where
    F: Fn(f64) -> Result<Complex64>,
{
    let check = |t: f64, value: Complex64| -> Result<Complex64> {
        if !value.re.is_finite() || !value.im.is_finite() {
            return Err(Error::SingularIntegrand { x: t });
        }
        Ok(value)
    };
    let width = b - a;
    let fa = check(a, f(a)?)?;
    let fb = check(b, f(b)?)?;
    let mut previous_row = vec![0.5 * width * (fa + fb)];
    for level in 1..=config.max_levels() {
        let intervals = 1usize << level;
        let h = width / intervals as f64;
        let mut midpoint_sum = Compensated::new(Complex64::new(0.0, 0.0));
        let mut j = 1usize;
        while j < intervals {
            let t = a + j as f64 * h;
            midpoint_sum.add(check(t, f(t)?)?);
            j += 2;
        }
        let mut row = Vec::with_capacity(previous_row.len() + 1);
        row.push(0.5 * previous_row[0] + h * midpoint_sum.sum);
        let mut factor = 4.0;
        for k in 0..previous_row.len() {
            let extrapolated = (factor * row[k] - previous_row[k]) / (factor - 1.0);
            row.push(extrapolated);
            factor *= 4.0;
        }
        let estimate = *row.last().unwrap();
        let previous = *previous_row.last().unwrap();
        if level >= ROMBERG_MIN_LEVELS {
            let difference = (estimate - previous).norm();
            let allowed = config
                .abs_tol()
                .max(config.rel_tol() * estimate.norm())
                .max(noise_floor);
            if difference <= allowed {
                return Ok(estimate);
            }
        }
        previous_row = row;
    }
    Err(Error::non_convergence(format!(
        "extrapolated trapezoid refinement on ({a}, {b}) exhausted {} levels",
        config.max_levels()
    )))
}

/// Integrates one segment, applying the segment's parametrization and
/// Jacobian. `noise_floor` is an absolute bound on the evaluation noise of
/// the integrand along the segment (zero when it is exactly evaluable).
fn integrate_segment<F>(
    f: &F,
    segment: &ContourSegment,
    config: &QuadratureConfig,
    noise_floor: f64,
) -> Result<Complex64>
where
    F: Fn(Complex64, f64) -> Result<Complex64>,
{
    match *segment {
        ContourSegment::Line { from, to, arg } => {
            let direction = to - from;
            tanh_sinh_noise_floored(
                |s| Ok(f(from + s * direction, arg)? * direction),
                0.0,
                1.0,
                config,
                noise_floor,
            )
        }
        ContourSegment::Arc {
            radius,
            theta_from,
            theta_to,
            arg_offset,
        } => romberg(
            |theta| {
                let point = radius * Complex64::new(theta.cos(), theta.sin());
                Ok(f(point, arg_offset + theta)? * Complex64::new(0.0, 1.0) * point)
            },
            theta_from,
            theta_to,
            config,
            noise_floor,
        ),
    }
}

/// Integrates `f(zeta, tracked_arg)` along `path`. Lines are integrated by
/// tanh-sinh refinement of their affine parametrization; arcs by
/// extrapolated trapezoid refinement in the polar angle.
pub fn integrate_contour<F>(f: F, path: &ContourPath, config: &QuadratureConfig) -> Result<Complex64>
where
    F: Fn(Complex64, f64) -> Result<Complex64>,
{
    let mut total = Compensated::new(Complex64::new(0.0, 0.0));
    for segment in path.segments() {
        total.add(integrate_segment(&f, segment, config, 0.0)?);
    }
    Ok(total.sum)
}

fn check_moment_degree(tau: Complex64) -> Result<()> {
    if tau.re <= -1.0 {
        return Err(Error::domain(format!(
            "contour moments require Re(tau) > -1; got {}",
            tau.re
        )));
    }
    if tau.im.abs() > OSCILLATION_LIMIT {
        return Err(Error::non_convergence(format!(
            "power exponent Im(tau) = {} oscillates beyond the supported band |Im| <= {OSCILLATION_LIMIT}",
            tau.im
        )));
    }
    Ok(())
}

/// `n`-th moment of the even Hermite weight over the indented axis:
///
/// ```text
/// I_n = int zeta^n |zeta|^tau H_tau(|zeta|) e^{-zeta^2} dzeta
/// ```
///
/// taken from `+R` to `-R` with the origin indented by `epsilon`. The
/// weight is not holomorphic off the real axis, so the indentation's value
/// is its vanishing-radius limit: the semicircle itself contributes
/// nothing in that limit, and the removed stretches `(0, epsilon)` of the
/// two axis halves are restored by direct integration. Odd `n` pair to
/// zero; even `n` satisfy
///
/// ```text
/// I_n = -sqrt(pi) Gamma(n + tau + 1) / (2^n (n/2)!).
/// ```
///
/// Requires `Re(tau) > -1` and `|Im(tau)| <= 3`.
pub fn contour_moment(
    n: u32,
    tau: Complex64,
    epsilon: f64,
    config: &QuadratureConfig,
) -> Result<Complex64> {
    check_moment_degree(tau)?;
    let radius = config
        .truncation_radius()
        .unwrap_or_else(|| auto_truncation_radius(config.abs_tol(), n as f64 + tau.re));
    let path = indented_axis_path(epsilon, radius)?;
    let eval = integrand_eval_config();
    let floor = weighted_noise_floor(&[(1.0, n as f64 + tau.re)], tau.re, radius, &eval);
    let weight = |zeta: Complex64, _arg: f64| -> Result<Complex64> {
        let x = zeta.norm();
        let power = zeta.powu(n);
        let modulus_power = (tau * x.ln()).exp();
        let h = hermite(tau, Complex64::new(x, 0.0), &eval)?;
        Ok(power * modulus_power * h * (-zeta * zeta).exp())
    };

    let mut total = Compensated::new(Complex64::new(0.0, 0.0));
    for segment in path.segments() {
        if matches!(segment, ContourSegment::Line { .. }) {
            total.add(integrate_segment(&weight, segment, config, floor)?);
        }
    }
    // Vanishing-indentation completion: the semicircle's limit is zero and
    // the two axis stubs over (0, epsilon) contribute
    // -(1 + (-1)^n) int_0^epsilon x^{n + tau} H_tau(x) e^{-x^2} dx,
    // which vanishes identically for odd n.
    if n.is_multiple_of(2) {
        let stub = tanh_sinh(
            |x| {
                let power = ((n as f64 + tau) * x.ln()).exp();
                let h = hermite(tau, Complex64::new(x, 0.0), &eval)?;
                Ok(power * h * (-x * x).exp())
            },
            0.0,
            epsilon,
            config,
        )?;
        total.add(-2.0 * stub);
    }
    Ok(total.sum)
}

/// The moment functional applied to `p`, evaluated through the
/// indented-axis representation:
///
/// ```text
/// <G, p> = -(1 / (sqrt(pi) Gamma(tau + 1))) *
///          int p(zeta) |zeta|^tau H_tau(|zeta|) e^{-zeta^2} dzeta.
/// ```
///
/// Each monomial contributes its contour moment. Requires
/// `Re(tau) > -1` and `|Im(tau)| <= 3`.
pub fn apply_via_contour(
    tau: Complex64,
    p: &Polynomial,
    epsilon: f64,
    config: &QuadratureConfig,
) -> Result<Complex64> {
    check_moment_degree(tau)?;
    let mut total = Compensated::new(Complex64::new(0.0, 0.0));
    for (degree, &coefficient) in p.coeffs().iter().enumerate() {
        if coefficient == Complex64::new(0.0, 0.0) {
            continue;
        }
        total.add(coefficient * contour_moment(degree as u32, tau, epsilon, config)?);
    }
    let normalization = std::f64::consts::PI.sqrt() * gamma(tau + 1.0)?;
    Ok(-total.sum / normalization)
}

fn check_loop_degree(tau: Complex64) -> Result<()> {
    if tau.im.abs() > OSCILLATION_LIMIT {
        return Err(Error::non_convergence(format!(
            "power exponent Im(tau) = {} oscillates beyond the supported band |Im| <= {OSCILLATION_LIMIT}",
            tau.im
        )));
    }
    Ok(())
}

/// Keyhole integral `int exp(exponent (ln|zeta| + i (arg + arg_shift)))
/// H_degree(zeta) e^{-zeta^2} dzeta`, with the branch of the power tracked
/// continuously along the loop. `arg_shift = -pi` turns the tracked
/// `zeta^exponent` into `(-zeta)^exponent` with the argument of `-zeta`
/// running from `-pi` to `pi`.
fn keyhole_integral(
    exponent: Complex64,
    degree: Complex64,
    arg_shift: f64,
    epsilon: f64,
    config: &QuadratureConfig,
) -> Result<Complex64> {
    let radius = config
        .truncation_radius()
        .unwrap_or_else(|| auto_truncation_radius(config.abs_tol(), exponent.re + degree.re));
    let path = keyhole_path(epsilon, radius)?;
    let eval = integrand_eval_config();
    let line_floor = weighted_noise_floor(&[(1.0, exponent.re)], degree.re, radius, &eval);
    let f = |zeta: Complex64, arg: f64| -> Result<Complex64> {
        let tracked_power =
            (exponent * Complex64::new(zeta.norm().ln(), arg + arg_shift)).exp();
        let h = hermite(degree, zeta, &eval)?;
        Ok(tracked_power * h * (-zeta * zeta).exp())
    };
    let mut total = Compensated::new(Complex64::new(0.0, 0.0));
    for segment in path.segments() {
        let floor = match segment {
            ContourSegment::Line { .. } => line_floor,
            ContourSegment::Arc { .. } => 0.0,
        };
        total.add(integrate_segment(&f, segment, config, floor)?);
    }
    Ok(total.sum)
}

/// `Gamma(tau + 1)` from the keyhole-loop representation
///
/// ```text
/// Gamma(tau + 1) = 2 / (sqrt(pi) (e^{2 pi i tau} - 1)) *
///                  int zeta^tau H_tau(zeta) e^{-zeta^2} dzeta,
/// ```
///
/// with `zeta^tau` branch-tracked from argument `0` on the inbound lip to
/// `2 pi` on the outbound lip. The integrand is holomorphic off the branch
/// cut, so the value is independent of the indentation radius. Integer
/// degrees make the divisor vanish and are rejected.
pub fn gamma_via_loop(
    tau: Complex64,
    epsilon: f64,
    config: &QuadratureConfig,
) -> Result<Complex64> {
    check_loop_degree(tau)?;
    let two_pi_i = Complex64::new(0.0, 2.0 * std::f64::consts::PI);
    let divisor = (two_pi_i * tau).exp() - 1.0;
    if divisor.norm() < DEGENERATE_DIVISOR {
        return Err(Error::domain(format!(
            "loop representation divides by e^(2 pi i tau) - 1, which vanishes at integer tau; got tau = {tau}"
        )));
    }
    let j = keyhole_integral(tau, tau, 0.0, epsilon, config)?;
    Ok(2.0 * j / (std::f64::consts::PI.sqrt() * divisor))
}

/// `Gamma(tau + 1)` from the sine-prefactor form of the keyhole loop:
///
/// ```text
/// Gamma(tau + 1) = 1 / (i sqrt(pi) sin(pi tau)) *
///                  int (-zeta)^tau H_tau(zeta) e^{-zeta^2} dzeta,
/// ```
///
/// where `(-zeta)^tau` carries the argument of `-zeta` from `-pi` to `pi`
/// along the loop. Integer degrees make the sine vanish and are rejected.
pub fn gamma_via_sine_form(
    tau: Complex64,
    epsilon: f64,
    config: &QuadratureConfig,
) -> Result<Complex64> {
    check_loop_degree(tau)?;
    let sine = (std::f64::consts::PI * tau).sin();
    if sine.norm() < DEGENERATE_DIVISOR {
        return Err(Error::domain(format!(
            "sine form divides by sin(pi tau), which vanishes at integer tau; got tau = {tau}"
        )));
    }
    let j = keyhole_integral(tau, tau, -std::f64::consts::PI, epsilon, config)?;
    Ok(j / (Complex64::new(0.0, 1.0) * std::f64::consts::PI.sqrt() * sine))
}

/// `1 / Gamma(tau + 1)` from the keyhole loop at reflected degree:
///
/// ```text
/// 1 / Gamma(tau + 1) = i pi^{-3/2} *
///                      int (-zeta)^{-1-tau} H_{-1-tau}(zeta) e^{-zeta^2} dzeta.
/// ```
///
/// Unlike the two direct representations this one has no vanishing
/// divisor, so it is valid for every degree, including the nonpositive
/// integers where the reciprocal itself is zero.
pub fn reciprocal_gamma_via_contour(
    tau: Complex64,
    epsilon: f64,
    config: &QuadratureConfig,
) -> Result<Complex64> {
    check_loop_degree(tau)?;
    let reflected = -1.0 - tau;
    let j = keyhole_integral(reflected, reflected, -std::f64::consts::PI, epsilon, config)?;
    Ok(Complex64::new(0.0, 1.0) * std::f64::consts::PI.powf(-1.5) * j)
}
