//! Identity-verification harness.
//!
//! Runs fixed suites of cross-validation checks over a grid of degrees
//! `tau`, comparing independent evaluation routes against each other and
//! against closed forms, and collects the outcomes into a serializable
//! report. Every check records both an absolute and a relative error and
//! passes when either one meets its tolerance; checks whose parameters fall
//! outside an identity's validity domain are recorded as skipped rather
//! than failed, and evaluation errors inside a valid domain are recorded as
//! failures carrying the error message.
//!
//! Report serialization has a stable key order and renders complex numbers
//! as `{"re": …, "im": …}` objects, so two runs with identical inputs
//! produce byte-identical JSON (modulo the optional wall-clock timestamp,
//! which is suppressed in deterministic mode).

use std::collections::BTreeMap;
use std::str::FromStr;
use std::time::{SystemTime, UNIX_EPOCH};

use num_complex::Complex64;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::c64;
use crate::contour::{
    apply_via_contour, contour_moment, gamma_via_loop, gamma_via_sine_form,
    reciprocal_gamma_via_contour,
};
use crate::error::{Error, Result};
use crate::functional::{
    first_order_residual_hermite, moment_via_relation, second_order_residual,
    GeneralizedHermiteFunctional, Polynomial,
};
use crate::gamma::{gamma, reciprocal_gamma};
use crate::hermite::{
    hermite, hermite_1f1_form, hermite_asymptotic, hermite_derivative, hermite_series,
    HermiteEvalConfig,
};
use crate::quadrature::{
    apply_via_quadrature, gamma_via_realline, hermite_weight_integral,
    hermite_weight_integral_fullline, tanh_sinh, weight_integral_closed_form, QuadratureConfig,
};

/// Half-line Gaussian integral `int_0^inf e^{-x^2} dx`.
#[allow(clippy::excessive_precision)]
const GAUSSIAN_HALFLINE: f64 = 0.886_226_925_452_758_013_65;
/// Endpoint-singular integral `int_0^inf x^{-1/2} e^{-x^2} dx`.
#[allow(clippy::excessive_precision)]
const INVERSE_SQRT_WEIGHT: f64 = 1.812_804_954_110_954_155_97;

/// Denominator guard for relative errors against a zero target.
const TINY: f64 = f64::MIN_POSITIVE;

/// The verification suites. `All` runs every suite in a fixed order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Moments,
    Hermite,
    RealLine,
    Contour,
    Gamma,
    All,
}

impl Suite {
    /// Stable lower-case name used in reports and on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Suite::Moments => "moments",
            Suite::Hermite => "hermite",
            Suite::RealLine => "realline",
            Suite::Contour => "contour",
            Suite::Gamma => "gamma",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "moments" => Ok(Suite::Moments),
            "hermite" => Ok(Suite::Hermite),
            "realline" => Ok(Suite::RealLine),
            "contour" => Ok(Suite::Contour),
            "gamma" => Ok(Suite::Gamma),
            "all" => Ok(Suite::All),
            other => Err(Error::domain(format!(
                "unknown suite '{other}'; expected one of \
                 moments|hermite|realline|contour|gamma|all"
            ))),
        }
    }
}

/// Outcome classification for a single check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Passed,
    Failed,
    Skipped,
}

/// One identity evaluated at one parameter point (or one aggregated family
/// of points, in which case the recorded values belong to the point closest
/// to failing).
#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    #[serde(
        serialize_with = "serialize_complex_option",
        skip_serializing_if = "Option::is_none"
    )]
    pub tau: Option<Complex64>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub parameters: BTreeMap<String, String>,
    #[serde(
        serialize_with = "serialize_complex_option",
        skip_serializing_if = "Option::is_none"
    )]
    pub lhs: Option<Complex64>,
    #[serde(
        serialize_with = "serialize_complex_option",
        skip_serializing_if = "Option::is_none"
    )]
    pub rhs: Option<Complex64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub abs_err: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rel_err: Option<f64>,
    pub tolerance: f64,
    pub status: CheckStatus,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

/// Tally of check outcomes; the counts always equal the sequence tallies.
#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

/// Snapshot of the numeric configuration a report was produced under.
#[derive(Clone, Debug, Serialize)]
pub struct ConfigSnapshot {
    pub tolerance: f64,
    pub epsilon: f64,
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub truncation_radius: Option<f64>,
    pub max_levels: usize,
}

/// Full result of a suite run.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub suite: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
    pub config: ConfigSnapshot,
    #[serde(serialize_with = "serialize_complex_vec")]
    pub tau_grid: Vec<Complex64>,
    pub summary: Summary,
    pub checks: Vec<IdentityCheck>,
}

/// Inputs to a suite run.
#[derive(Clone, Debug)]
pub struct VerifySettings {
    /// Degrees the per-degree checks run at.
    pub tau_grid: Vec<Complex64>,
    /// Tolerance for the cross-route comparison checks. Checks that pin a
    /// tighter (or exact) tolerance keep their own value.
    pub tolerance: f64,
    /// Indentation radius for the contour checks.
    pub epsilon: f64,
    /// Quadrature configuration shared by every integration check.
    pub quadrature: QuadratureConfig,
    /// Suppress the wall-clock timestamp so reports are byte-identical.
    pub deterministic: bool,
}

impl Default for VerifySettings {
    fn default() -> Self {
        Self {
            tau_grid: default_tau_grid(),
            tolerance: 1e-8,
            epsilon: 0.1,
            quadrature: QuadratureConfig::default(),
            deterministic: false,
        }
    }
}

/// Default degree grid: the singular-endpoint regime `Re(tau) < 0`, several
/// generic non-integer degrees, and one complex degree.
pub fn default_tau_grid() -> Vec<Complex64> {
    vec![
        c64(-0.5, 0.0),
        c64(0.3, 0.0),
        c64(0.5, 0.0),
        c64(1.3, 0.0),
        c64(2.7, 0.0),
        c64(0.5, 0.5),
    ]
}

fn serialize_complex<S: Serializer>(value: &Complex64, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    let mut out = serializer.serialize_struct("Complex", 2)?;
    out.serialize_field("re", &value.re)?;
    out.serialize_field("im", &value.im)?;
    out.end()
}

fn serialize_complex_option<S: Serializer>(
    value: &Option<Complex64>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    match value {
        Some(v) => serialize_complex(v, serializer),
        None => serializer.serialize_none(),
    }
}

fn serialize_complex_vec<S: Serializer>(
    values: &[Complex64],
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Repr {
        re: f64,
        im: f64,
    }
    serializer.collect_seq(values.iter().map(|v| Repr { re: v.re, im: v.im }))
}

/// Measured outcome of one successfully evaluated check.
struct CheckResult {
    lhs: Complex64,
    rhs: Complex64,
    abs_err: f64,
    rel_err: f64,
    parameters: BTreeMap<String, String>,
}

fn errors(lhs: Complex64, rhs: Complex64) -> (f64, f64) {
    let abs = (lhs - rhs).norm();
    let rel = abs / rhs.norm().max(TINY);
    (abs, rel)
}

/// Tracks, over a family of points, the point closest to failing — the one
/// whose better error arm is largest — so the recorded values still satisfy
/// the pass condition exactly when every point does.
struct Worst {
    result: Option<CheckResult>,
    score: f64,
}

impl Worst {
    fn new() -> Self {
        Self {
            result: None,
            score: -1.0,
        }
    }

    /// Direct lhs/rhs comparison at one point.
    fn update(&mut self, lhs: Complex64, rhs: Complex64, parameters: Vec<(String, String)>) {
        let (abs_err, rel_err) = errors(lhs, rhs);
        self.consider(abs_err.min(rel_err), lhs, rhs, abs_err, rel_err, parameters);
    }

    /// Residual-style point: `deviation` is the residual already divided by
    /// its scale bound, recorded as both error arms.
    fn update_normalized(
        &mut self,
        lhs: Complex64,
        rhs: Complex64,
        deviation: f64,
        parameters: Vec<(String, String)>,
    ) {
        self.consider(deviation, lhs, rhs, deviation, deviation, parameters);
    }

    fn consider(
        &mut self,
        score: f64,
        lhs: Complex64,
        rhs: Complex64,
        abs_err: f64,
        rel_err: f64,
        parameters: Vec<(String, String)>,
    ) {
        if score > self.score {
            self.score = score;
            self.result = Some(CheckResult {
                lhs,
                rhs,
                abs_err,
                rel_err,
                parameters: parameters.into_iter().collect(),
            });
        }
    }

    /// Returns the worst point, with `extra` parameters merged in.
    fn finish(self, extra: Vec<(String, String)>) -> CheckResult {
        let mut result = self
            .result
            .expect("check family evaluated at least one point");
        for (k, v) in extra {
            result.parameters.insert(k, v);
        }
        result
    }
}

fn domain_limited(error: &Error) -> bool {
    matches!(
        error,
        Error::Domain { .. }
            | Error::DegenerateDegree { .. }
            | Error::Pole { .. }
            | Error::ParameterPole { .. }
    )
}

fn record(
    checks: &mut Vec<IdentityCheck>,
    name: &str,
    tau: Option<Complex64>,
    tolerance: f64,
    outcome: Result<CheckResult>,
) {
    match outcome {
        Ok(result) => {
            let passed = result.abs_err <= tolerance || result.rel_err <= tolerance;
            checks.push(IdentityCheck {
                name: name.to_owned(),
                tau,
                parameters: result.parameters,
                lhs: Some(result.lhs),
                rhs: Some(result.rhs),
                abs_err: Some(result.abs_err),
                rel_err: Some(result.rel_err),
                tolerance,
                status: if passed {
                    CheckStatus::Passed
                } else {
                    CheckStatus::Failed
                },
                passed,
                reason: None,
            });
        }
        Err(error) => {
            let status = if domain_limited(&error) {
                CheckStatus::Skipped
            } else {
                CheckStatus::Failed
            };
            checks.push(IdentityCheck {
                name: name.to_owned(),
                tau,
                parameters: BTreeMap::new(),
                lhs: None,
                rhs: None,
                abs_err: None,
                rel_err: None,
                tolerance,
                status,
                passed: false,
                reason: Some(error.to_string()),
            });
        }
    }
}

fn param(key: &str, value: impl std::fmt::Display) -> (String, String) {
    (key.to_owned(), value.to_string())
}

/// Runs one suite over the settings' degree grid and assembles the report.
pub fn run_suite(suite: Suite, settings: &VerifySettings) -> IdentityReport {
    let mut checks = Vec::new();
    match suite {
        Suite::Moments => moments_suite(settings, &mut checks),
        Suite::Hermite => hermite_suite(settings, &mut checks),
        Suite::RealLine => realline_suite(settings, &mut checks),
        Suite::Contour => contour_suite(settings, &mut checks),
        Suite::Gamma => gamma_suite(settings, &mut checks),
        Suite::All => {
            moments_suite(settings, &mut checks);
            hermite_suite(settings, &mut checks);
            realline_suite(settings, &mut checks);
            contour_suite(settings, &mut checks);
            gamma_suite(settings, &mut checks);
        }
    }

    let mut summary = Summary {
        total: checks.len(),
        ..Summary::default()
    };
    for check in &checks {
        match check.status {
            CheckStatus::Passed => summary.passed += 1,
            CheckStatus::Failed => summary.failed += 1,
            CheckStatus::Skipped => summary.skipped += 1,
        }
    }

    let timestamp = if settings.deterministic {
        None
    } else {
        Some(
            SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .unwrap_or_default()
                .as_secs(),
        )
    };

    IdentityReport {
        suite: suite.name().to_owned(),
        timestamp,
        config: ConfigSnapshot {
            tolerance: settings.tolerance,
            epsilon: settings.epsilon,
            rel_tol: settings.quadrature.rel_tol(),
            abs_tol: settings.quadrature.abs_tol(),
            truncation_radius: settings.quadrature.truncation_radius(),
            max_levels: settings.quadrature.max_levels(),
        },
        tau_grid: settings.tau_grid.clone(),
        summary,
        checks,
    }
}

// ---------------------------------------------------------------------------
// moments suite
// ---------------------------------------------------------------------------

fn moments_suite(settings: &VerifySettings, checks: &mut Vec<IdentityCheck>) {
    const NAMES: [&str; 4] = [
        "moment_zero_is_one",
        "odd_moments_vanish",
        "moments_match_shifted_factorial_form",
        "second_order_moment_residual",
    ];

    for &tau in &settings.tau_grid {
        let functional = match GeneralizedHermiteFunctional::new(tau) {
            Ok(f) => f,
            Err(error) => {
                for name in NAMES {
                    record(checks, name, Some(tau), settings.tolerance, Err(error.clone()));
                }
                continue;
            }
        };

        record(
            checks,
            NAMES[0],
            Some(tau),
            1e-15,
            Ok({
                let lhs = functional.moment(0);
                let rhs = c64(1.0, 0.0);
                let (abs_err, rel_err) = errors(lhs, rhs);
                CheckResult {
                    lhs,
                    rhs,
                    abs_err,
                    rel_err,
                    parameters: BTreeMap::new(),
                }
            }),
        );

        let mut worst = Worst::new();
        for n in (1..=19).step_by(2) {
            worst.update(functional.moment(n), c64(0.0, 0.0), vec![param("n", n)]);
        }
        record(
            checks,
            NAMES[1],
            Some(tau),
            0.0,
            Ok(worst.finish(vec![param("n_max", 19)])),
        );

        let mut worst = Worst::new();
        for n in 0..=20 {
            worst.update(
                functional.moment(n),
                moment_via_relation(tau, n),
                vec![param("n", n)],
            );
        }
        record(
            checks,
            NAMES[2],
            Some(tau),
            1e-12,
            Ok(worst.finish(vec![param("n_max", 20)])),
        );

        let mut worst = Worst::new();
        for n in 0..=20 {
            let residual = second_order_residual(tau, n);
            let magnitude = functional.moment(n).norm().max(1.0);
            let scale = (n as f64 + tau.norm() + 2.0).powi(2) * magnitude;
            worst.update_normalized(
                residual,
                c64(0.0, 0.0),
                residual.norm() / scale,
                vec![param("n", n)],
            );
        }
        record(
            checks,
            NAMES[3],
            Some(tau),
            1e-11,
            Ok(worst.finish(vec![param("n_max", 20), param("normalization", "(n+|tau|+2)^2 max(1,|m_n|)")])),
        );
    }

    let mut worst = Worst::new();
    for n in 1..=19 {
        let residual = first_order_residual_hermite(n);
        worst.update(c64(residual, 0.0), c64(0.0, 0.0), vec![param("n", n)]);
    }
    record(
        checks,
        "first_order_residual_at_degree_zero",
        Some(c64(0.0, 0.0)),
        0.0,
        Ok(worst.finish(vec![param("n_max", 19)])),
    );
}

// ---------------------------------------------------------------------------
// hermite suite
// ---------------------------------------------------------------------------

const HERMITE_X_GRID: [f64; 4] = [0.1, 0.5, 1.0, 2.0];

fn hermite_suite(settings: &VerifySettings, checks: &mut Vec<IdentityCheck>) {
    let cfg = HermiteEvalConfig::default();
    let grid_note = param("x_grid", "0.1,0.5,1,2");

    for &tau in &settings.tau_grid {
        let outcome = (|| {
            let mut worst = Worst::new();
            for &x in &HERMITE_X_GRID {
                let z = c64(x, 0.0);
                let series = hermite_series(tau, z, cfg.series_tol())?;
                let confluent = hermite_1f1_form(tau, z, cfg.series_tol())?;
                worst.update(series, confluent, vec![param("x", x)]);
            }
            Ok(worst.finish(vec![grid_note.clone()]))
        })();
        record(
            checks,
            "confluent_form_matches_power_series",
            Some(tau),
            1e-12,
            outcome,
        );

        let outcome = (|| {
            let mut worst = Worst::new();
            for &x in &HERMITE_X_GRID {
                let z = c64(x, 0.0);
                let below = hermite(tau - 1.0, z, &cfg)?;
                let center = hermite(tau, z, &cfg)?;
                let above = hermite(tau + 1.0, z, &cfg)?;
                let residual = above - 2.0 * z * center + 2.0 * tau * below;
                let scale = (above.norm())
                    .max((2.0 * z * center).norm())
                    .max((2.0 * tau * below).norm())
                    .max(1.0);
                worst.update_normalized(
                    residual,
                    c64(0.0, 0.0),
                    residual.norm() / scale,
                    vec![param("x", x)],
                );
            }
            Ok(worst.finish(vec![grid_note.clone()]))
        })();
        record(
            checks,
            "three_term_recurrence_residual",
            Some(tau),
            1e-9,
            outcome,
        );

        let outcome = (|| {
            let mut worst = Worst::new();
            for &x in &HERMITE_X_GRID {
                let z = c64(x, 0.0);
                let value = hermite(tau, z, &cfg)?;
                let first = 2.0 * tau * hermite(tau - 1.0, z, &cfg)?;
                let second = 4.0 * tau * (tau - 1.0) * hermite(tau - 2.0, z, &cfg)?;
                let residual = second - 2.0 * z * first + 2.0 * tau * value;
                let scale = (second.norm())
                    .max((2.0 * z * first).norm())
                    .max((2.0 * tau * value).norm())
                    .max(1.0);
                worst.update_normalized(
                    residual,
                    c64(0.0, 0.0),
                    residual.norm() / scale,
                    vec![param("x", x)],
                );
            }
            Ok(worst.finish(vec![grid_note.clone()]))
        })();
        record(
            checks,
            "differential_equation_residual",
            Some(tau),
            1e-9,
            outcome,
        );

        let outcome = (|| {
            let h = 1e-5;
            let mut worst = Worst::new();
            for &x in &HERMITE_X_GRID {
                let z = c64(x, 0.0);
                let exact = hermite_derivative(tau, z, &cfg)?;
                let plus = hermite(tau, z + h, &cfg)?;
                let minus = hermite(tau, z - h, &cfg)?;
                let difference = (plus - minus) / (2.0 * h);
                worst.update(exact, difference, vec![param("x", x)]);
            }
            Ok(worst.finish(vec![grid_note.clone(), param("h", "1e-5")]))
        })();
        record(
            checks,
            "derivative_matches_central_difference",
            Some(tau),
            1e-6,
            outcome,
        );

        let outcome = (|| {
            let confluent = hermite_1f1_form(tau, c64(4.0, 0.0), cfg.series_tol())?;
            let expansion = hermite_asymptotic(tau, 4.0, 30)?;
            let (abs_err, rel_err) = errors(expansion, confluent);
            Ok(CheckResult {
                lhs: expansion,
                rhs: confluent,
                abs_err,
                rel_err,
                parameters: [param("x", 4)].into_iter().collect(),
            })
        })();
        record(
            checks,
            "expansion_overlaps_confluent_form",
            Some(tau),
            1e-6,
            outcome,
        );

        let outcome = (|| {
            let short = hermite_asymptotic(tau, 15.0, 10)?;
            let long = hermite_asymptotic(tau, 15.0, 30)?;
            let (abs_err, rel_err) = errors(short, long);
            Ok(CheckResult {
                lhs: short,
                rhs: long,
                abs_err,
                rel_err,
                parameters: [param("x", 15), param("terms", "10 vs 30")]
                    .into_iter()
                    .collect(),
            })
        })();
        record(
            checks,
            "expansion_order_converged",
            Some(tau),
            1e-12,
            outcome,
        );
    }
}

// ---------------------------------------------------------------------------
// realline suite
// ---------------------------------------------------------------------------

fn realline_suite(settings: &VerifySettings, checks: &mut Vec<IdentityCheck>) {
    let quadrature = &settings.quadrature;

    for &tau in &settings.tau_grid {
        let outcome = (|| {
            let mut worst = Worst::new();
            let z_grid = [c64(0.0, 0.0), c64(0.5, 0.0), c64(1.0, 0.0), c64(2.3, 0.0), tau];
            for &z in &z_grid {
                let numeric = hermite_weight_integral(z, tau, quadrature)?;
                let closed = weight_integral_closed_form(z, tau)?;
                worst.update(numeric, closed, vec![param("z", z)]);
            }
            Ok(worst.finish(vec![param("z_grid", "0,0.5,1,2.3,tau")]))
        })();
        record(
            checks,
            "weight_integral_matches_closed_form",
            Some(tau),
            settings.tolerance,
            outcome,
        );

        let outcome = (|| {
            let z = c64(0.5, 0.0);
            let full = hermite_weight_integral_fullline(z, tau, quadrature)?;
            let half = hermite_weight_integral(z, tau, quadrature)?;
            let doubled = 2.0 * half;
            let (abs_err, rel_err) = errors(full, doubled);
            Ok(CheckResult {
                lhs: full,
                rhs: doubled,
                abs_err,
                rel_err,
                parameters: [param("z", 0.5)].into_iter().collect(),
            })
        })();
        record(
            checks,
            "fullline_integral_is_twice_halfline",
            Some(tau),
            0.0,
            outcome,
        );

        let outcome = (|| {
            let functional = GeneralizedHermiteFunctional::new(tau)?;
            let mut worst = Worst::new();
            for degree in 0..=12 {
                let p = Polynomial::monomial(degree);
                let numeric = apply_via_quadrature(tau, &p, quadrature)?;
                let exact = functional.apply(&p);
                worst.update(numeric, exact, vec![param("polynomial", format!("x^{degree}"))]);
            }
            let mixed = Polynomial::from_real(&[0.7, 0.0, -1.3, 0.0, 0.25, 0.0, 0.5]);
            let numeric = apply_via_quadrature(tau, &mixed, quadrature)?;
            let exact = functional.apply(&mixed);
            worst.update(numeric, exact, vec![param("polynomial", "mixed degree 6")]);
            Ok(worst.finish(vec![param("degree_max", 12)]))
        })();
        record(
            checks,
            "quadrature_pairing_matches_functional",
            Some(tau),
            settings.tolerance,
            outcome,
        );
    }

    let outcome = (|| {
        let numeric = tanh_sinh(
            |x| Ok(c64((-x * x).exp(), 0.0)),
            0.0,
            8.0,
            quadrature,
        )?;
        let reference = c64(GAUSSIAN_HALFLINE, 0.0);
        let (abs_err, rel_err) = errors(numeric, reference);
        Ok(CheckResult {
            lhs: numeric,
            rhs: reference,
            abs_err,
            rel_err,
            parameters: [param("integrand", "exp(-x^2) on (0, 8)")].into_iter().collect(),
        })
    })();
    record(checks, "gaussian_halfline_integral", None, 1e-12, outcome);

    let outcome = (|| {
        let numeric = tanh_sinh(
            |x| Ok(c64(x.powf(-0.5) * (-x * x).exp(), 0.0)),
            0.0,
            8.0,
            quadrature,
        )?;
        let reference = c64(INVERSE_SQRT_WEIGHT, 0.0);
        let (abs_err, rel_err) = errors(numeric, reference);
        Ok(CheckResult {
            lhs: numeric,
            rhs: reference,
            abs_err,
            rel_err,
            parameters: [param("integrand", "x^{-1/2} exp(-x^2) on (0, 8)")]
                .into_iter()
                .collect(),
        })
    })();
    record(checks, "inverse_sqrt_weight_integral", None, 1e-10, outcome);

    for (tau, z) in [(c64(2.0, 0.0), c64(0.0, 0.0)), (c64(3.0, 0.0), c64(1.0, 0.0))] {
        let outcome = (|| {
            let numeric = hermite_weight_integral(z, tau, quadrature)?;
            let (abs_err, rel_err) = errors(numeric, c64(0.0, 0.0));
            Ok(CheckResult {
                lhs: numeric,
                rhs: c64(0.0, 0.0),
                abs_err,
                rel_err,
                parameters: [param("z", z)].into_iter().collect(),
            })
        })();
        record(
            checks,
            "integer_degree_orthogonality",
            Some(tau),
            1e-10,
            outcome,
        );
    }
}

// ---------------------------------------------------------------------------
// contour suite
// ---------------------------------------------------------------------------

fn contour_suite(settings: &VerifySettings, checks: &mut Vec<IdentityCheck>) {
    let quadrature = &settings.quadrature;
    let epsilon = settings.epsilon;

    for &tau in &settings.tau_grid {
        let outcome = (|| {
            let mut worst = Worst::new();
            for n in [1u32, 3] {
                let moment = contour_moment(n, tau, epsilon, quadrature)?;
                worst.update(moment, c64(0.0, 0.0), vec![param("n", n)]);
            }
            Ok(worst.finish(vec![]))
        })();
        record(
            checks,
            "odd_contour_moments_vanish",
            Some(tau),
            1e-9,
            outcome,
        );

        let outcome = (|| {
            let mut worst = Worst::new();
            for n in [0u32, 2, 4] {
                let moment = contour_moment(n, tau, epsilon, quadrature)?;
                let half = (n / 2) as usize;
                let mut half_factorial = 1.0;
                for k in 1..=half {
                    half_factorial *= k as f64;
                }
                let closed = -std::f64::consts::PI.sqrt()
                    * gamma(tau + (n as f64 + 1.0))?
                    / (2f64.powi(n as i32) * half_factorial);
                worst.update(moment, closed, vec![param("n", n)]);
            }
            Ok(worst.finish(vec![]))
        })();
        record(
            checks,
            "even_contour_moments_match_closed_form",
            Some(tau),
            settings.tolerance,
            outcome,
        );

        let outcome = (|| {
            let radii = [0.05, 0.1, 0.2];
            let mut values = Vec::with_capacity(radii.len());
            for &r in &radii {
                values.push(contour_moment(2, tau, r, quadrature)?);
            }
            let mut worst = Worst::new();
            for i in 0..values.len() {
                for j in (i + 1)..values.len() {
                    worst.update(
                        values[i],
                        values[j],
                        vec![param("epsilon_pair", format!("{} vs {}", radii[i], radii[j]))],
                    );
                }
            }
            Ok(worst.finish(vec![param("n", 2)]))
        })();
        record(
            checks,
            "contour_moment_indentation_stability",
            Some(tau),
            1e-9,
            outcome,
        );

        let outcome = (|| {
            let functional = GeneralizedHermiteFunctional::new(tau)?;
            let mut worst = Worst::new();
            for degree in [0usize, 2, 6] {
                let p = Polynomial::monomial(degree);
                let numeric = apply_via_contour(tau, &p, epsilon, quadrature)?;
                let exact = functional.apply(&p);
                worst.update(numeric, exact, vec![param("polynomial", format!("x^{degree}"))]);
            }
            let mixed = Polynomial::from_real(&[0.7, 0.0, -1.3, 0.0, 0.25, 0.0, 0.5]);
            let numeric = apply_via_contour(tau, &mixed, epsilon, quadrature)?;
            let exact = functional.apply(&mixed);
            worst.update(numeric, exact, vec![param("polynomial", "mixed degree 6")]);
            Ok(worst.finish(vec![]))
        })();
        record(
            checks,
            "contour_pairing_matches_functional",
            Some(tau),
            settings.tolerance,
            outcome,
        );
    }

    let outcome = (|| {
        let tau = c64(1.3, 0.0);
        let narrow = QuadratureConfig::new(
            quadrature.rel_tol(),
            quadrature.abs_tol(),
            Some(9.0),
            quadrature.max_levels(),
        )?;
        let wide = QuadratureConfig::new(
            quadrature.rel_tol(),
            quadrature.abs_tol(),
            Some(12.0),
            quadrature.max_levels(),
        )?;
        let lhs = contour_moment(2, tau, settings.epsilon, &narrow)?;
        let rhs = contour_moment(2, tau, settings.epsilon, &wide)?;
        let (abs_err, rel_err) = errors(lhs, rhs);
        Ok(CheckResult {
            lhs,
            rhs,
            abs_err,
            rel_err,
            parameters: [param("n", 2), param("radius_pair", "9 vs 12")]
                .into_iter()
                .collect(),
        })
    })();
    record(
        checks,
        "contour_moment_truncation_stability",
        Some(c64(1.3, 0.0)),
        1e-10,
        outcome,
    );

    let outcome = (|| {
        let tau = c64(1.3, 0.0);
        let radii = [0.05, 0.1, 0.2];
        let mut values = Vec::with_capacity(radii.len());
        for &r in &radii {
            values.push(gamma_via_loop(tau, r, quadrature)?);
        }
        let mut worst = Worst::new();
        for i in 0..values.len() {
            for j in (i + 1)..values.len() {
                worst.update(
                    values[i],
                    values[j],
                    vec![param("epsilon_pair", format!("{} vs {}", radii[i], radii[j]))],
                );
            }
        }
        Ok(worst.finish(vec![]))
    })();
    record(
        checks,
        "keyhole_loop_indentation_stability",
        Some(c64(1.3, 0.0)),
        1e-9,
        outcome,
    );
}

// ---------------------------------------------------------------------------
// gamma suite
// ---------------------------------------------------------------------------

fn gamma_suite(settings: &VerifySettings, checks: &mut Vec<IdentityCheck>) {
    let quadrature = &settings.quadrature;
    let epsilon = settings.epsilon;

    for &tau in &settings.tau_grid {
        let outcome = (|| {
            let value = gamma_via_realline(tau, quadrature)?;
            let reference = gamma(tau + 1.0)?;
            let (abs_err, rel_err) = errors(value, reference);
            Ok(CheckResult {
                lhs: value,
                rhs: reference,
                abs_err,
                rel_err,
                parameters: BTreeMap::new(),
            })
        })();
        record(
            checks,
            "half_line_integral_gamma",
            Some(tau),
            settings.tolerance,
            outcome,
        );

        let outcome = (|| {
            let value = gamma_via_loop(tau, epsilon, quadrature)?;
            let reference = gamma(tau + 1.0)?;
            let (abs_err, rel_err) = errors(value, reference);
            Ok(CheckResult {
                lhs: value,
                rhs: reference,
                abs_err,
                rel_err,
                parameters: BTreeMap::new(),
            })
        })();
        record(
            checks,
            "keyhole_loop_gamma",
            Some(tau),
            settings.tolerance,
            outcome,
        );

        let outcome = (|| {
            let value = gamma_via_sine_form(tau, epsilon, quadrature)?;
            let reference = gamma(tau + 1.0)?;
            let (abs_err, rel_err) = errors(value, reference);
            Ok(CheckResult {
                lhs: value,
                rhs: reference,
                abs_err,
                rel_err,
                parameters: BTreeMap::new(),
            })
        })();
        record(
            checks,
            "sine_form_gamma",
            Some(tau),
            settings.tolerance,
            outcome,
        );

        let outcome = (|| {
            let value = reciprocal_gamma_via_contour(tau, epsilon, quadrature)?;
            let reference = reciprocal_gamma(tau + 1.0);
            let (abs_err, rel_err) = errors(value, reference);
            Ok(CheckResult {
                lhs: value,
                rhs: reference,
                abs_err,
                rel_err,
                parameters: BTreeMap::new(),
            })
        })();
        record(
            checks,
            "reciprocal_contour_gamma",
            Some(tau),
            settings.tolerance,
            outcome,
        );
    }
}
