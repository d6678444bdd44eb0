//! Acceptance suite: one test per shipping criterion, each asserting the
//! pinned tolerance and printing a single pass line. Criteria cover the
//! moment identities, the functional-equation residual, Hermite-function
//! cross-validation, the weight-integral closed form, the integral pairing,
//! the contour moments, the four-way Gamma agreement, the quadrature-engine
//! oracles, and byte-identical deterministic reports.

use std::process::Command;

use hermitia::c64;
use hermitia::contour::{
    contour_moment, gamma_via_loop, gamma_via_sine_form, reciprocal_gamma_via_contour,
};
use hermitia::functional::{
    moment_via_relation, second_order_residual, GeneralizedHermiteFunctional, Polynomial,
};
use hermitia::gamma::{gamma, reciprocal_gamma};
use hermitia::hermite::{
    hermite, hermite_1f1_form, hermite_derivative, hermite_series, HermiteEvalConfig,
};
use hermitia::quadrature::{
    apply_via_quadrature, gamma_via_realline, hermite_weight_integral, tanh_sinh,
    weight_integral_closed_form, QuadratureConfig,
};
use hermitia::Complex64;

/// Half-line Gaussian integral `int_0^inf e^{-x^2} dx`.
#[allow(clippy::excessive_precision)]
const GAUSSIAN_HALFLINE: f64 = 0.886_226_925_452_758_013_65;
/// Endpoint-singular integral `int_0^inf x^{-1/2} e^{-x^2} dx`.
#[allow(clippy::excessive_precision)]
const INVERSE_SQRT_WEIGHT: f64 = 1.812_804_954_110_954_155_97;

fn degree_grid() -> Vec<Complex64> {
    vec![
        c64(-0.5, 0.0),
        c64(0.0, 0.0),
        c64(0.5, 0.0),
        c64(1.3, 0.0),
        c64(2.7, 0.0),
        c64(0.5, 0.5),
    ]
}

fn rel_err(got: Complex64, want: Complex64) -> f64 {
    (got - want).norm() / want.norm().max(f64::MIN_POSITIVE)
}

#[test]
fn criterion_1_moment_identities() {
    for tau in degree_grid() {
        let functional = GeneralizedHermiteFunctional::new(tau).unwrap();
        assert_eq!(
            functional.moment(0),
            c64(1.0, 0.0),
            "zeroth moment must be exactly one at tau={tau}"
        );
        for n in 0..=20 {
            let moment = functional.moment(n);
            if n % 2 == 1 {
                assert_eq!(
                    moment,
                    c64(0.0, 0.0),
                    "odd moment {n} must vanish exactly at tau={tau}"
                );
            }
            let via_relation = moment_via_relation(tau, n);
            assert!(
                rel_err(moment, via_relation) <= 1e-12,
                "moment {n} at tau={tau}: recursive {moment} vs shifted-factorial \
                 {via_relation} (rel {})",
                rel_err(moment, via_relation)
            );
        }
    }
    println!("criterion 1 (moment identities, n <= 20, rel 1e-12): PASS");
}

#[test]
fn criterion_2_functional_equation_residual() {
    for tau in degree_grid() {
        let functional = GeneralizedHermiteFunctional::new(tau).unwrap();
        for n in 0..=20 {
            let residual = second_order_residual(tau, n).norm();
            let bound =
                1e-11 * (n as f64 + tau.norm() + 2.0).powi(2) * functional.moment(n).norm().max(1.0);
            assert!(
                residual <= bound,
                "second-order residual at tau={tau}, n={n}: {residual:e} exceeds {bound:e}"
            );
        }
    }
    println!("criterion 2 (functional-equation residual, n <= 20): PASS");
}

#[test]
fn criterion_3_hermite_cross_validation() {
    let config = HermiteEvalConfig::default();
    let points = [0.1, 0.5, 1.0, 2.0];

    for tau in degree_grid() {
        // The power series is undefined at nonnegative integer degree, where
        // the function degenerates to the classical polynomial.
        let integer_degree = tau.im == 0.0 && tau.re.fract() == 0.0 && tau.re >= 0.0;
        for &x in &points {
            let z = c64(x, 0.0);

            if !integer_degree {
                let series = hermite_series(tau, z, config.series_tol()).unwrap();
                let confluent = hermite_1f1_form(tau, z, config.series_tol()).unwrap();
                assert!(
                    rel_err(series, confluent) <= 1e-12,
                    "series vs confluent at tau={tau}, x={x}: rel {}",
                    rel_err(series, confluent)
                );
            }

            let below = hermite(tau - 1.0, z, &config).unwrap();
            let center = hermite(tau, z, &config).unwrap();
            let above = hermite(tau + 1.0, z, &config).unwrap();
            let recurrence = above - 2.0 * z * center + 2.0 * tau * below;
            let recurrence_scale = above
                .norm()
                .max((2.0 * z * center).norm())
                .max((2.0 * tau * below).norm())
                .max(1.0);
            assert!(
                recurrence.norm() <= 1e-9 * recurrence_scale,
                "recurrence residual at tau={tau}, x={x}: {:e}",
                recurrence.norm() / recurrence_scale
            );

            let first = 2.0 * tau * below;
            let second = 4.0 * tau * (tau - 1.0) * hermite(tau - 2.0, z, &config).unwrap();
            let ode = second - 2.0 * z * first + 2.0 * tau * center;
            let ode_scale = second
                .norm()
                .max((2.0 * z * first).norm())
                .max((2.0 * tau * center).norm())
                .max(1.0);
            assert!(
                ode.norm() <= 1e-9 * ode_scale,
                "differential-equation residual at tau={tau}, x={x}: {:e}",
                ode.norm() / ode_scale
            );

            let h = 1e-5;
            let exact = hermite_derivative(tau, z, &config).unwrap();
            let plus = hermite(tau, z + h, &config).unwrap();
            let minus = hermite(tau, z - h, &config).unwrap();
            let difference = (plus - minus) / (2.0 * h);
            assert!(
                (exact - difference).norm() <= 1e-6,
                "derivative vs central difference at tau={tau}, x={x}: {:e}",
                (exact - difference).norm()
            );
        }
    }
    println!("criterion 3 (Hermite-function cross-validation): PASS");
}

#[test]
fn criterion_4_weight_integral_closed_form() {
    let config = QuadratureConfig::default();
    for tau_re in [-0.5, 0.5, 1.3, 2.7] {
        let tau = c64(tau_re, 0.0);
        for z_re in [0.0, 0.5, 1.0, 2.3, tau_re] {
            let z = c64(z_re, 0.0);
            let numeric = hermite_weight_integral(z, tau, &config).unwrap();
            let closed = weight_integral_closed_form(z, tau).unwrap();
            assert!(
                rel_err(numeric, closed) <= 1e-8,
                "weight integral at z={z_re}, tau={tau_re}: quadrature {numeric} vs \
                 closed form {closed} (rel {})",
                rel_err(numeric, closed)
            );
        }
    }
    println!("criterion 4 (weight-integral closed form, rel 1e-8): PASS");
}

#[test]
fn criterion_5_integral_pairing() {
    let config = QuadratureConfig::default();
    for tau in degree_grid() {
        assert!(tau.re > -1.0, "pairing requires Re(tau) > -1");
        let functional = GeneralizedHermiteFunctional::new(tau).unwrap();
        for degree in 0..=12 {
            let p = Polynomial::monomial(degree);
            let numeric = apply_via_quadrature(tau, &p, &config).unwrap();
            let exact = functional.apply(&p);
            assert!(
                rel_err(numeric, exact) <= 1e-8,
                "pairing of x^{degree} at tau={tau}: quadrature {numeric} vs exact \
                 {exact} (rel {})",
                rel_err(numeric, exact)
            );
        }
    }
    println!("criterion 5 (integral pairing, monomials to degree 12, rel 1e-8): PASS");
}

#[test]
fn criterion_6_contour_moments() {
    let config = QuadratureConfig::default();
    let epsilon = 0.1;
    for tau in degree_grid() {
        for n in [1u32, 3] {
            let moment = contour_moment(n, tau, epsilon, &config).unwrap();
            assert!(
                moment.norm() <= 1e-9,
                "odd contour moment {n} at tau={tau}: |{moment}| > 1e-9"
            );
        }
        for n in [0u32, 2, 4] {
            let moment = contour_moment(n, tau, epsilon, &config).unwrap();
            let mut half_factorial = 1.0;
            for k in 1..=(n / 2) {
                half_factorial *= k as f64;
            }
            let closed = -std::f64::consts::PI.sqrt() * gamma(tau + (n as f64 + 1.0)).unwrap()
                / (2f64.powi(n as i32) * half_factorial);
            assert!(
                rel_err(moment, closed) <= 1e-8,
                "even contour moment {n} at tau={tau}: {moment} vs {closed} (rel {})",
                rel_err(moment, closed)
            );
        }
        let values: Vec<Complex64> = [0.05, 0.1, 0.2]
            .iter()
            .map(|&r| contour_moment(2, tau, r, &config).unwrap())
            .collect();
        for i in 0..values.len() {
            for j in (i + 1)..values.len() {
                assert!(
                    (values[i] - values[j]).norm() <= 1e-9,
                    "contour moment 2 at tau={tau} depends on the indentation radius: \
                     {:e}",
                    (values[i] - values[j]).norm()
                );
            }
        }
    }
    println!("criterion 6 (contour moments and indentation independence): PASS");
}

#[test]
fn criterion_7_four_way_gamma() {
    let config = QuadratureConfig::default();
    let epsilon = 0.1;

    for tau_re in [-0.5, 0.3, 0.5, 1.3, 2.7] {
        let tau = c64(tau_re, 0.0);
        let routes = [
            ("half-line", gamma_via_realline(tau, &config).unwrap()),
            ("loop", gamma_via_loop(tau, epsilon, &config).unwrap()),
            ("sine", gamma_via_sine_form(tau, epsilon, &config).unwrap()),
            ("reference", gamma(tau + 1.0).unwrap()),
        ];
        for i in 0..routes.len() {
            for j in (i + 1)..routes.len() {
                let (name_i, value_i) = routes[i];
                let (name_j, value_j) = routes[j];
                assert!(
                    rel_err(value_i, value_j) <= 1e-7,
                    "{name_i} and {name_j} Gamma routes disagree at tau={tau_re}: \
                     {value_i} vs {value_j} (rel {})",
                    rel_err(value_i, value_j)
                );
            }
        }
    }

    for tau_re in [-0.5, 0.3, 0.5, 1.3, 2.7, 0.0, -1.0] {
        let tau = c64(tau_re, 0.0);
        let numeric = reciprocal_gamma_via_contour(tau, epsilon, &config).unwrap();
        let reference = reciprocal_gamma(tau + 1.0);
        assert!(
            (numeric - reference).norm() <= 1e-7 * reference.norm().max(1.0),
            "reciprocal route at tau={tau_re}: {numeric} vs {reference}"
        );
    }
    println!("criterion 7 (four-way Gamma agreement, rel 1e-7): PASS");
}

#[test]
fn criterion_8_engine_oracles() {
    let config = QuadratureConfig::default();

    let gaussian = tanh_sinh(|x| Ok(c64((-x * x).exp(), 0.0)), 0.0, 8.0, &config).unwrap();
    assert!(
        rel_err(gaussian, c64(GAUSSIAN_HALFLINE, 0.0)) <= 1e-12,
        "half-line Gaussian: {gaussian} (rel {})",
        rel_err(gaussian, c64(GAUSSIAN_HALFLINE, 0.0))
    );

    let singular = tanh_sinh(
        |x| Ok(c64(x.powf(-0.5) * (-x * x).exp(), 0.0)),
        0.0,
        8.0,
        &config,
    )
    .unwrap();
    assert!(
        rel_err(singular, c64(INVERSE_SQRT_WEIGHT, 0.0)) <= 1e-10,
        "endpoint-singular integral: {singular} (rel {})",
        rel_err(singular, c64(INVERSE_SQRT_WEIGHT, 0.0))
    );
    println!("criterion 8 (quadrature-engine oracles): PASS");
}

#[test]
fn criterion_9_deterministic_report() {
    let run = || {
        let output = Command::new(env!("CARGO_BIN_EXE_hermitia"))
            .args([
                "verify",
                "--suite",
                "all",
                "--deterministic",
                "--format",
                "json",
            ])
            .output()
            .expect("verification binary runs");
        assert!(
            output.status.success(),
            "verify exited with {:?}: {}",
            output.status.code(),
            String::from_utf8_lossy(&output.stderr)
        );
        output.stdout
    };
    let first = run();
    let second = run();
    assert!(!first.is_empty(), "report must not be empty");
    assert_eq!(first, second, "deterministic reports must be byte-identical");
    println!("criterion 9 (byte-identical deterministic reports): PASS");
}
