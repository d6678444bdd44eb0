//! Command-line front end: evaluate Hermite functions of arbitrary complex
//! degree, print moment sequences, apply the moment functional through its
//! independent routes, compute Gamma through the integral representations,
//! and run the identity-verification suites.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use hermitia::contour::{
    apply_via_contour, gamma_via_loop, gamma_via_sine_form, reciprocal_gamma_via_contour,
};
use hermitia::functional::{GeneralizedHermiteFunctional, Polynomial};
use hermitia::gamma::{gamma, reciprocal_gamma};
use hermitia::hermite::{
    hermite, hermite_1f1_form, hermite_asymptotic, hermite_series, HermiteEvalConfig,
};
use hermitia::quadrature::{apply_via_quadrature, gamma_via_realline, QuadratureConfig};
use hermitia::verify::{run_suite, Suite, VerifySettings};
use hermitia::Error;

const DEFAULT_VERIFY_TOLERANCE: f64 = 1e-8;
const TOLERANCE_ENV_VAR: &str = "HERMITIA_DEFAULT_TOL";

#[derive(Parser)]
#[command(
    name = "hermitia",
    version,
    about = "Hermite functions of arbitrary complex degree, their moment \
             functional, and cross-validated integral representations"
)]
struct Cli {
    /// Relative tolerance for quadrature refinement.
    #[arg(long, global = true, default_value_t = 1e-10)]
    rel_tol: f64,

    /// Absolute tolerance for quadrature refinement.
    #[arg(long, global = true, default_value_t = 1e-14)]
    abs_tol: f64,

    /// Contour indentation radius.
    #[arg(long, global = true, default_value_t = 0.1)]
    epsilon: f64,

    /// Integration truncation radius: "auto" or a positive number.
    #[arg(long, global = true, default_value = "auto")]
    radius: String,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the Hermite function H_tau at a point.
    Eval {
        /// Degree tau, as re or re,im.
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        tau: Complex64,
        /// Evaluation point, as re or re,im.
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        x: Complex64,
        /// Evaluation route.
        #[arg(long, value_enum, default_value_t = EvalMethod::Auto)]
        method: EvalMethod,
    },
    /// Print the moment sequence of the functional of degree tau.
    Moments {
        /// Degree tau, as re or re,im.
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        tau: Complex64,
        /// Largest moment order to print.
        #[arg(long)]
        max_n: usize,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Apply the moment functional to a polynomial.
    Apply {
        /// Degree tau, as re or re,im.
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        tau: Complex64,
        /// Comma-separated real coefficients c0,c1,...
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Evaluation route.
        #[arg(long, value_enum, default_value_t = ApplyRoute::Moments)]
        via: ApplyRoute,
    },
    /// Compute Gamma(tau+1) (or its reciprocal) by an integral route and
    /// report the deviation from the reference value.
    Gamma {
        /// Degree tau, as re or re,im.
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        tau: Complex64,
        /// Integral representation to use.
        #[arg(long, value_enum)]
        method: GammaMethod,
    },
    /// Run an identity-verification suite and print the report.
    Verify {
        /// Suite to run.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Semicolon-separated degree list, entries re or re,im.
        #[arg(long, allow_hyphen_values = true)]
        tau_grid: Option<String>,
        /// Tolerance for the cross-route comparison checks.
        #[arg(long)]
        tol: Option<f64>,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Suppress the timestamp so repeated runs are byte-identical.
        #[arg(long)]
        deterministic: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EvalMethod {
    Auto,
    Series,
    #[value(name = "1f1")]
    Confluent,
    Asymptotic,
}

#[derive(Clone, Copy, ValueEnum)]
enum ApplyRoute {
    Moments,
    Quadrature,
    Contour,
}

#[derive(Clone, Copy, ValueEnum)]
enum GammaMethod {
    Realline,
    Loop,
    Sine,
    Reciprocal,
    Reference,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let mut parts = s.splitn(2, ',');
    let re: f64 = parts
        .next()
        .unwrap_or_default()
        .trim()
        .parse()
        .map_err(|_| format!("invalid real part in '{s}'"))?;
    let im: f64 = match parts.next() {
        Some(text) => text
            .trim()
            .parse()
            .map_err(|_| format!("invalid imaginary part in '{s}'"))?,
        None => 0.0,
    };
    Ok(Complex64::new(re, im))
}

fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im.is_sign_negative() {
        format!("{}{}i", z.re, z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

/// Writes to stdout, exiting quietly if the receiving end of a pipe has
/// closed (as under `hermitia ... | head`).
fn write_stdout(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if out.write_all(text.as_bytes()).is_err() {
        std::process::exit(0);
    }
}

/// Exit status 2: bad arguments or configuration.
struct UsageError(String);
/// Exit status 1: evaluation failed or a verification check failed.
struct RunFailure(Option<String>);

enum CliError {
    Usage(UsageError),
    Run(RunFailure),
}

impl From<Error> for CliError {
    fn from(error: Error) -> Self {
        CliError::Run(RunFailure(Some(error.to_string())))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Run(RunFailure(message))) => {
            if let Some(message) = message {
                eprintln!("error: {message}");
            }
            ExitCode::from(1)
        }
        Err(CliError::Usage(UsageError(message))) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn execute(cli: Cli) -> Result<(), CliError> {
    let quadrature = build_quadrature(&cli)?;
    let epsilon = cli.epsilon;

    match cli.command {
        Command::Eval { tau, x, method } => {
            let config = HermiteEvalConfig::default();
            let value = match method {
                EvalMethod::Auto => hermite(tau, x, &config)?,
                EvalMethod::Series => hermite_series(tau, x, config.series_tol())?,
                EvalMethod::Confluent => hermite_1f1_form(tau, x, config.series_tol())?,
                EvalMethod::Asymptotic => {
                    if x.im != 0.0 {
                        return Err(CliError::Usage(UsageError(
                            "the asymptotic route requires a real evaluation point".into(),
                        )));
                    }
                    hermite_asymptotic(tau, x.re, config.asymptotic_terms())?
                }
            };
            write_stdout(&format!("{}\n", format_complex(value)));
        }
        Command::Moments { tau, max_n, format } => {
            let functional = GeneralizedHermiteFunctional::new(tau)?;
            #[derive(Serialize)]
            struct MomentRow {
                n: usize,
                re: f64,
                im: f64,
            }
            let rows: Vec<MomentRow> = (0..=max_n)
                .map(|n| {
                    let value = functional.moment(n);
                    MomentRow {
                        n,
                        re: value.re,
                        im: value.im,
                    }
                })
                .collect();
            match format {
                Format::Json => write_stdout(&format!(
                    "{}\n",
                    serde_json::to_string_pretty(&rows).expect("moment rows serialize")
                )),
                Format::Csv => {
                    let mut out = String::from("n,re,im\n");
                    for row in rows {
                        out.push_str(&format!("{},{},{}\n", row.n, row.re, row.im));
                    }
                    write_stdout(&out);
                }
            }
        }
        Command::Apply { tau, poly, via } => {
            let coeffs = parse_coefficients(&poly)?;
            let p = Polynomial::from_real(&coeffs);
            let value = match via {
                ApplyRoute::Moments => GeneralizedHermiteFunctional::new(tau)?.apply(&p),
                ApplyRoute::Quadrature => apply_via_quadrature(tau, &p, &quadrature)?,
                ApplyRoute::Contour => apply_via_contour(tau, &p, epsilon, &quadrature)?,
            };
            write_stdout(&format!("{}\n", format_complex(value)));
        }
        Command::Gamma { tau, method } => {
            let (value, reference) = match method {
                GammaMethod::Realline => (gamma_via_realline(tau, &quadrature)?, gamma(tau + 1.0)?),
                GammaMethod::Loop => (gamma_via_loop(tau, epsilon, &quadrature)?, gamma(tau + 1.0)?),
                GammaMethod::Sine => (
                    gamma_via_sine_form(tau, epsilon, &quadrature)?,
                    gamma(tau + 1.0)?,
                ),
                GammaMethod::Reciprocal => (
                    reciprocal_gamma_via_contour(tau, epsilon, &quadrature)?,
                    reciprocal_gamma(tau + 1.0),
                ),
                GammaMethod::Reference => {
                    let value = gamma(tau + 1.0)?;
                    (value, value)
                }
            };
            write_stdout(&format!(
                "value     = {}\nreference = {}\nabs diff  = {:e}\n",
                format_complex(value),
                format_complex(reference),
                (value - reference).norm()
            ));
        }
        Command::Verify {
            suite,
            tau_grid,
            tol,
            format,
            deterministic,
        } => {
            let suite: Suite = suite
                .parse()
                .map_err(|e: Error| CliError::Usage(UsageError(e.to_string())))?;
            let tolerance = resolve_tolerance(tol)?;
            let grid = match tau_grid {
                Some(text) => parse_tau_grid(&text)?,
                None => hermitia::verify::default_tau_grid(),
            };
            if grid.is_empty() {
                return Err(CliError::Usage(UsageError(
                    "the degree grid must not be empty".into(),
                )));
            }
            let settings = VerifySettings {
                tau_grid: grid,
                tolerance,
                epsilon,
                quadrature,
                deterministic,
            };
            let report = run_suite(suite, &settings);
            match format {
                Format::Json => write_stdout(&format!(
                    "{}\n",
                    serde_json::to_string_pretty(&report).expect("report serializes")
                )),
                Format::Csv => write_stdout(&report_to_csv(&report)),
            }
            eprintln!(
                "suite '{}': {} checks, {} passed, {} failed, {} skipped",
                report.suite,
                report.summary.total,
                report.summary.passed,
                report.summary.failed,
                report.summary.skipped
            );
            if report.summary.failed > 0 {
                return Err(CliError::Run(RunFailure(None)));
            }
        }
    }
    Ok(())
}

fn build_quadrature(cli: &Cli) -> Result<QuadratureConfig, CliError> {
    let radius = match cli.radius.trim() {
        "auto" => None,
        text => Some(text.parse::<f64>().map_err(|_| {
            CliError::Usage(UsageError(format!(
                "--radius expects 'auto' or a number; got '{text}'"
            )))
        })?),
    };
    QuadratureConfig::new(cli.rel_tol, cli.abs_tol, radius, 12)
        .map_err(|e| CliError::Usage(UsageError(e.to_string())))
}

fn resolve_tolerance(flag: Option<f64>) -> Result<f64, CliError> {
    if let Some(value) = flag {
        return Ok(value);
    }
    match std::env::var(TOLERANCE_ENV_VAR) {
        Ok(text) => text.trim().parse::<f64>().map_err(|_| {
            CliError::Usage(UsageError(format!(
                "{TOLERANCE_ENV_VAR} must be a number; got '{text}'"
            )))
        }),
        Err(_) => Ok(DEFAULT_VERIFY_TOLERANCE),
    }
}

fn parse_coefficients(text: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(|part| {
            part.trim().parse::<f64>().map_err(|_| {
                CliError::Usage(UsageError(format!(
                    "invalid polynomial coefficient '{}'",
                    part.trim()
                )))
            })
        })
        .collect()
}

fn parse_tau_grid(text: &str) -> Result<Vec<Complex64>, CliError> {
    text.split(';')
        .filter(|part| !part.trim().is_empty())
        .map(|part| {
            parse_complex(part.trim()).map_err(|message| CliError::Usage(UsageError(message)))
        })
        .collect()
}

fn report_to_csv(report: &hermitia::verify::IdentityReport) -> String {
    let mut out = String::from("name,tau_re,tau_im,abs_err,rel_err,passed\n");
    for check in &report.checks {
        let (tau_re, tau_im) = match check.tau {
            Some(tau) => (tau.re.to_string(), tau.im.to_string()),
            None => (String::new(), String::new()),
        };
        let abs_err = check.abs_err.map(|v| v.to_string()).unwrap_or_default();
        let rel_err = check.rel_err.map(|v| v.to_string()).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            check.name, tau_re, tau_im, abs_err, rel_err, check.passed
        ));
    }
    out
}
