//! Error type shared by every numerical operation in the crate.

use std::fmt;

use num_complex::Complex64;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes of the numerical operations.
///
/// Every fallible operation returns one of these instead of letting NaN or
/// infinity escape through a `Complex64` value.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// The Gamma function was evaluated at (or within the detection window
    /// of) a nonpositive integer, where it has a pole.
    Pole { z: Complex64 },
    /// A series or an adaptive quadrature failed to meet its tolerance
    /// within its iteration budget.
    NonConvergence { context: String },
    /// A series denominator parameter sits on a nonpositive integer that is
    /// reached before the series terminates.
    ParameterPole { b: Complex64 },
    /// An argument violates the documented domain of the operation.
    Domain { context: String },
    /// The requested degree makes the defining power series degenerate
    /// (its prefactor `1/Gamma(-tau)` vanishes identically).
    DegenerateDegree { tau: Complex64 },
    /// A quadrature sample produced a non-finite value.
    SingularIntegrand { x: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Pole { z } => {
                write!(f, "gamma function pole at z = {z} (nonpositive integer)")
            }
            Error::NonConvergence { context } => {
                write!(f, "failed to converge: {context}")
            }
            Error::ParameterPole { b } => {
                write!(
                    f,
                    "series parameter b = {b} is a nonpositive integer reached before termination"
                )
            }
            Error::Domain { context } => write!(f, "domain error: {context}"),
            Error::DegenerateDegree { tau } => {
                write!(
                    f,
                    "degree tau = {tau} is a nonnegative integer; the power-series form degenerates"
                )
            }
            Error::SingularIntegrand { x } => {
                write!(f, "integrand evaluated to a non-finite value near x = {x}")
            }
        }
    }
}

impl std::error::Error for Error {}

impl Error {
    /// Builds a [`Error::Domain`] from anything printable.
    pub fn domain(context: impl Into<String>) -> Self {
        Error::Domain {
            context: context.into(),
        }
    }

    /// Builds a [`Error::NonConvergence`] from anything printable.
    pub fn non_convergence(context: impl Into<String>) -> Self {
        Error::NonConvergence {
            context: context.into(),
        }
    }
}
