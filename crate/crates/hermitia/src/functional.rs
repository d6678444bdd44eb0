//! The generalized Hermite moment functional and its polynomial pairing.
//!
//! For a complex parameter `tau` (excluding negative integers, where the
//! normalization has a Gamma pole) the functional acts on polynomials
//! through its moment sequence:
//!
//! ```text
//! m_0 = 1,   m_{2k+1} = 0,
//! m_{2k} = m_{2k-2} (tau + 2k - 1)(tau + 2k) / (4k),
//! ```
//!
//! equivalently `m_n = (tau + 1)_n / n! * g_n` with `g_n` the normalized
//! Gaussian moments `g_{2k} = (2k)! / (k! 4^k)` (the `tau = 0` case).
//!
//! Two structural identities are exposed as residuals for testing and
//! verification: a second-order identity
//! `-2 (n+2) m_{n+2} + (n + tau + 2)(n + tau + 1) m_n = 0` satisfied at
//! every parameter, and the first-order Gaussian recurrence
//! `-n m_{n-1} + 2 m_{n+1} = 0` special to `tau = 0`.
//!
//! The module also carries the even/odd splitting used to fold full-line
//! integrals against an even weight onto the half-line: [`symmetrize`]
//! decomposes any function as `L(x) = U(|x|) + x V(|x|)`.

use std::sync::RwLock;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gamma::pochhammer;
use crate::hypergeometric::Compensated;

/// Window around negative integers where the functional's normalization is
/// singular and construction is rejected.
pub const PARAMETER_WINDOW: f64 = 1e-10;

/// Polynomial with complex coefficients, stored dense from the constant
/// term upward and kept canonical (no trailing zero coefficients; the zero
/// polynomial is the single coefficient `0`).
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    /// Builds a polynomial from coefficients `c_0, c_1, ...`, trimming
    /// trailing exact zeros. An empty list yields the zero polynomial.
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        let zero = Complex64::new(0.0, 0.0);
        while coeffs.len() > 1 && *coeffs.last().unwrap() == zero {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(zero);
        }
        Polynomial { coeffs }
    }

    /// Polynomial with real coefficients.
    pub fn from_real(coeffs: &[f64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// The monomial `x^n`.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
        coeffs[n] = Complex64::new(1.0, 0.0);
        Polynomial { coeffs }
    }

    /// Coefficients from the constant term upward.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Degree of the canonical representation (the zero polynomial reports
    /// degree zero).
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Horner evaluation at a complex point.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Twice the even part: the polynomial with coefficients `2 c_{2k}` at
    /// the even indices and zero at the odd ones. Pairing an even weight
    /// over the full line with `p` equals pairing the half-line with this
    /// polynomial.
    pub fn doubled_even_part(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                if i % 2 == 0 {
                    2.0 * c
                } else {
                    Complex64::new(0.0, 0.0)
                }
            })
            .collect();
        Polynomial::new(coeffs)
    }
}

/// True when `tau` sits within [`PARAMETER_WINDOW`] of a negative integer.
fn is_negative_integer(tau: Complex64) -> bool {
    if tau.im.abs() > PARAMETER_WINDOW {
        return false;
    }
    let nearest = tau.re.round();
    nearest < 0.0 && (tau.re - nearest).abs() <= PARAMETER_WINDOW
}

/// Moment functional of the generalized Hermite weight, with a lazily
/// grown, thread-safe moment cache.
#[derive(Debug)]
pub struct GeneralizedHermiteFunctional {
    tau: Complex64,
    moments: RwLock<Vec<Complex64>>,
}

impl GeneralizedHermiteFunctional {
    /// Builds the functional for parameter `tau`. Negative integer
    /// parameters (within [`PARAMETER_WINDOW`]) are rejected: the
    /// normalization `Gamma(tau + 1)` has a pole and no moment sequence
    /// exists.
    pub fn new(tau: Complex64) -> Result<Self> {
        if is_negative_integer(tau) {
            return Err(Error::domain(format!(
                "moment functional undefined at negative integer parameter tau = {tau}"
            )));
        }
        Ok(GeneralizedHermiteFunctional {
            tau,
            moments: RwLock::new(vec![Complex64::new(1.0, 0.0)]),
        })
    }

    /// The functional's parameter.
    pub fn tau(&self) -> Complex64 {
        self.tau
    }

    /// The `n`-th moment. Odd moments are exactly zero; even ones follow
    /// the pure-product recurrence in the module header. Values are cached.
    pub fn moment(&self, n: usize) -> Complex64 {
        {
            let cache = self.moments.read().unwrap();
            if n < cache.len() {
                return cache[n];
            }
        }
        let mut cache = self.moments.write().unwrap();
        while cache.len() <= n {
            let next_index = cache.len();
            if next_index % 2 == 1 {
                cache.push(Complex64::new(0.0, 0.0));
                continue;
            }
            let k = (next_index / 2) as f64;
            let previous = cache[next_index - 2];
            cache.push(previous * (self.tau + (2.0 * k - 1.0)) * (self.tau + 2.0 * k) / (4.0 * k));
        }
        cache[n]
    }

    /// Applies the functional to a polynomial: `sum_n c_n m_n`, accumulated
    /// with compensation.
    pub fn apply(&self, p: &Polynomial) -> Complex64 {
        let mut acc = Compensated::new(Complex64::new(0.0, 0.0));
        for (n, &c) in p.coeffs().iter().enumerate() {
            if c == Complex64::new(0.0, 0.0) {
                continue;
            }
            acc.add(c * self.moment(n));
        }
        acc.sum
    }
}

/// Exact factorial as a double (exact through `22!`, then correctly
/// rounded).
fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Normalized Gaussian moments `g_n`: zero for odd `n`,
/// `g_{2k} = (2k)!/(k! 4^k) = prod_{j=1..k} (2j - 1)/2` for even `n`.
fn central_moment(n: usize) -> f64 {
    if n % 2 == 1 {
        return 0.0;
    }
    (1..=n / 2).map(|j| (2 * j - 1) as f64 / 2.0).product()
}

/// The `n`-th moment through the closed form
/// `m_n = (tau + 1)_n / n! * g_n` rather than the product recurrence.
pub fn moment_via_relation(tau: Complex64, n: usize) -> Complex64 {
    if n % 2 == 1 {
        return Complex64::new(0.0, 0.0);
    }
    pochhammer(tau + 1.0, n as u32) / factorial(n) * central_moment(n)
}

/// Residual of the second-order moment identity
/// `-2 (n+2) m_{n+2} + (n + tau + 2)(n + tau + 1) m_n`, which vanishes for
/// every parameter. Computed from raw pure-product moments, so it is
/// meaningful at any `tau`, including integers.
pub fn second_order_residual(tau: Complex64, n: usize) -> Complex64 {
    let m_n = raw_moment(tau, n);
    let m_n2 = raw_moment(tau, n + 2);
    let nf = n as f64;
    -2.0 * (nf + 2.0) * m_n2 + (tau + (nf + 2.0)) * (tau + (nf + 1.0)) * m_n
}

/// Residual of the first-order Gaussian recurrence
/// `-n g_{n-1} + 2 g_{n+1}`, which vanishes identically for the `tau = 0`
/// moments. (`n = 0` uses `g_{-1} := 0`.)
pub fn first_order_residual_hermite(n: usize) -> f64 {
    let lower = if n == 0 { 0.0 } else { central_moment(n - 1) };
    -(n as f64) * lower + 2.0 * central_moment(n + 1)
}

/// Moment by direct pure-product evaluation, independent of any functional
/// instance (and therefore defined at every `tau`).
fn raw_moment(tau: Complex64, n: usize) -> Complex64 {
    if n % 2 == 1 {
        return Complex64::new(0.0, 0.0);
    }
    let mut m = Complex64::new(1.0, 0.0);
    for k in 1..=n / 2 {
        let kf = k as f64;
        m = m * (tau + (2.0 * kf - 1.0)) * (tau + 2.0 * kf) / (4.0 * kf);
    }
    m
}

/// Even/odd decomposition of a real function: `U(x) = (f(x) + f(-x))/2`,
/// `V(x) = (f(x) - f(-x))/(2x)` with `V(0) := 0`, so that
/// `f(x) = U(|x|) + x V(|x|)` for every real `x`.
pub struct SymmetricParts<F: Fn(f64) -> f64> {
    f: F,
}

/// Wraps `f` in its even/odd decomposition.
pub fn symmetrize<F: Fn(f64) -> f64>(f: F) -> SymmetricParts<F> {
    SymmetricParts { f }
}

impl<F: Fn(f64) -> f64> SymmetricParts<F> {
    /// Even part `U(x) = (f(x) + f(-x))/2`.
    pub fn even_part(&self, x: f64) -> f64 {
        ((self.f)(x) + (self.f)(-x)) / 2.0
    }

    /// Odd quotient `V(x) = (f(x) - f(-x))/(2x)`, with `V(0) := 0`.
    pub fn odd_quotient(&self, x: f64) -> f64 {
        if x == 0.0 {
            return 0.0;
        }
        ((self.f)(x) - (self.f)(-x)) / (2.0 * x)
    }

    /// Reassembles the original function as `U(|x|) + x V(|x|)`.
    pub fn reconstruct(&self, x: f64) -> f64 {
        self.even_part(x.abs()) + x * self.odd_quotient(x.abs())
    }
}
