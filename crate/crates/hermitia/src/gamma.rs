//! Complex Gamma function, its reciprocal, and Pochhammer symbols.
//!
//! The Gamma function is evaluated with a Lanczos rational approximation
//! (g = 7, nine terms) on the half-plane `Re z >= 1/2`, extended to the
//! rest of the plane through the reflection identity
//!
//! ```text
//! Gamma(z) * Gamma(1 - z) = pi / sin(pi z).
//! ```
//!
//! Poles at the nonpositive integers are detected up front (within a
//! window of `1e-12`) and reported as [`Error::Pole`]; the reciprocal
//! `1/Gamma` is entire and returns exactly zero there instead.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Detection window around nonpositive integers treated as Gamma poles.
pub const POLE_WINDOW: f64 = 1e-12;

/// Lanczos shift parameter.
const LANCZOS_G: f64 = 7.0;

/// Lanczos partial-fraction coefficients for g = 7 (nine terms).
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Returns true when `z` lies within [`POLE_WINDOW`] of a nonpositive integer.
pub fn is_nonpositive_integer(z: Complex64) -> bool {
    if z.im.abs() > POLE_WINDOW {
        return false;
    }
    let nearest = z.re.round();
    nearest <= 0.0 && (z.re - nearest).abs() <= POLE_WINDOW
}

/// Sum of the Lanczos partial fractions at `z` (expects the shifted argument
/// convention `Gamma(z + 1)`-style caller below).
fn lanczos_sum(z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(LANCZOS_COEFFS[0], 0.0);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    acc
}

/// Gamma function on the half-plane `Re z >= 1/2` (no reflection).
fn gamma_lanczos(z: Complex64) -> Complex64 {
    // Work with Gamma(z) = Gamma((z - 1) + 1).
    let z = z - 1.0;
    let t = z + LANCZOS_G + 0.5;
    let sqrt_two_pi = (2.0 * std::f64::consts::PI).sqrt();
    sqrt_two_pi * t.powc(z + 0.5) * (-t).exp() * lanczos_sum(z)
}

/// Complex Gamma function `Gamma(z)`.
///
/// Accurate to roughly machine precision for moderate arguments
/// (`|z| <= 30` away from the poles). Arguments within `1e-12` of a
/// nonpositive integer are rejected as [`Error::Pole`].
///
/// # Example
///
/// ```
/// use hermitia::{c64, gamma::gamma};
/// let g = gamma(c64(5.0, 0.0)).unwrap();
/// assert!((g.re - 24.0).abs() < 1e-12 && g.im.abs() < 1e-12);
/// ```
pub fn gamma(z: Complex64) -> Result<Complex64> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::domain("gamma argument must be finite"));
    }
    if is_nonpositive_integer(z) {
        return Err(Error::Pole { z });
    }
    let value = if z.re < 0.5 {
        // Reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z)).
        let pi = std::f64::consts::PI;
        let sin_piz = (pi * z).sin();
        pi / (sin_piz * gamma_lanczos(Complex64::new(1.0, 0.0) - z))
    } else {
        gamma_lanczos(z)
    };
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(Error::domain(format!(
            "gamma({z}) overflows double precision"
        )));
    }
    Ok(value)
}

/// Reciprocal Gamma function `1/Gamma(z)`.
///
/// This is an entire function: at the nonpositive integers (within the
/// `1e-12` detection window) it returns exactly `0`, everywhere else it is
/// `1/gamma(z)`.
///
/// # Example
///
/// ```
/// use hermitia::{c64, gamma::reciprocal_gamma};
/// assert_eq!(reciprocal_gamma(c64(-3.0, 0.0)), hermitia::c64(0.0, 0.0));
/// ```
pub fn reciprocal_gamma(z: Complex64) -> Complex64 {
    if is_nonpositive_integer(z) {
        return Complex64::new(0.0, 0.0);
    }
    match gamma(z) {
        Ok(g) => 1.0 / g,
        // Overflow of Gamma means its reciprocal underflows to zero.
        Err(_) => Complex64::new(0.0, 0.0),
    }
}

/// Pochhammer symbol (rising factorial) `(a)_n = a (a+1) ... (a+n-1)`.
///
/// Evaluated as a direct product for small `n` (or whenever `a` sits within
/// `0.05` of a nonpositive integer, where the Gamma-ratio form loses
/// digits), and as `Gamma(a+n)/Gamma(a)` otherwise, falling back to the
/// product if either Gamma evaluation fails.
///
/// `(a)_0 = 1` for every `a`.
///
/// # Example
///
/// ```
/// use hermitia::{c64, gamma::pochhammer};
/// let p = pochhammer(c64(1.0, 0.0), 4);
/// assert!((p.re - 24.0).abs() < 1e-12);
/// ```
pub fn pochhammer(a: Complex64, n: u32) -> Complex64 {
    if n == 0 {
        return Complex64::new(1.0, 0.0);
    }
    let near_nonpositive_int =
        a.im.abs() < 0.05 && (a.re - a.re.round()).abs() < 0.05 && a.re.round() <= 0.0;
    if n <= 64 || near_nonpositive_int {
        return pochhammer_product(a, n);
    }
    match (gamma(a + n as f64), gamma(a)) {
        (Ok(num), Ok(den)) => num / den,
        _ => pochhammer_product(a, n),
    }
}

fn pochhammer_product(a: Complex64, n: u32) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    for k in 0..n {
        acc *= a + k as f64;
    }
    acc
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;
    use crate::c64;

    const PI: f64 = std::f64::consts::PI;

    fn rel_err(got: Complex64, want: Complex64) -> f64 {
        (got - want).norm() / want.norm().max(f64::MIN_POSITIVE)
    }

    #[test]
    fn integer_values() {
        assert!(rel_err(gamma(c64(1.0, 0.0)).unwrap(), c64(1.0, 0.0)) < 1e-14);
        assert!(rel_err(gamma(c64(5.0, 0.0)).unwrap(), c64(24.0, 0.0)) < 1e-13);
        assert!(rel_err(gamma(c64(10.0, 0.0)).unwrap(), c64(362_880.0, 0.0)) < 1e-13);
    }

    #[test]
    fn half_integer_values() {
        let g_half = gamma(c64(0.5, 0.0)).unwrap();
        assert!(rel_err(g_half * g_half, c64(PI, 0.0)) < 1e-13);
        // Gamma(7/2) = 15 sqrt(pi) / 8.
        let want = 15.0 * PI.sqrt() / 8.0;
        assert!(rel_err(gamma(c64(3.5, 0.0)).unwrap(), c64(want, 0.0)) < 1e-13);
    }

    #[test]
    fn quarter_values() {
        // Frozen 30-digit reference: Gamma(1/4) = 3.62560990822190831193068515587.
        let want = c64(3.625_609_908_221_908_3, 0.0);
        assert!(rel_err(gamma(c64(0.25, 0.0)).unwrap(), want) < 1e-13);
    }

    #[test]
    fn fractional_positive_values() {
        // Frozen mpmath references (30 significant digits in the source run).
        assert!(rel_err(
            gamma(c64(2.3, 0.0)).unwrap(),
            c64(1.166_711_905_198_160_3, 0.0)
        ) < 1e-13);
        assert!(rel_err(
            gamma(c64(3.7, 0.0)).unwrap(),
            c64(4.170_651_783_796_603_2, 0.0)
        ) < 1e-13);
    }

    #[test]
    fn reflection_region() {
        // Gamma(-1/2) = -2 sqrt(pi).
        let want = c64(-2.0 * PI.sqrt(), 0.0);
        assert!(rel_err(gamma(c64(-0.5, 0.0)).unwrap(), want) < 1e-13);
    }

    #[test]
    fn poles_rejected() {
        for n in 0..5 {
            let z = c64(-(n as f64), 0.0);
            assert!(matches!(gamma(z), Err(Error::Pole { .. })));
            let z_shifted = c64(-(n as f64) + 5e-13, 0.0);
            assert!(matches!(gamma(z_shifted), Err(Error::Pole { .. })));
        }
        // Just outside the window the value is huge but defined.
        assert!(gamma(c64(-1.0 + 1e-9, 0.0)).is_ok());
    }

    #[test]
    fn reflection_identity_random_grid() {
        // 200 deterministic pseudo-random points with |u| <= 10, kept at
        // least 0.05 away from every integer.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0001);
        let mut checked = 0;
        while checked < 200 {
            let u = c64(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0));
            if u.im.abs() < 0.05 && (u.re - u.re.round()).abs() < 0.05 {
                continue;
            }
            let lhs = gamma(u).unwrap() * gamma(c64(1.0, 0.0) - u).unwrap();
            let rhs = c64(PI, 0.0) / (PI * u).sin();
            assert!(
                rel_err(lhs, rhs) < 1e-10,
                "reflection failed at u = {u}: rel err {}",
                rel_err(lhs, rhs)
            );
            checked += 1;
        }
    }

    #[test]
    fn duplication_identity_random_grid() {
        // Legendre duplication: Gamma(2u) = 2^(2u-1)/sqrt(pi) Gamma(u) Gamma(u + 1/2).
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0002);
        let mut checked = 0;
        while checked < 200 {
            let u = c64(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
            let too_close = |v: Complex64| {
                v.im.abs() < 0.05 && (2.0 * v.re - (2.0 * v.re).round()).abs() < 0.05
            };
            if too_close(u) {
                continue;
            }
            let lhs = gamma(2.0 * u).unwrap();
            let factor = (2.0 * u - 1.0) * std::f64::consts::LN_2;
            let rhs = factor.exp() / PI.sqrt()
                * gamma(u).unwrap()
                * gamma(u + 0.5).unwrap();
            assert!(
                rel_err(lhs, rhs) < 1e-10,
                "duplication failed at u = {u}: rel err {}",
                rel_err(lhs, rhs)
            );
            checked += 1;
        }
    }

    #[test]
    fn reciprocal_is_entire() {
        assert_eq!(reciprocal_gamma(c64(0.0, 0.0)), c64(0.0, 0.0));
        assert_eq!(reciprocal_gamma(c64(-7.0, 0.0)), c64(0.0, 0.0));
        let z = c64(3.25, -1.5);
        let expected = 1.0 / gamma(z).unwrap();
        assert!(rel_err(reciprocal_gamma(z), expected) < 1e-14);
    }

    #[test]
    fn reciprocal_times_gamma_is_one() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0003);
        let mut checked = 0;
        while checked < 100 {
            let z = c64(rng.gen_range(-8.0..8.0), rng.gen_range(-8.0..8.0));
            if z.im.abs() < 0.05 && (z.re - z.re.round()).abs() < 0.05 {
                continue;
            }
            let product = gamma(z).unwrap() * reciprocal_gamma(z);
            assert!(rel_err(product, c64(1.0, 0.0)) < 1e-10);
            checked += 1;
        }
    }

    #[test]
    fn pochhammer_basics() {
        assert_eq!(pochhammer(c64(2.5, 1.0), 0), c64(1.0, 0.0));
        assert!(rel_err(pochhammer(c64(1.0, 0.0), 4), c64(24.0, 0.0)) < 1e-14);
        // (-3)_5 crosses zero: (-3)(-2)(-1)(0)(1) = 0.
        assert_eq!(pochhammer(c64(-3.0, 0.0), 5), c64(0.0, 0.0));
        // (1/2)_3 = (1/2)(3/2)(5/2) = 15/8.
        assert!(rel_err(pochhammer(c64(0.5, 0.0), 3), c64(15.0 / 8.0, 0.0)) < 1e-14);
    }

    #[test]
    fn pochhammer_splitting_identity() {
        // (a)_{m+n} = (a)_m (a+m)_n.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0004);
        for _ in 0..100 {
            let a = c64(rng.gen_range(-6.0..6.0), rng.gen_range(-3.0..3.0));
            let m = rng.gen_range(0..8u32);
            let n = rng.gen_range(0..8u32);
            let lhs = pochhammer(a, m + n);
            let rhs = pochhammer(a, m) * pochhammer(a + m as f64, n);
            let scale = lhs.norm().max(rhs.norm()).max(1.0);
            assert!(
                (lhs - rhs).norm() / scale < 1e-12,
                "splitting failed at a = {a}, m = {m}, n = {n}"
            );
        }
    }

    #[test]
    fn pochhammer_gamma_ratio_path_matches_product() {
        // n > 64 with a away from nonpositive integers exercises the
        // Gamma-ratio branch; compare against the direct product.
        let a = c64(0.75, 0.25);
        let n = 80;
        let via_ratio = pochhammer(a, n);
        let mut product = c64(1.0, 0.0);
        for k in 0..n {
            product *= a + k as f64;
        }
        assert!(rel_err(via_ratio, product) < 1e-11);
    }

    #[test]
    fn gamma_recurrence_on_complex_grid() {
        // Gamma(z + 1) = z Gamma(z) on a deterministic grid.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0005);
        let mut checked = 0;
        while checked < 100 {
            let z = c64(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0));
            if z.im.abs() < 0.05 && (z.re - z.re.round()).abs() < 0.05 {
                continue;
            }
            let lhs = gamma(z + 1.0).unwrap();
            let rhs = z * gamma(z).unwrap();
            assert!(rel_err(lhs, rhs) < 1e-10, "recurrence failed at z = {z}");
            checked += 1;
        }
    }
}
