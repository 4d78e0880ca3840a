//! Gamma-family functions: ln|Γ|, real ln Γ, 1/Γ, ψ and the Gauss product.
//!
//! Everything goes through one Stirling evaluator. Below `STIRLING_MIN_RE`
//! the argument is shifted up by the recurrence Γ(z+1) = zΓ(z), and for
//! Re z < 1/2 the reflection formula Γ(z)Γ(1−z) = π / sin πz is applied
//! first.

use num_complex::Complex64;

use super::constants::{BERNOULLI_EVEN, LN_2, LN_2PI, LN_PI, PI};
use crate::error::{Error, Result};

/// Distance below which z counts as sitting on a pole of Γ.
pub const POLE_TOL: f64 = 1e-12;

const STIRLING_MIN_RE: f64 = 10.0;

/// sin(πx), exact zero at the integers.
pub(crate) fn sin_pi(x: f64) -> f64 {
    let mut r = x - 2.0 * (0.5 * x).round();
    if r > 0.5 {
        r = 1.0 - r;
    } else if r < -0.5 {
        r = -1.0 - r;
    }
    (PI * r).sin()
}

/// cos(πx), exact zero at the half-integers.
pub(crate) fn cos_pi(x: f64) -> f64 {
    let r = (x - 2.0 * (0.5 * x).round()).abs();
    sin_pi(0.5 - r)
}

fn sin_pi_complex(z: Complex64) -> Complex64 {
    let v = PI * z.im;
    Complex64::new(sin_pi(z.re) * v.cosh(), cos_pi(z.re) * v.sinh())
}

/// ln|sin πz| without overflow for large |Im z|.
fn ln_abs_sin_pi(z: Complex64) -> f64 {
    let v = z.im.abs();
    if v > 20.0 {
        let e = (-2.0 * PI * v).exp();
        let c = cos_pi(2.0 * z.re);
        PI * v - LN_2 + 0.5 * (-2.0 * e * c + e * e).ln_1p()
    } else {
        let s = sin_pi(z.re);
        let sh = (PI * v).sinh();
        0.5 * (s * s + sh * sh).ln()
    }
}

/// Index k ≥ 0 such that z is within `POLE_TOL` of −k, if any.
fn pole_index(z: Complex64) -> Option<i64> {
    if z.re > 0.5 {
        return None;
    }
    let k = z.re.round();
    if (z - Complex64::new(k, 0.0)).norm() < POLE_TOL {
        Some(-(k as i64))
    } else {
        None
    }
}

/// Stirling series for ln Γ(w), |w| ≥ 10.
fn stirling(w: Complex64) -> Complex64 {
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut pow = inv;
    for (k, b) in BERNOULLI_EVEN.iter().enumerate().take(12) {
        let n = 2.0 * (k as f64 + 1.0);
        let term = pow * (b / (n * (n - 1.0)));
        series += term;
        if term.norm() < 1e-18 * series.norm() {
            break;
        }
        pow *= inv2;
    }
    (w - 0.5) * w.ln() - w + 0.5 * LN_2PI + series
}

/// Number of unit shifts needed to bring Re z up to the Stirling region.
fn shift_count(z: Complex64) -> usize {
    if z.re >= STIRLING_MIN_RE {
        0
    } else {
        (STIRLING_MIN_RE - z.re).ceil() as usize
    }
}

/// ln Γ(z) on Re z ≥ 1/2, continuous branch that is real on the positive axis.
pub(crate) fn ln_gamma_right(z: Complex64) -> Complex64 {
    let m = shift_count(z);
    let mut correction = Complex64::new(0.0, 0.0);
    for k in 0..m {
        correction += (z + k as f64).ln();
    }
    stirling(z + m as f64) - correction
}

/// ln|Γ(z)| for complex z off the poles.
pub fn log_abs_gamma(z: Complex64) -> Result<f64> {
    if let Some(k) = pole_index(z) {
        return Err(Error::pole(format!("ln|Γ| at z = -{k}")));
    }
    Ok(log_abs_gamma_unchecked(z))
}

fn log_abs_gamma_unchecked(z: Complex64) -> f64 {
    if z.re < 0.5 {
        return LN_PI - ln_abs_sin_pi(z) - log_abs_gamma_unchecked(1.0 - z);
    }
    let m = shift_count(z);
    let mut correction = 0.0;
    let mut prod = 1.0_f64;
    for k in 0..m {
        // accumulate moduli as a product, flushing before it can overflow
        prod *= (z + k as f64).norm();
        if prod > 1e250 {
            correction += prod.ln();
            prod = 1.0;
        }
    }
    correction += prod.ln();
    stirling(z + m as f64).re - correction
}

/// ln Γ(x) for real x > 0.
pub fn log_gamma_real(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain(format!("ln Γ(x) requires x > 0, got {x}")));
    }
    Ok(log_abs_gamma_unchecked(Complex64::new(x, 0.0)))
}

/// 1/Γ(z); entire, exactly zero at the non-positive integers.
pub fn reciprocal_gamma(z: Complex64) -> Complex64 {
    if pole_index(z).is_some() {
        return Complex64::new(0.0, 0.0);
    }
    if z.re < 0.5 {
        sin_pi_complex(z) * ln_gamma_right(1.0 - z).exp() / PI
    } else {
        (-ln_gamma_right(z)).exp()
    }
}

/// Digamma ψ(x) = Γ'(x)/Γ(x) for x > 0.
pub fn digamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain(format!("ψ(x) requires x > 0, got {x}")));
    }
    let mut x = x;
    let mut acc = 0.0;
    while x < STIRLING_MIN_RE {
        acc -= 1.0 / x;
        x += 1.0;
    }
    let inv2 = 1.0 / (x * x);
    let mut pow = inv2;
    let mut series = 0.0;
    for (k, b) in BERNOULLI_EVEN.iter().enumerate().take(8) {
        series += b / (2.0 * (k as f64 + 1.0)) * pow;
        pow *= inv2;
    }
    Ok(acc + x.ln() - 0.5 / x - series)
}

/// n-th Gauss product approximant n!·nˣ / (x(x+1)…(x+n)) to Γ(x).
pub fn gauss_product_gamma(x: f64, n: u64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain(format!("Gauss product requires x > 0, got {x}")));
    }
    if n == 0 {
        return Err(Error::domain("Gauss product requires n >= 1"));
    }
    let mut log_prod = 0.0;
    for k in 1..=n {
        log_prod += (x / k as f64).ln_1p();
    }
    Ok((x * (n as f64).ln() - x.ln() - log_prod).exp())
}
