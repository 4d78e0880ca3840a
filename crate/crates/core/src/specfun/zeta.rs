//! Hurwitz and Riemann zeta functions by Euler–Maclaurin summation.
//!
//! ζ(s, q) = Σ_{k<N} (q+k)^{−s} + (q+N)^{1−s}/(s−1) + (q+N)^{−s}/2
//!         + Σ_{j≥1} B_{2j}/(2j)! · s(s+1)…(s+2j−2) · (q+N)^{−s−2j+1}
//!
//! The remainder formula holds for every s ≠ 1, so the same sum gives the
//! analytic continuation to the whole plane.

use num_complex::Complex64;

use super::constants::BERNOULLI_EVEN;
use crate::error::{Error, Result};

/// Distance from s = 1 treated as the pole.
pub const ZETA_POLE_TOL: f64 = 1e-12;

/// Central-difference step for ∂ζ/∂s.
pub const S_DERIVATIVE_STEP: f64 = 1e-5;

/// Number of directly summed terms, chosen so q+N clears the asymptotic
/// threshold. For Re s < 0 the terms grow and cancel against the tail, with
/// an error floor near ε·(q+N)^{1−s}, so the threshold is kept as low as the
/// Bernoulli series allows.
fn shift_count(s: Complex64, q: f64) -> usize {
    let threshold = if s.re < 0.0 {
        5.0_f64.max(s.norm() + 2.0)
    } else {
        10.0_f64.max(s.norm() + 5.0)
    };
    (threshold - q).ceil().max(0.0) as usize
}

/// x^{−s} for real x > 0; the modulus goes through `powf` so real s keeps
/// full relative accuracy.
fn real_pow_neg(x: f64, s: Complex64) -> Complex64 {
    let modulus = x.powf(-s.re);
    if s.im == 0.0 {
        Complex64::new(modulus, 0.0)
    } else {
        Complex64::from_polar(modulus, -s.im * x.ln())
    }
}

/// Hurwitz zeta ζ(s, q) for complex s ≠ 1 and real q > 0.
pub fn hurwitz_zeta(s: Complex64, q: f64) -> Result<Complex64> {
    if !(q > 0.0) {
        return Err(Error::domain(format!("ζ(s, q) requires q > 0, got {q}")));
    }
    if (s - 1.0).norm() < ZETA_POLE_TOL {
        return Err(Error::pole("ζ(s, q) at s = 1"));
    }
    let n = shift_count(s, q);

    let mut direct = Complex64::new(0.0, 0.0);
    for k in 0..n {
        direct += real_pow_neg(q + k as f64, s);
    }

    let big = q + n as f64;
    let big_pow = real_pow_neg(big, s);
    let tail = big_pow * big / (s - 1.0);
    let half = 0.5 * big_pow;
    let mut total = direct + tail + half;

    // rising factorial s(s+1)…(s+2j−2) / (2j)! times (q+N)^{−s−2j+1}
    let inv_big2 = 1.0 / (big * big);
    let mut factor = s * big_pow / big;
    let mut fact = 2.0;
    for (j, b) in BERNOULLI_EVEN.iter().enumerate() {
        let term = factor * (b / fact);
        total += term;
        if term.norm() < 1e-17 * total.norm() {
            break;
        }
        let m = 2.0 * (j as f64 + 1.0);
        factor *= (s + (m - 1.0)) * (s + m) * inv_big2;
        fact *= (m + 1.0) * (m + 2.0);
    }
    Ok(total)
}

/// Riemann zeta ζ(s) = ζ(s, 1).
pub fn riemann_zeta(s: Complex64) -> Result<Complex64> {
    hurwitz_zeta(s, 1.0)
}

/// ∂ζ(s, q)/∂s at s = 0 by central difference with step `S_DERIVATIVE_STEP`.
pub fn hurwitz_zeta_s_derivative_at_0(q: f64) -> Result<f64> {
    if !(q > 0.0) {
        return Err(Error::domain(format!("ζ(s, q) requires q > 0, got {q}")));
    }
    let h = S_DERIVATIVE_STEP;
    let plus = hurwitz_zeta(Complex64::new(h, 0.0), q)?;
    let minus = hurwitz_zeta(Complex64::new(-h, 0.0), q)?;
    Ok((plus.re - minus.re) / (2.0 * h))
}
