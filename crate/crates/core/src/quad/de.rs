//! Double-exponential rules: tanh-sinh on finite intervals and exp-sinh on
//! `[lo, ∞)`. Both are trapezoidal sums in the transformed variable t with
//! the step halved per level; the between-level difference is the error
//! estimate.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use super::{check_interval, finite_sample, Abscissa, QuadConfig, QuadResult};
use crate::error::{Error, Result};

/// Deepest refinement level; the step in t is 2^-level.
pub const DE_MAX_LEVEL: usize = 12;

const DE_MIN_LEVEL: usize = 3;

// Largest |u| = (π/2)|sinh t| kept by tanh-sinh: endpoint offsets stay
// above ~1e-300 of the half-width.
const TANH_SINH_MAX_U: f64 = 345.0;

// exp-sinh keeps exp((π/2) sinh t) within [1e-300, 1e300].
const EXP_SINH_MAX_U: f64 = 690.0;

struct Node {
    abscissa: Abscissa,
    weight: f64,
}

/// Runs the level-doubling trapezoid on t ∈ [−t_max, t_max].
fn de_sum<F, M>(f: &F, map: M, t_max: f64, cfg: &QuadConfig) -> Result<QuadResult>
where
    F: Fn(Abscissa) -> Option<Complex64>,
    M: Fn(f64) -> Node,
{
    cfg.validate()?;
    let max_level = DE_MAX_LEVEL.min(cfg.max_depth);

    // Evaluated contributions w·f, keyed by t.
    let mut samples: Vec<(f64, Complex64)> = Vec::new();
    let mut cut_neg = -t_max - 1.0;
    let mut cut_pos = t_max + 1.0;
    let mut n_evals = 0usize;
    let mut previous: Option<Complex64> = None;
    let mut last = QuadResult {
        value: Complex64::new(0.0, 0.0),
        err_est: f64::INFINITY,
        n_evals: 0,
        converged: false,
    };

    for level in 0..=max_level {
        let h = 0.5_f64.powi(level as i32);
        let (start, stride) = if level == 0 { (0.0, 1.0) } else { (h, 2.0 * h) };
        let count = ((t_max - start) / stride).floor() as usize + 1;
        let new_points = if level == 0 { 2 * count - 1 } else { 2 * count };
        if n_evals + new_points > cfg.max_evals {
            return Err(Error::NoConvergence(QuadResult { n_evals, ..last }));
        }

        // walk outward on each side so an invalid point cuts the rest of that tail
        for sign in [1.0, -1.0] {
            for i in 0..count {
                let t = sign * (start + i as f64 * stride);
                if level == 0 && sign < 0.0 && i == 0 {
                    continue;
                }
                if t >= cut_pos || t <= cut_neg {
                    break;
                }
                let node = map(t);
                n_evals += 1;
                if !(node.weight > 0.0) || !node.weight.is_finite() {
                    continue;
                }
                match f(node.abscissa) {
                    Some(v) => samples.push((t, v * node.weight)),
                    None => {
                        if sign > 0.0 {
                            cut_pos = t;
                        } else {
                            cut_neg = t;
                        }
                        break;
                    }
                }
            }
        }

        let mut sum = Complex64::new(0.0, 0.0);
        let mut abs_sum = 0.0;
        for &(t, v) in &samples {
            if t < cut_pos && t > cut_neg {
                sum += v;
                abs_sum += v.norm();
            }
        }
        let value = sum * h;
        let roundoff = 4.0 * f64::EPSILON * abs_sum * h;
        let err = match previous {
            Some(p) => (value - p).norm() + roundoff,
            None => f64::INFINITY,
        };
        last = QuadResult {
            value,
            err_est: err,
            n_evals,
            converged: false,
        };
        if level >= DE_MIN_LEVEL && value.is_finite() && err <= cfg.target(value.norm()) {
            return Ok(QuadResult {
                converged: true,
                ..last
            });
        }
        previous = Some(value);
    }
    Err(Error::NoConvergence(last))
}

/// tanh-sinh quadrature of `f` over `[lo, hi]`; tolerates integrable
/// endpoint singularities. The endpoints themselves are never evaluated.
pub fn integrate_de<F>(f: F, lo: f64, hi: f64, cfg: &QuadConfig) -> Result<QuadResult>
where
    F: Fn(f64) -> Complex64,
{
    integrate_de_with(|p: Abscissa| finite_sample(f(p.x)), lo, hi, cfg)
}

pub fn integrate_de_with<F>(f: F, lo: f64, hi: f64, cfg: &QuadConfig) -> Result<QuadResult>
where
    F: Fn(Abscissa) -> Option<Complex64>,
{
    check_interval(lo, hi)?;
    let half = 0.5 * (hi - lo);
    let t_max = (TANH_SINH_MAX_U / FRAC_PI_2).asinh();
    let map = |t: f64| {
        let u = FRAC_PI_2 * t.sinh();
        // e = exp(−2|u|) keeps both the offset and the weight free of overflow
        let e = (-2.0 * u.abs()).exp();
        let near = half * 2.0 * e / (1.0 + e);
        let far = 2.0 * half - near;
        let weight = half * FRAC_PI_2 * t.cosh() * 4.0 * e / ((1.0 + e) * (1.0 + e));
        let abscissa = if t >= 0.0 {
            Abscissa { x: hi - near, from_lo: far, to_hi: near }
        } else {
            Abscissa { x: lo + near, from_lo: near, to_hi: far }
        };
        Node { abscissa, weight }
    };
    de_sum(&f, map, t_max, cfg)
}

/// exp-sinh quadrature of `f` over `[lo, ∞)`; tolerates an integrable
/// singularity at `lo`.
pub fn integrate_semi_infinite<F>(f: F, lo: f64, cfg: &QuadConfig) -> Result<QuadResult>
where
    F: Fn(f64) -> Complex64,
{
    integrate_semi_infinite_with(|p: Abscissa| finite_sample(f(p.x)), lo, cfg)
}

pub fn integrate_semi_infinite_with<F>(f: F, lo: f64, cfg: &QuadConfig) -> Result<QuadResult>
where
    F: Fn(Abscissa) -> Option<Complex64>,
{
    if !lo.is_finite() {
        return Err(Error::InvalidInterval { lo, hi: f64::INFINITY });
    }
    let t_max = (EXP_SINH_MAX_U / FRAC_PI_2).asinh();
    let map = |t: f64| {
        let s = FRAC_PI_2 * t.sinh();
        let d = s.exp();
        Node {
            abscissa: Abscissa { x: lo + d, from_lo: d, to_hi: f64::INFINITY },
            weight: FRAC_PI_2 * t.cosh() * d,
        }
    };
    de_sum(&f, map, t_max, cfg)
}
