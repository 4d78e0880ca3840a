//! Complex-valued one-dimensional quadrature.
//!
//! * [`integrate_finite`]: globally adaptive 7/15-point Gauss–Kronrod.
//! * [`integrate_de`]: tanh-sinh (double-exponential) rule for finite
//!   intervals with endpoint singularities.
//! * [`integrate_semi_infinite`]: exp-sinh rule on `[lo, ∞)`.
//!
//! The `_with` variants take integrands of an [`Abscissa`], which carries
//! the distances to both endpoints computed without cancellation, and
//! return `None` for points where the integrand cannot be evaluated.

mod adaptive;
mod de;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub use adaptive::{integrate_finite, integrate_finite_with};
pub use de::{
    integrate_de, integrate_de_with, integrate_semi_infinite, integrate_semi_infinite_with,
    DE_MAX_LEVEL,
};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_evals: usize,
    pub max_depth: usize,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            rel_tol: 1e-12,
            max_evals: 200_000,
            max_depth: 50,
        }
    }
}

impl QuadConfig {
    /// Default configuration with both tolerances set to `tol`.
    pub fn with_tol(tol: f64) -> Self {
        Self {
            abs_tol: tol,
            rel_tol: tol,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) || !(self.rel_tol > 0.0) {
            return Err(Error::InvalidConfig("tolerances must be positive".into()));
        }
        if self.max_evals < 100 {
            return Err(Error::InvalidConfig("max_evals must be at least 100".into()));
        }
        if self.max_depth < 5 {
            return Err(Error::InvalidConfig("max_depth must be at least 5".into()));
        }
        Ok(())
    }

    /// Error target for an integral of magnitude `magnitude`.
    pub fn target(&self, magnitude: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * magnitude)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: Complex64,
    pub err_est: f64,
    pub n_evals: usize,
    pub converged: bool,
}

impl QuadResult {
    /// Sum of two independent results; errors and counts add.
    pub fn combine(self, other: QuadResult) -> QuadResult {
        QuadResult {
            value: self.value + other.value,
            err_est: self.err_est + other.err_est,
            n_evals: self.n_evals + other.n_evals,
            converged: self.converged && other.converged,
        }
    }

    pub fn scale(self, factor: Complex64) -> QuadResult {
        QuadResult {
            value: self.value * factor,
            err_est: self.err_est * factor.norm(),
            ..self
        }
    }
}

/// A quadrature node together with its distances to the interval ends.
///
/// `from_lo = x − lo` and `to_hi = hi − x` are computed directly from the
/// transform, so they stay accurate even when `x` itself rounds onto an
/// endpoint. For semi-infinite intervals `to_hi` is `f64::INFINITY`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Abscissa {
    pub x: f64,
    pub from_lo: f64,
    pub to_hi: f64,
}

fn check_interval(lo: f64, hi: f64) -> Result<()> {
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::InvalidInterval { lo, hi });
    }
    Ok(())
}

fn finite_sample(v: Complex64) -> Option<Complex64> {
    v.is_finite().then_some(v)
}
