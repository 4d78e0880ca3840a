use thiserror::Error;

use crate::quad::QuadResult;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Argument sits on (or within tolerance of) a pole of the function.
    #[error("pole: {0}")]
    Pole(String),

    /// Argument outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Quadrature exhausted its budget; the partial result is attached.
    #[error("quadrature did not converge (value {re:.6e}{im:+.6e}i, err_est {err:.3e}, {n} evaluations)",
        re = .0.value.re, im = .0.value.im, err = .0.err_est, n = .0.n_evals)]
    NoConvergence(QuadResult),

    #[error("invalid quadrature configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid interval [{lo}, {hi}]")]
    InvalidInterval { lo: f64, hi: f64 },

    /// The case has no value of the requested kind (e.g. a closed-form RHS
    /// for an identity whose right-hand side is itself a quadrature).
    #[error("unsupported for this case: {0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn pole(msg: impl Into<String>) -> Self {
        Error::Pole(msg.into())
    }
}
