//! Numerical verification of Glasser–Manna–Oloa type integral identities.
//!
//! The crate is layered bottom-up:
//!
//! * [`specfun`]: log-gamma, digamma, Hurwitz/Riemann zeta, Euler product.
//! * [`quad`]: adaptive Gauss–Kronrod and double-exponential quadrature
//!   for complex-valued integrands.
//! * [`kernel`]: the kernel y(x) = ln(1 + e^{−2ix}) and the left-hand-side
//!   integrand of every catalog case.
//! * [`closedform`]: right-hand sides, including removable-singularity limits.
//! * [`harness`]: the case catalog and the verification engine.

pub mod case;
pub mod closedform;
pub mod error;
pub mod harness;
pub mod kernel;
pub mod quad;
pub mod selftest;
pub mod specfun;

pub use error::{Error, Result};

/// Complex number carrier used throughout the crate.
pub type ComplexValue = num_complex::Complex64;
