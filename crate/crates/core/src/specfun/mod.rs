//! Special functions: log-gamma variants, digamma, Hurwitz/Riemann zeta,
//! the Euler product and the Gauss product for Γ.
//!
//! All functions are pure and thread-safe.

pub mod constants;
mod gamma;
mod product;
mod zeta;

pub use constants::{EULER_GAMMA, LN_2, LN_2PI, PI};
pub use gamma::{
    digamma, gauss_product_gamma, log_abs_gamma, log_gamma_real, reciprocal_gamma, POLE_TOL,
};
pub use product::{euler_product, euler_product_detailed, EulerProduct, EULER_PRODUCT_TAIL};
pub use zeta::{
    hurwitz_zeta, hurwitz_zeta_s_derivative_at_0, riemann_zeta, S_DERIVATIVE_STEP, ZETA_POLE_TOL,
};

pub(crate) use gamma::ln_gamma_right;
