//! Mathematical constants, rounded to nearest from 30-digit literals.

/// Euler's constant γ = 0.577215664901532860606512090082…
pub const EULER_GAMMA: f64 = 0.577215664901532860606512090082;

/// ln 2π = 1.83787706640934548356065947281…
pub const LN_2PI: f64 = 1.83787706640934548356065947281;

pub use std::f64::consts::{LN_2, PI};

/// ln π
pub(crate) const LN_PI: f64 = 1.14472988584940017414342735135;

/// Even-index Bernoulli numbers B₂, B₄, …, B₃₀.
pub(crate) const BERNOULLI_EVEN: [f64; 15] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
];

/// Bernoulli number Bₙ for n ≤ 30 (B₁ = −1/2 convention).
pub(crate) fn bernoulli(n: usize) -> f64 {
    match n {
        0 => 1.0,
        1 => -0.5,
        n if n % 2 == 1 => 0.0,
        n => BERNOULLI_EVEN[n / 2 - 1],
    }
}
