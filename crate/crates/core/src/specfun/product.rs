use crate::error::{Error, Result};

/// Tail cutoff for the Euler product: stop once rⁿ/(1−r) drops below this.
pub const EULER_PRODUCT_TAIL: f64 = 1e-17;

/// Value of ∏_{n≥1}(1−rⁿ) together with the geometric bound on the
/// relative size of the omitted factors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerProduct {
    pub value: f64,
    pub terms: u32,
    pub tail_bound: f64,
}

/// The Euler function ∏_{n≥1}(1−rⁿ) for 0 ≤ r < 1.
pub fn euler_product(r: f64) -> Result<f64> {
    euler_product_detailed(r).map(|p| p.value)
}

pub fn euler_product_detailed(r: f64) -> Result<EulerProduct> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::domain(format!("Euler product requires 0 <= r < 1, got {r}")));
    }
    if r == 0.0 {
        return Ok(EulerProduct { value: 1.0, terms: 0, tail_bound: 0.0 });
    }
    let mut log_sum = 0.0;
    let mut rn = r;
    let mut n = 0u32;
    loop {
        n += 1;
        log_sum += (-rn).ln_1p();
        rn *= r;
        let bound = rn / (1.0 - r);
        if bound < EULER_PRODUCT_TAIL {
            return Ok(EulerProduct { value: log_sum.exp(), terms: n, tail_bound: bound });
        }
    }
}
