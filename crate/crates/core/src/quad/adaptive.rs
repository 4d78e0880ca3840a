use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_complex::Complex64;

use super::{check_interval, finite_sample, Abscissa, QuadConfig, QuadResult};
use crate::error::{Error, Result};

// 15-point Kronrod abscissae (positive half, descending) and weights.
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
// 7-point Gauss weights for XGK[1], XGK[3], XGK[5] and the centre.
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

#[derive(Debug, Clone, Copy)]
struct Panel {
    lo: f64,
    hi: f64,
    value: Complex64,
    err: f64,
    depth: usize,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err.total_cmp(&other.err) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

/// One Gauss–Kronrod panel. Error is |K15 − G7| rescaled as in QUADPACK.
fn gk15<F>(f: &F, lo: f64, hi: f64, a: f64, b: f64, depth: usize) -> Panel
where
    F: Fn(Abscissa) -> Option<Complex64>,
{
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let eval = |x: f64| -> Option<Complex64> {
        f(Abscissa {
            x,
            from_lo: x - a,
            to_hi: b - x,
        })
    };

    let mut fv = [Complex64::new(0.0, 0.0); 15];
    let mut bad = false;
    let mut put = |i: usize, x: f64| match eval(x) {
        Some(v) => fv[i] = v,
        None => bad = true,
    };
    put(7, center);
    for j in 0..7 {
        let dx = half * XGK[j];
        put(j, center - dx);
        put(14 - j, center + dx);
    }

    let mut kronrod = fv[7] * WGK[7];
    let mut gauss = fv[7] * WG[3];
    let mut res_abs = fv[7].norm() * WGK[7];
    for j in 0..7 {
        let pair = fv[j] + fv[14 - j];
        kronrod += pair * WGK[j];
        res_abs += (fv[j].norm() + fv[14 - j].norm()) * WGK[j];
        if j % 2 == 1 {
            gauss += pair * WG[j / 2];
        }
    }
    let mean = kronrod * 0.5;
    let mut res_asc = (fv[7] - mean).norm() * WGK[7];
    for j in 0..7 {
        res_asc += ((fv[j] - mean).norm() + (fv[14 - j] - mean).norm()) * WGK[j];
    }

    let value = kronrod * half;
    res_abs *= half.abs();
    res_asc *= half.abs();
    let mut err = ((kronrod - gauss) * half).norm();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    if bad || !value.is_finite() {
        err = f64::INFINITY;
    }
    Panel {
        lo,
        hi,
        value: if value.is_finite() { value } else { Complex64::new(0.0, 0.0) },
        err,
        depth,
    }
}

/// Adaptive Gauss–Kronrod quadrature of `f` over `[lo, hi]`.
pub fn integrate_finite<F>(f: F, lo: f64, hi: f64, cfg: &QuadConfig) -> Result<QuadResult>
where
    F: Fn(f64) -> Complex64,
{
    integrate_finite_with(|p: Abscissa| finite_sample(f(p.x)), lo, hi, cfg)
}

pub fn integrate_finite_with<F>(f: F, lo: f64, hi: f64, cfg: &QuadConfig) -> Result<QuadResult>
where
    F: Fn(Abscissa) -> Option<Complex64>,
{
    check_interval(lo, hi)?;
    cfg.validate()?;

    let mut heap = BinaryHeap::new();
    let mut frozen: Vec<Panel> = Vec::new();
    let first = gk15(&f, lo, hi, lo, hi, 0);
    let mut n_evals = 15;
    heap.push(first);

    loop {
        let value: Complex64 = heap.iter().chain(frozen.iter()).map(|p| p.value).sum();
        let err: f64 = heap.iter().chain(frozen.iter()).map(|p| p.err).sum();
        let result = QuadResult {
            value,
            err_est: err,
            n_evals,
            converged: false,
        };
        if err <= cfg.target(value.norm()) {
            return Ok(QuadResult {
                converged: true,
                ..result
            });
        }
        if n_evals + 30 > cfg.max_evals {
            return Err(Error::NoConvergence(result));
        }
        let Some(worst) = heap.pop() else {
            return Err(Error::NoConvergence(result));
        };
        let mid = 0.5 * (worst.lo + worst.hi);
        if worst.depth >= cfg.max_depth || !(worst.lo < mid && mid < worst.hi) {
            frozen.push(worst);
            continue;
        }
        heap.push(gk15(&f, worst.lo, mid, lo, hi, worst.depth + 1));
        heap.push(gk15(&f, mid, worst.hi, lo, hi, worst.depth + 1));
        n_evals += 30;
    }
}
