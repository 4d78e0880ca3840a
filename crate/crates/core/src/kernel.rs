//! The kernel y(x) = ln(1 + e^{−2ix}) = ln(2 cos x) − ix on (−π/2, π/2)
//! and the left-hand-side integrand of every catalog case.
//!
//! Integrands are evaluated from a pair (x, co) with co = π/2 − |x| supplied
//! by the quadrature transform, so ln(2 cos x) stays accurate right up to the
//! logarithmic singularity at ±π/2.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::case::{CaseId, CaseParams};
use crate::error::{Error, Result};
use crate::specfun::{self, LN_2};

const HALF_OVER_I: Complex64 = Complex64::new(0.0, -0.5);

/// Kernel sample: x, L = ln(2 cos x) and y = L − ix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelPoint {
    pub x: f64,
    pub l: f64,
    pub y: Complex64,
    ln_cos: f64,
}

impl KernelPoint {
    pub fn new(x: f64) -> Result<Self> {
        if !(x.abs() < FRAC_PI_2) {
            return Err(Error::domain(format!("kernel requires |x| < π/2, got {x}")));
        }
        Ok(Self::with_coangle(x, FRAC_PI_2 - x.abs()))
    }

    /// Builds the point from x and its co-angle co = π/2 − |x|.
    pub fn with_coangle(x: f64, co: f64) -> Self {
        let ln_cos = if co < 0.25 {
            co.sin().ln()
        } else if x.abs() < 0.25 {
            let s = (0.5 * x).sin();
            (-2.0 * s * s).ln_1p()
        } else {
            x.cos().ln()
        };
        let l = LN_2 + ln_cos;
        Self {
            x,
            l,
            y: Complex64::new(l, -x),
            ln_cos,
        }
    }

    /// ln cos x.
    pub fn ln_cos(&self) -> f64 {
        self.ln_cos
    }

    /// ln(2e^{−a} cos x) = L − a, formed as ln cos x + (ln 2 − a) so that
    /// a = ln 2 gives ln cos x exactly.
    pub fn shifted(&self, a: f64) -> f64 {
        self.ln_cos + (LN_2 - a)
    }

    /// y − a as a complex number, with the same cancellation-free real part.
    pub fn shifted_y(&self, a: f64) -> Complex64 {
        Complex64::new(self.shifted(a), -self.x)
    }
}

/// Principal branch of ln(1 + e^{−2ix}) = ln(2 cos x) − ix for |x| < π/2.
pub fn principal_log(x: f64) -> Result<Complex64> {
    KernelPoint::new(x).map(|p| p.y)
}

/// Integration domain of a case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// (−π/2, π/2), complex kernel form.
    Symmetric,
    /// [0, π/2], real form.
    HalfInterval,
    /// [0, ∞).
    SemiInfinite,
}

impl Domain {
    pub fn bounds(self) -> (f64, f64) {
        match self {
            Domain::Symmetric => (-FRAC_PI_2, FRAC_PI_2),
            Domain::HalfInterval => (0.0, FRAC_PI_2),
            Domain::SemiInfinite => (0.0, f64::INFINITY),
        }
    }
}

type Func = Box<dyn Fn(f64, f64) -> Option<Complex64> + Send + Sync>;

/// A left-hand-side integrand with its interval and singularity tags.
///
/// The wrapped function takes `(x, co)`. On kernel domains co = π/2 − |x|;
/// on the semi-infinite domain co is unused.
pub struct Integrand {
    pub domain: Domain,
    /// Integrand or a derivative blows up at the lower end.
    pub singular_lo: bool,
    /// Integrand or a derivative blows up at the upper end.
    pub singular_hi: bool,
    /// Imaginary part has an odd 1/x singularity at x = 0; only the pairing
    /// x ↔ −x defines the integral.
    pub principal_value_at_zero: bool,
    func: Func,
}

impl std::fmt::Debug for Integrand {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Integrand")
            .field("domain", &self.domain)
            .field("singular_lo", &self.singular_lo)
            .field("singular_hi", &self.singular_hi)
            .field("principal_value_at_zero", &self.principal_value_at_zero)
            .finish_non_exhaustive()
    }
}

impl Integrand {
    fn new(domain: Domain, func: Func) -> Self {
        let (singular_lo, singular_hi) = match domain {
            Domain::Symmetric => (true, true),
            Domain::HalfInterval => (false, true),
            Domain::SemiInfinite => (false, false),
        };
        Self {
            domain,
            singular_lo,
            singular_hi,
            principal_value_at_zero: false,
            func,
        }
    }

    fn symmetric(f: impl Fn(&KernelPoint) -> Complex64 + Send + Sync + 'static) -> Self {
        Self::new(
            Domain::Symmetric,
            Box::new(move |x, co| finite(f(&KernelPoint::with_coangle(x, co)))),
        )
    }

    fn half(f: impl Fn(&KernelPoint) -> f64 + Send + Sync + 'static) -> Self {
        Self::new(
            Domain::HalfInterval,
            Box::new(move |x, co| finite(Complex64::new(f(&KernelPoint::with_coangle(x, co)), 0.0))),
        )
    }

    fn semi_infinite(f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        Self::new(
            Domain::SemiInfinite,
            Box::new(move |y, _| finite(Complex64::new(f(y), 0.0))),
        )
    }

    fn singular_at_zero(mut self) -> Self {
        self.singular_lo = true;
        self
    }

    /// Value at x; NaN where the integrand cannot be evaluated.
    pub fn eval(&self, x: f64) -> Complex64 {
        let co = match self.domain {
            Domain::SemiInfinite => f64::INFINITY,
            _ => FRAC_PI_2 - x.abs(),
        };
        self.eval_with_coangle(x, co)
            .unwrap_or(Complex64::new(f64::NAN, f64::NAN))
    }

    /// Value at x with an externally supplied co-angle; `None` if invalid.
    pub fn eval_with_coangle(&self, x: f64, co: f64) -> Option<Complex64> {
        (self.func)(x, co)
    }
}

fn finite(v: Complex64) -> Option<Complex64> {
    v.is_finite().then_some(v)
}

/// ln(x² + v²) without overflow or premature underflow.
fn ln_sum_squares(x: f64, v: f64) -> f64 {
    2.0 * x.hypot(v).ln()
}

/// Checks the parameter domain of `case`.
pub fn check_domain(case: CaseId, p: &CaseParams) -> Result<()> {
    use CaseId::*;
    let finite_a = |p: &CaseParams| -> Result<f64> {
        let a = p.require_a()?;
        if !a.is_finite() {
            return Err(Error::domain("a must be finite"));
        }
        Ok(a)
    };
    let r_in_range = |p: &CaseParams| -> Result<()> {
        let r = p.require_r()?;
        if !(r > 0.0 && r < 0.5) {
            return Err(Error::domain(format!("requires 0 < r < 1/2, got r = {r}")));
        }
        Ok(())
    };
    match case {
        GmoM | FLog | GLogCos2x | FootnoteEquiv => finite_a(p).map(drop),
        GenBeta => {
            let b = p.require_beta()?;
            if b.im != 0.0 && !p.experimental {
                return Err(Error::domain("complex beta requires the experimental flag"));
            }
            if !(b.re > -1.0) {
                return Err(Error::domain(format!("requires Re beta > -1, got {}", b.re)));
            }
            Ok(())
        }
        HurwitzRep => {
            let alpha = p.require_alpha()?;
            if !alpha.is_finite() {
                return Err(Error::domain("alpha must be finite"));
            }
            let b = p.require_real_beta()?;
            if !(b > -1.0) {
                return Err(Error::domain(format!("requires beta > -1, got {b}")));
            }
            Ok(())
        }
        AlphaM1 => {
            let b = p.require_real_beta()?;
            if !(b > -1.0) {
                return Err(Error::domain(format!("requires beta > -1, got {b}")));
            }
            Ok(())
        }
        RiemannRep => {
            if !p.require_alpha()?.is_finite() {
                return Err(Error::domain("alpha must be finite"));
            }
            Ok(())
        }
        IntLogcosRatio | IntLogZero | IntZetaM1 | Lobachevsky | S3_1 | S3_2 | S3_3 | S3_4
        | S3_5 | S3_6 => Ok(()),
        GammaRatioR => r_in_range(p),
        LogabsGammaC => {
            let c = p.require_c()?;
            if !(c >= LN_2) || !c.is_finite() {
                return Err(Error::domain(format!("requires c >= ln 2, got c = {c}")));
            }
            Ok(())
        }
        Rem1 | Rem2 | NFamily => {
            r_in_range(p)?;
            if p.require_n()? < 1 {
                return Err(Error::domain("requires n >= 1"));
            }
            Ok(())
        }
        LaplaceRel => {
            let a = finite_a(p)?;
            if !(a > 0.0) {
                return Err(Error::domain(format!("requires a > 0, got {a}")));
            }
            Ok(())
        }
        Hurwitzdef => {
            let alpha = p.require_alpha()?;
            if alpha.im != 0.0 || !(alpha.re > 1.0) {
                return Err(Error::domain("requires real alpha > 1"));
            }
            let b = p.require_real_beta()?;
            if !(b > -1.0) {
                return Err(Error::domain(format!("requires beta > -1, got {b}")));
            }
            Ok(())
        }
        JBeta | Final1Chain => {
            let b = p.require_real_beta()?;
            if !(b > -0.5) {
                return Err(Error::domain(format!("requires beta > -1/2, got {b}")));
            }
            Ok(())
        }
        S3_7 => {
            let a = finite_a(p)?;
            if a == 0.0 {
                return Err(Error::domain("requires a != 0"));
            }
            let b = p.require_real_beta()?;
            if !(b > -1.0) {
                return Err(Error::domain(format!("requires beta > -1, got {b}")));
            }
            Ok(())
        }
        S3_8 => {
            if finite_a(p)? == 0.0 {
                return Err(Error::domain("requires a != 0"));
            }
            Ok(())
        }
    }
}

/// Integrand of M(a) = (4/π)∫₀^{π/2} x²/(x² + ln²(2e^{−a} cos x)) dx.
pub fn m_integrand(a: f64) -> Integrand {
    Integrand::half(move |k| {
        let s = k.shifted(a);
        std::f64::consts::FRAC_2_PI * 2.0 * k.x * k.x / (k.x * k.x + s * s)
    })
}

/// Half-interval real form x²/(x² + (L − a)²) on [0, π/2].
pub fn footnote_real_form(a: f64) -> Integrand {
    Integrand::half(move |k| {
        let s = k.shifted(a);
        k.x * k.x / (k.x * k.x + s * s)
    })
}

/// Gamma-ratio integrand with Γ replaced by its Gauss product of index
/// `terms − 1`, i.e. ln|∏_{j≤terms}(j − w)/(j + w)| + 2 Re w · ln(terms − 1)
/// with w = y/ln(1/r).
pub fn gamma_ratio_truncated(r: f64, terms: u32) -> Result<Integrand> {
    check_domain(CaseId::GammaRatioR, &CaseParams::r(r))?;
    if terms < 1 {
        return Err(Error::domain("requires at least one factor"));
    }
    let lambda = -r.ln();
    let m = (terms - 1) as f64;
    Ok(Integrand::half(move |k| {
        let w = k.y / lambda;
        let mut acc = if m >= 1.0 { 2.0 * w.re * m.ln() } else { 0.0 };
        for j in 1..=terms {
            let j = j as f64;
            acc += ((j - w) / (j + w)).norm().ln();
        }
        acc
    }))
}

/// Bernoulli polynomial Bₙ(x), n ≤ 30.
fn bernoulli_poly(n: usize, x: f64) -> f64 {
    let mut binom = 1.0;
    let mut acc = 0.0;
    for k in 0..=n {
        acc += binom * specfun::constants::bernoulli(k) * x.powi((n - k) as i32);
        binom = binom * (n - k) as f64 / (k + 1) as f64;
    }
    acc
}

/// (1/y)·[e^{−βy}/(eʸ−1) − 1/(y(1 + y(1/2+β)))], the regularized integrand
/// whose integral over (0, ∞) is J(β).
pub fn j_integrand(beta: f64) -> Integrand {
    let c = beta + 0.5;
    // Σ_{n≥2} Bₙ(−β)/n! · y^{n−2} − c²/(1 + cy) for small y
    let mut coeffs = [0.0; 10];
    let mut fact = 2.0;
    for (i, slot) in coeffs.iter_mut().enumerate() {
        let n = i + 2;
        *slot = bernoulli_poly(n, -beta) / fact;
        fact *= (n + 1) as f64;
    }
    Integrand::semi_infinite(move |y| {
        if y < 1e-3 {
            let mut series = 0.0;
            for &co in coeffs.iter().rev() {
                series = series * y + co;
            }
            series - c * c / (1.0 + c * y)
        } else {
            let bose = if y > 1.0 {
                (-(beta + 1.0) * y).exp() / -(-y).exp_m1()
            } else {
                (-beta * y).exp() / y.exp_m1()
            };
            (bose - 1.0 / (y * (1.0 + c * y))) / y
        }
    })
}

/// Left-hand-side integrand of `case` at parameters `p`.
pub fn lhs_integrand(case: CaseId, p: &CaseParams) -> Result<Integrand> {
    use CaseId::*;
    check_domain(case, p)?;
    let integrand = match case {
        GmoM => m_integrand(p.require_a()?),
        GenBeta => {
            let beta = p.require_beta()?;
            Integrand::symmetric(move |k| HALF_OVER_I * k.x * (beta * k.y).exp() / k.y)
        }
        HurwitzRep => {
            let alpha = p.require_alpha()?;
            let beta = p.require_beta()?;
            Integrand::symmetric(move |k| (beta * k.y + alpha * k.y.ln()).exp())
        }
        AlphaM1 => {
            let beta = p.require_beta()?;
            Integrand::symmetric(move |k| (beta * k.y).exp() / k.y)
        }
        RiemannRep => {
            let alpha = p.require_alpha()?;
            Integrand::symmetric(move |k| ((alpha - 1.0) * k.y.ln()).exp())
        }
        IntLogcosRatio => Integrand::half(|k| k.l / (k.x * k.x + k.l * k.l)),
        IntLogZero => Integrand::half(|k| ln_sum_squares(k.x, k.l)),
        IntZetaM1 => Integrand::half(|k| {
            let d = k.x * k.x + k.l * k.l;
            (k.l * k.l - k.x * k.x) / (d * d)
        }),
        FLog => {
            let a = p.require_a()?;
            let integrand = Integrand::half(move |k| ln_sum_squares(k.x, k.shifted(a)));
            if LN_2 - a == 0.0 {
                integrand.singular_at_zero()
            } else {
                integrand
            }
        }
        GLogCos2x => {
            let a = p.require_a()?;
            let integrand =
                Integrand::half(move |k| ln_sum_squares(k.x, k.shifted(a)) * cos_2x(k));
            if LN_2 - a == 0.0 {
                integrand.singular_at_zero()
            } else {
                integrand
            }
        }
        GammaRatioR => {
            let lambda = -p.require_r()?.ln();
            Integrand::half(move |k| {
                // 1 − (ix ± L)/ln r = 1 + (±L + ix)/λ
                let upper = Complex64::new(1.0 + k.l / lambda, k.x / lambda);
                let lower = Complex64::new(1.0 - k.l / lambda, k.x / lambda);
                log_abs_gamma_near_zero(upper) - log_abs_gamma_near_zero(lower)
            })
        }
        LogabsGammaC => {
            let c = p.require_c()?;
            let integrand = Integrand::half(move |k| {
                // c + ix − L, real part formed without cancellation at c = ln 2
                let z = Complex64::new((c - LN_2) - k.ln_cos(), k.x);
                log_abs_gamma_near_zero(z)
            });
            if c - LN_2 == 0.0 {
                integrand.singular_at_zero()
            } else {
                integrand
            }
        }
        Rem1 | Rem2 | NFamily => {
            let shift = p.require_n()? as f64 * -p.require_r()?.ln();
            Integrand::symmetric(move |k| match case {
                Rem1 => (k.y - shift).ln(),
                Rem2 => (k.y + shift).ln(),
                _ => ((k.y - shift) / (k.y + shift)).ln(),
            })
        }
        LaplaceRel => {
            let a = p.require_a()?;
            Integrand::semi_infinite(move |s| {
                let decay = (-a * s).exp();
                if decay == 0.0 {
                    0.0
                } else {
                    decay * specfun::digamma(s + 1.0).unwrap_or(f64::NAN)
                }
            })
        }
        Hurwitzdef => {
            let alpha = p.require_alpha()?.re;
            let beta = p.require_real_beta()?;
            Integrand::semi_infinite(move |y| {
                let power = (alpha - 1.0) * y.ln();
                if y > 1.0 {
                    (power - (beta + 1.0) * y).exp() / -(-y).exp_m1()
                } else {
                    (power - beta * y).exp() / y.exp_m1()
                }
            })
            .singular_at_zero()
        }
        JBeta => j_integrand(p.require_real_beta()?),
        Final1Chain => {
            return Err(Error::Unsupported(
                "FINAL1_CHAIN compares two closed forms and has no integrand".into(),
            ))
        }
        Lobachevsky => Integrand::half(|k| k.l),
        FootnoteEquiv => {
            let a = p.require_a()?;
            Integrand::symmetric(move |k| HALF_OVER_I * k.x / k.shifted_y(a))
        }
        S3_1 => Integrand::half(|k| ln_sum_squares(k.x, k.ln_cos())).singular_at_zero(),
        S3_2 => Integrand::half(|k| ln_sum_squares(k.x, k.ln_cos()) * cos_2x(k)).singular_at_zero(),
        S3_3 => Integrand::half(|k| ln_sum_squares(k.x, k.l) * cos_2x(k)),
        S3_4 => Integrand::half(|k| {
            let lc = k.ln_cos();
            if k.x == 0.0 {
                -0.5
            } else {
                lc / (k.x * k.x + lc * lc)
            }
        }),
        S3_5 => Integrand::half(|k| {
            let lc = k.ln_cos();
            if k.x == 0.0 {
                2.0
            } else {
                k.x * sin_2x(k) / (k.x * k.x + lc * lc)
            }
        }),
        S3_6 => Integrand::half(|k| k.x * sin_2x(k) / (k.x * k.x + k.l * k.l)),
        S3_7 => {
            let a = p.require_a()?;
            let beta = p.require_beta()?;
            let mut integrand =
                Integrand::symmetric(move |k| (beta * k.y).exp() / k.shifted_y(a));
            integrand.principal_value_at_zero = LN_2 - a == 0.0;
            integrand
        }
        S3_8 => {
            let a = p.require_a()?;
            Integrand::half(move |k| {
                let s = k.shifted(a);
                if k.x == 0.0 && s == 0.0 {
                    2.0
                } else {
                    k.x * sin_2x(k) / (k.x * k.x + s * s)
                }
            })
        }
    };
    Ok(integrand)
}

/// cos 2x, via the co-angle near π/2.
fn cos_2x(k: &KernelPoint) -> f64 {
    let co = FRAC_PI_2 - k.x.abs();
    if co < 0.25 {
        -(2.0 * co).cos()
    } else {
        (2.0 * k.x).cos()
    }
}

/// sin 2x = 2 sin x cos x, with cos x = exp(ln cos x) to keep endpoint accuracy.
fn sin_2x(k: &KernelPoint) -> f64 {
    2.0 * k.x.sin() * k.ln_cos().exp()
}

/// ln|Γ(z)|, using ln|Γ(z+1)| − ln|z| near the pole at the origin so that
/// logarithmically singular integrands stay evaluable.
fn log_abs_gamma_near_zero(z: Complex64) -> f64 {
    if z.norm() < 0.5 {
        specfun::log_abs_gamma(z + 1.0).unwrap_or(f64::NAN) - z.norm().ln()
    } else {
        specfun::log_abs_gamma(z).unwrap_or(f64::NAN)
    }
}

/// True iff f(−x) = conj(f(x)) at `samples` pseudo-random points of
/// (0, half_width), to 1e−12 relative to max(1, |f|).
pub fn conjugate_symmetry_check<F>(f: F, half_width: f64, samples: usize) -> bool
where
    F: Fn(f64) -> Complex64,
{
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_c0de);
    (0..samples).all(|_| {
        let x = rng.gen_range(0.0..half_width);
        let plus = f(x);
        let minus = f(-x);
        let scale = plus.norm().max(1.0);
        (minus - plus.conj()).norm() <= 1e-12 * scale
    })
}
