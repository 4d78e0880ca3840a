//! Runtime property suites behind the `selftest` command.
//!
//! Each suite runs a fixed, seeded set of checks so two runs print the same
//! thing.

use std::f64::consts::{E, FRAC_PI_2, PI};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::case::{CaseId, CaseParams};
use crate::closedform::{rhs_final1, rhs_value};
use crate::harness::{self, catalog};
use crate::kernel::{self, conjugate_symmetry_check, principal_log, Domain, KernelPoint};
use crate::quad::{
    integrate_de, integrate_de_with, integrate_finite, integrate_semi_infinite, Abscissa, QuadConfig,
    QuadResult,
};
use crate::specfun::{
    digamma, gauss_product_gamma, hurwitz_zeta, log_abs_gamma, log_gamma_real, reciprocal_gamma,
    riemann_zeta, LN_2,
};

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: usize,
    pub total: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Suite {
    name: &'static str,
    passed: usize,
    total: usize,
    failures: Vec<String>,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Self { name, passed: 0, total: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(what());
        }
    }

    fn finish(self) -> SuiteResult {
        SuiteResult { name: self.name, passed: self.passed, total: self.total, failures: self.failures }
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(20_240_601)
}

fn log_gamma_recurrence() -> SuiteResult {
    let mut s = Suite::new("log-gamma recurrence");
    for i in 1..=500 {
        let x = 0.1 * i as f64;
        let lhs = log_gamma_real(x + 1.0).unwrap() - log_gamma_real(x).unwrap() - x.ln();
        s.check(lhs.abs() < 1e-13, || format!("x={x}: residual {lhs:e}"));
    }
    s.finish()
}

fn log_gamma_reflection() -> SuiteResult {
    let mut s = Suite::new("log-gamma reflection");
    let mut rng = rng();
    for _ in 0..200 {
        let z = c(rng.gen_range(-6.0..6.0), rng.gen_range(-4.0..4.0));
        if z.im.abs() < 1e-3 && (z.re - z.re.round()).abs() < 1e-3 {
            continue;
        }
        let sin = (PI * z).sin().norm().ln();
        let res = log_abs_gamma(z).unwrap() + log_abs_gamma(1.0 - z).unwrap() - PI.ln() + sin;
        s.check(res.abs() < 1e-11, || format!("z={z}: residual {res:e}"));
    }
    s.finish()
}

fn hurwitz_shift() -> SuiteResult {
    let mut s = Suite::new("hurwitz shift");
    for re in [-3.0, -2.5, -1.0, -0.5, 0.0, 0.5, 2.0, 3.0, 4.0] {
        for im in [0.0, 1.5] {
            let sv = c(re, im);
            for q in [0.5, 1.0, 1.75, 3.0] {
                let a = hurwitz_zeta(sv, q).unwrap();
                let b = hurwitz_zeta(sv, q + 1.0).unwrap();
                let term = c(q, 0.0).powc(-sv);
                let res = (a - b - term).norm() / a.norm().max(1.0);
                s.check(res < 1e-11, || format!("s={sv}, q={q}: residual {res:e}"));
            }
        }
    }
    for sv in [c(2.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0), c(0.5, 14.0), c(-2.2, -3.0)] {
        s.check(riemann_zeta(sv).unwrap() == hurwitz_zeta(sv, 1.0).unwrap(), || {
            format!("riemann_zeta({sv}) differs from hurwitz_zeta({sv}, 1)")
        });
    }
    s.finish()
}

fn digamma_derivative() -> SuiteResult {
    let mut s = Suite::new("digamma derivative");
    let h = 1e-5;
    for i in 1..=100 {
        let x = 0.2 + 0.3 * i as f64;
        let fd = (log_gamma_real(x + h).unwrap() - log_gamma_real(x - h).unwrap()) / (2.0 * h);
        let res = digamma(x).unwrap() - fd;
        s.check(res.abs() < 1e-6, || format!("x={x}: residual {res:e}"));
    }
    s.finish()
}

fn gauss_product_convergence() -> SuiteResult {
    let mut s = Suite::new("gauss-product convergence");
    for x in [0.5, 1.0, 2.5, 4.0] {
        let exact = log_gamma_real(x).unwrap().exp();
        let errs: Vec<f64> = [100u64, 1_000, 10_000]
            .iter()
            .map(|&n| (gauss_product_gamma(x, n).unwrap() - exact).abs())
            .collect();
        s.check(errs[0] > errs[1] && errs[1] > errs[2], || format!("x={x}: errors {errs:?}"));
        for w in errs.windows(2) {
            // order 1/n: each decade cuts the error by about 10
            let ratio = w[0] / w[1];
            s.check((7.0..13.0).contains(&ratio), || format!("x={x}: decade ratio {ratio}"));
        }
    }
    s.finish()
}

fn reciprocal_gamma_modulus() -> SuiteResult {
    let mut s = Suite::new("reciprocal-gamma modulus");
    let mut rng = rng();
    for _ in 0..200 {
        let z = c(rng.gen_range(-5.0..8.0), rng.gen_range(-3.0..3.0));
        if let Ok(lg) = log_abs_gamma(z) {
            let m = reciprocal_gamma(z).norm() * lg.exp();
            s.check((m - 1.0).abs() < 1e-11, || format!("z={z}: modulus {m}"));
        }
    }
    s.finish()
}

fn honesty_cases() -> Vec<(&'static str, Box<dyn Fn(&QuadConfig) -> QuadResult>, f64)> {
    let re = |f: fn(f64) -> f64| move |x: f64| c(f(x), 0.0);
    let midpoint = |f: fn(f64) -> f64, lo: f64, hi: f64| {
        let n = 1_000_000;
        let h = (hi - lo) / n as f64;
        (0..n).map(|k| f(lo + (k as f64 + 0.5) * h)).sum::<f64>() * h
    };
    let fin = |f: fn(f64) -> f64, lo: f64, hi: f64| -> Box<dyn Fn(&QuadConfig) -> QuadResult> {
        Box::new(move |cfg| integrate_finite(re(f), lo, hi, cfg).unwrap())
    };
    let de = |f: fn(f64) -> f64, lo: f64, hi: f64| -> Box<dyn Fn(&QuadConfig) -> QuadResult> {
        Box::new(move |cfg| integrate_de(re(f), lo, hi, cfg).unwrap())
    };
    // integrands of the endpoint offsets, for 1 − x² = (1 + x)(1 − x)
    let de_offsets = |f: fn(Abscissa) -> f64, lo: f64, hi: f64| -> Box<dyn Fn(&QuadConfig) -> QuadResult> {
        Box::new(move |cfg| integrate_de_with(|p| Some(c(f(p), 0.0)), lo, hi, cfg).unwrap())
    };
    let semi = |f: fn(f64) -> f64| -> Box<dyn Fn(&QuadConfig) -> QuadResult> {
        Box::new(move |cfg| integrate_semi_infinite(re(f), 0.0, cfg).unwrap())
    };
    let exp_cos: fn(f64) -> f64 = |x| x.cos().exp();
    let exp_cos_2x: fn(f64) -> f64 = |x| x.cos().exp() * (2.0 * x).cos();
    vec![
        ("x on [0,1]", fin(|x| x, 0.0, 1.0), 0.5),
        ("x^2 on [0,3]", fin(|x| x * x, 0.0, 3.0), 9.0),
        ("sin on [0,pi]", fin(f64::sin, 0.0, PI), 2.0),
        ("exp on [0,1]", fin(f64::exp, 0.0, 1.0), E - 1.0),
        ("1/(1+x^2) on [0,1]", fin(|x| 1.0 / (1.0 + x * x), 0.0, 1.0), PI / 4.0),
        ("cos 7x on [0,1]", fin(|x| (7.0 * x).cos(), 0.0, 1.0), 7f64.sin() / 7.0),
        ("1/(1.25 - cos x) on [0,2pi]", fin(|x| 1.0 / (1.25 - x.cos()), 0.0, 2.0 * PI), 2.0 * PI / 0.75),
        ("ln x on [0,1]", de(f64::ln, 0.0, 1.0), -1.0),
        ("1/sqrt x on [0,1]", de(|x| 1.0 / x.sqrt(), 0.0, 1.0), 2.0),
        ("ln(2cos x) on [0,pi/2]", de(|x| (2.0 * x.cos()).ln(), 0.0, FRAC_PI_2), 0.0),
        ("sqrt(1-x^2) on [-1,1]", de_offsets(|p| (p.from_lo * p.to_hi).sqrt(), -1.0, 1.0), FRAC_PI_2),
        ("1/sqrt(1-x^2) on [-1,1]", de_offsets(|p| 1.0 / (p.from_lo * p.to_hi).sqrt(), -1.0, 1.0), PI),
        ("ln x ln(1-x) on [0,1]", de(|x| x.ln() * (-x).ln_1p(), 0.0, 1.0), 2.0 - PI * PI / 6.0),
        ("e^-y on [0,inf)", semi(|y| (-y).exp()), 1.0),
        ("y e^-y on [0,inf)", semi(|y| y * (-y).exp()), 1.0),
        ("1/(1+y^2) on [0,inf)", semi(|y| 1.0 / (1.0 + y * y)), FRAC_PI_2),
        ("y/(e^y-1) on [0,inf)", semi(|y| if y > 0.0 { y / y.exp_m1() } else { 1.0 }), PI * PI / 6.0),
        ("e^-y^2 on [0,inf)", semi(|y| (-y * y).exp()), 0.5 * PI.sqrt()),
        ("exp(cos x) on [0,2pi]", fin(exp_cos, 0.0, 2.0 * PI), midpoint(exp_cos, 0.0, 2.0 * PI)),
        (
            "exp(cos x) cos 2x on [0,2pi]",
            fin(exp_cos_2x, 0.0, 2.0 * PI),
            midpoint(exp_cos_2x, 0.0, 2.0 * PI),
        ),
    ]
}

/// True error against 10·err_est on 20 integrals with known values; at
/// most one may exceed it.
pub fn error_estimate_honesty(cfg: &QuadConfig) -> SuiteResult {
    let mut s = Suite::new("error-estimate honesty");
    let mut misses = Vec::new();
    let cases = honesty_cases();
    for (name, run, exact) in &cases {
        let r = run(cfg);
        let err = (r.value.re - exact).abs();
        if err > 10.0 * r.err_est {
            misses.push(format!("{name}: true error {err:e} > 10 x {:e}", r.err_est));
        }
    }
    s.check(misses.len() <= 1, || misses.join("; "));
    s.check(cases.len() == 20, || format!("expected 20 integrals, have {}", cases.len()));
    s.finish()
}

fn quadrature_linearity(cfg: &QuadConfig) -> SuiteResult {
    let mut s = Suite::new("quadrature linearity");
    let mut rng = rng();
    for _ in 0..20 {
        let (p, q, w, k) = (
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(0.5..6.0),
            rng.gen_range(-3.0..3.0),
        );
        let f = move |x: f64| c((p * x).exp(), (w * x).sin());
        let g = move |x: f64| c(x * x * q, (x + 1.0).ln());
        let (lo, hi) = (0.0, 1.5);
        let a = integrate_finite(f, lo, hi, cfg).unwrap();
        let b = integrate_finite(g, lo, hi, cfg).unwrap();
        let ab = integrate_finite(move |x| k * f(x) + g(x), lo, hi, cfg).unwrap();
        let diff = (ab.value - (k * a.value + b.value)).norm();
        let bound = ab.err_est + k.abs() * a.err_est + b.err_est + 1e-14 * ab.value.norm().max(1.0);
        s.check(diff <= bound, || format!("k={k}: diff {diff:e} > {bound:e}"));
    }
    s.finish()
}

fn split_additivity(cfg: &QuadConfig) -> SuiteResult {
    let mut s = Suite::new("split additivity");
    let mut rng = rng();
    let f = |x: f64| c((3.0 * x).cos() * (-x).exp(), x.sqrt());
    for _ in 0..20 {
        let m = rng.gen_range(0.05..1.95);
        let whole = integrate_finite(f, 0.0, 2.0, cfg).unwrap();
        let left = integrate_finite(f, 0.0, m, cfg).unwrap();
        let right = integrate_finite(f, m, 2.0, cfg).unwrap();
        let diff = (whole.value - left.value - right.value).norm();
        let bound = whole.err_est + left.err_est + right.err_est + 1e-14;
        s.check(diff <= bound, || format!("m={m}: diff {diff:e} > {bound:e}"));
    }
    s.finish()
}

fn conjugate_pass_through(cfg: &QuadConfig) -> SuiteResult {
    let mut s = Suite::new("conjugate symmetry pass-through");
    let fs: Vec<Box<dyn Fn(f64) -> Complex64>> = vec![
        Box::new(|x| c(0.0, x).exp()),
        Box::new(|x| c(x * x, x * x * x)),
        Box::new(|x| c(x.cos(), (2.0 * x).sin()) / c(2.0, x)),
    ];
    for (i, f) in fs.iter().enumerate() {
        let r = integrate_finite(f, -1.3, 1.3, cfg).unwrap();
        let bound = 10.0 * r.err_est + 1e-16;
        s.check(r.value.im.abs() <= bound, || format!("f{i}: |Im| = {:e}", r.value.im.abs()));
    }
    s.finish()
}

fn kernel_identity() -> SuiteResult {
    let mut s = Suite::new("kernel identity");
    let lim = FRAC_PI_2 - 1e-3;
    let mut worst = 0.0_f64;
    for i in 0..1000 {
        let x = -lim + 2.0 * lim * i as f64 / 999.0;
        let y = principal_log(x).unwrap();
        let d = y.exp() - (1.0 + c(0.0, -2.0 * x).exp());
        worst = worst.max(d.re.abs().max(d.im.abs()));
    }
    s.check(worst < 1e-13, || format!("worst residual {worst:e}"));

    let mut worst_pair = 0.0_f64;
    for i in 1..400 {
        let x = FRAC_PI_2 * i as f64 / 400.0;
        let plus = KernelPoint::new(x).unwrap();
        let minus = KernelPoint::new(-x).unwrap();
        let paired = c(0.0, -0.5) * (x / plus.y - x / minus.y);
        let real = x * x / (x * x + plus.l * plus.l);
        worst_pair = worst_pair.max((paired - real).norm());
    }
    s.check(worst_pair < 1e-13, || format!("pairing residual {worst_pair:e}"));

    for e in catalog() {
        if e.interval != Domain::Symmetric {
            continue;
        }
        for p in &e.grid {
            if let Ok(f) = kernel::lhs_integrand(e.id, p) {
                s.check(conjugate_symmetry_check(|x| f.eval(x), FRAC_PI_2, 64), || {
                    format!("{} at {p} is not conjugate-symmetric", e.id)
                });
            }
        }
    }
    s.finish()
}

fn lobachevskii(cfg: &QuadConfig) -> SuiteResult {
    let mut s = Suite::new("lobachevskii integral");
    let r = harness::lhs_quadrature(CaseId::Lobachevsky, &CaseParams::none(), cfg).unwrap();
    s.check(r.value.norm() < 1e-12, || format!("integral {}", r.value));
    let plain = integrate_de(|x: f64| c((2.0 * x.cos()).ln(), 0.0), 0.0, FRAC_PI_2, cfg).unwrap();
    s.check(plain.value.norm() < 1e-10, || format!("plain-x route {}", plain.value));
    s.finish()
}

fn closed_form_properties() -> SuiteResult {
    let mut s = Suite::new("closed-form consistency");
    for eps in [1e-3, 1e-6] {
        for case in [CaseId::FLog, CaseId::GLogCos2x] {
            let lo = rhs_value(case, &CaseParams::a(LN_2 - eps)).unwrap().value.re;
            let hi = rhs_value(case, &CaseParams::a(LN_2 + eps)).unwrap().value.re;
            s.check((lo - hi).abs() < 10.0 * eps, || format!("{case} jump {:e} at eps={eps}", lo - hi));
        }
    }
    // expansion branch against the literal formula extrapolated from ±1e−4
    for beta in [0.0, 0.5, 2.0] {
        let literal = |a: f64| {
            let z = hurwitz_zeta(c(a + 1.0, 0.0), beta + 1.0).unwrap();
            (-PI * reciprocal_gamma(c(-a, 0.0)) * z).re
        };
        let h = 1e-4;
        let slope = (literal(h) - literal(-h)) / (2.0 * h);
        // symmetric means carry an O(h²) bias; one Richardson step removes it
        let mean = |h: f64| (literal(h) + literal(-h)) / 2.0;
        let center = (4.0 * mean(h / 2.0) - mean(h)) / 3.0;
        for a in [-1e-7, 1e-7] {
            let branch = rhs_value(CaseId::HurwitzRep, &CaseParams::alpha_beta(a, beta))
                .unwrap()
                .value
                .re;
            let extrapolated = center + slope * a;
            s.check((branch - extrapolated).abs() < 1e-8, || {
                format!("beta={beta}, alpha={a}: {branch} vs {extrapolated}")
            });
        }
    }
    for beta in [-0.4, 0.0, 0.5, 1.0, 2.0, 5.0] {
        let chain = rhs_final1(beta).unwrap();
        let direct = rhs_value(CaseId::GenBeta, &CaseParams::beta(beta)).unwrap().value.re;
        s.check(((chain - direct) / direct).abs() < 1e-12, || format!("final1 at beta={beta}"));
    }
    for a in [-3.0_f64, -0.5, -1e-3, 1e-3, 0.3, 2.0] {
        let b = a.min(LN_2);
        let arg: f64 = a / (b.exp() - 1.0);
        s.check(arg > 0.0, || format!("log argument at a={a} is {arg}"));
    }
    s.finish()
}

fn telescoping(cfg: &QuadConfig) -> SuiteResult {
    let mut s = Suite::new("n-family telescoping");
    for (r, terms) in [(0.3, 5), (0.1, 3), (0.45, 4)] {
        let t = harness::telescoping_check(r, terms, cfg).unwrap();
        s.check(t.holds, || format!("r={r}, N={terms}: {t:?}"));
    }
    s.finish()
}

/// Every suite, in a fixed order.
pub fn run_all(cfg: &QuadConfig) -> Vec<SuiteResult> {
    vec![
        log_gamma_recurrence(),
        log_gamma_reflection(),
        hurwitz_shift(),
        digamma_derivative(),
        gauss_product_convergence(),
        reciprocal_gamma_modulus(),
        quadrature_linearity(cfg),
        split_additivity(cfg),
        error_estimate_honesty(cfg),
        conjugate_pass_through(cfg),
        kernel_identity(),
        lobachevskii(cfg),
        closed_form_properties(),
        telescoping(cfg),
    ]
}
