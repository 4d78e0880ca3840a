//! Acceptance suite: every criterion at its stated tolerance, one
//! `criterion k: PASS|FAIL` line each. Runs without the libtest harness so
//! the lines always reach the terminal.

use std::f64::consts::PI;
use std::process::{Command, ExitCode};
use std::time::Instant;

use gmo_core::case::{CaseId, CaseParams};
use gmo_core::closedform::{rhs_alternatives, rhs_final1, rhs_j, rhs_value};
use gmo_core::harness::{
    crosscheck_hurwitz, crosscheck_laplace, lhs_quadrature, m_quadrature, telescoping_check,
    verify_all, verify_case, Status, VerificationRecord,
};
use gmo_core::quad::QuadConfig;
use gmo_core::selftest;
use gmo_core::specfun::{
    euler_product_detailed, hurwitz_zeta, EULER_GAMMA, LN_2, LN_2PI,
};
use num_complex::Complex64;

const ENDPOINT: f64 = 1e-7;
const BOUNDARY: f64 = 1e-5;

type Check = Result<(), String>;

struct Ctx {
    cfg: QuadConfig,
    records: Vec<VerificationRecord>,
}

impl Ctx {
    fn find(&self, id: CaseId, pred: impl Fn(&CaseParams) -> bool) -> Result<&VerificationRecord, String> {
        self.records
            .iter()
            .find(|r| r.id == id && pred(&r.params))
            .ok_or_else(|| format!("no {} record for the requested params", id.name()))
    }
}

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond { Ok(()) } else { Err(msg()) }
}

fn pass_at(r: &VerificationRecord, tol: f64) -> Check {
    ensure(r.status == Status::Pass && r.tol == tol, || {
        format!(
            "{} {}: status {} tol {:e} abs {:e} ({})",
            r.id.name(), r.params, r.status, r.tol, r.abs_diff, r.note
        )
    })
}

fn real_eq(p: Option<Complex64>, v: f64) -> bool {
    p == Some(c(v))
}

fn criterion_1(ctx: &Ctx) -> Check {
    let r = verify_case(CaseId::GmoM, &CaseParams::a(0.0), &ctx.cfg);
    pass_at(&r, ENDPOINT)?;
    let expected = 0.5 * (1.0 - EULER_GAMMA + LN_2PI);
    ensure((r.rhs.re - expected).abs() < 1e-15, || format!("rhs {} vs {expected}", r.rhs.re))?;
    ensure((r.lhs.re - expected).abs() < ENDPOINT, || format!("lhs {}", r.lhs.re))
}

fn criterion_2(ctx: &Ctx) -> Check {
    for beta in [-0.9, -0.5, 0.0, 0.5, 1.0, 2.0, 5.0] {
        pass_at(ctx.find(CaseId::GenBeta, |p| real_eq(p.beta, beta))?, ENDPOINT)?;
    }
    // β = 0 is (π/4)·M(0)
    let g = lhs_quadrature(CaseId::GenBeta, &CaseParams::beta(0.0), &ctx.cfg).map_err(|e| e.to_string())?;
    let m = m_quadrature(0.0, &ctx.cfg).map_err(|e| e.to_string())?;
    let diff = (g.value.re - PI / 4.0 * m.value.re).abs();
    let budget = g.err_est + PI / 4.0 * m.err_est + 1e-14;
    ensure(diff <= budget, || format!("fold gap {diff:e} exceeds {budget:e}"))?;
    pass_at(ctx.find(CaseId::FootnoteEquiv, |p| p.a == Some(0.0))?, ENDPOINT)
}

fn criterion_3(ctx: &Ctx) -> Check {
    let alphas = [-2.5, -1.5, -1.0, -0.5, 0.5, 1.0, 1.5];
    let betas = [0.0, 0.5, 2.0];
    for &a in &alphas {
        for &b in &betas {
            let r = ctx.find(CaseId::HurwitzRep, |p| real_eq(p.alpha, a) && real_eq(p.beta, b))?;
            pass_at(r, ENDPOINT)?;
            if a == 1.0 {
                ensure(r.rhs == c(0.0), || format!("alpha=1 rhs {}", r.rhs))?;
            }
        }
    }
    let far: Vec<Complex64> = alphas
        .iter()
        .filter(|&&a| (a - 0.0_f64).abs() > 0.1 && (a - 1.0_f64).abs() > 0.1)
        .map(|&a| c(a))
        .collect();
    for r in crosscheck_hurwitz(&far, &betas, &ctx.cfg) {
        ensure(r.abs_diff < ENDPOINT, || {
            format!("crosscheck {}: {} {:e} ({})", r.params, r.status, r.abs_diff, r.note)
        })?;
    }
    Ok(())
}

fn criterion_4(ctx: &Ctx) -> Check {
    for beta in [0.0, 0.5, 1.0, 3.0] {
        let r = ctx.find(CaseId::AlphaM1, |p| real_eq(p.beta, beta))?;
        pass_at(r, ENDPOINT)?;
        let expected = PI * (1.0 + 2.0 * beta) / 2.0;
        ensure((r.rhs.re - expected).abs() < 1e-14, || format!("rhs {} vs {expected}", r.rhs.re))?;
    }
    Ok(())
}

fn criterion_5(ctx: &Ctx) -> Check {
    for alpha in [-2.0, -1.0, 0.0, 0.5, 2.0] {
        pass_at(ctx.find(CaseId::RiemannRep, |p| real_eq(p.alpha, alpha))?, ENDPOINT)?;
    }
    let one = verify_case(CaseId::RiemannRep, &CaseParams::alpha(1.0), &ctx.cfg);
    pass_at(&one, ENDPOINT)?;
    ensure((one.rhs.re - PI).abs() < 1e-15, || format!("alpha=1 rhs {}", one.rhs.re))?;

    let m1 = ctx.find(CaseId::RiemannRep, |p| real_eq(p.alpha, -1.0))?;
    let eq11 = ctx.find(CaseId::IntZetaM1, |_| true)?;
    ensure((m1.lhs.re - PI / 12.0).abs() < ENDPOINT, || format!("alpha=-1 lhs {}", m1.lhs.re))?;
    ensure((m1.lhs.re - 2.0 * eq11.lhs.re).abs() < ENDPOINT, || {
        format!("doubling: {} vs 2*{}", m1.lhs.re, eq11.lhs.re)
    })
}

fn criterion_6(ctx: &Ctx) -> Check {
    for (id, expected) in [
        (CaseId::IntLogcosRatio, PI / 4.0),
        (CaseId::IntLogZero, 0.0),
        (CaseId::IntZetaM1, PI / 24.0),
    ] {
        let r = ctx.find(id, |_| true)?;
        pass_at(r, ENDPOINT)?;
        ensure((r.rhs.re - expected).abs() < 1e-15, || format!("{} rhs {}", id.name(), r.rhs.re))?;
    }
    Ok(())
}

fn criterion_7(ctx: &Ctx) -> Check {
    for id in [CaseId::FLog, CaseId::GLogCos2x] {
        for a in [-2.0, -0.5, 0.0, 0.3, 1.0, 3.0] {
            pass_at(ctx.find(id, |p| p.a == Some(a))?, ENDPOINT)?;
        }
        pass_at(ctx.find(id, |p| p.a == Some(LN_2))?, BOUNDARY)?;
    }
    Ok(())
}

fn criterion_8(ctx: &Ctx) -> Check {
    for r in [0.05, 0.25, 0.45] {
        pass_at(ctx.find(CaseId::GammaRatioR, |p| p.r == Some(r))?, ENDPOINT)?;
        let e = euler_product_detailed(r).map_err(|e| e.to_string())?;
        ensure(e.tail_bound < 1e-15, || format!("r={r}: tail bound {:e}", e.tail_bound))?;
    }
    Ok(())
}

fn criterion_9(ctx: &Ctx) -> Check {
    for cc in [0.8, 1.0, 2.0, 5.0] {
        pass_at(ctx.find(CaseId::LogabsGammaC, |p| p.c == Some(cc))?, ENDPOINT)?;
    }
    pass_at(ctx.find(CaseId::LogabsGammaC, |p| p.c == Some(LN_2))?, BOUNDARY)
}

fn criterion_10(ctx: &Ctx) -> Check {
    for id in [CaseId::Rem1, CaseId::Rem2, CaseId::NFamily] {
        for n in [1, 2, 5] {
            pass_at(ctx.find(id, |p| p.r == Some(0.3) && p.n == Some(n))?, ENDPOINT)?;
        }
    }
    let t = telescoping_check(0.3, 5, &ctx.cfg).map_err(|e| e.to_string())?;
    ensure(t.holds, || format!("telescoping: {} vs {}", t.family_sum, t.truncated))
}

fn criterion_11(ctx: &Ctx) -> Check {
    for r in crosscheck_laplace(&[0.2, 0.3, LN_2, 0.8, 1.5, 3.0], &ctx.cfg) {
        ensure(r.abs_diff < 1e-6, || format!("{}: {:e} ({})", r.params, r.abs_diff, r.note))?;
    }
    Ok(())
}

fn criterion_12(ctx: &Ctx) -> Check {
    // Γ(2) = 1, Γ(3) = 2, Γ(3/2) = √π/2
    for (alpha, beta, gamma) in [(2.0, 0.0, 1.0), (3.0, 1.0, 2.0), (1.5, 0.5, PI.sqrt() / 2.0)] {
        let q = lhs_quadrature(CaseId::Hurwitzdef, &CaseParams::alpha_beta(alpha, beta), &ctx.cfg)
            .map_err(|e| e.to_string())?;
        let zeta = hurwitz_zeta(c(alpha), beta + 1.0).map_err(|e| e.to_string())?;
        let expected = gamma * zeta.re;
        let rel = (q.value.re - expected).abs() / expected.abs();
        ensure(rel < 1e-8, || format!("({alpha}, {beta}): rel {rel:e}"))?;
    }
    Ok(())
}

fn criterion_13(ctx: &Ctx) -> Check {
    for beta in [0.0, 0.5, 2.0] {
        let q = lhs_quadrature(CaseId::JBeta, &CaseParams::beta(beta), &ctx.cfg).map_err(|e| e.to_string())?;
        let rhs = rhs_j(beta).map_err(|e| e.to_string())?;
        ensure((q.value.re - rhs).abs() < 1e-7, || format!("J({beta}): {} vs {rhs}", q.value.re))?;
    }
    for beta in [0.0, 0.5, 1.0, 2.0, 5.0] {
        let chain = rhs_final1(beta).map_err(|e| e.to_string())?;
        let direct = rhs_value(CaseId::GenBeta, &CaseParams::beta(beta)).map_err(|e| e.to_string())?.value.re;
        let rel = (chain - direct).abs() / direct.abs();
        ensure(rel < 1e-12, || format!("final1({beta}): rel {rel:e}"))?;
    }
    Ok(())
}

fn criterion_14(ctx: &Ctx) -> Check {
    for id in [CaseId::S3_3, CaseId::S3_4, CaseId::S3_5, CaseId::S3_6] {
        pass_at(ctx.find(id, |_| true)?, ENDPOINT)?;
    }
    for a in [0.3, 1.5] {
        for beta in [0.0, 1.0] {
            pass_at(ctx.find(CaseId::S3_7, |p| p.a == Some(a) && real_eq(p.beta, beta))?, ENDPOINT)?;
        }
    }
    for a in [0.3, LN_2, 1.5] {
        let tol = if a == LN_2 { BOUNDARY } else { ENDPOINT };
        pass_at(ctx.find(CaseId::S3_8, |p| p.a == Some(a))?, tol)?;
    }
    Ok(())
}

fn criterion_15(ctx: &Ctx) -> Check {
    let mut verdicts = Vec::new();
    for id in [CaseId::S3_1, CaseId::S3_2] {
        let r = ctx.find(id, |_| true)?;
        let alts = rhs_alternatives(id, &r.params);
        ensure(alts.len() == 1, || format!("{} registers {} alternatives", id.name(), alts.len()))?;
        let printed_ok = (r.lhs - r.rhs).norm() <= BOUNDARY;
        let alt_ok = (r.lhs - alts[0].1).norm() <= BOUNDARY;
        ensure(printed_ok != alt_ok, || {
            format!("{}: lhs {} matches printed={printed_ok} alternative={alt_ok}", id.name(), r.lhs)
        })?;
        let expected = if printed_ok { Status::Pass } else { Status::PaperMismatch };
        ensure(r.status == expected, || format!("{}: status {}", id.name(), r.status))?;
        verdicts.push(format!("{} {}", id.name(), r.status));
    }
    let alt1 = PI * LN_2.ln();
    let alt2 = -PI / (2.0 * LN_2);
    let a1 = rhs_alternatives(CaseId::S3_1, &CaseParams::none())[0].1.re;
    let a2 = rhs_alternatives(CaseId::S3_2, &CaseParams::none())[0].1.re;
    ensure((a1 - alt1).abs() < 1e-15 && (a2 - alt2).abs() < 1e-15, || "alternatives differ".into())?;
    println!("    adjudication: {}", verdicts.join(", "));
    Ok(())
}

fn criterion_16(ctx: &Ctx) -> Check {
    for s in selftest::run_all(&ctx.cfg) {
        ensure(s.ok(), || format!("{}: {}/{} ({:?})", s.name, s.passed, s.total, s.failures))?;
    }
    let out = Command::new(env!("CARGO_BIN_EXE_gmo-verify"))
        .arg("selftest")
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || format!("selftest exit {:?}", out.status.code()))
}

/// CSV of a full run with the wall_ms column dropped.
fn full_run_csv() -> Result<Vec<Vec<String>>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_gmo-verify"))
        .args(["verify", "--format", "csv"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || format!("verify exit {:?}", out.status.code()))?;
    let mut rdr = csv::Reader::from_reader(out.stdout.as_slice());
    let headers = rdr.headers().map_err(|e| e.to_string())?.clone();
    let wall = headers.iter().position(|h| h == "wall_ms").ok_or("no wall_ms column")?;
    let mut rows = vec![headers.iter().map(str::to_string).collect::<Vec<_>>()];
    for rec in rdr.records() {
        let rec = rec.map_err(|e| e.to_string())?;
        rows.push(
            rec.iter()
                .enumerate()
                .filter(|&(i, _)| i != wall)
                .map(|(_, v)| v.to_string())
                .collect(),
        );
    }
    Ok(rows)
}

fn criterion_17(_: &Ctx) -> Check {
    let first = full_run_csv()?;
    let second = full_run_csv()?;
    ensure(first.len() > 1, || "empty report".into())?;
    ensure(first == second, || "consecutive runs differ".into())
}

fn main() -> ExitCode {
    let started = Instant::now();
    let cfg = QuadConfig::default();
    let ctx = Ctx { records: verify_all(&cfg), cfg };

    let criteria: [fn(&Ctx) -> Check; 17] = [
        criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
        criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12,
        criterion_13, criterion_14, criterion_15, criterion_16, criterion_17,
    ];
    let mut failed = 0;
    for (k, check) in criteria.iter().enumerate() {
        match check(&ctx) {
            Ok(()) => println!("criterion {}: PASS", k + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL ({msg})", k + 1);
            }
        }
    }
    let secs = started.elapsed().as_secs_f64();
    println!("acceptance: {} of 17 passed in {secs:.1} s", 17 - failed);
    if secs >= 60.0 {
        println!("acceptance: FAIL (wall time {secs:.1} s over the 60 s budget)");
        return ExitCode::FAILURE;
    }
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
