//! Verification engine: integrate each left-hand side, evaluate the right-hand
//! side, compare, and report.

mod catalog;

use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::time::Instant;

use num_complex::Complex64;
use rayon::prelude::*;

pub use catalog::{catalog, entry, CaseEntry, Strategy, Tier};

use crate::case::{CaseId, CaseParams};
use crate::closedform::{laplace_rhs, rhs_alternatives, rhs_final1, rhs_value};
use crate::error::{Error, Result};
use crate::kernel::{self, check_domain, Domain, Integrand};
use crate::quad::{
    integrate_de_with, integrate_finite_with, integrate_semi_infinite_with, Abscissa, QuadConfig,
    QuadResult,
};
use crate::specfun::{hurwitz_zeta, reciprocal_gamma, PI};

/// Floor for the imaginary-part check, relative to max(1, |lhs|).
pub const IM_FLOOR: f64 = 1e-13;

/// A mismatch must exceed this multiple of the tier to be called an erratum.
pub const MISMATCH_FACTOR: f64 = 100.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    PaperMismatch,
    SkippedDomain,
    NoConvergence,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::PaperMismatch => "PAPER_MISMATCH",
            Status::SkippedDomain => "SKIPPED_DOMAIN",
            Status::NoConvergence => "NO_CONVERGENCE",
        }
    }

    /// FAIL and NO_CONVERGENCE fail a run; the rest do not.
    pub fn is_failure(self) -> bool {
        matches!(self, Status::Fail | Status::NoConvergence)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationRecord {
    pub id: CaseId,
    pub params: CaseParams,
    pub lhs: Complex64,
    pub lhs_err_est: f64,
    pub rhs: Complex64,
    pub abs_diff: f64,
    pub rel_diff: f64,
    pub tol: f64,
    pub status: Status,
    pub n_evals: usize,
    pub wall_ms: f64,
    pub note: String,
}

impl VerificationRecord {
    fn blank(id: CaseId, params: CaseParams, tol: f64) -> Self {
        let nan = Complex64::new(f64::NAN, f64::NAN);
        Self {
            id,
            params,
            lhs: nan,
            lhs_err_est: f64::NAN,
            rhs: nan,
            abs_diff: f64::NAN,
            rel_diff: f64::NAN,
            tol,
            status: Status::Fail,
            n_evals: 0,
            wall_ms: 0.0,
            note: String::new(),
        }
    }

    fn add_note(&mut self, text: impl AsRef<str>) {
        if !self.note.is_empty() {
            self.note.push_str("; ");
        }
        self.note.push_str(text.as_ref());
    }
}

/// Status counts of a run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub mismatch: usize,
    pub skipped: usize,
    pub no_convergence: usize,
}

impl Summary {
    pub fn of(records: &[VerificationRecord]) -> Self {
        let mut s = Summary::default();
        for r in records {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::PaperMismatch => s.mismatch += 1,
                Status::SkippedDomain => s.skipped += 1,
                Status::NoConvergence => s.no_convergence += 1,
            }
        }
        s
    }

    pub fn has_failures(&self) -> bool {
        self.fail + self.no_convergence > 0
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} pass / {} mismatch / {} skipped", self.pass, self.mismatch, self.skipped)?;
        if self.fail > 0 {
            write!(f, " / {} fail", self.fail)?;
        }
        if self.no_convergence > 0 {
            write!(f, " / {} no convergence", self.no_convergence)?;
        }
        Ok(())
    }
}

/// Integrates `f` over its declared interval.
///
/// Symmetric integrands are split at 0 into two tanh-sinh runs so the
/// imaginary part is a genuine sum of two independent estimates; a principal
/// value at 0 is taken by pairing x with −x on [0, π/2].
pub fn integrate(f: &Integrand, cfg: &QuadConfig) -> Result<QuadResult> {
    match f.domain {
        Domain::SemiInfinite => {
            integrate_semi_infinite_with(|p: Abscissa| f.eval_with_coangle(p.x, f64::INFINITY), 0.0, cfg)
        }
        Domain::HalfInterval => {
            let g = |p: Abscissa| f.eval_with_coangle(p.from_lo, p.to_hi);
            if f.singular_lo || f.singular_hi {
                integrate_de_with(g, 0.0, FRAC_PI_2, cfg)
            } else {
                integrate_finite_with(g, 0.0, FRAC_PI_2, cfg)
            }
        }
        Domain::Symmetric if f.principal_value_at_zero => {
            let g = |p: Abscissa| {
                let plus = f.eval_with_coangle(p.from_lo, p.to_hi)?;
                let minus = f.eval_with_coangle(-p.from_lo, p.to_hi)?;
                Some(plus + minus)
            };
            integrate_de_with(g, 0.0, FRAC_PI_2, cfg)
        }
        Domain::Symmetric => {
            let lower = integrate_de_with(
                |p: Abscissa| f.eval_with_coangle(-p.to_hi, p.from_lo),
                -FRAC_PI_2,
                0.0,
                cfg,
            );
            let upper = integrate_de_with(
                |p: Abscissa| f.eval_with_coangle(p.from_lo, p.to_hi),
                0.0,
                FRAC_PI_2,
                cfg,
            );
            match (lower, upper) {
                (Ok(l), Ok(u)) => Ok(l.combine(u)),
                (Err(Error::NoConvergence(l)), Ok(u)) | (Ok(u), Err(Error::NoConvergence(l))) => {
                    Err(Error::NoConvergence(l.combine(u)))
                }
                (Err(Error::NoConvergence(l)), Err(Error::NoConvergence(u))) => {
                    Err(Error::NoConvergence(l.combine(u)))
                }
                (Err(e), _) | (_, Err(e)) => Err(e),
            }
        }
    }
}

/// Quadrature of the left-hand side of `case` at `p`.
pub fn lhs_quadrature(case: CaseId, p: &CaseParams, cfg: &QuadConfig) -> Result<QuadResult> {
    let f = kernel::lhs_integrand(case, p)?;
    integrate(&f, cfg)
}

/// M(a) by quadrature.
pub fn m_quadrature(a: f64, cfg: &QuadConfig) -> Result<QuadResult> {
    integrate(&kernel::m_integrand(a), cfg)
}

/// ζ(α+1, β+1) = −I(α, β)·Γ(−α)/π from the integral representation.
pub fn zeta_via_integral(s: Complex64, q: f64, cfg: &QuadConfig) -> Result<QuadResult> {
    let alpha = s - 1.0;
    let beta = q - 1.0;
    let nearest = alpha.re.round().max(0.0);
    if (alpha - nearest).norm() < 0.1 {
        return Err(Error::domain(format!(
            "alpha = s - 1 must stay 0.1 away from non-negative integers, got {alpha}"
        )));
    }
    let mut p = CaseParams::none();
    p.alpha = Some(alpha);
    p.beta = Some(Complex64::new(beta, 0.0));
    let integral = lhs_quadrature(CaseId::HurwitzRep, &p, cfg)?;
    Ok(integral.scale(-1.0 / (PI * reciprocal_gamma(-alpha))))
}

/// Outcome of one side of a comparison.
struct Side {
    value: Complex64,
    err_est: f64,
    n_evals: usize,
}

impl From<QuadResult> for Side {
    fn from(q: QuadResult) -> Self {
        Side { value: q.value, err_est: q.err_est, n_evals: q.n_evals }
    }
}

fn closed(value: Complex64) -> Side {
    Side { value, err_est: 0.0, n_evals: 0 }
}

/// Left side, right side and any note for `case` at `p`.
fn evaluate(case: CaseId, p: &CaseParams, cfg: &QuadConfig) -> Result<(Side, Side, String)> {
    check_domain(case, p)?;
    let mut note = String::new();
    let (lhs, rhs) = match case {
        CaseId::LaplaceRel => {
            let a = p.require_a()?;
            let direct = lhs_quadrature(case, p, cfg)?;
            let m = m_quadrature(a, cfg)?;
            let rhs = laplace_rhs(a, m.value.re)?;
            note = format!("M(a) = {:.16e} (err_est {:.2e})", m.value.re, m.err_est);
            let rhs_side = Side { value: Complex64::new(rhs, 0.0), err_est: m.err_est, n_evals: m.n_evals };
            (direct.into(), rhs_side)
        }
        CaseId::Final1Chain => {
            let chained = rhs_final1(p.require_real_beta()?)?;
            let direct = rhs_value(case, p)?;
            (closed(Complex64::new(chained, 0.0)), closed(direct.value))
        }
        CaseId::FootnoteEquiv => {
            let complex_form = lhs_quadrature(case, p, cfg)?;
            let real_form = integrate(&kernel::footnote_real_form(p.require_a()?), cfg)?;
            note = format!(
                "combined err_est {:.2e}",
                complex_form.err_est + real_form.err_est
            );
            (complex_form.into(), real_form.into())
        }
        _ => {
            let rhs = rhs_value(case, p)?;
            if rhs.limit_branch_used {
                note = "limit branch".into();
            }
            (lhs_quadrature(case, p, cfg)?.into(), closed(rhs.value))
        }
    };
    Ok((lhs, rhs, note))
}

fn diffs(lhs: Complex64, rhs: Complex64) -> (f64, f64) {
    let abs = (lhs - rhs).norm();
    let scale = rhs.norm();
    let rel = if scale > 0.0 { abs / scale } else if abs == 0.0 { 0.0 } else { f64::INFINITY };
    (abs, rel)
}

fn within(abs: f64, rel: f64, tol: f64) -> bool {
    abs <= tol || rel <= tol
}

fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{:.16e}", z.re)
    } else {
        format!("{:.16e}{:+.16e}i", z.re, z.im)
    }
}

/// Verifies one case at one parameter point.
pub fn verify_case(case: CaseId, p: &CaseParams, cfg: &QuadConfig) -> VerificationRecord {
    let started = Instant::now();
    let entry = entry(case);
    let tol = entry.tier_at(p).tol();
    let mut rec = VerificationRecord::blank(case, *p, tol);

    match evaluate(case, p, cfg) {
        Ok((lhs, rhs, note)) => {
            rec.lhs = lhs.value;
            rec.lhs_err_est = lhs.err_est;
            rec.rhs = rhs.value;
            rec.n_evals = lhs.n_evals + rhs.n_evals;
            let (abs, rel) = diffs(lhs.value, rhs.value);
            rec.abs_diff = abs;
            rec.rel_diff = rel;
            if !note.is_empty() {
                rec.add_note(note);
            }
            rec.status = classify(&mut rec, lhs.err_est + rhs.err_est);
        }
        Err(Error::Domain(msg)) => {
            rec.status = Status::SkippedDomain;
            rec.add_note(msg);
        }
        Err(Error::NoConvergence(partial)) => {
            rec.status = Status::NoConvergence;
            rec.lhs = partial.value;
            rec.lhs_err_est = partial.err_est;
            rec.n_evals = partial.n_evals;
            rec.add_note(format!("quadrature budget exhausted after {} evaluations", partial.n_evals));
        }
        Err(e) => {
            rec.status = Status::Fail;
            rec.add_note(e.to_string());
        }
    }
    rec.wall_ms = started.elapsed().as_secs_f64() * 1e3;
    rec
}

fn classify(rec: &mut VerificationRecord, err_est: f64) -> Status {
    if !rec.lhs.is_finite() || !rec.rhs.is_finite() {
        rec.add_note("non-finite value");
        return Status::Fail;
    }
    // every identity in the catalog is real when its parameters are real
    if rec.params.all_real() {
        let bound = 10.0 * err_est + IM_FLOOR * rec.lhs.norm().max(1.0);
        if rec.lhs.im.abs() > bound {
            rec.add_note(format!("symmetry violation: |Im lhs| = {:.3e}", rec.lhs.im.abs()));
            return Status::Fail;
        }
    }
    if within(rec.abs_diff, rec.rel_diff, rec.tol) {
        return Status::Pass;
    }
    if rec.abs_diff > MISMATCH_FACTOR * rec.tol {
        for (desc, alt) in rhs_alternatives(rec.id, &rec.params) {
            let (abs, rel) = diffs(rec.lhs, alt);
            if within(abs, rel, rec.tol) {
                rec.add_note(format!(
                    "printed RHS {} disagrees; matches alternative {} = {} (abs_diff {:.3e})",
                    format_complex(rec.rhs),
                    desc,
                    format_complex(alt),
                    abs
                ));
                return Status::PaperMismatch;
            }
        }
    }
    Status::Fail
}

/// Every (case, params) pair of the full run, in catalog order.
pub fn default_jobs() -> Vec<(CaseId, CaseParams)> {
    catalog()
        .iter()
        .flat_map(|e| e.grid.iter().map(move |p| (e.id, *p)))
        .collect()
}

/// Runs `jobs` in parallel; the result order matches `jobs`.
pub fn verify_many(jobs: &[(CaseId, CaseParams)], cfg: &QuadConfig) -> Vec<VerificationRecord> {
    jobs.par_iter().map(|(id, p)| verify_case(*id, p, cfg)).collect()
}

/// Every catalog case over its fixed grid.
pub fn verify_all(cfg: &QuadConfig) -> Vec<VerificationRecord> {
    verify_many(&default_jobs(), cfg)
}

/// Compares the integral route for ζ(α+1, β+1) with Euler–Maclaurin.
pub fn crosscheck_hurwitz(
    alphas: &[Complex64],
    betas: &[f64],
    cfg: &QuadConfig,
) -> Vec<VerificationRecord> {
    let jobs: Vec<(Complex64, f64)> = alphas
        .iter()
        .flat_map(|&a| betas.iter().map(move |&b| (a, b)))
        .collect();
    jobs.par_iter()
        .map(|&(alpha, beta)| {
            let started = Instant::now();
            let mut p = CaseParams::none();
            p.alpha = Some(alpha);
            p.beta = Some(Complex64::new(beta, 0.0));
            let tol = Tier::Endpoint.tol();
            let mut rec = VerificationRecord::blank(CaseId::HurwitzRep, p, tol);
            rec.add_note("crosscheck: integral route vs Euler-Maclaurin zeta");
            let s = alpha + 1.0;
            let q = beta + 1.0;
            let outcome = check_domain(CaseId::HurwitzRep, &p)
                .and_then(|_| zeta_via_integral(s, q, cfg))
                .and_then(|integral| Ok((integral, hurwitz_zeta(s, q)?)));
            match outcome {
                Ok((integral, em)) => {
                    rec.lhs = integral.value;
                    rec.lhs_err_est = integral.err_est;
                    rec.rhs = em;
                    rec.n_evals = integral.n_evals;
                    let (abs, rel) = diffs(rec.lhs, rec.rhs);
                    rec.abs_diff = abs;
                    rec.rel_diff = rel;
                    rec.status = if within(abs, rel, tol) { Status::Pass } else { Status::Fail };
                }
                Err(Error::Domain(msg)) => {
                    rec.status = Status::SkippedDomain;
                    rec.add_note(msg);
                }
                Err(Error::NoConvergence(partial)) => {
                    rec.status = Status::NoConvergence;
                    rec.lhs = partial.value;
                    rec.lhs_err_est = partial.err_est;
                    rec.n_evals = partial.n_evals;
                }
                Err(e) => rec.add_note(e.to_string()),
            }
            rec.wall_ms = started.elapsed().as_secs_f64() * 1e3;
            rec
        })
        .collect()
}

/// Direct Laplace transform against the relation through M(a), per grid point.
pub fn crosscheck_laplace(a_grid: &[f64], cfg: &QuadConfig) -> Vec<VerificationRecord> {
    let jobs: Vec<(CaseId, CaseParams)> =
        a_grid.iter().map(|&a| (CaseId::LaplaceRel, CaseParams::a(a))).collect();
    verify_many(&jobs, cfg)
}

/// Partial sums of the N_FAMILY integrals against the gamma-ratio integral
/// with its Gauss product truncated to the same number of factors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Telescope {
    /// Σ_{n≤N} of the N_FAMILY left-hand sides.
    pub family_sum: f64,
    /// Twice the truncated gamma-ratio integral (the full interval is twice
    /// the half interval).
    pub truncated: f64,
    pub combined_err: f64,
    pub holds: bool,
}

pub fn telescoping_check(r: f64, terms: u32, cfg: &QuadConfig) -> Result<Telescope> {
    let mut family_sum = 0.0;
    let mut combined_err = 0.0;
    for n in 1..=terms {
        let q = lhs_quadrature(CaseId::NFamily, &CaseParams::r_n(r, n), cfg)?;
        family_sum += q.value.re;
        combined_err += q.err_est;
    }
    let t = integrate(&kernel::gamma_ratio_truncated(r, terms)?, cfg)?;
    let truncated = 2.0 * t.value.re;
    combined_err += 2.0 * t.err_est;
    // err estimates are level differences; allow rounding of the sums
    let slack = combined_err + 1e-13 * family_sum.abs().max(1.0);
    Ok(Telescope {
        family_sum,
        truncated,
        combined_err,
        holds: (family_sum - truncated).abs() <= slack,
    })
}

/// abs_diff at `cfg` and at halved tolerances.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Refinement {
    pub coarse: f64,
    pub fine: f64,
    /// fine ≤ 10·coarse, with coarse floored at a few ulps of |rhs|.
    pub holds: bool,
}

pub fn refinement_check(case: CaseId, p: &CaseParams, cfg: &QuadConfig) -> Refinement {
    let coarse = verify_case(case, p, cfg);
    let mut halved = *cfg;
    halved.abs_tol *= 0.5;
    halved.rel_tol *= 0.5;
    let fine = verify_case(case, p, &halved);
    let floor = 8.0 * f64::EPSILON * coarse.rhs.norm().max(1.0);
    Refinement {
        coarse: coarse.abs_diff,
        fine: fine.abs_diff,
        holds: fine.abs_diff <= 10.0 * coarse.abs_diff.max(floor),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::LN_2;

    fn cfg() -> QuadConfig {
        QuadConfig::default()
    }

    #[test]
    fn gmo_at_zero_passes() {
        let rec = verify_case(CaseId::GmoM, &CaseParams::a(0.0), &cfg());
        assert_eq!(rec.status, Status::Pass, "{rec:?}");
        assert!(rec.abs_diff < 1e-7);
    }

    #[test]
    fn domain_violation_is_skipped() {
        let rec = verify_case(CaseId::GenBeta, &CaseParams::beta(-1.5), &cfg());
        assert_eq!(rec.status, Status::SkippedDomain);
        let rec = verify_case(CaseId::GmoM, &CaseParams::a(1.0), &cfg());
        assert_eq!(rec.status, Status::SkippedDomain);
    }

    #[test]
    fn s3_1_is_adjudicated() {
        let rec = verify_case(CaseId::S3_1, &CaseParams::none(), &cfg());
        assert_eq!(rec.status, Status::PaperMismatch, "{rec:?}");
        assert!(rec.note.contains("alternative"));
        assert!((rec.lhs.re - PI * LN_2.ln()).abs() < 1e-5);
    }

    #[test]
    fn summary_line() {
        let s = Summary { pass: 3, mismatch: 1, skipped: 2, ..Summary::default() };
        assert_eq!(s.to_string(), "3 pass / 1 mismatch / 2 skipped");
        assert!(!s.has_failures());
    }

    #[test]
    fn zeta_integral_route_rejects_near_integers() {
        let r = zeta_via_integral(Complex64::new(1.05, 0.0), 1.0, &cfg());
        assert!(matches!(r, Err(Error::Domain(_))));
    }
}
