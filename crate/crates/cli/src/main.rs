//! gmo-verify: run the identity catalog, parameter sweeps and the dual-route
//! Hurwitz zeta from the command line.

mod report;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gmo_core::case::{CaseId, CaseParams, Slot};
use gmo_core::harness::{self, Status, Summary, VerificationRecord};
use gmo_core::quad::QuadConfig;
use gmo_core::{selftest, specfun};
use num_complex::Complex64;

#[derive(Parser, Debug)]
#[command(name = "gmo-verify", version, about = "Numerical verification of log-cosine integral identities")]
struct Cli {
    /// Absolute and relative quadrature tolerance.
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Integrand evaluation budget per quadrature.
    #[arg(long, global = true)]
    max_evals: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every catalog case with its anchor, domain and default parameters.
    List,
    /// Verify one case, or the whole catalog when --case is omitted.
    Verify {
        #[arg(long)]
        case: Option<String>,
        /// Parameters as key=value pairs, comma separated (e.g. a=0.3,beta=1).
        #[arg(long)]
        params: Vec<String>,
        /// Admit complex beta for GEN_BETA.
        #[arg(long)]
        experimental: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Verify one case over a uniform grid in one parameter.
    Sweep {
        #[arg(long)]
        case: String,
        #[arg(long)]
        param: String,
        #[arg(long, allow_hyphen_values = true)]
        from: f64,
        #[arg(long, allow_hyphen_values = true)]
        to: f64,
        #[arg(long)]
        steps: usize,
        /// Values for the remaining slots (defaults come from the catalog).
        #[arg(long)]
        params: Vec<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Hurwitz zeta ζ(s, q) by Euler-Maclaurin or by the integral representation.
    Zeta {
        #[arg(long, allow_hyphen_values = true)]
        s: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        s_im: f64,
        #[arg(long, allow_hyphen_values = true)]
        q: f64,
        #[arg(long, value_enum, default_value_t = Route::Em)]
        route: Route,
    },
    /// Run the special-function and quadrature property suites.
    Selftest,
}

#[derive(clap::Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Route {
    Em,
    Integral,
}

/// A bad invocation; reported on stderr with exit code 2.
#[derive(Debug)]
struct Usage(String);

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => match e.downcast_ref::<Usage>() {
            Some(Usage(msg)) => {
                eprintln!("error: {msg}");
                ExitCode::from(EXIT_USAGE)
            }
            None => {
                eprintln!("error: {e:#}");
                ExitCode::from(EXIT_FAIL)
            }
        },
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain()
        .filter_map(|c| c.downcast_ref::<io::Error>())
        .any(|io| io.kind() == io::ErrorKind::BrokenPipe)
}

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let cfg = quad_config(cli.tol, cli.max_evals)?;
    match cli.command {
        Command::List => {
            cmd_list(&mut io::stdout().lock())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { case, params, experimental, output } => {
            let jobs = match case {
                None => {
                    if !params.is_empty() {
                        return Err(usage("--params requires --case"));
                    }
                    harness::default_jobs()
                }
                Some(name) => {
                    let id = parse_case(&name)?;
                    let mut p = parse_params(id, &params)?;
                    p.experimental = experimental;
                    vec![(id, p)]
                }
            };
            let explicit = jobs.len() == 1;
            let records = harness::verify_many(&jobs, &cfg);
            emit(&records, &cfg, &output, explicit)
        }
        Command::Sweep { case, param, from, to, steps, params, output } => {
            let id = parse_case(&case)?;
            let slot: Slot = param
                .parse()
                .map_err(|_| usage(format!("unknown parameter '{param}'")))?;
            if !harness::entry(id).slots.contains(&slot) {
                return Err(usage(format!("{} has no parameter '{}'", id.name(), slot.name())));
            }
            if steps < 2 {
                return Err(usage("--steps must be at least 2"));
            }
            if !from.is_finite() || !to.is_finite() {
                return Err(usage("--from and --to must be finite"));
            }
            let base = parse_params(id, &params)?;
            let mut jobs = Vec::with_capacity(steps);
            for v in sweep_grid(from, to, steps) {
                let mut p = base;
                p.set_real(slot, v).map_err(|e| usage(e.to_string()))?;
                jobs.push((id, p));
            }
            let records = harness::verify_many(&jobs, &cfg);
            emit(&records, &cfg, &output, false)
        }
        Command::Zeta { s, s_im, q, route } => cmd_zeta(Complex64::new(s, s_im), q, route, &cfg),
        Command::Selftest => {
            let results = selftest::run_all(&cfg);
            let mut out = io::stdout().lock();
            for r in &results {
                let verdict = if r.ok() { "PASS" } else { "FAIL" };
                writeln!(out, "{}: {verdict} ({}/{})", r.name, r.passed, r.total)?;
                for f in &r.failures {
                    writeln!(out, "    {f}")?;
                }
            }
            Ok(if results.iter().all(|r| r.ok()) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAIL)
            })
        }
    }
}

fn quad_config(tol: Option<f64>, max_evals: Option<usize>) -> anyhow::Result<QuadConfig> {
    let mut cfg = QuadConfig::default();
    if let Some(t) = tol {
        cfg.abs_tol = t;
        cfg.rel_tol = t;
    }
    if let Some(m) = max_evals {
        cfg.max_evals = m;
    }
    cfg.validate().map_err(|e| usage(e.to_string()))?;
    Ok(cfg)
}

fn parse_case(name: &str) -> anyhow::Result<CaseId> {
    name.parse().map_err(|_| usage(format!("unknown case '{name}'")))
}

/// Catalog defaults overridden by `key=value` pairs. Keys must be slots the
/// case declares.
fn parse_params(id: CaseId, args: &[String]) -> anyhow::Result<CaseParams> {
    let entry = harness::entry(id);
    let mut p = entry.default_params;
    for pair in args.iter().flat_map(|s| s.split([',', ';'])) {
        let pair = pair.trim();
        if pair.is_empty() {
            continue;
        }
        let (key, value) = pair
            .split_once('=')
            .ok_or_else(|| usage(format!("malformed parameter '{pair}', expected key=value")))?;
        let slot: Slot = key
            .trim()
            .parse()
            .map_err(|_| usage(format!("unknown parameter '{}'", key.trim())))?;
        if !entry.slots.contains(&slot) {
            return Err(usage(format!("{} has no parameter '{}'", id.name(), slot.name())));
        }
        p.set_from_str(slot, value).map_err(|e| usage(e.to_string()))?;
    }
    Ok(p)
}

/// `steps` points from `from` to `to`, both endpoints exact.
fn sweep_grid(from: f64, to: f64, steps: usize) -> Vec<f64> {
    let last = (steps - 1) as f64;
    (0..steps)
        .map(|i| if i + 1 == steps { to } else { from + (to - from) * i as f64 / last })
        .collect()
}

fn emit(
    records: &[VerificationRecord],
    cfg: &QuadConfig,
    output: &OutputArgs,
    explicit: bool,
) -> anyhow::Result<ExitCode> {
    let mut buf = Vec::new();
    match output.format {
        Format::Table => report::write_table(&mut buf, records)?,
        Format::Csv => report::write_csv(&mut buf, records)?,
        Format::Json => report::write_json(&mut buf, records, cfg)?,
    }

    let summary = Summary::of(records);
    match &output.out {
        Some(path) => {
            let mut f = BufWriter::new(File::create(path)?);
            f.write_all(&buf)?;
            f.flush()?;
            println!("{summary}");
        }
        None => {
            io::stdout().lock().write_all(&buf)?;
            // the table already ends in the summary line
            if output.format != Format::Table {
                eprintln!("{summary}");
            }
        }
    }

    for r in records.iter().filter(|r| r.status == Status::SkippedDomain) {
        if explicit {
            eprintln!("warning: {} {} outside its domain: {}", r.id.name(), r.params, r.note);
        }
    }

    Ok(if summary.has_failures() { ExitCode::from(EXIT_FAIL) } else { ExitCode::SUCCESS })
}

fn cmd_list<W: Write>(out: &mut W) -> anyhow::Result<()> {
    writeln!(
        out,
        "{:<17} {:<18} {:<8} {:<42} {:<28} anchor",
        "case", "strategy", "tier", "domain", "default"
    )?;
    for e in harness::catalog() {
        writeln!(
            out,
            "{:<17} {:<18} {:<8} {:<42} {:<28} {}",
            e.id.name(),
            e.strategy.name(),
            e.tier.name(),
            e.domain_text,
            e.default_params.to_string(),
            e.anchor
        )?;
    }
    Ok(())
}

fn cmd_zeta(s: Complex64, q: f64, route: Route, cfg: &QuadConfig) -> anyhow::Result<ExitCode> {
    if !(q > 0.0) {
        return Err(usage(format!("q must be positive, got {q}")));
    }
    let (value, err_est) = match route {
        Route::Em => (specfun::hurwitz_zeta(s, q).map_err(|e| usage(e.to_string()))?, None),
        Route::Integral => {
            let r = harness::zeta_via_integral(s, q, cfg).map_err(|e| match e {
                gmo_core::Error::NoConvergence(_) => anyhow::anyhow!(e),
                other => usage(other.to_string()),
            })?;
            (r.value, Some(r.err_est))
        }
    };
    let mut out = io::stdout().lock();
    if s.im == 0.0 {
        writeln!(out, "{}", sig15(value.re))?;
    } else {
        let sign = if value.im < 0.0 { '-' } else { '+' };
        writeln!(out, "{}{sign}{}i", sig15(value.re), sig15(value.im.abs()))?;
    }
    if let Some(e) = err_est {
        writeln!(out, "err_est {e:.2e}")?;
    }
    Ok(ExitCode::SUCCESS)
}

/// Rounds to 15 significant digits and prints the shortest form of the result.
fn sig15(x: f64) -> String {
    let rounded: f64 = format!("{x:.14e}").parse().unwrap_or(x);
    format!("{rounded}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_hits_endpoints_and_zero() {
        let g = sweep_grid(-2.0, 3.0, 11);
        assert_eq!(g.len(), 11);
        assert_eq!(g[0], -2.0);
        assert_eq!(g[4], 0.0);
        assert_eq!(g[10], 3.0);
    }

    #[test]
    fn params_override_defaults() {
        let p = parse_params(CaseId::S3_7, &["beta=1".into()]).unwrap();
        assert_eq!(p.beta, Some(Complex64::new(1.0, 0.0)));
        assert!(p.a.is_some());
    }

    #[test]
    fn undeclared_slot_is_usage_error() {
        let e = parse_params(CaseId::GmoM, &["beta=1".into()]).unwrap_err();
        assert!(e.downcast_ref::<Usage>().is_some());
        let e = parse_params(CaseId::GmoM, &["a".into()]).unwrap_err();
        assert!(e.downcast_ref::<Usage>().is_some());
    }

    #[test]
    fn sig15_rounds() {
        assert_eq!(sig15(std::f64::consts::PI), "3.14159265358979");
        assert_eq!(sig15(-1.0 / 12.0), "-0.0833333333333333");
    }
}
