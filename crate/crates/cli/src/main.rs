use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qrecip::identities::{IdentityId, Mode, DEFAULT_ORDER};
use qrecip::{Slot, TruncationPolicy};
use qverify::config::{DEFAULT_SEED, INTEGRAL_SAMPLES, SUITE_SAMPLES};
use qverify::{list_table, parse_only, parse_point, run_check, run_integrals, run_suite, RunConfig, SuiteReport};

#[derive(Parser)]
#[command(
    name = "qverify",
    version,
    about = "Numeric and exact verification of q-series identities"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
#[allow(clippy::large_enum_variant)]
enum Cmd {
    /// List registry identities.
    List {
        /// Keep rows whose name contains this substring.
        #[arg(long)]
        filter: Option<String>,
    },
    /// Check one identity at an explicit point or at sampled points.
    Check {
        id: String,
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        point: PointArgs,
    },
    /// Check every (or every --only) identity.
    Suite {
        #[command(flatten)]
        run: RunArgs,
    },
    /// Quadrature checks: Askey-Wilson, beta integral, q-Hermite.
    Integrals {
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Numeric,
    Exact,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, value_enum, default_value = "numeric")]
    mode: ModeArg,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Points per identity [default: 100 for suite and check, 20 for integrals].
    #[arg(long)]
    samples: Option<usize>,
    /// Relative tolerance of identity checks.
    #[arg(long, env = "QVERIFY_TOL", default_value_t = qrecip::identities::DEFAULT_TOL)]
    tol: f64,
    /// Truncation order of exact checks.
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    order: usize,
    /// Comma-separated identity names.
    #[arg(long)]
    only: Option<String>,
    /// Write the JSON report here ("-" for standard output).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads [default: available parallelism].
    #[arg(long, env = "QVERIFY_JOBS")]
    jobs: Option<usize>,
    #[arg(long)]
    max_terms: Option<usize>,
    #[arg(long)]
    max_factors: Option<usize>,
    #[arg(long)]
    tail_tol: Option<f64>,
    #[arg(long)]
    pole_margin: Option<f64>,
}

#[derive(Args)]
struct PointArgs {
    #[arg(long)]
    q: Option<String>,
    #[arg(long)]
    a: Option<String>,
    #[arg(long)]
    b: Option<String>,
    #[arg(long)]
    c: Option<String>,
    #[arg(long)]
    d: Option<String>,
    #[arg(long)]
    r: Option<String>,
    #[arg(long)]
    u: Option<String>,
    #[arg(long)]
    v: Option<String>,
    #[arg(long)]
    x: Option<String>,
    #[arg(long)]
    s: Option<String>,
    #[arg(long)]
    t: Option<String>,
    #[arg(long)]
    z: Option<String>,
    #[arg(long)]
    a1: Option<String>,
    #[arg(long)]
    a2: Option<String>,
    #[arg(long)]
    a3: Option<String>,
    #[arg(long)]
    b1: Option<String>,
    #[arg(long)]
    b2: Option<String>,
    #[arg(long)]
    theta: Option<f64>,
}

impl PointArgs {
    fn slots(&self) -> Vec<(Slot, String)> {
        let all = [
            &self.a, &self.b, &self.c, &self.d, &self.r, &self.u, &self.v, &self.x, &self.s, &self.t, &self.z,
            &self.a1, &self.a2, &self.a3, &self.b1, &self.b2,
        ];
        Slot::ALL
            .into_iter()
            .zip(all)
            .filter_map(|(slot, v)| v.clone().map(|v| (slot, v)))
            .collect()
    }

    fn given(&self) -> bool {
        self.q.is_some() || self.theta.is_some() || !self.slots().is_empty()
    }
}

impl RunArgs {
    fn config(&self, default_samples: usize) -> Result<RunConfig, String> {
        let mut policy = TruncationPolicy::default();
        policy.max_terms = self.max_terms.unwrap_or(policy.max_terms);
        policy.max_factors = self.max_factors.unwrap_or(policy.max_factors);
        policy.tail_tol = self.tail_tol.unwrap_or(policy.tail_tol);
        policy.pole_margin = self.pole_margin.unwrap_or(policy.pole_margin);
        let jobs = self
            .jobs
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
        let cfg = RunConfig {
            mode: match self.mode {
                ModeArg::Numeric => Mode::Numeric,
                ModeArg::Exact => Mode::Exact,
            },
            seed: self.seed,
            samples: self.samples.unwrap_or(default_samples),
            tol: self.tol,
            order: self.order,
            policy,
            only: self.only.as_deref().map(parse_only).transpose()?.unwrap_or_default(),
            out: self.out.clone(),
            jobs,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

fn emit(report: &SuiteReport) -> Result<(), String> {
    let json = serde_json::to_string_pretty(&report.to_json()).expect("report serializes");
    match report.config.out.as_deref() {
        Some(p) if p.as_os_str() == "-" => println!("{json}"),
        Some(p) => {
            std::fs::write(p, json + "\n").map_err(|e| format!("cannot write {}: {e}", p.display()))?;
            print!("{}", report.text_summary());
        }
        None => print!("{}", report.text_summary()),
    }
    Ok(())
}

fn execute(cli: Cli) -> Result<SuiteReport, String> {
    match cli.cmd {
        Cmd::List { .. } => unreachable!("handled before"),
        Cmd::Check { id, run, point } => {
            let id: IdentityId = id.parse().map_err(|e: qrecip::QError| e.to_string())?;
            let cfg = run.config(if point.given() { 1 } else { SUITE_SAMPLES })?;
            let explicit = if point.given() {
                Some(parse_point(cfg.mode, point.q.as_deref(), &point.slots(), point.theta)?)
            } else {
                None
            };
            Ok(run_check(id, explicit, &cfg))
        }
        Cmd::Suite { run } => Ok(run_suite(&run.config(SUITE_SAMPLES)?)),
        Cmd::Integrals { run } => run_integrals(&run.config(INTEGRAL_SAMPLES)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Cmd::List { filter } = &cli.cmd {
        print!("{}", list_table(filter.as_deref()));
        return ExitCode::SUCCESS;
    }
    let report = match execute(cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit(&report) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(report.exit_code() as u8)
}
