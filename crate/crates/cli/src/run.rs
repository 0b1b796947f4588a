use std::f64::consts::{PI, TAU};
use std::time::Instant;

use num_complex::Complex64;
use qrecip::identities::{check_identity, exact_points, sample_domain, CheckConfig, IdentityId, Mode, Point};
use qrecip::quadrature::{self as quad, Comparison, Integral, QuadratureConfig};
use qrecip::{QError, TruncationPolicy};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::config::RunConfig;
use crate::report::{complex, num, point_json, Entry, Status, SuiteReport};

pub const AW_TOL: f64 = 1e-8;
pub const BETA_TOL: f64 = 1e-7;
pub const REDUCTION_TOL: f64 = 1e-9;
pub const OFF_DIAGONAL_TOL: f64 = 1e-9;
pub const DIAGONAL_TOL: f64 = 1e-8;
pub const GF_TOL: f64 = 1e-10;
pub const MAX_GRID_DEGREE: usize = 6;
pub const GRID_BASES: [f64; 3] = [0.3, 0.5, 0.7];

fn check_config(cfg: &RunConfig) -> CheckConfig {
    CheckConfig {
        policy: cfg.policy,
        tol: cfg.tol,
        order: cfg.order,
    }
}

fn status_of(e: &QError) -> Status {
    match e {
        QError::Domain(_) => Status::Skipped,
        _ => Status::Fail,
    }
}

fn pool<T: Send>(jobs: usize, work: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool")
        .install(work)
}

fn evaluate(id: IdentityId, point: &Point, cfg: &CheckConfig) -> Entry {
    match check_identity(id, point, cfg) {
        Ok(r) => Entry::from_report(&r),
        Err(e) => Entry::unevaluated(id.name(), point.mode(), point_json(point), status_of(&e), e.to_string()),
    }
}

/// Evaluates `(identity, point)` tasks on `cfg.jobs` threads, keeping task order.
fn run_tasks(tasks: Vec<(IdentityId, Result<Point, Box<Entry>>)>, cfg: &RunConfig) -> Vec<Entry> {
    let cc = check_config(cfg);
    pool(cfg.jobs, || {
        tasks
            .into_par_iter()
            .map(|(id, p)| match p {
                Ok(p) => evaluate(id, &p, &cc),
                Err(e) => *e,
            })
            .collect()
    })
}

fn points_for(id: IdentityId, cfg: &RunConfig) -> Vec<Result<Point, Box<Entry>>> {
    match cfg.mode {
        Mode::Numeric => match sample_domain(id, cfg.seed, cfg.samples) {
            Ok(ps) => ps.into_iter().map(|p| Ok(Point::Numeric(p))).collect(),
            Err(e) => vec![Err(Box::new(Entry::unevaluated(
                id.name(),
                Mode::Numeric,
                Value::Null,
                Status::Fail,
                e.to_string(),
            )))],
        },
        Mode::Exact => {
            let ps = exact_points(id);
            if ps.is_empty() {
                let why = "no exact specializations for this identity".to_string();
                return vec![Err(Box::new(Entry::unevaluated(
                    id.name(),
                    Mode::Exact,
                    Value::Null,
                    Status::Skipped,
                    why,
                )))];
            }
            ps.into_iter().map(|p| Ok(Point::Exact(p))).collect()
        }
    }
}

/// Every selected identity at its sampled (numeric) or built-in (exact) points.
pub fn run_suite(cfg: &RunConfig) -> SuiteReport {
    let start = Instant::now();
    let tasks = cfg
        .selected()
        .into_iter()
        .flat_map(|id| points_for(id, cfg).into_iter().map(move |p| (id, p)))
        .collect();
    let entries = run_tasks(tasks, cfg);
    SuiteReport {
        config: cfg.clone(),
        entries,
        elapsed: start.elapsed(),
    }
}

/// One identity at an explicit point, or at sampled points when `point` is `None`.
pub fn run_check(id: IdentityId, point: Option<Point>, cfg: &RunConfig) -> SuiteReport {
    let start = Instant::now();
    let tasks = match point {
        Some(p) => vec![(id, Ok(p))],
        None => points_for(id, cfg).into_iter().map(|p| (id, p)).collect(),
    };
    let entries = run_tasks(tasks, cfg);
    let mut config = cfg.clone();
    config.only = vec![id];
    SuiteReport {
        config,
        entries,
        elapsed: start.elapsed(),
    }
}

#[derive(Debug, Clone, Copy)]
enum IntegralTask {
    AskeyWilson(quad::BetaPoint),
    Beta(quad::BetaPoint),
    BetaReduction(quad::BetaPoint),
    Orthogonality { m: usize, n: usize, q: f64 },
    GeneratingFunction { t: Complex64, theta: f64, q: f64 },
}

fn beta_point_json(p: &quad::BetaPoint, slots: usize) -> Value {
    let mut m = serde_json::Map::new();
    m.insert("q".into(), complex(Complex64::new(p.q, 0.0)));
    for (name, z) in ["a", "b", "c", "d", "r"].iter().zip(&p.params).take(slots) {
        m.insert((*name).into(), complex(*z));
    }
    Value::Object(m)
}

fn compared(check: &str, point: Value, c: Comparison, tol: f64, absolute: bool) -> Entry {
    let err = if absolute { c.abs_err } else { c.rel_err };
    Entry {
        check: check.into(),
        mode: Mode::Numeric,
        point,
        lhs: Some(complex(c.lhs)),
        rhs: Some(complex(c.rhs)),
        abs_err: Some(c.abs_err),
        rel_err: Some(c.rel_err),
        status: if err <= tol { Status::Pass } else { Status::Fail },
        near_trivial: false,
        diagnostics: format!(
            "{} error tolerance {}",
            if absolute { "absolute" } else { "relative" },
            num(tol)
        ),
    }
}

fn with_integral(mut e: Entry, i: &Integral) -> Entry {
    e.diagnostics += &format!(
        "; {} panels, quadrature error estimate {}",
        i.panels,
        num(i.err_estimate)
    );
    e
}

fn run_integral(task: IntegralTask, policy: &TruncationPolicy, qc: &QuadratureConfig) -> Entry {
    use IntegralTask::*;
    let (name, point) = match task {
        AskeyWilson(p) => ("ASKEY_WILSON", beta_point_json(&p, 4)),
        Beta(p) => ("BETA", beta_point_json(&p, 5)),
        BetaReduction(p) => ("BETA_R_EQ_C", beta_point_json(&p, 4)),
        Orthogonality { m, n, q } => (
            "QHERMITE_ORTHOGONALITY",
            json!({ "q": complex(Complex64::new(q, 0.0)), "m": m, "n": n }),
        ),
        GeneratingFunction { t, theta, q } => (
            "QHERMITE_GF",
            json!({ "q": complex(Complex64::new(q, 0.0)), "t": complex(t), "theta": num(theta) }),
        ),
    };
    let result = (|| -> qrecip::Result<Entry> {
        Ok(match task {
            AskeyWilson(p) => {
                let q = Complex64::new(p.q, 0.0);
                let i = quad::askey_wilson_integral(p.aw(), q, policy, qc)?;
                let c = Comparison::new(i.value, quad::askey_wilson_closed_form(p.aw(), q, policy)?);
                with_integral(compared(name, point.clone(), c, AW_TOL, false), &i)
            }
            Beta(p) => {
                let q = Complex64::new(p.q, 0.0);
                let i = quad::beta_integral(p.params, q, policy, qc)?;
                let c = Comparison::new(i.value, quad::beta_closed_form(p.params, q, policy)?);
                with_integral(compared(name, point.clone(), c, BETA_TOL, false), &i)
            }
            BetaReduction(p) => {
                let q = Complex64::new(p.q, 0.0);
                let [a, b, c, d] = p.aw();
                let beta = quad::beta_integral([a, b, c, d, c], q, policy, qc)?;
                let aw = quad::askey_wilson_integral([a, b, c, d], q, policy, qc)?;
                compared(
                    name,
                    point.clone(),
                    Comparison::new(beta.value, aw.value),
                    REDUCTION_TOL,
                    false,
                )
            }
            Orthogonality { m, n, q } => {
                let i = quad::qhermite_orthogonality(m, n, q, policy, qc)?;
                let norm = Complex64::new(quad::qhermite_norm(m, n, q, policy)?, 0.0);
                let c = Comparison::new(i.value, norm);
                let (tol, absolute) = if m == n {
                    (DIAGONAL_TOL, false)
                } else {
                    (OFF_DIAGONAL_TOL, true)
                };
                with_integral(compared(name, point.clone(), c, tol, absolute), &i)
            }
            GeneratingFunction { t, theta, q } => compared(
                name,
                point.clone(),
                quad::qhermite_gf_check(t, theta, q, policy)?,
                GF_TOL,
                false,
            ),
        })
    })();
    result.unwrap_or_else(|e| Entry::unevaluated(name, Mode::Numeric, point, status_of(&e), e.to_string()))
}

fn integral_tasks(cfg: &RunConfig) -> Vec<IntegralTask> {
    let points = quad::sample_beta_points(cfg.seed, cfg.samples);
    let mut tasks: Vec<IntegralTask> = points.iter().map(|p| IntegralTask::AskeyWilson(*p)).collect();
    tasks.extend(points.iter().map(|p| IntegralTask::Beta(*p)));
    tasks.extend(points.iter().map(|p| IntegralTask::BetaReduction(*p)));
    for q in GRID_BASES {
        for m in 0..=MAX_GRID_DEGREE {
            for n in m..=MAX_GRID_DEGREE {
                tasks.push(IntegralTask::Orthogonality { m, n, q });
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x9e37_79b9);
    for _ in 0..cfg.samples {
        let t = Complex64::from_polar(rng.gen_range(0.0..0.8), rng.gen_range(0.0..TAU));
        let theta = rng.gen_range(0.0..PI);
        let q = rng.gen_range(0.05..0.8);
        tasks.push(IntegralTask::GeneratingFunction { t, theta, q });
    }
    tasks
}

/// The quadrature checks: Askey–Wilson, beta integral, its `r = c` reduction,
/// q-Hermite orthogonality grid and generating function. Numeric mode only.
pub fn run_integrals(cfg: &RunConfig) -> Result<SuiteReport, String> {
    if cfg.mode == Mode::Exact {
        return Err("integrals run in numeric mode only; drop --mode exact".into());
    }
    let start = Instant::now();
    let qc = QuadratureConfig::default();
    let tasks = integral_tasks(cfg);
    let entries = pool(cfg.jobs, || {
        tasks
            .into_par_iter()
            .map(|t| run_integral(t, &cfg.policy, &qc))
            .collect()
    });
    let mut config = cfg.clone();
    config.only.clear();
    Ok(SuiteReport {
        config,
        entries,
        elapsed: start.elapsed(),
    })
}

/// One row per identity whose name contains `filter` (case-insensitive).
pub fn list_table(filter: Option<&str>) -> String {
    let needle = filter.unwrap_or("").to_ascii_uppercase();
    let mut out = format!(
        "{:<16} {:<22} {:<6} {:<60} {}\n",
        "NAME", "SLOTS", "EXACT", "CONSTRAINTS", "CITATION"
    );
    for id in IdentityId::ALL.into_iter().filter(|id| id.name().contains(&needle)) {
        let def = id.def();
        let slots: Vec<_> = def.slots.iter().map(|s| s.name()).collect();
        let mut cons: Vec<String> = vec!["|q|<1".into()];
        cons.extend(def.bounded.iter().map(|m| format!("|{}|<1", m.text())));
        cons.extend(def.nonzero.iter().map(|m| format!("{}≠0", m.text())));
        cons.extend(def.poles.iter().map(|m| format!("({};q) pole-free", m.text())));
        out += &format!(
            "{:<16} {:<22} {:<6} {:<60} {}\n",
            def.name,
            slots.join(","),
            if def.exact { "yes" } else { "no" },
            cons.join(", "),
            def.citation
        );
    }
    out
}
