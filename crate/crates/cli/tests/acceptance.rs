//! Acceptance criteria, one line each. Tolerances are pinned below.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use qrecip::bounds;
use qrecip::exact::rat;
use qrecip::identities::{
    check_exact, check_numeric, evaluate_lhs, evaluate_rhs, l_function, sample_domain, ExactDomain, IdentityId,
    IdentityId::*, Mode, NumericDomain,
};
use qrecip::qcalc::{qpoch_finite, qpoch_infinite};
use qrecip::quadrature::{self as quad, QuadratureConfig};
use qrecip::wide::{narrow, widen, Wide};
use qrecip::{FormalSeries, Monomial, ParameterPoint, Slot, TruncationPolicy};
use qverify::{run_suite, RunConfig, Status};

const SUITE_TOL: f64 = 1e-9;
const SUITE_SAMPLES: usize = 100;
const SUITE_SECONDS: u64 = 120;
const EXACT_ORDER: usize = 40;
const EXACT_MIN_POINTS: usize = 5;
const CLASSICAL_ORDER: usize = 60;
const LATTICE_MAX: usize = 50;
const AW_TOL: f64 = 1e-8;
const BETA_TOL: f64 = 1e-7;
const REDUCTION_TOL: f64 = 1e-9;
const INTEGRAL_POINTS: usize = 20;
const OFF_DIAGONAL_TOL: f64 = 1e-9;
const DIAGONAL_TOL: f64 = 1e-8;
const GRID_DEGREE: usize = 6;
const GRID_BASES: [f64; 3] = [0.3, 0.5, 0.7];
const PDE_TOL: f64 = 1e-9;
const PDE_POINTS: usize = 20;
const CHAIN_TOL: f64 = 1e-10;
const CHAIN_POINTS: usize = 20;
const BOUND_DRAWS: usize = 200;
const SEED: u64 = 7;

type Outcome = (bool, String);
type P = ParameterPoint<Complex64>;

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1e-300)
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn policy() -> TruncationPolicy {
    TruncationPolicy::default()
}

fn suite_config(mode: Mode) -> RunConfig {
    RunConfig {
        mode,
        seed: SEED,
        samples: SUITE_SAMPLES,
        tol: SUITE_TOL,
        jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
        ..RunConfig::default()
    }
}

fn numeric_suite() -> (Outcome, qverify::SuiteReport) {
    let report = run_suite(&suite_config(Mode::Numeric));
    let s = report.summary();
    let worst = report.entries.iter().filter_map(|e| e.rel_err).fold(0.0, f64::max);
    let fast = report.elapsed <= Duration::from_secs(SUITE_SECONDS);
    let ok = s.fail == 0 && s.skipped == 0 && s.total == 22 * SUITE_SAMPLES && fast;
    let msg = format!(
        "{}/{} pass at rel_err <= {SUITE_TOL:e}, worst {worst:.2e}, {:.1}s (limit {SUITE_SECONDS}s)",
        s.pass,
        s.total,
        report.elapsed.as_secs_f64()
    );
    ((ok, msg), report)
}

fn series(coeffs: impl Fn(usize) -> i64, order: usize) -> FormalSeries {
    FormalSeries::from_coeffs((0..order).map(|k| rat(coeffs(k), 1)).collect(), order)
}

fn exact_suite() -> Outcome {
    let ids = [Jtp, RamRecip, Recip5, Lambert, LimitEulerD, FourSquare, FourTriangular];
    let cfg = RunConfig {
        only: ids.to_vec(),
        order: EXACT_ORDER,
        ..suite_config(Mode::Exact)
    };
    let report = run_suite(&cfg);
    let mut problems = Vec::new();
    for id in ids {
        let mine: Vec<_> = report.entries.iter().filter(|e| e.check == id.name()).collect();
        let pass = mine.iter().filter(|e| e.status == Status::Pass).count();
        if pass < EXACT_MIN_POINTS || pass != mine.len() {
            problems.push(format!("{id}: {pass}/{}", mine.len()));
        }
    }

    let n = CLASSICAL_ORDER;
    let q = FormalSeries::variable(n);
    let pol = policy();
    let euler = qpoch_infinite(&q, &q, &pol).expect("(q;q) exact");
    // Jacobi: (q;q)^3 = Σ (-1)^k (2k+1) q^{k(k+1)/2}
    let jacobi = series(
        |m| {
            (0..=m as i64)
                .filter(|k| k * (k + 1) / 2 == m as i64)
                .map(|k| if k % 2 == 0 { 2 * k + 1 } else { -(2 * k + 1) })
                .sum()
        },
        n,
    );
    if &(&euler * &euler) * &euler != jacobi {
        problems.push("Jacobi cube".into());
    }
    let d0 = ParameterPoint::new(Monomial::new(rat(1, 1), 1)).with(Slot::D, Monomial::zero());
    match check_exact(LimitEulerD, &d0, n) {
        Ok(r) if r.pass => {}
        other => problems.push(format!("LIMIT_EULER_D at d=0 mod q^{n}: {other:?}")),
    }
    // Euler: 1 - Σ_{k≥1} (q;q)_{k-1} q^k = (q;q)_∞
    let mut lhs = FormalSeries::from_int(1, n);
    for k in 1..n {
        lhs = &lhs - &(&qpoch_finite(&q, &q, k - 1) * &FormalSeries::monomial(rat(1, 1), k, n));
    }
    if lhs != euler {
        problems.push("Euler".into());
    }
    let ok = problems.is_empty();
    let msg = if ok {
        format!(
            "{} exact checks mod q^{EXACT_ORDER} coefficient-equal; Jacobi cube and Euler mod q^{CLASSICAL_ORDER}",
            report.summary().pass
        )
    } else {
        problems.join(", ")
    };
    (ok, msg)
}

fn exact_lhs_rhs(id: IdentityId, order: usize) -> (Vec<i64>, Vec<i64>) {
    let p = ParameterPoint::new(Monomial::new(rat(1, 1), 1));
    let dom = ExactDomain::new(order);
    let ints = |s: FormalSeries| {
        s.coeffs()
            .iter()
            .map(|c| {
                assert!(c.is_integer(), "non-integer coefficient {c}");
                i64::try_from(c.to_integer()).expect("small coefficient")
            })
            .collect()
    };
    (
        ints(evaluate_lhs(id, &p, &dom).expect("lhs")),
        ints(evaluate_rhs(id, &p, &dom).expect("rhs")),
    )
}

fn lattice_counts(values: &[i64]) -> Vec<i64> {
    let mut counts = vec![0i64; LATTICE_MAX + 1];
    for &a in values {
        for &b in values {
            for &c in values {
                for &d in values {
                    let s = (a + b + c + d) as usize;
                    if s <= LATTICE_MAX {
                        counts[s] += 1;
                    }
                }
            }
        }
    }
    counts
}

fn four_squares() -> Outcome {
    let squares: Vec<i64> = (-8i64..=8).map(|x| x * x).collect();
    let brute = lattice_counts(&squares);
    let (lhs, rhs) = exact_lhs_rhs(FourSquare, LATTICE_MAX + 1);
    let ok = lhs == brute && rhs == brute;
    (
        ok,
        format!("r4(n) for n <= {LATTICE_MAX}: theta^4 and divisor side match lattice counts"),
    )
}

fn four_triangular() -> Outcome {
    let tri: Vec<i64> = (0i64..=10).map(|k| k * (k + 1) / 2).collect();
    let brute = lattice_counts(&tri);
    let (lhs, _) = exact_lhs_rhs(FourTriangular, LATTICE_MAX + 1);
    let (l50, r50) = exact_lhs_rhs(FourTriangular, LATTICE_MAX);
    let ok = lhs == brute && l50 == r50;
    (
        ok,
        format!("t4(n) for n <= {LATTICE_MAX} match counts; Lambert side equal mod q^{LATTICE_MAX}"),
    )
}

fn quadrature() -> Outcome {
    let (pol, cfg) = (policy(), QuadratureConfig::default());
    let (mut aw_worst, mut beta_worst, mut red_worst) = (0.0f64, 0.0f64, 0.0f64);
    for p in quad::sample_beta_points(SEED, INTEGRAL_POINTS) {
        let q = re(p.q);
        let aw = quad::askey_wilson_integral(p.aw(), q, &pol, &cfg).expect("aw").value;
        aw_worst = aw_worst.max(rel(
            aw,
            quad::askey_wilson_closed_form(p.aw(), q, &pol).expect("aw closed"),
        ));
        let beta = quad::beta_integral(p.params, q, &pol, &cfg).expect("beta").value;
        beta_worst = beta_worst.max(rel(
            beta,
            quad::beta_closed_form(p.params, q, &pol).expect("beta closed"),
        ));
        let [a, b, c, d] = p.aw();
        let reduced = quad::beta_integral([a, b, c, d, c], q, &pol, &cfg).expect("r=c").value;
        red_worst = red_worst.max(rel(reduced, aw));
    }
    let ok = aw_worst <= AW_TOL && beta_worst <= BETA_TOL && red_worst <= REDUCTION_TOL;
    let msg = format!(
        "{INTEGRAL_POINTS} points: AW worst {aw_worst:.2e} (<= {AW_TOL:e}), beta {beta_worst:.2e} (<= {BETA_TOL:e}), r=c {red_worst:.2e} (<= {REDUCTION_TOL:e})"
    );
    (ok, msg)
}

fn orthogonality() -> Outcome {
    let (pol, cfg) = (policy(), QuadratureConfig::default());
    let (mut off, mut diag) = (0.0f64, 0.0f64);
    for q in GRID_BASES {
        for m in 0..=GRID_DEGREE {
            for n in 0..=GRID_DEGREE {
                let v = quad::qhermite_orthogonality(m, n, q, &pol, &cfg)
                    .expect("integral")
                    .value;
                if m == n {
                    diag = diag.max(rel(v, re(quad::qhermite_norm(m, n, q, &pol).expect("norm"))));
                } else {
                    off = off.max(v.norm());
                }
            }
        }
    }
    let ok = off <= OFF_DIAGONAL_TOL && diag <= DIAGONAL_TOL;
    (ok, format!("m,n <= {GRID_DEGREE}, q in {GRID_BASES:?}: off-diagonal {off:.2e} (<= {OFF_DIAGONAL_TOL:e}), diagonal rel {diag:.2e} (<= {DIAGONAL_TOL:e})"))
}

fn wide_dom() -> NumericDomain<Wide> {
    NumericDomain::new(policy())
}

fn q_pde() -> Outcome {
    let mut worst = 0.0f64;
    for p in sample_domain(QpdeL, SEED, PDE_POINTS).expect("samples") {
        let r = check_numeric(QpdeL, &p, &policy(), PDE_TOL).expect("check");
        let l = narrow(l_function(&p.map(|z| widen(*z)), &wide_dom()).expect("L"));
        worst = worst.max(r.abs_err / l.norm().max(1.0));
    }
    (
        worst <= PDE_TOL,
        format!("{PDE_POINTS} points: max |Da L - Db L|/max(1,|L|) = {worst:.2e} (<= {PDE_TOL:e})"),
    )
}

fn sides(id: IdentityId, p: &P) -> (Complex64, Complex64) {
    let w = p.map(|z| widen(*z));
    (
        narrow(evaluate_lhs(id, &w, &wide_dom()).expect("lhs")),
        narrow(evaluate_rhs(id, &w, &wide_dom()).expect("rhs")),
    )
}

/// Worst agreement between `special` at sampled points and `general` at the
/// extended point, after `relate` maps the general sides onto the special ones.
fn chain(
    special: IdentityId,
    general: IdentityId,
    extend: impl Fn(&P) -> P,
    relate: impl Fn(&P, (Complex64, Complex64)) -> (Complex64, Complex64),
) -> f64 {
    let mut worst = 0.0f64;
    for p in sample_domain(special, SEED, CHAIN_POINTS).expect("samples") {
        let (l, r) = relate(&p, sides(general, &extend(&p)));
        let (ls, rs) = sides(special, &p);
        worst = worst.max(rel(l, ls)).max(rel(r, rs));
    }
    worst
}

fn chains() -> Outcome {
    use Slot::*;
    let same = |_: &P, s| s;
    let mut results = vec![
        ("d=0", chain(Qint6, Qint7, |p| p.clone().with(D, re(0.0)), same)),
        (
            "c=0",
            chain(AndrewsAskey, AlSalamVerma, |p| p.clone().with(C, re(0.0)), same),
        ),
        (
            "b=0",
            chain(
                Recip5,
                Recip7,
                |p| p.clone().with(B, re(0.0)).with(R, Complex64::new(0.4, 0.3)),
                same,
            ),
        ),
        (
            "c=d=0",
            chain(
                RamRecip,
                Recip5,
                |p| p.clone().with(C, re(0.0)).with(D, re(0.0)),
                |p, (l, r)| {
                    let f = (p.get(U) - p.get(V)) / (p.get(U) * p.get(V));
                    (f * r, f * l)
                },
            ),
        ),
        (
            "r=cuv",
            chain(
                Qint7R,
                Qint7,
                |p| p.clone().with(R, p.get(C) * p.get(U) * p.get(V)),
                same,
            ),
        ),
        (
            "r=cuv (6)",
            chain(
                AlSalamVerma,
                Qint6,
                |p| p.clone().with(R, p.get(C) * p.get(U) * p.get(V)),
                same,
            ),
        ),
        (
            "r=duv",
            chain(
                Recip6,
                Recip7,
                |p| p.clone().with(R, p.get(D) * p.get(U) * p.get(V)),
                same,
            ),
        ),
    ];
    let (pol, cfg) = (policy(), QuadratureConfig::default());
    let mut worst_rc = 0.0f64;
    for p in quad::sample_beta_points(SEED, CHAIN_POINTS) {
        let [a, b, c, d] = p.aw();
        let beta = quad::beta_integral([a, b, c, d, c], re(p.q), &pol, &cfg)
            .expect("beta")
            .value;
        let aw = quad::askey_wilson_integral(p.aw(), re(p.q), &pol, &cfg)
            .expect("aw")
            .value;
        worst_rc = worst_rc.max(rel(beta, aw));
    }
    results.push(("r=c", worst_rc));
    let ok = results.iter().all(|(_, w)| *w <= CHAIN_TOL);
    let detail: Vec<_> = results.iter().map(|(n, w)| format!("{n} {w:.1e}")).collect();
    (
        ok,
        format!("{CHAIN_POINTS} points each, tol {CHAIN_TOL:e}: {}", detail.join(", ")),
    )
}

fn bound_properties() -> Outcome {
    let s = bounds::sweep(SEED, BOUND_DRAWS, &policy()).expect("sweep");
    (
        s.clean(),
        format!(
            "{BOUND_DRAWS} draws each: violations upper {}, lower {}, phi {}",
            s.upper_violations, s.lower_violations, s.phi_violations
        ),
    )
}

fn determinism(first: &qverify::SuiteReport) -> Outcome {
    let mut cfg = first.config.clone();
    cfg.jobs = 1;
    let second = run_suite(&cfg);
    let verdicts = |r: &qverify::SuiteReport| r.entries.iter().map(|e| e.status).collect::<Vec<_>>();
    let ok = verdicts(first) == verdicts(&second) && first.body_json() == second.body_json();
    (
        ok,
        format!(
            "{} results; serialized bodies identical across job counts",
            second.entries.len()
        ),
    )
}

fn main() -> ExitCode {
    let start = Instant::now();
    let (c1, numeric) = numeric_suite();
    let criteria: Vec<(&str, Outcome)> = vec![
        ("numeric suite", c1),
        ("exact suite", exact_suite()),
        ("four-square cross-oracle", four_squares()),
        ("four-triangular cross-oracle", four_triangular()),
        ("quadrature", quadrature()),
        ("q-Hermite orthogonality", orthogonality()),
        ("q-PDE", q_pde()),
        ("specialization chains", chains()),
        ("bound properties", bound_properties()),
        ("determinism", determinism(&numeric)),
    ];
    let mut failed = 0;
    for (i, (name, (ok, msg))) in criteria.iter().enumerate() {
        failed += usize::from(!ok);
        println!(
            "criterion {:>2} {:<30} {}  {msg}",
            i + 1,
            name,
            if *ok { "PASS" } else { "FAIL" }
        );
    }
    println!(
        "acceptance: {} of {} criteria pass ({:.1}s)",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
