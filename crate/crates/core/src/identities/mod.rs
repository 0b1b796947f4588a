//! Registry of q-series identities, each an LHS/RHS evaluator pair with a
//! convergence-domain predicate, plus checks in numeric and exact mode.

mod domain;
mod integrals;
mod limits;
mod reciprocity;
mod sampling;
mod series;
mod specializations;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{QError, Result};
use crate::exact::{FormalSeries, Monomial};
use crate::point::{ParameterPoint, Slot};
use crate::scalar::TruncationPolicy;
use crate::wide::{narrow, widen, Wide};

pub use domain::{Ctx, Domain, ExactDomain, Mode, NumericDomain, NumericScalar, Param};
pub use sampling::{sample_domain, Margins, SAMPLE_BOUND_FACTOR, SAMPLE_MIN_DISTANCE};
pub use specializations::exact_points;

/// Default truncation order of exact checks.
pub const DEFAULT_ORDER: usize = 40;
/// Default relative tolerance of numeric checks.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Both sides below this modulus mark a point as near-trivial.
pub const NEAR_TRIVIAL: f64 = 1e-12;

fn vals<P: Param, const N: usize>(p: &ParameterPoint<P>, slots: [Slot; N]) -> [P; N] {
    slots.map(|s| p.get(s))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    Jtp,
    AndrewsAskey,
    AlSalamVerma,
    Qint6,
    Qint7,
    Qint7R,
    SearsEquiv,
    RamRecip,
    Recip5,
    Lambert,
    Recip7,
    Recip6,
    QbinomialThm,
    Qmehler,
    QpdeL,
    Sears32,
    LimitA,
    LimitEulerD,
    LimitDNegq,
    Lambert4,
    FourSquare,
    FourTriangular,
}

impl IdentityId {
    pub const ALL: [IdentityId; 22] = [
        IdentityId::Jtp,
        IdentityId::AndrewsAskey,
        IdentityId::AlSalamVerma,
        IdentityId::Qint6,
        IdentityId::Qint7,
        IdentityId::Qint7R,
        IdentityId::SearsEquiv,
        IdentityId::RamRecip,
        IdentityId::Recip5,
        IdentityId::Lambert,
        IdentityId::Recip7,
        IdentityId::Recip6,
        IdentityId::QbinomialThm,
        IdentityId::Qmehler,
        IdentityId::QpdeL,
        IdentityId::Sears32,
        IdentityId::LimitA,
        IdentityId::LimitEulerD,
        IdentityId::LimitDNegq,
        IdentityId::Lambert4,
        IdentityId::FourSquare,
        IdentityId::FourTriangular,
    ];

    pub fn name(self) -> &'static str {
        self.def().name
    }

    pub fn def(self) -> &'static IdentityDef {
        &registry()[self as usize]
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = QError;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| QError::Domain(format!("unknown identity '{s}'")))
    }
}

/// A product of integer powers of `q` and slot values, e.g. `a*b*r/c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mono {
    text: &'static str,
    /// `None` stands for `q`.
    factors: Vec<(Option<Slot>, i64)>,
}

impl Mono {
    pub fn parse(text: &'static str) -> Result<Self> {
        let mut factors = Vec::new();
        let mut sign = 1;
        let mut token = String::new();
        let mut flush = |token: &mut String, sign: i64| -> Result<()> {
            let t = std::mem::take(token);
            let (name, exp) = match t.split_once('^') {
                Some((n, e)) => (
                    n,
                    e.parse::<i64>()
                        .map_err(|_| QError::Domain(format!("bad exponent in '{text}'")))?,
                ),
                None => (t.as_str(), 1),
            };
            let sym = if name == "q" { None } else { Some(name.parse::<Slot>()?) };
            factors.push((sym, sign * exp));
            Ok(())
        };
        for ch in text.chars() {
            match ch {
                '*' | '/' => {
                    flush(&mut token, sign)?;
                    sign = if ch == '/' { -1 } else { 1 };
                }
                c if !c.is_whitespace() => token.push(c),
                _ => {}
            }
        }
        flush(&mut token, sign)?;
        Ok(Self { text, factors })
    }

    pub fn text(&self) -> &'static str {
        self.text
    }

    pub fn eval<P: Param>(&self, point: &ParameterPoint<P>) -> Result<P> {
        let mut acc = P::int(1);
        for (sym, e) in &self.factors {
            let base = match sym {
                None => point.q.clone(),
                Some(s) => point.get(*s),
            };
            acc = acc * base.ipow(*e)?;
        }
        Ok(acc)
    }
}

/// Registry entry.
#[derive(Debug)]
pub struct IdentityDef {
    pub id: IdentityId,
    pub name: &'static str,
    /// Classical name of the result.
    pub citation: &'static str,
    pub slots: &'static [Slot],
    /// Quantities whose modulus must stay below 1.
    pub bounded: Vec<Mono>,
    /// Parameters `p` of denominator products `(p;q)`; `pq^k` must avoid 1.
    pub poles: Vec<Mono>,
    /// Quantities that must not vanish.
    pub nonzero: Vec<Mono>,
    /// Whether built-in exact specializations exist.
    pub exact: bool,
}

struct Entry {
    id: IdentityId,
    name: &'static str,
    citation: &'static str,
    slots: &'static [Slot],
    bounded: &'static [&'static str],
    poles: &'static [&'static str],
    nonzero: &'static [&'static str],
    exact: bool,
}

const BETA_BOUNDS: [&str; 4] = ["a*u", "b*u", "a*v", "b*v"];

const ENTRIES: [Entry; 22] = {
    use Slot::*;
    [
        Entry {
            id: IdentityId::Jtp,
            name: "JTP",
            citation: "Jacobi triple product identity",
            slots: &[X],
            bounded: &[],
            poles: &[],
            nonzero: &["x"],
            exact: true,
        },
        Entry {
            id: IdentityId::AndrewsAskey,
            name: "ANDREWS_ASKEY",
            citation: "Andrews–Askey q-beta integral",
            slots: &[A, B, U, V],
            bounded: &BETA_BOUNDS,
            poles: &[],
            nonzero: &["u", "v"],
            exact: false,
        },
        Entry {
            id: IdentityId::AlSalamVerma,
            name: "AL_SALAM_VERMA",
            citation: "Al-Salam–Verma q-integral (Sears' nonterminating q-Saalschütz sum)",
            slots: &[A, B, C, U, V],
            bounded: &["a*u", "b*u", "c*u", "a*v", "b*v", "c*v"],
            poles: &[],
            nonzero: &["u", "v"],
            exact: false,
        },
        Entry {
            id: IdentityId::Qint6,
            name: "QINT6",
            citation: "six-parameter extension of the Al-Salam–Verma integral",
            slots: &[A, B, C, R, U, V],
            bounded: &["a*u", "b*u", "c*u", "a*v", "b*v", "c*v", "a*b*r/c"],
            poles: &[],
            nonzero: &["u", "v", "c"],
            exact: false,
        },
        Entry {
            id: IdentityId::Qint7,
            name: "QINT7",
            citation: "seven-parameter q-integral with a 3phi2 integrand",
            slots: &[A, B, C, D, R, U, V],
            bounded: &["a*u", "b*u", "c*u", "a*v", "b*v", "c*v", "a*b*r/c", "d*u", "d*v"],
            poles: &[],
            nonzero: &["u", "v", "c"],
            exact: false,
        },
        Entry {
            id: IdentityId::Qint7R,
            name: "QINT7_R",
            citation: "seven-parameter q-integral at r = cuv",
            slots: &[A, B, C, D, U, V],
            bounded: &["a*u", "b*u", "c*u", "a*v", "b*v", "c*v", "d*u", "d*v"],
            poles: &[],
            nonzero: &["u", "v"],
            exact: false,
        },
        Entry {
            id: IdentityId::SearsEquiv,
            name: "SEARS_EQUIV",
            citation: "seven-parameter q-integral after the Sears transformation of its integrand",
            slots: &[A, B, C, D, R, U, V],
            bounded: &["a*u", "b*u", "c*u", "a*v", "b*v", "c*v", "a*b*r/c", "d*u", "d*v"],
            poles: &[],
            nonzero: &["u", "v", "c"],
            exact: false,
        },
        Entry {
            id: IdentityId::RamRecip,
            name: "RAM_RECIP",
            citation: "Ramanujan's reciprocity theorem",
            slots: &[A, U, V],
            bounded: &[],
            poles: &["a*u", "a*v"],
            nonzero: &["u", "v"],
            exact: true,
        },
        Entry {
            id: IdentityId::Recip5,
            name: "RECIP5",
            citation: "five-variable reciprocity formula",
            slots: &[A, C, D, U, V],
            bounded: &["a*u", "a*v", "c*u", "c*v", "d*u", "d*v"],
            poles: &[],
            nonzero: &["u", "v"],
            exact: true,
        },
        Entry {
            id: IdentityId::Lambert,
            name: "LAMBERT",
            citation: "Lambert series from the five-variable reciprocity at a = 0, cduv = q",
            slots: &[C, U, V],
            bounded: &["q/c/u", "q/c/v"],
            poles: &["c*u", "c*v"],
            nonzero: &["c", "u", "v"],
            exact: true,
        },
        Entry {
            id: IdentityId::Recip7,
            name: "RECIP7",
            citation: "seven-variable reciprocity formula",
            slots: &[A, B, C, D, R, U, V],
            bounded: &[
                "a*u",
                "a*v",
                "b*u",
                "b*v",
                "c*u",
                "c*v",
                "d*u",
                "d*v",
                "a*b*r/d",
                "a*b*c*r*u*v/q",
            ],
            poles: &[],
            nonzero: &["u", "v", "d"],
            exact: false,
        },
        Entry {
            id: IdentityId::Recip6,
            name: "RECIP6",
            citation: "six-variable reciprocity formula (r = duv)",
            slots: &[A, B, C, D, U, V],
            bounded: &[
                "a*u",
                "a*v",
                "b*u",
                "b*v",
                "c*u",
                "c*v",
                "d*u",
                "d*v",
                "a*b*c*d*u^2*v^2/q",
            ],
            poles: &[],
            nonzero: &["u", "v"],
            exact: false,
        },
        Entry {
            id: IdentityId::QbinomialThm,
            name: "QBINOMIAL_THM",
            citation: "q-binomial theorem",
            slots: &[A, X],
            bounded: &["x"],
            poles: &[],
            nonzero: &[],
            exact: true,
        },
        Entry {
            id: IdentityId::Qmehler,
            name: "QMEHLER",
            citation: "q-Mehler formula for Rogers–Szegő polynomials",
            slots: &[A, B, S, T, Z],
            bounded: &["a*s*z", "a*t*z", "b*s*z", "b*t*z"],
            poles: &[],
            nonzero: &[],
            exact: true,
        },
        Entry {
            id: IdentityId::QpdeL,
            name: "QPDE_L",
            citation: "q-partial differential equation of the L-function",
            slots: &[A, B, U, V, S, T],
            bounded: &["a*s", "a*t", "a*u", "b*s", "b*t", "b*u", "a*b*s*t*u/v"],
            poles: &["a*v", "b*v"],
            nonzero: &["a", "b", "v", "s", "t"],
            exact: false,
        },
        Entry {
            id: IdentityId::Sears32,
            name: "SEARS_32",
            citation: "Sears 3phi2 transformation",
            slots: &[A1, A2, A3, B1, B2],
            bounded: &["b1*b2/a1/a2/a3", "b2/a3"],
            poles: &["b1", "b2", "b1*b2/a1/a2"],
            nonzero: &["a1", "a2", "a3"],
            exact: false,
        },
        Entry {
            id: IdentityId::LimitA,
            name: "LIMIT_A",
            citation: "v → u limit of the five-variable reciprocity formula",
            slots: &[A, C, D],
            bounded: &["d"],
            poles: &["a", "c", "q/d"],
            nonzero: &[],
            exact: true,
        },
        Entry {
            id: IdentityId::LimitEulerD,
            name: "LIMIT_EULER_D",
            citation: "a = c = 0 case of the v → u limit",
            slots: &[D],
            bounded: &["d"],
            poles: &["q/d"],
            nonzero: &[],
            exact: true,
        },
        Entry {
            id: IdentityId::LimitDNegq,
            name: "LIMIT_D_NEGQ",
            citation: "d = -q case of the v → u limit",
            slots: &[],
            bounded: &[],
            poles: &[],
            nonzero: &[],
            exact: true,
        },
        Entry {
            id: IdentityId::Lambert4,
            name: "LAMBERT4",
            citation: "Lambert series for (q;q)^4/(qa, q/a;q)^2",
            slots: &[A],
            bounded: &["q*a", "q/a"],
            poles: &["q*a", "q/a"],
            nonzero: &["a"],
            exact: true,
        },
        Entry {
            id: IdentityId::FourSquare,
            name: "FOUR_SQUARE",
            citation: "Jacobi's four-square theorem",
            slots: &[],
            bounded: &[],
            poles: &[],
            nonzero: &[],
            exact: true,
        },
        Entry {
            id: IdentityId::FourTriangular,
            name: "FOUR_TRIANGULAR",
            citation: "Legendre's four-triangular-numbers theorem",
            slots: &[],
            bounded: &[],
            poles: &[],
            nonzero: &[],
            exact: true,
        },
    ]
};

fn registry() -> &'static [IdentityDef] {
    static REGISTRY: OnceLock<Vec<IdentityDef>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let monos = |xs: &[&'static str]| xs.iter().map(|t| Mono::parse(t).expect("registry monomial")).collect();
        ENTRIES
            .iter()
            .enumerate()
            .map(|(i, e)| {
                assert_eq!(e.id as usize, i);
                IdentityDef {
                    id: e.id,
                    name: e.name,
                    citation: e.citation,
                    slots: e.slots,
                    bounded: monos(e.bounded),
                    poles: monos(e.poles),
                    nonzero: monos(e.nonzero),
                    exact: e.exact,
                }
            })
            .collect()
    })
}

/// Smallest `|1 - p q^k|` over `k >= 0`, scanning until `|pq^k| <= 1/2`.
fn pole_distance(p: Complex64, q: Complex64) -> f64 {
    let mut t = p;
    let mut best = f64::INFINITY;
    for _ in 0..100_000 {
        best = best.min((1.0 - t).norm());
        if t.norm() <= 0.5 {
            break;
        }
        t *= q;
    }
    best
}

/// Constraints of `id` violated at a numeric point under the given margins.
pub fn violations(id: IdentityId, point: &ParameterPoint<Complex64>, m: &Margins) -> Vec<String> {
    let def = id.def();
    let mut out = Vec::new();
    let qn = point.q.norm();
    if !(qn < 1.0) {
        out.push(format!("|q| = {qn} is not below 1"));
    }
    for b in &def.bounded {
        match b.eval(point) {
            Ok(v) if v.norm() < m.bound => {}
            Ok(v) => out.push(format!("|{}| = {} is not below {}", b.text(), v.norm(), m.bound)),
            Err(_) => out.push(format!("{} is undefined", b.text())),
        }
    }
    for z in &def.nonzero {
        match z.eval(point) {
            Ok(v) if v.norm() > m.nonzero => {}
            _ => out.push(format!("{} must be nonzero", z.text())),
        }
    }
    if qn < 1.0 {
        for p in &def.poles {
            // an undefined parameter (e.g. q/d at d = 0) has no pole
            if let Ok(v) = p.eval(point) {
                let dist = pole_distance(v, point.q);
                if dist < m.pole {
                    out.push(format!("1 - ({})q^k comes within {dist:e} of 0", p.text()));
                }
            }
        }
    }
    out
}

/// Rejects numeric points outside the convergence domain of `id`.
pub fn admissible(id: IdentityId, point: &ParameterPoint<Complex64>, policy: &TruncationPolicy) -> Result<()> {
    let v = violations(id, point, &Margins::strict(policy));
    if v.is_empty() {
        Ok(())
    } else {
        Err(QError::Domain(format!("{id}: {}", v.join("; "))))
    }
}

/// Exact points need a base `λq` and nonvanishing required quantities.
pub fn admissible_exact(id: IdentityId, point: &ParameterPoint<Monomial>) -> Result<()> {
    if point.q.power != 1 || point.q.is_zero() {
        return Err(QError::Domain(format!("exact base must be λ·q, got {}", point.q)));
    }
    for z in &id.def().nonzero {
        if z.eval(point)?.is_zero() {
            return Err(QError::Domain(format!("{id}: {} must be nonzero", z.text())));
        }
    }
    Ok(())
}

type Side<D> = fn(&Ctx<D>, &ParameterPoint<<D as Domain>::P>) -> Result<<D as Domain>::S>;

fn sides<D: Domain>(id: IdentityId) -> (Side<D>, Side<D>) {
    use IdentityId::*;
    match id {
        Jtp => (integrals::jtp_lhs, integrals::jtp_rhs),
        AndrewsAskey => (integrals::andrews_askey_lhs, integrals::andrews_askey_rhs),
        AlSalamVerma => (integrals::al_salam_verma_lhs, integrals::al_salam_verma_rhs),
        Qint6 => (integrals::qint6_lhs, integrals::qint6_rhs),
        Qint7 => (integrals::qint7_lhs, integrals::qint7_rhs),
        Qint7R => (integrals::qint7_r_lhs, integrals::qint7_r_rhs),
        SearsEquiv => (integrals::sears_equiv_lhs, integrals::sears_equiv_rhs),
        RamRecip => (reciprocity::ramanujan_lhs, reciprocity::ramanujan_rhs),
        Recip5 => (reciprocity::recip5_lhs, reciprocity::recip5_rhs),
        Lambert => (reciprocity::lambert_lhs, reciprocity::lambert_rhs),
        Recip7 => (reciprocity::recip7_lhs, reciprocity::recip7_rhs),
        Recip6 => (reciprocity::recip6_lhs, reciprocity::recip6_rhs),
        QbinomialThm => (series::qbinomial_lhs, series::qbinomial_rhs),
        Qmehler => (series::qmehler_lhs, series::qmehler_rhs),
        QpdeL => (series::qpde_lhs, series::qpde_rhs),
        Sears32 => (series::sears_lhs, series::sears_rhs),
        LimitA => (limits::limit_a_lhs, limits::limit_a_rhs),
        LimitEulerD => (limits::limit_euler_lhs, limits::limit_euler_rhs),
        LimitDNegq => (limits::limit_negq_lhs, limits::limit_negq_rhs),
        Lambert4 => (limits::lambert4_lhs, limits::lambert4_rhs),
        FourSquare => (limits::four_square_lhs, limits::four_square_rhs),
        FourTriangular => (limits::four_triangular_lhs, limits::four_triangular_rhs),
    }
}

/// Left side of `id` at `point`. The domain predicate is not applied here.
pub fn evaluate_lhs<D: Domain>(id: IdentityId, point: &ParameterPoint<D::P>, dom: &D) -> Result<D::S> {
    let cx = Ctx::new(dom, point.q.clone())?;
    (sides::<D>(id).0)(&cx, point)
}

/// Right side of `id` at `point`. The domain predicate is not applied here.
pub fn evaluate_rhs<D: Domain>(id: IdentityId, point: &ParameterPoint<D::P>, dom: &D) -> Result<D::S> {
    let cx = Ctx::new(dom, point.q.clone())?;
    (sides::<D>(id).1)(&cx, point)
}

/// The double series `ρ(a, b, c, d, r, u, v)`.
pub fn rho<D: Domain>(point: &ParameterPoint<D::P>, dom: &D) -> Result<D::S> {
    reciprocity::rho_in(&Ctx::new(dom, point.q.clone())?, point)
}

/// `L(a, b, u, v, s, t)`.
pub fn l_function<D: Domain>(point: &ParameterPoint<D::P>, dom: &D) -> Result<D::S> {
    series::l_in(&Ctx::new(dom, point.q.clone())?, point)
}

/// Both sides of the Sears transformation at slots `a1, a2, a3, b1, b2`.
pub fn sears_transform_check(
    point: &ParameterPoint<Complex64>,
    policy: &TruncationPolicy,
    tol: f64,
) -> Result<IdentityReport> {
    check_numeric(IdentityId::Sears32, point, policy, tol)
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Numeric(Complex64),
    Exact(FormalSeries),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Point {
    Numeric(ParameterPoint<Complex64>),
    Exact(ParameterPoint<Monomial>),
}

impl Point {
    pub fn mode(&self) -> Mode {
        match self {
            Point::Numeric(_) => Mode::Numeric,
            Point::Exact(_) => Mode::Exact,
        }
    }
}

/// Outcome of one identity check at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub mode: Mode,
    pub point: Point,
    pub lhs: Value,
    pub rhs: Value,
    pub abs_err: f64,
    /// `abs_err / max(|lhs|, |rhs|, 1e-300)`.
    pub rel_err: f64,
    pub pass: bool,
    /// Both sides below [`NEAR_TRIVIAL`] in modulus.
    pub near_trivial: bool,
    pub diagnostics: String,
}

/// Settings shared by [`check_identity`] calls.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckConfig {
    pub policy: TruncationPolicy,
    pub tol: f64,
    pub order: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self {
            policy: TruncationPolicy::default(),
            tol: DEFAULT_TOL,
            order: DEFAULT_ORDER,
        }
    }
}

/// Evaluates both sides and compares them. Failing the comparison is not an
/// error; leaving the domain or failing to evaluate is.
pub fn check_identity(id: IdentityId, point: &Point, config: &CheckConfig) -> Result<IdentityReport> {
    match point {
        Point::Numeric(p) => check_numeric(id, p, &config.policy, config.tol),
        Point::Exact(p) => check_exact(id, p, config.order),
    }
}

pub fn check_numeric(
    id: IdentityId,
    point: &ParameterPoint<Complex64>,
    policy: &TruncationPolicy,
    tol: f64,
) -> Result<IdentityReport> {
    policy.validate()?;
    admissible(id, point, policy)?;
    let dom = NumericDomain::<Wide>::new(*policy);
    let wide = point.map(|z| widen(*z));
    let lhs = evaluate_lhs(id, &wide, &dom)?;
    let rhs = evaluate_rhs(id, &wide, &dom)?;
    let abs_err = narrow(lhs - rhs).norm();
    let (lhs, rhs) = (narrow(lhs), narrow(rhs));
    let scale = lhs.norm().max(rhs.norm());
    let rel_err = abs_err / scale.max(1e-300);
    let near_trivial = scale < NEAR_TRIVIAL;
    let mut diagnostics = Vec::new();
    if near_trivial {
        diagnostics.push(format!("near-trivial: both sides below {NEAR_TRIVIAL:e}"));
    }
    if !rel_err.is_finite() {
        diagnostics.push("non-finite error".to_string());
    }
    Ok(IdentityReport {
        identity: id,
        mode: Mode::Numeric,
        point: Point::Numeric(point.clone()),
        lhs: Value::Numeric(lhs),
        rhs: Value::Numeric(rhs),
        abs_err,
        rel_err,
        pass: rel_err <= tol,
        near_trivial,
        diagnostics: diagnostics.join("; "),
    })
}

pub fn check_exact(id: IdentityId, point: &ParameterPoint<Monomial>, order: usize) -> Result<IdentityReport> {
    if order == 0 {
        return Err(QError::Domain("exact order must be positive".into()));
    }
    admissible_exact(id, point)?;
    let dom = ExactDomain::new(order);
    let lhs = evaluate_lhs(id, point, &dom)?;
    let rhs = evaluate_rhs(id, point, &dom)?;
    let max_abs = |s: &FormalSeries| {
        s.coeffs()
            .iter()
            .map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY))
            .fold(0.0, f64::max)
    };
    let diff = lhs.clone() - rhs.clone();
    let abs_err = max_abs(&diff);
    let scale = max_abs(&lhs).max(max_abs(&rhs));
    let pass = diff.coeffs().iter().all(Zero::is_zero);
    let diagnostics = match diff.valuation() {
        None => format!("all {order} coefficients agree"),
        Some(k) => format!(
            "first mismatch at q^{k}: lhs {} vs rhs {}",
            lhs.coeffs()[k],
            rhs.coeffs()[k]
        ),
    };
    Ok(IdentityReport {
        identity: id,
        mode: Mode::Exact,
        point: Point::Exact(point.clone()),
        lhs: Value::Exact(lhs),
        rhs: Value::Exact(rhs),
        abs_err,
        rel_err: abs_err / scale.max(1e-300),
        pass,
        near_trivial: false,
        diagnostics,
    })
}
