//! Adaptive Gauss–Legendre integration over θ ∈ [0, π] and the beta
//! integrals built on the weight `h(cos 2θ; 1) / h(cos θ; a, b, c, d)`.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{QError, Result};
use crate::qcalc::{h_factor, phi_series, qpoch_finite, qpoch_infinite, ratio_series, Linear};
use crate::scalar::{sum_terms, Scalar, TruncationPolicy};

/// Relative size of the imaginary part tolerated in a real-valued integral.
pub const IMAG_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    /// Gauss–Legendre nodes per panel.
    pub panel_order: usize,
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_panels: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            panel_order: 16,
            abs_tol: 1e-10,
            rel_tol: 1e-12,
            max_panels: 4000,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if self.panel_order < 2 || self.max_panels == 0 {
            return Err(QError::Domain(
                "panel_order must be at least 2 and max_panels at least 1".into(),
            ));
        }
        if !(self.abs_tol > 0.0) || !(self.rel_tol > 0.0) {
            return Err(QError::Domain("quadrature tolerances must be positive".into()));
        }
        Ok(())
    }
}

/// Nodes and weights of the `n`-point Gauss–Legendre rule on [-1, 1].
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // P_n(x) and P_n'(x) by the three-term recurrence
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let k = k as f64;
                let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 0 { 1.0 } else { p1 };
            let pm = if n == 1 { 1.0 } else { p0 };
            dp = n as f64 * (x * pn - pm) / (x * x - 1.0);
            let dx = pn / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: Complex64,
    pub err_estimate: f64,
    pub panels: usize,
}

impl Integral {
    /// Whether the imaginary part is negligible next to the real part.
    pub fn is_real(&self) -> bool {
        self.value.im.abs() <= IMAG_TOL * self.value.re.abs()
    }
}

struct Panel {
    lo: f64,
    hi: f64,
    value: Complex64,
    err: f64,
}

struct Rule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl Rule {
    fn apply<F: Fn(f64) -> Result<Complex64>>(&self, f: &F, lo: f64, hi: f64) -> Result<Complex64> {
        let (mid, half) = ((lo + hi) / 2.0, (hi - lo) / 2.0);
        let mut acc = Complex64::new(0.0, 0.0);
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            acc += *w * f(mid + half * x)?;
        }
        Ok(acc * half)
    }

    fn panel<F: Fn(f64) -> Result<Complex64>>(&self, f: &F, lo: f64, hi: f64) -> Result<Panel> {
        let mid = (lo + hi) / 2.0;
        let coarse = self.apply(f, lo, hi)?;
        let value = self.apply(f, lo, mid)? + self.apply(f, mid, hi)?;
        Ok(Panel {
            lo,
            hi,
            value,
            err: (value - coarse).norm(),
        })
    }
}

/// `∫_lo^hi f`, bisecting the panel with the largest error estimate until the
/// total estimate is within `max(abs_tol, rel_tol·|value|)`.
pub fn integrate<F>(f: F, lo: f64, hi: f64, config: &QuadratureConfig) -> Result<Integral>
where
    F: Fn(f64) -> Result<Complex64>,
{
    config.validate()?;
    let (nodes, weights) = gauss_legendre(config.panel_order);
    let rule = Rule { nodes, weights };
    let mut panels = vec![rule.panel(&f, lo, hi)?];
    loop {
        let value: Complex64 = panels.iter().map(|p| p.value).sum();
        let err: f64 = panels.iter().map(|p| p.err).sum();
        if err <= config.abs_tol.max(config.rel_tol * value.norm()) {
            return Ok(Integral {
                value,
                err_estimate: err,
                panels: panels.len(),
            });
        }
        if panels.len() >= config.max_panels {
            return Err(QError::MaxPanelsExceeded(config.max_panels));
        }
        let worst = (0..panels.len())
            .max_by(|&i, &j| panels[i].err.total_cmp(&panels[j].err))
            .expect("at least one panel");
        let p = panels.swap_remove(worst);
        let mid = (p.lo + p.hi) / 2.0;
        panels.push(rule.panel(&f, p.lo, mid)?);
        panels.push(rule.panel(&f, mid, p.hi)?);
    }
}

/// `∫_0^π f(θ) dθ`.
pub fn integrate_theta<F>(f: F, config: &QuadratureConfig) -> Result<Integral>
where
    F: Fn(f64) -> Result<Complex64>,
{
    integrate(f, 0.0, PI, config)
}

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

fn check_moduli(params: &[Complex64]) -> Result<()> {
    for a in params {
        if !(a.norm() < 1.0) {
            return Err(QError::Domain(format!("parameter {a} must have modulus below 1")));
        }
    }
    Ok(())
}

/// `h(cos 2θ; 1) / h(cos θ; a_1, ..., a_m)`; defined for every real θ.
pub fn aw_weight(theta: f64, params: &[Complex64], q: Complex64, policy: &TruncationPolicy) -> Result<Complex64> {
    let x = theta.cos();
    let mut den = one();
    for &a in params {
        den *= h_factor(x, a, q, policy)?;
    }
    Ok(h_factor((2.0 * theta).cos(), one(), q, policy)? * den.try_recip(policy)?)
}

fn pinf(a: Complex64, q: Complex64, policy: &TruncationPolicy) -> Result<Complex64> {
    qpoch_infinite(&a, &q, policy)
}

/// `∫_0^π h(cos 2θ; 1) / h(cos θ; a, b, c, d) dθ`.
pub fn askey_wilson_integral(
    [a, b, c, d]: [Complex64; 4],
    q: Complex64,
    policy: &TruncationPolicy,
    config: &QuadratureConfig,
) -> Result<Integral> {
    q.check_base()?;
    check_moduli(&[a, b, c, d])?;
    integrate_theta(|t| aw_weight(t, &[a, b, c, d], q, policy), config)
}

/// `2π (abcd; q)_∞ / (q, ab, ac, ad, bc, bd, cd; q)_∞`.
pub fn askey_wilson_closed_form(
    [a, b, c, d]: [Complex64; 4],
    q: Complex64,
    policy: &TruncationPolicy,
) -> Result<Complex64> {
    let mut den = pinf(q, q, policy)?;
    for x in [a * b, a * c, a * d, b * c, b * d, c * d] {
        den *= pinf(x, q, policy)?;
    }
    Ok(2.0 * PI * pinf(a * b * c * d, q, policy)? * den.try_recip(policy)?)
}

/// Integrand of the five-parameter beta integral:
/// the Askey–Wilson weight times `_3φ2(ce^{iθ}, ce^{-iθ}, c/r; ac, bc; q, abr/c)`.
pub fn beta_integrand(
    theta: f64,
    [a, b, c, d, r]: [Complex64; 5],
    q: Complex64,
    policy: &TruncationPolicy,
) -> Result<Complex64> {
    if c.is_zero() {
        return Err(QError::Domain("the beta integral needs c ≠ 0".into()));
    }
    let e = Complex64::from_polar(1.0, theta);
    let z = a * b * r / c;
    // (c/r; q)_n (abr/c)^n = Π (abr/c - ab q^k), finite at r = 0
    let phi = ratio_series(
        one(),
        &[Linear::unit(c * e), Linear::unit(c / e), Linear::new(z, a * b)],
        &[Linear::unit(q), Linear::unit(a * c), Linear::unit(b * c)],
        &q,
        policy,
    )?;
    Ok(aw_weight(theta, &[a, b, c, d], q, policy)? * phi)
}

/// `∫_0^π` of [`beta_integrand`].
pub fn beta_integral(
    params: [Complex64; 5],
    q: Complex64,
    policy: &TruncationPolicy,
    config: &QuadratureConfig,
) -> Result<Integral> {
    q.check_base()?;
    let [a, b, c, d, r] = params;
    check_moduli(&[a, b, c, d, a * b * r / c])?;
    integrate_theta(|t| beta_integrand(t, params, q, policy), config)
}

/// `2π (abdr; q)_∞ / (q, ac, ad, bc, bd, cd, abr/c; q)_∞`.
pub fn beta_closed_form([a, b, c, d, r]: [Complex64; 5], q: Complex64, policy: &TruncationPolicy) -> Result<Complex64> {
    if c.is_zero() {
        return Err(QError::Domain("the beta integral needs c ≠ 0".into()));
    }
    let mut den = pinf(q, q, policy)?;
    for x in [a * c, a * d, b * c, b * d, c * d, a * b * r / c] {
        den *= pinf(x, q, policy)?;
    }
    Ok(2.0 * PI * pinf(a * b * d * r, q, policy)? * den.try_recip(policy)?)
}

/// Largest degree accepted by [`qhermite_orthogonality`].
pub const MAX_HERMITE_DEGREE: usize = 12;

/// `H_n(x|q)` for `n = 0..=n_max` by `H_{n+1} = 2x H_n - (1 - q^n) H_{n-1}`.
fn hermite_values(n_max: usize, x: f64, q: f64) -> Vec<f64> {
    let mut h = vec![1.0, 2.0 * x];
    let mut qn = q;
    for n in 1..n_max {
        let next = 2.0 * x * h[n] - (1.0 - qn) * h[n - 1];
        h.push(next);
        qn *= q;
    }
    h.truncate(n_max + 1);
    h
}

/// `∫_0^π H_m(cos θ|q) H_n(cos θ|q) h(cos 2θ; 1) dθ`.
pub fn qhermite_orthogonality(
    m: usize,
    n: usize,
    q: f64,
    policy: &TruncationPolicy,
    config: &QuadratureConfig,
) -> Result<Integral> {
    if m > MAX_HERMITE_DEGREE || n > MAX_HERMITE_DEGREE {
        return Err(QError::Domain(format!("degrees must not exceed {MAX_HERMITE_DEGREE}")));
    }
    let qc = Complex64::new(q, 0.0);
    qc.check_base()?;
    integrate_theta(
        |t| {
            let h = hermite_values(m.max(n), t.cos(), q);
            Ok(h[m] * h[n] * aw_weight(t, &[], qc, policy)?)
        },
        config,
    )
}

/// `2π (q;q)_n δ_{mn} / (q;q)_∞`.
pub fn qhermite_norm(m: usize, n: usize, q: f64, policy: &TruncationPolicy) -> Result<f64> {
    if m != n {
        return Ok(0.0);
    }
    let qc = Complex64::new(q, 0.0);
    Ok((2.0 * PI * qpoch_finite(&qc, &qc, n) * pinf(qc, qc, policy)?.try_recip(policy)?).re)
}

/// Two independently computed values of the same quantity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Comparison {
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub abs_err: f64,
    /// `abs_err / max(|lhs|, |rhs|, 1e-300)`.
    pub rel_err: f64,
}

impl Comparison {
    pub fn new(lhs: Complex64, rhs: Complex64) -> Self {
        let abs_err = (lhs - rhs).norm();
        Self {
            lhs,
            rhs,
            abs_err,
            rel_err: abs_err / lhs.norm().max(rhs.norm()).max(1e-300),
        }
    }
}

/// `Σ_n H_n(cos θ|q) t^n / (q;q)_n` against `1 / (te^{iθ}, te^{-iθ}; q)_∞`.
pub fn qhermite_gf_check(t: Complex64, theta: f64, q: f64, policy: &TruncationPolicy) -> Result<Comparison> {
    if !(t.norm() < 1.0) {
        return Err(QError::Domain("the generating function needs |t| < 1".into()));
    }
    let qc = Complex64::new(q, 0.0);
    qc.check_base()?;
    let x = theta.cos();
    let (mut prev, mut cur) = (0.0, 1.0);
    let mut weight = one();
    let mut qn = 1.0;
    let lhs = sum_terms(Complex64::new(0.0, 0.0), policy, |_| {
        let term = cur * weight;
        let next = 2.0 * x * cur - (1.0 - qn) * prev;
        prev = cur;
        cur = next;
        qn *= q;
        weight = weight * t / (1.0 - qn);
        Ok(Some(term))
    })?;
    let e = Complex64::from_polar(1.0, theta);
    let rhs = (pinf(t * e, qc, policy)? * pinf(t / e, qc, policy)?).try_recip(policy)?;
    Ok(Comparison::new(lhs, rhs))
}

/// The constant `a₀ = Σ_n (ar; q)_n (bd)^n / (q; q)_n` against `(abdr; q)_∞ / (bd; q)_∞`.
pub fn a0_check(
    a: Complex64,
    b: Complex64,
    d: Complex64,
    r: Complex64,
    q: Complex64,
    policy: &TruncationPolicy,
) -> Result<Comparison> {
    if !((b * d).norm() < 1.0) {
        return Err(QError::Domain("a₀ needs |bd| < 1".into()));
    }
    let series = phi_series(&[a * r], &[], &q, &(b * d), policy)?;
    let product = pinf(a * b * d * r, q, policy)? * pinf(b * d, q, policy)?.try_recip(policy)?;
    Ok(Comparison::new(series, product))
}

/// A sampled beta-integral point `(q; a, b, c, d, r)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaPoint {
    pub q: f64,
    pub params: [Complex64; 5],
}

impl BetaPoint {
    /// The Askey–Wilson parameters `a, b, c, d`.
    pub fn aw(&self) -> [Complex64; 4] {
        let [a, b, c, d, _] = self.params;
        [a, b, c, d]
    }
}

/// Deterministic beta-integral points: real `q ∈ [0.05, 0.8]`, complex
/// `a, b, c, d` with moduli in `[0.05, 0.8]` (`|c| ≥ 0.2`), and `r` chosen so
/// that `|abr/c| ≤ 0.8`.
pub fn sample_beta_points(seed: u64, count: usize) -> Vec<BetaPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let q = rng.gen_range(0.05..0.8);
        let mut polar = |lo: f64, hi: f64| Complex64::from_polar(rng.gen_range(lo..hi), rng.gen_range(0.0..TAU));
        let params = [
            polar(0.05, 0.8),
            polar(0.05, 0.8),
            polar(0.2, 0.8),
            polar(0.05, 0.8),
            polar(0.05, 2.0),
        ];
        let [a, b, c, _, r] = params;
        if (a * b * r / c).norm() <= 0.8 {
            out.push(BetaPoint { q, params });
        }
    }
    out
}
