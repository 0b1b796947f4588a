//! Elementary Pochhammer inequalities and the shifted `r+1φr` majorant.
//!
//! All functions take a real base `0 < q < 1`. Comparisons allow a relative
//! slack of [`BOUND_SLACK`] for rounding and product truncation.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

use crate::error::{QError, Result};
use crate::qcalc::{phi_series, qpoch_finite, qpoch_infinite};
use crate::scalar::TruncationPolicy;

pub const BOUND_SLACK: f64 = 1e-12;

/// `k = None` stands for `k = ∞`.
fn poch(a: f64, q: f64, k: Option<usize>, policy: &TruncationPolicy) -> Result<f64> {
    let (a, q) = (Complex64::new(a, 0.0), Complex64::new(q, 0.0));
    Ok(match k {
        Some(k) => qpoch_finite(&a, &q, k).re,
        None => qpoch_infinite(&a, &q, policy)?.re,
    })
}

fn check_q(q: f64) -> Result<()> {
    if q > 0.0 && q < 1.0 {
        Ok(())
    } else {
        Err(QError::Domain(format!("bounds need 0 < q < 1, got {q}")))
    }
}

/// `((−ab;q)_k, (−a;q)_∞)` for `a ≥ 0`, `0 ≤ b ≤ 1`; the first never exceeds the second.
pub fn upper_pair(a: f64, b: f64, k: Option<usize>, q: f64, policy: &TruncationPolicy) -> Result<(f64, f64)> {
    check_q(q)?;
    if a < 0.0 || !(0.0..=1.0).contains(&b) {
        return Err(QError::Domain("need a ≥ 0 and 0 ≤ b ≤ 1".into()));
    }
    Ok((poch(-a * b, q, k, policy)?, poch(-a, q, None, policy)?))
}

/// `((ab;q)_k, (a;q)_∞)` for `0 ≤ a, b ≤ 1`; the first is never below the second.
pub fn lower_pair(a: f64, b: f64, k: Option<usize>, q: f64, policy: &TruncationPolicy) -> Result<(f64, f64)> {
    check_q(q)?;
    if !(0.0..=1.0).contains(&a) || !(0.0..=1.0).contains(&b) {
        return Err(QError::Domain("need 0 ≤ a ≤ 1 and 0 ≤ b ≤ 1".into()));
    }
    Ok((poch(a * b, q, k, policy)?, poch(a, q, None, policy)?))
}

/// `|r+1φr(a, a_i q^n; b_i q^n; q, x)|` and its majorant
/// `(−|ax|, −|a_1|, ...; q)_∞ / (|x|, |b_1|, ...; q)_∞`.
pub fn phi_pair(
    a: Complex64,
    top: &[Complex64],
    bottom: &[Complex64],
    x: Complex64,
    n: usize,
    q: f64,
    policy: &TruncationPolicy,
) -> Result<(f64, f64)> {
    check_q(q)?;
    if top.len() != bottom.len() {
        return Err(QError::Domain("need as many a_i as b_i".into()));
    }
    if x.norm() >= 1.0 || bottom.iter().any(|b| b.norm() >= 1.0) {
        return Err(QError::Domain("need |x|, |b_i| < 1".into()));
    }
    let qn = q.powi(n as i32);
    let mut num = vec![a];
    num.extend(top.iter().map(|t| t * qn));
    let den: Vec<Complex64> = bottom.iter().map(|b| b * qn).collect();
    let qc = Complex64::new(q, 0.0);
    let value = phi_series(&num, &den, &qc, &x, policy)?.norm();
    let mut bound = poch(-(a * x).norm(), q, None, policy)? / poch(x.norm(), q, None, policy)?;
    for (t, b) in top.iter().zip(bottom) {
        bound *= poch(-t.norm(), q, None, policy)? / poch(b.norm(), q, None, policy)?;
    }
    Ok((value, bound))
}

/// Violation counts from [`sweep`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BoundSweep {
    pub draws: usize,
    pub upper_violations: usize,
    pub lower_violations: usize,
    pub phi_violations: usize,
}

impl BoundSweep {
    pub fn clean(&self) -> bool {
        self.upper_violations == 0 && self.lower_violations == 0 && self.phi_violations == 0
    }
}

/// Draws `draws` seeded instances of each inequality and counts violations.
pub fn sweep(seed: u64, draws: usize, policy: &TruncationPolicy) -> Result<BoundSweep> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = BoundSweep {
        draws,
        ..Default::default()
    };
    for _ in 0..draws {
        let q = rng.gen_range(0.05..0.95);
        let k = match rng.gen_range(0..=31) {
            31 => None,
            k => Some(k),
        };
        let (a, b) = (rng.gen_range(0.0..5.0), rng.gen_range(0.0..=1.0));
        let (lhs, rhs) = upper_pair(a, b, k, q, policy)?;
        out.upper_violations += usize::from(lhs > rhs * (1.0 + BOUND_SLACK));

        let a = rng.gen_range(0.0..=1.0);
        let (lhs, rhs) = lower_pair(a, b, k, q, policy)?;
        out.lower_violations += usize::from(lhs < rhs * (1.0 - BOUND_SLACK) - BOUND_SLACK);

        let mut disc = |r: f64| Complex64::from_polar(rng.gen_range(0.0..r), rng.gen_range(0.0..TAU));
        let m = 1 + (q * 1000.0) as usize % 3;
        let a = disc(3.0);
        let top: Vec<_> = (0..m).map(|_| disc(0.95)).collect();
        let bottom: Vec<_> = (0..m).map(|_| disc(0.9)).collect();
        let x = disc(0.9);
        let n = rng.gen_range(0..10);
        let (value, bound) = phi_pair(a, &top, &bottom, x, n, q, policy)?;
        out.phi_violations += usize::from(value > bound * (1.0 + BOUND_SLACK));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equality_at_b_one_and_infinite_k() {
        let p = TruncationPolicy::default();
        let (l, r) = upper_pair(0.7, 1.0, None, 0.4, &p).unwrap();
        assert!((l - r).abs() <= 1e-15 * r);
    }

    #[test]
    fn rejects_bad_inputs() {
        let p = TruncationPolicy::default();
        assert!(upper_pair(-1.0, 0.5, None, 0.5, &p).is_err());
        assert!(lower_pair(1.5, 0.5, Some(3), 0.5, &p).is_err());
        assert!(upper_pair(1.0, 0.5, None, 1.0, &p).is_err());
    }
}
