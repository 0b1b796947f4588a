use std::f64::consts::PI;

use num_complex::Complex64;

use super::pochhammer::qpoch_infinite;
use crate::error::{QError, Result};
use crate::scalar::{Scalar, TruncationPolicy};

/// `Δ(u, v) = v (q, u/v, qv/u; q)_∞`.
pub fn delta_theta<S: Scalar>(u: &S, v: &S, q: &S, policy: &TruncationPolicy) -> Result<S> {
    if u.is_zero() || v.is_zero() {
        return Err(QError::Domain("theta product needs u·v ≠ 0".into()));
    }
    let u_over_v = u.try_div(v, policy)?;
    let qv_over_u = (q.clone() * v.clone()).try_div(u, policy)?;
    Ok(v.clone()
        * qpoch_infinite(q, q, policy)?
        * qpoch_infinite(&u_over_v, q, policy)?
        * qpoch_infinite(&qv_over_u, q, policy)?)
}

/// `h(x; a) = Π_k (1 - 2 q^k a x + q^{2k} a²)` for `x = cos θ`.
pub fn h_factor(x: f64, a: Complex64, q: Complex64, policy: &TruncationPolicy) -> Result<Complex64> {
    q.check_base()?;
    let qn = q.norm();
    let mut acc = Complex64::new(1.0, 0.0);
    let mut t = a;
    for _ in 0..policy.max_factors {
        let tn = t.norm();
        // two conjugate factors (1 - t e^{±iθ}) each carry the usual log-tail bound
        if tn <= 0.5 && 4.0 * tn / (1.0 - qn) < policy.tail_tol {
            return Ok(acc);
        }
        acc *= 1.0 - 2.0 * t * x + t * t;
        t *= q;
    }
    Err(QError::NonConvergent(format!(
        "h(x; a) needs more than {} factors",
        policy.max_factors
    )))
}

/// `h(cos θ; a_1, ..., a_m) = Π_j (a_j e^{iθ}, a_j e^{-iθ}; q)_∞` for θ ∈ [0, π].
pub fn hprod(theta: f64, params: &[Complex64], q: Complex64, policy: &TruncationPolicy) -> Result<Complex64> {
    if !(0.0..=PI).contains(&theta) {
        return Err(QError::Domain(format!("theta = {theta} is outside [0, π]")));
    }
    q.check_base()?;
    let x = theta.cos();
    params
        .iter()
        .try_fold(Complex64::new(1.0, 0.0), |acc, &a| Ok(acc * h_factor(x, a, q, policy)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn coincident_arguments_vanish() {
        let p = TruncationPolicy::default();
        let u = c(0.7, 0.2);
        assert_eq!(delta_theta(&u, &u, &c(0.5, 0.0), &p).unwrap(), c(0.0, 0.0));
        assert!(delta_theta(&c(0.0, 0.0), &u, &c(0.5, 0.0), &p).is_err());
    }

    #[test]
    fn antisymmetric_form() {
        let p = TruncationPolicy::default();
        let q = c(0.55, 0.0);
        let (u, v) = (c(0.8, -0.3), c(-0.4, 1.1));
        let d = delta_theta(&u, &v, &q, &p).unwrap();
        let alt = (v - u)
            * qpoch_infinite(&q, &q, &p).unwrap()
            * qpoch_infinite(&(q * u / v), &q, &p).unwrap()
            * qpoch_infinite(&(q * v / u), &q, &p).unwrap();
        assert!((d - alt).norm() <= 1e-12 * d.norm());
        let swapped = delta_theta(&v, &u, &q, &p).unwrap();
        assert!((d + swapped).norm() <= 1e-12 * d.norm());
    }

    #[test]
    fn unit_circle_theta_matches_h_product() {
        let p = TruncationPolicy::default();
        let q = c(0.4, 0.0);
        for theta in [0.3, 1.0, 2.2, 3.0] {
            let e = Complex64::from_polar(1.0, theta);
            let lhs = (e - e.inv()) * delta_theta(&e, &e.inv(), &q, &p).unwrap();
            let h2 = h_factor((2.0 * theta).cos(), c(1.0, 0.0), q, &p).unwrap();
            let rhs = qpoch_infinite(&q, &q, &p).unwrap() * h2;
            assert!((lhs - rhs).norm() <= 1e-12 * rhs.norm());
        }
    }

    #[test]
    fn h_products() {
        let p = TruncationPolicy::default();
        let q = c(0.5, 0.0);
        assert_eq!(hprod(1.0, &[], q, &p).unwrap(), c(1.0, 0.0));
        assert_eq!(hprod(1.0, &[c(0.0, 0.0)], q, &p).unwrap(), c(1.0, 0.0));
        assert!(hprod(-0.1, &[c(0.3, 0.0)], q, &p).is_err());
        for (theta, a) in [(0.4, c(0.6, 0.0)), (2.5, c(-0.3, 0.7)), (PI, c(0.9, 0.1))] {
            let e = Complex64::from_polar(1.0, theta);
            let direct = qpoch_infinite(&(a * e), &q, &p).unwrap() * qpoch_infinite(&(a / e), &q, &p).unwrap();
            let h = hprod(theta, &[a], q, &p).unwrap();
            assert!((h - direct).norm() <= 1e-12 * direct.norm());
        }
    }
}
