use crate::error::{QError, Result};
use crate::scalar::{sum_terms, Scalar, TruncationPolicy};

/// A term-ratio factor `constant - slope·q^n`, evaluated at the running index `n`.
///
/// Pairing a numerator parameter with (part of) the series argument as
/// `z(1 - a q^n) = z - (za) q^n` keeps the factor finite when `z → 0` and
/// `a → ∞` together.
#[derive(Debug, Clone, PartialEq)]
pub struct Linear<S> {
    pub constant: S,
    pub slope: S,
}

impl<S: Scalar> Linear<S> {
    pub fn new(constant: S, slope: S) -> Self {
        Self { constant, slope }
    }

    /// `1 - a q^n`.
    pub fn unit(a: S) -> Self {
        Self {
            constant: a.one_like(),
            slope: a,
        }
    }

    /// The constant factor `c`.
    pub fn constant(c: S) -> Self {
        Self {
            slope: c.zero_like(),
            constant: c,
        }
    }

    pub fn at(&self, qn: &S) -> S {
        self.constant.clone() - self.slope.clone() * qn.clone()
    }
}

/// `Σ_{n≥0} t_n` with `t_0 = start` and
/// `t_{n+1} = t_n · Π num_i(q^n) / Π den_j(q^n)`.
///
/// Stops on exact termination (a vanishing numerator factor) or under the
/// consecutive-small-terms rule of the policy.
pub fn ratio_series<S: Scalar>(
    start: S,
    num: &[Linear<S>],
    den: &[Linear<S>],
    q: &S,
    policy: &TruncationPolicy,
) -> Result<S> {
    let one = start.one_like();
    let relaxed = TruncationPolicy {
        pole_margin: f64::MIN_POSITIVE,
        ..*policy
    };
    let mut term = start.clone();
    let mut qn = one.clone();
    let mut terminated = start.is_zero();
    sum_terms(start.zero_like(), policy, |n| {
        if n == 0 {
            return Ok(Some(term.clone()));
        }
        if terminated {
            return Ok(None);
        }
        let mut up = one.clone();
        for f in num {
            let v = f.at(&qn);
            if v.is_zero() {
                terminated = true;
                return Ok(None);
            }
            up = up * v;
        }
        let mut down = one.clone();
        for f in den {
            let v = f.at(&qn);
            v.check_pole(policy)?;
            down = down * v;
        }
        term = term.clone() * up * down.try_recip(&relaxed)?;
        qn = qn.clone() * q.clone();
        Ok(Some(term.clone()))
    })
}

/// The basic hypergeometric series `_rφ_s(num; den; q, z)` with the
/// `((-1)^n q^{n(n-1)/2})^{1+s-r}` normaliser.
///
/// Shapes with `r > s + 1` diverge for every `z ≠ 0` and are rejected.
pub fn phi_series<S: Scalar>(num: &[S], den: &[S], q: &S, z: &S, policy: &TruncationPolicy) -> Result<S> {
    q.check_base()?;
    let (r, s) = (num.len(), den.len());
    if r > s + 1 && !z.is_zero() {
        return Err(QError::Domain(format!(
            "_{r}phi_{s} diverges for nonzero argument when r > s + 1"
        )));
    }
    let one = q.one_like();
    let zero = q.zero_like();
    let mut up: Vec<Linear<S>> = num.iter().cloned().map(Linear::unit).collect();
    up.push(Linear::constant(z.clone()));
    for _ in 0..(1 + s).saturating_sub(r) {
        // (-1)^n q^{n(n-1)/2} grows by -q^n from n to n+1
        up.push(Linear::new(zero.clone(), one.clone()));
    }
    let mut down = vec![Linear::unit(q.clone())];
    down.extend(den.iter().cloned().map(Linear::unit));
    ratio_series(one, &up, &down, q, policy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcalc::{qpoch_finite, qpoch_infinite};
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn q_binomial_theorem() {
        let p = TruncationPolicy::default();
        let q = c(0.6, 0.0);
        let a = c(0.7, -1.1);
        let z = c(0.3, 0.5);
        let lhs = phi_series(&[a], &[], &q, &z, &p).unwrap();
        let rhs = qpoch_infinite(&(a * z), &q, &p).unwrap() / qpoch_infinite(&z, &q, &p).unwrap();
        assert!((lhs - rhs).norm() <= 1e-12 * rhs.norm());
    }

    #[test]
    fn zero_argument_gives_one() {
        let p = TruncationPolicy::default();
        let q = c(0.5, 0.0);
        let v = phi_series(&[c(0.3, 0.0), c(0.2, 0.0)], &[c(0.1, 0.0)], &q, &c(0.0, 0.0), &p).unwrap();
        assert_eq!(v, c(1.0, 0.0));
    }

    #[test]
    fn terminating_series_is_finite_sum() {
        let p = TruncationPolicy::default();
        let q = c(0.5, 0.0);
        let a = c(4.0, 0.0); // q^{-2}
        let b = c(0.3, 0.0);
        let z = c(1.7, 0.0);
        let v = phi_series(&[a, b], &[c(0.2, 0.0)], &q, &z, &p).unwrap();
        // direct three-term sum
        let mut oracle = c(0.0, 0.0);
        for n in 0..3 {
            let t = qpoch_finite(&a, &q, n) * qpoch_finite(&b, &q, n)
                / (qpoch_finite(&q, &q, n) * qpoch_finite(&c(0.2, 0.0), &q, n))
                * z.powu(n as u32);
            oracle += t;
        }
        assert!((v - oracle).norm() < 1e-13);
    }

    #[test]
    fn over_determined_shape_is_rejected() {
        let p = TruncationPolicy::default();
        let q = c(0.5, 0.0);
        let r = phi_series(
            &[c(0.1, 0.0), c(0.2, 0.0), c(0.3, 0.0)],
            &[c(0.4, 0.0)],
            &q,
            &c(0.1, 0.0),
            &p,
        );
        assert!(matches!(r, Err(QError::Domain(_))));
    }

    #[test]
    fn denominator_pole_is_reported() {
        let p = TruncationPolicy::default();
        let q = c(0.5, 0.0);
        // b = q^{-1}: the factor (1 - b q) vanishes
        let r = phi_series(&[c(0.1, 0.0)], &[c(2.0, 0.0)], &q, &c(0.4, 0.0), &p);
        assert!(matches!(r, Err(QError::Pole(_))));
    }

    #[test]
    fn divergent_argument_fails() {
        let p = TruncationPolicy {
            max_terms: 300,
            ..Default::default()
        };
        let q = c(0.5, 0.0);
        let r = phi_series(&[c(0.1, 0.0)], &[], &q, &c(1.5, 0.0), &p);
        assert!(matches!(r, Err(QError::NonConvergent(_))));
    }

    #[test]
    fn euler_exponential_with_gauss_factor() {
        // _0phi_0(;;q,z) = (z;q)_∞
        let p = TruncationPolicy::default();
        let q = c(0.45, 0.0);
        let z = c(-1.3, 0.4);
        let v = phi_series(&[], &[], &q, &z, &p).unwrap();
        let w = qpoch_infinite(&z, &q, &p).unwrap();
        assert!((v - w).norm() <= 1e-13 * w.norm());
    }
}
