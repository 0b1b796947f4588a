//! The value type shared by every evaluator, and the truncation rules that
//! govern infinite sums and products.
//!
//! Two realizations exist: [`Complex64`] for floating-point work and
//! [`FormalSeries`](crate::exact::FormalSeries) for coefficient-exact work
//! modulo `q^N`. Code written against [`Scalar`] runs unchanged in both.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{QError, Result};

/// Caps and tolerances for every truncated sum or product.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationPolicy {
    /// Maximum number of terms summed before a series is declared divergent.
    pub max_terms: usize,
    /// Maximum number of factors multiplied in an infinite product.
    pub max_factors: usize,
    /// Relative size below which a term (or product tail) is dropped.
    pub tail_tol: f64,
    /// Smallest admissible modulus of a denominator factor.
    pub pole_margin: f64,
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        Self {
            max_terms: 2000,
            max_factors: 4000,
            tail_tol: 1e-14,
            pole_margin: 1e-8,
        }
    }
}

impl TruncationPolicy {
    pub fn new(max_terms: usize, max_factors: usize, tail_tol: f64, pole_margin: f64) -> Result<Self> {
        let policy = Self {
            max_terms,
            max_factors,
            tail_tol,
            pole_margin,
        };
        policy.validate()?;
        Ok(policy)
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_terms == 0 || self.max_factors == 0 {
            return Err(QError::Domain("max_terms and max_factors must be at least 1".into()));
        }
        if !(self.tail_tol > 0.0) || !(self.pole_margin > 0.0) {
            return Err(QError::Domain("tail_tol and pole_margin must be positive".into()));
        }
        Ok(())
    }
}

/// Ring-like value used by all q-series primitives.
pub trait Scalar:
    Clone
    + fmt::Debug
    + PartialEq
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Additive identity in the same arithmetic context as `self`.
    fn zero_like(&self) -> Self;
    /// Multiplicative identity in the same arithmetic context as `self`.
    fn one_like(&self) -> Self;
    fn int_like(&self, n: i64) -> Self;
    fn is_zero(&self) -> bool;

    /// Multiplicative inverse. Numeric values closer to zero than the pole
    /// margin are rejected, as are exact series with a vanishing constant term.
    fn try_recip(&self, policy: &TruncationPolicy) -> Result<Self>;

    /// Rejects a denominator factor that is (numerically or formally) zero.
    fn check_pole(&self, policy: &TruncationPolicy) -> Result<()>;

    /// Whether `self`, the latest term of a running sum, is too small to matter.
    fn negligible(&self, partial: &Self, policy: &TruncationPolicy) -> bool;

    /// Whether the factor `1 - self` and every later factor of a product
    /// whose ratio is `base` can be dropped.
    fn product_tail_negligible(&self, base: &Self, policy: &TruncationPolicy) -> bool;

    /// Rejects a base that does not give a convergent product (`|q| >= 1`).
    fn check_base(&self) -> Result<()>;

    fn try_div(&self, other: &Self, policy: &TruncationPolicy) -> Result<Self> {
        Ok(self.clone() * other.try_recip(policy)?)
    }

    fn pow(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base.clone();
            }
            n >>= 1;
            if n > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

impl Scalar for Complex64 {
    fn zero_like(&self) -> Self {
        Complex64::new(0.0, 0.0)
    }

    fn one_like(&self) -> Self {
        Complex64::new(1.0, 0.0)
    }

    fn int_like(&self, n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }

    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    fn try_recip(&self, policy: &TruncationPolicy) -> Result<Self> {
        self.check_pole(policy)?;
        Ok(self.inv())
    }

    fn check_pole(&self, policy: &TruncationPolicy) -> Result<()> {
        let m = self.norm();
        if !m.is_finite() {
            return Err(QError::Pole(format!("non-finite denominator {self}")));
        }
        if m < policy.pole_margin {
            return Err(QError::Pole(format!("|{self}| < {}", policy.pole_margin)));
        }
        Ok(())
    }

    fn negligible(&self, partial: &Self, policy: &TruncationPolicy) -> bool {
        self.norm() < policy.tail_tol * partial.norm().max(1.0)
    }

    fn product_tail_negligible(&self, base: &Self, policy: &TruncationPolicy) -> bool {
        let t = self.norm();
        let r = base.norm();
        t <= 0.5 && 2.0 * t / (1.0 - r) < policy.tail_tol
    }

    fn check_base(&self) -> Result<()> {
        let r = self.norm();
        if r.is_finite() && r < 1.0 {
            Ok(())
        } else {
            Err(QError::NonConvergent(format!("|q| = {r} is not below 1")))
        }
    }
}

/// Number of consecutive negligible terms required before a sum stops.
pub const SMALL_TERM_RUN: usize = 3;

/// Sums `term(0) + term(1) + ...` under the truncation policy.
///
/// The generator returns `Ok(None)` once the series is known to terminate.
/// Summation otherwise stops after [`SMALL_TERM_RUN`] consecutive negligible
/// terms and fails with `NonConvergent` after `max_terms`.
pub fn sum_terms<S, F>(zero: S, policy: &TruncationPolicy, mut term: F) -> Result<S>
where
    S: Scalar,
    F: FnMut(usize) -> Result<Option<S>>,
{
    let mut partial = zero;
    let mut run = 0;
    for n in 0..policy.max_terms {
        let Some(t) = term(n)? else {
            return Ok(partial);
        };
        let small = t.negligible(&partial, policy);
        partial = partial + t;
        if small {
            run += 1;
            if run >= SMALL_TERM_RUN {
                return Ok(partial);
            }
        } else {
            run = 0;
        }
    }
    Err(QError::NonConvergent(format!(
        "terms did not decay within {} terms",
        policy.max_terms
    )))
}
