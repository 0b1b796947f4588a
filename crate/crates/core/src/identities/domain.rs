//! Arithmetic context shared by the numeric and exact evaluators.
//!
//! Evaluators manipulate parameters (`P`) with multiplication and division
//! only, and lift them into scalars (`S`) when a sum or product needs them.
//! In exact mode parameters are monomials `c·q^m`, so quotients such as
//! `q/(du)` stay exact until they are expanded.

use std::fmt;
use std::marker::PhantomData;
use std::ops::{Mul, Neg};

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::error::{QError, Result};
use crate::exact::{FormalSeries, Monomial};
use crate::point::SlotValue;
use crate::qcalc::{qpoch_infinite, qpoch_infinite_recip, ratio_series, Linear};
use crate::scalar::{sum_terms, Scalar, TruncationPolicy};
use crate::wide::{narrow, widen, Wide};

/// Product of clones: `pr!(a, b, c)` is `a·b·c`.
macro_rules! pr {
    ($first:expr $(, $rest:expr)* $(,)?) => { $first.clone() $(* $rest.clone())* };
}
pub(crate) use pr;

/// Evaluation mode of a check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Numeric,
    Exact,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Numeric => "numeric",
            Mode::Exact => "exact",
        })
    }
}

/// Parameter values: closed under products, quotients and integer powers.
pub trait Param: Clone + fmt::Debug + Send + Sync + Mul<Output = Self> + Neg<Output = Self> + SlotValue {
    fn int(n: i64) -> Self;
    fn vanishes(&self) -> bool;
    fn quot(&self, other: &Self) -> Result<Self>;
    fn ipow(&self, n: i64) -> Result<Self>;
    /// Modulus, for numeric predicates. Exact parameters have none.
    fn modulus(&self) -> Option<f64>;
}

impl Param for Complex64 {
    fn int(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }

    fn vanishes(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    fn quot(&self, other: &Self) -> Result<Self> {
        if other.vanishes() {
            return Err(QError::Domain(format!("division of {self} by zero")));
        }
        Ok(self / other)
    }

    fn ipow(&self, n: i64) -> Result<Self> {
        if n < 0 && self.vanishes() {
            return Err(QError::Domain("negative power of zero".into()));
        }
        Ok(Complex64::powi(self, n as i32))
    }

    fn modulus(&self) -> Option<f64> {
        Some(self.norm())
    }
}

impl Param for Wide {
    fn int(n: i64) -> Self {
        widen(Complex64::new(n as f64, 0.0))
    }

    fn vanishes(&self) -> bool {
        Scalar::is_zero(self)
    }

    fn quot(&self, other: &Self) -> Result<Self> {
        if other.vanishes() {
            return Err(QError::Domain(format!("division of {} by zero", narrow(*self))));
        }
        Ok(self / other)
    }

    fn ipow(&self, n: i64) -> Result<Self> {
        if n < 0 && self.vanishes() {
            return Err(QError::Domain("negative power of zero".into()));
        }
        Ok(self.powi(n as i32))
    }

    fn modulus(&self) -> Option<f64> {
        Some(narrow(*self).norm())
    }
}

impl Param for Monomial {
    fn int(n: i64) -> Self {
        Monomial::int(n)
    }

    fn vanishes(&self) -> bool {
        self.is_zero()
    }

    fn quot(&self, other: &Self) -> Result<Self> {
        self.try_div(other)
    }

    fn ipow(&self, n: i64) -> Result<Self> {
        self.powi(n)
    }

    fn modulus(&self) -> Option<f64> {
        None
    }
}

/// Numeric or exact arithmetic for identity evaluation.
pub trait Domain: Sync {
    type P: Param;
    type S: Scalar;

    fn mode(&self) -> Mode;
    fn policy(&self) -> &TruncationPolicy;
    fn lift(&self, p: &Self::P) -> Result<Self::S>;
    /// `num / (d1 - d2)`. Exact mode cancels the common power of `q` first,
    /// so `q^k/(d - q^k)` stays expandable when `d` is itself a multiple of `q`.
    fn div_binomial(&self, num: &Self::S, d1: &Self::P, d2: &Self::P) -> Result<Self::S>;
    /// `N` such that the two-sided theta sum may be cut at `|n| <= N`.
    fn theta_cutoff(&self, q: &Self::P, x: &Self::P) -> Result<usize>;
}

/// Floating-point scalars usable as numeric parameters.
pub trait NumericScalar: Scalar + Param + Copy {
    fn from_c64(z: Complex64) -> Self;
    fn to_c64(self) -> Complex64;
}

impl NumericScalar for Complex64 {
    fn from_c64(z: Complex64) -> Self {
        z
    }

    fn to_c64(self) -> Complex64 {
        self
    }
}

impl NumericScalar for Wide {
    fn from_c64(z: Complex64) -> Self {
        widen(z)
    }

    fn to_c64(self) -> Complex64 {
        narrow(self)
    }
}

/// Floating-point evaluation in working precision `T`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericDomain<T = Complex64> {
    pub policy: TruncationPolicy,
    precision: PhantomData<T>,
}

impl<T> NumericDomain<T> {
    pub fn new(policy: TruncationPolicy) -> Self {
        Self {
            policy,
            precision: PhantomData,
        }
    }
}

impl<T> Default for NumericDomain<T> {
    fn default() -> Self {
        Self::new(TruncationPolicy::default())
    }
}

impl<T: NumericScalar> Domain for NumericDomain<T> {
    type P = T;
    type S = T;

    fn mode(&self) -> Mode {
        Mode::Numeric
    }

    fn policy(&self) -> &TruncationPolicy {
        &self.policy
    }

    fn lift(&self, p: &T) -> Result<T> {
        let z = p.to_c64();
        if z.re.is_finite() && z.im.is_finite() {
            Ok(*p)
        } else {
            Err(QError::Domain(format!("non-finite parameter {z}")))
        }
    }

    fn div_binomial(&self, num: &T, d1: &T, d2: &T) -> Result<T> {
        num.try_div(&(*d1 - *d2), &self.policy)
    }

    fn theta_cutoff(&self, q: &T, x: &T) -> Result<usize> {
        let (q, x) = (q.to_c64(), x.to_c64());
        let lq = q.norm().ln();
        let m = x.norm().max(1.0 / x.norm()).ln();
        let ltol = self.policy.tail_tol.ln();
        (1..=self.policy.max_terms)
            .find(|&n| {
                let n = n as f64;
                n * (n - 1.0) / 2.0 * lq + n * m < ltol
            })
            .ok_or_else(|| QError::NonConvergent("theta sum cutoff exceeds max_terms".into()))
    }
}

/// Exact arithmetic modulo `q^order`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExactDomain {
    pub order: usize,
    pub policy: TruncationPolicy,
}

impl ExactDomain {
    pub fn new(order: usize) -> Self {
        Self {
            order,
            policy: TruncationPolicy {
                max_terms: 100_000,
                max_factors: 100_000,
                ..TruncationPolicy::default()
            },
        }
    }
}

impl Domain for ExactDomain {
    type P = Monomial;
    type S = FormalSeries;

    fn mode(&self) -> Mode {
        Mode::Exact
    }

    fn policy(&self) -> &TruncationPolicy {
        &self.policy
    }

    fn lift(&self, p: &Monomial) -> Result<FormalSeries> {
        p.to_series(self.order)
    }

    fn div_binomial(&self, num: &FormalSeries, d1: &Monomial, d2: &Monomial) -> Result<FormalSeries> {
        let m = match (d1.is_zero(), d2.is_zero()) {
            (true, true) => return Err(QError::Pole("zero denominator".into())),
            (false, true) => d1.power,
            (true, false) => d2.power,
            (false, false) => d1.power.min(d2.power),
        };
        if m <= 0 {
            return num.try_div(&(self.lift(d1)? - self.lift(d2)?), &self.policy);
        }
        let shift = Monomial::new(crate::exact::rat(1, 1), m);
        let den = self.lift(&d1.try_div(&shift)?)? - self.lift(&d2.try_div(&shift)?)?;
        num.unshift(m.to_usize().unwrap_or(usize::MAX))?
            .try_div(&den, &self.policy)
    }

    fn theta_cutoff(&self, q: &Monomial, _x: &Monomial) -> Result<usize> {
        if q.power < 1 {
            return Err(QError::Domain(format!(
                "exact base {q} must carry a positive power of q"
            )));
        }
        let p = q.power as usize;
        Ok((1..).find(|&n| p * n * (n - 1) / 2 >= self.order).unwrap_or(1))
    }
}

/// A domain together with the base `q` of the point being evaluated.
pub struct Ctx<'a, D: Domain> {
    pub dom: &'a D,
    pub q: D::P,
    pub qs: D::S,
}

impl<'a, D: Domain> Ctx<'a, D> {
    pub fn new(dom: &'a D, q: D::P) -> Result<Self> {
        let qs = dom.lift(&q)?;
        qs.check_base()?;
        Ok(Self { dom, q, qs })
    }

    pub fn policy(&self) -> &TruncationPolicy {
        self.dom.policy()
    }

    pub fn s(&self, p: &D::P) -> Result<D::S> {
        self.dom.lift(p)
    }

    pub fn one(&self) -> D::S {
        self.qs.one_like()
    }

    pub fn int(&self, n: i64) -> D::S {
        self.qs.int_like(n)
    }

    pub fn quot(&self, a: &D::P, b: &D::P) -> Result<D::P> {
        a.quot(b)
    }

    pub fn recip(&self, s: &D::S) -> Result<D::S> {
        s.try_recip(self.policy())
    }

    /// `(p_1, ..., p_m; q)_∞`.
    pub fn pinf(&self, ps: &[D::P]) -> Result<D::S> {
        let mut acc = self.one();
        for p in ps {
            acc = acc * qpoch_infinite(&self.s(p)?, &self.qs, self.policy())?;
        }
        Ok(acc)
    }

    /// `1 / (p_1, ..., p_m; q)_∞`, rejecting factors inside the pole margin.
    pub fn pinf_den(&self, ps: &[D::P]) -> Result<D::S> {
        let mut acc = self.one();
        for p in ps {
            acc = acc * qpoch_infinite_recip(&self.s(p)?, &self.qs, self.policy())?;
        }
        Ok(acc)
    }

    /// `Δ(u, v) = v (q, u/v, qv/u; q)_∞`.
    pub fn delta(&self, u: &D::P, v: &D::P) -> Result<D::S> {
        if u.vanishes() || v.vanishes() {
            return Err(QError::Domain("theta product needs u·v ≠ 0".into()));
        }
        let uv = u.quot(v)?;
        let vu = pr!(self.q, v).quot(u)?;
        Ok(self.s(v)? * self.pinf(&[self.q.clone(), uv, vu])?)
    }

    pub fn unit(&self, a: &D::P) -> Result<Linear<D::S>> {
        Ok(Linear::unit(self.s(a)?))
    }

    /// `c - slope·q^n`.
    pub fn lin(&self, c: &D::P, slope: &D::P) -> Result<Linear<D::S>> {
        Ok(Linear::new(self.s(c)?, self.s(slope)?))
    }

    pub fn konst(&self, c: &D::P) -> Result<Linear<D::S>> {
        Ok(Linear::constant(self.s(c)?))
    }

    pub fn series(&self, start: D::S, num: &[Linear<D::S>], den: &[Linear<D::S>]) -> Result<D::S> {
        ratio_series(start, num, den, &self.qs, self.policy())
    }

    /// `Σ_n f(n)` under the policy; `f` may keep its own running state.
    pub fn sum(&self, f: impl FnMut(usize) -> Result<Option<D::S>>) -> Result<D::S> {
        sum_terms(self.qs.zero_like(), self.policy(), f)
    }

    /// `∫_u^v f(x) d_q x` with `f` evaluated at parameter level.
    pub fn jackson(&self, u: &D::P, v: &D::P, f: impl Fn(&D::P) -> Result<D::S>) -> Result<D::S> {
        let (us, vs) = (self.s(u)?, self.s(v)?);
        let mut qn = D::P::int(1);
        let total = self.sum(|_| {
            let xv = pr!(v, qn);
            let xu = pr!(u, qn);
            let t = (vs.clone() * f(&xv)? - us.clone() * f(&xu)?) * self.s(&qn)?;
            qn = pr!(qn, self.q);
            Ok(Some(t))
        })?;
        Ok((self.one() - self.qs.clone()) * total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn exact_binomial_division_cancels_powers() {
        let dom = ExactDomain::new(8);
        let q = Monomial::new(rat(1, 1), 1);
        let d = Monomial::new(rat(2, 1), 2);
        // q/(2q^2 - q) = 1/(2q - 1) = -(1 + 2q + 4q^2 + ...)
        let r = dom.div_binomial(&dom.lift(&q).unwrap(), &d, &q).unwrap();
        for k in 0..8 {
            assert_eq!(r.coeffs()[k], -rat(1 << k, 1));
        }
        let r = dom.div_binomial(&dom.lift(&q).unwrap(), &Monomial::zero(), &q).unwrap();
        assert_eq!(r, FormalSeries::from_int(-1, 8));
        assert!(dom
            .div_binomial(&dom.lift(&q).unwrap(), &Monomial::zero(), &Monomial::zero())
            .is_err());
    }

    #[test]
    fn numeric_theta_cutoff() {
        let dom = NumericDomain::<Complex64>::default();
        let n = dom
            .theta_cutoff(&Complex64::new(0.5, 0.0), &Complex64::new(3.0, 0.0))
            .unwrap();
        let bound = |n: f64| 0.5f64.powf(n * (n - 1.0) / 2.0) * 3f64.powf(n);
        assert!(bound(n as f64) < 1e-14);
        assert!(bound(n as f64 - 1.0) >= 1e-14);
    }

    #[test]
    fn jackson_at_parameter_level() {
        let dom = NumericDomain::<Complex64>::default();
        let cx = Ctx::new(&dom, Complex64::new(0.5, 0.0)).unwrap();
        let one = Complex64::new(1.0, 0.0);
        let v = cx.jackson(&Complex64::new(0.0, 0.0), &one, |x| Ok(*x)).unwrap();
        assert!((v - 2.0 / 3.0).norm() < 1e-13);
    }
}
