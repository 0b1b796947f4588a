//! Truncated formal power series in `q` with exact rational coefficients.
//!
//! A [`FormalSeries`] of order `N` stands for its residue modulo `q^N`; all
//! arithmetic agrees with the untruncated result on coefficients `0..N`.
//! [`Monomial`] carries exact-mode parameters of the shape `c·q^m`.

mod monomial;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{QError, Result};
use crate::scalar::{Scalar, TruncationPolicy};

pub use monomial::Monomial;

/// Exact rational number used for every coefficient.
pub type Rational = BigRational;

/// Builds `num/den` as an exact rational.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FormalSeries {
    coeffs: Vec<Rational>,
}

impl FormalSeries {
    /// The zero series modulo `q^order`.
    pub fn zero(order: usize) -> Self {
        assert!(order > 0, "series order must be positive");
        Self {
            coeffs: vec![Rational::zero(); order],
        }
    }

    /// The constant series `c` modulo `q^order`.
    pub fn from_rational(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn from_int(n: i64, order: usize) -> Self {
        Self::from_rational(Rational::from_integer(n.into()), order)
    }

    /// `c·q^power`, which is zero when `power >= order`.
    pub fn monomial(c: Rational, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power < order {
            s.coeffs[power] = c;
        }
        s
    }

    /// The formal variable `q`.
    pub fn variable(order: usize) -> Self {
        Self::monomial(Rational::one(), 1, order)
    }

    /// Takes the first `order` coefficients of `coeffs`, zero-padding as needed.
    pub fn from_coeffs(mut coeffs: Vec<Rational>, order: usize) -> Self {
        assert!(order > 0, "series order must be positive");
        coeffs.resize(order, Rational::zero());
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `q^k`.
    pub fn extract(&self, k: usize) -> Result<&Rational> {
        self.coeffs.get(k).ok_or(QError::OrderExceeded {
            index: k,
            order: self.order(),
        })
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(QError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self { coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Self { coeffs })
    }

    /// Cauchy product truncated to the common order.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let n = self.order();
        // Iterate over the sparser operand; parameters are usually monomials.
        let (sparse, dense) = if self.nonzero_count() <= other.nonzero_count() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = vec![Rational::zero(); n];
        for (i, a) in sparse.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in dense.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(Self { coeffs: out })
    }

    fn nonzero_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Multiplicative inverse modulo `q^N`; requires a nonzero constant term.
    pub fn inv(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(QError::NotInvertible);
        }
        let n = self.order();
        let inv0 = c0.recip();
        let support: Vec<(usize, &Rational)> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut out = vec![Rational::zero(); n];
        out[0] = inv0.clone();
        for k in 1..n {
            let mut acc = Rational::zero();
            for &(i, c) in &support {
                if i > k {
                    break;
                }
                let prev = &out[k - i];
                if !prev.is_zero() {
                    acc += c * prev;
                }
            }
            out[k] = -(acc * &inv0);
        }
        Ok(Self { coeffs: out })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `q^k`, dropping coefficients pushed past the order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut out = vec![Rational::zero(); n];
        if k < n {
            out[k..].clone_from_slice(&self.coeffs[..n - k]);
        }
        Self { coeffs: out }
    }

    /// Divides by `q^k`; the top `k` coefficients of the result are unknown
    /// and therefore rejected unless the division is exact in the known range.
    pub fn unshift(&self, k: usize) -> Result<Self> {
        if self.coeffs[..k.min(self.order())].iter().any(|c| !c.is_zero()) {
            return Err(QError::NotInvertible);
        }
        let n = self.order();
        let mut out = vec![Rational::zero(); n];
        if k < n {
            out[..n - k].clone_from_slice(&self.coeffs[k..]);
        }
        Ok(Self { coeffs: out })
    }
}

/// `(a;q)_∞` modulo `q^order` for a rational `a`.
///
/// Factor `k` is `1 - a·q^k`; factors with `k >= order` are congruent to 1,
/// so exactly `order` factors are multiplied.
pub fn qpoch_infinite(a: &Rational, order: usize) -> FormalSeries {
    let mut acc = FormalSeries::from_int(1, order);
    if a.is_zero() {
        return acc;
    }
    for k in 0..order {
        // acc *= (1 - a q^k), done in place from the top coefficient down.
        for i in (0..order).rev() {
            if i >= k && !acc.coeffs[i - k].is_zero() {
                let t = a * &acc.coeffs[i - k];
                acc.coeffs[i] -= t;
            }
        }
    }
    acc
}

impl fmt::Debug for FormalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FormalSeries({self})")
    }
}

impl fmt::Display for FormalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => write!(f, "q^{k}")?,
                _ => write!(f, "{mag}*q^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait for FormalSeries {
            type Output = FormalSeries;
            /// Panics if the orders differ; use the `try_` form to get an error instead.
            fn $method(self, rhs: FormalSeries) -> FormalSeries {
                self.$try(&rhs).expect("formal series order mismatch")
            }
        }

        impl<'a> $trait<&'a FormalSeries> for &'a FormalSeries {
            type Output = FormalSeries;
            fn $method(self, rhs: &'a FormalSeries) -> FormalSeries {
                self.$try(rhs).expect("formal series order mismatch")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for FormalSeries {
    type Output = FormalSeries;
    fn neg(self) -> FormalSeries {
        Self {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Scalar for FormalSeries {
    fn zero_like(&self) -> Self {
        Self::zero(self.order())
    }

    fn one_like(&self) -> Self {
        Self::from_int(1, self.order())
    }

    fn int_like(&self, n: i64) -> Self {
        Self::from_int(n, self.order())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn try_recip(&self, _policy: &TruncationPolicy) -> Result<Self> {
        self.inv()
    }

    fn check_pole(&self, _policy: &TruncationPolicy) -> Result<()> {
        if self.coeffs[0].is_zero() {
            Err(QError::Pole("denominator series has zero constant term".into()))
        } else {
            Ok(())
        }
    }

    fn negligible(&self, _partial: &Self, _policy: &TruncationPolicy) -> bool {
        Scalar::is_zero(self)
    }

    fn product_tail_negligible(&self, _base: &Self, _policy: &TruncationPolicy) -> bool {
        Scalar::is_zero(self)
    }

    fn check_base(&self) -> Result<()> {
        if self.coeffs[0].is_zero() {
            Ok(())
        } else {
            Err(QError::NonConvergent(
                "exact-mode base must have zero constant term".into(),
            ))
        }
    }
}
