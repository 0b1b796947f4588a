//! Double-double complex arithmetic.
//!
//! Several registry identities equate an alternating series with O(1) terms
//! to an infinite product that is many orders of magnitude smaller when `q`
//! approaches 0.8. Evaluating those in `f64` loses the answer to
//! cancellation, so numeric checks run in roughly 106-bit precision and
//! round once at the end.

use num_complex::{Complex, Complex64};
use qd::Quad;

use crate::error::{QError, Result};
use crate::point::SlotValue;
use crate::scalar::{Scalar, TruncationPolicy};

/// Complex number with double-double components.
pub type Wide = Complex<Quad>;

pub fn widen(z: Complex64) -> Wide {
    Complex::new(Quad::from(z.re), Quad::from(z.im))
}

pub fn narrow(z: Wide) -> Complex64 {
    Complex64::new(z.re.0 + z.re.1, z.im.0 + z.im.1)
}

fn modulus(z: &Wide) -> f64 {
    z.re.0.hypot(z.im.0)
}

impl SlotValue for Wide {
    fn zero() -> Self {
        Complex::new(Quad::ZERO, Quad::ZERO)
    }
}

impl Scalar for Wide {
    fn zero_like(&self) -> Self {
        Complex::new(Quad::ZERO, Quad::ZERO)
    }

    fn one_like(&self) -> Self {
        Complex::new(Quad::ONE, Quad::ZERO)
    }

    fn int_like(&self, n: i64) -> Self {
        Complex::new(Quad::from(n as f64), Quad::ZERO)
    }

    fn is_zero(&self) -> bool {
        self.re == Quad::ZERO && self.im == Quad::ZERO
    }

    fn try_recip(&self, policy: &TruncationPolicy) -> Result<Self> {
        self.check_pole(policy)?;
        Ok(self.one_like() / *self)
    }

    fn check_pole(&self, policy: &TruncationPolicy) -> Result<()> {
        let m = modulus(self);
        if !m.is_finite() {
            return Err(QError::Pole(format!("non-finite denominator {}", narrow(*self))));
        }
        if m < policy.pole_margin {
            return Err(QError::Pole(format!("|{}| < {}", narrow(*self), policy.pole_margin)));
        }
        Ok(())
    }

    fn negligible(&self, partial: &Self, policy: &TruncationPolicy) -> bool {
        modulus(self) < policy.tail_tol * modulus(partial).max(1.0)
    }

    fn product_tail_negligible(&self, base: &Self, policy: &TruncationPolicy) -> bool {
        let t = modulus(self);
        t <= 0.5 && 2.0 * t / (1.0 - modulus(base)) < policy.tail_tol
    }

    fn check_base(&self) -> Result<()> {
        narrow(*self).check_base()
    }
}
