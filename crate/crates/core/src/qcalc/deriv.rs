use crate::error::{QError, Result};
use crate::point::{ParameterPoint, Slot, SlotValue};
use crate::scalar::{Scalar, TruncationPolicy};

/// `D_{q,x} f = (f(x) - f(qx)) / x`, for `x ≠ 0`.
pub fn q_derivative<S, F>(f: F, x: &S, q: &S, policy: &TruncationPolicy) -> Result<S>
where
    S: Scalar,
    F: Fn(&S) -> Result<S>,
{
    if x.is_zero() {
        return Err(QError::Domain("q-derivative at x = 0".into()));
    }
    let qx = q.clone() * x.clone();
    (f(x)? - f(&qx)?).try_div(x, policy)
}

/// q-derivative of `f` in one slot of `point`, the other slots held fixed.
pub fn q_partial<S, F>(f: F, slot: Slot, point: &ParameterPoint<S>, policy: &TruncationPolicy) -> Result<S>
where
    S: Scalar + SlotValue,
    F: Fn(&ParameterPoint<S>) -> Result<S>,
{
    let x = point.get(slot);
    if x.is_zero() {
        return Err(QError::Domain(format!("q-partial derivative at {slot} = 0")));
    }
    let mut shifted = point.clone();
    shifted.set(slot, point.q.clone() * x.clone());
    (f(point)? - f(&shifted)?).try_div(&x, policy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcalc::qpoch_infinite_recip;
    use num_complex::Complex64;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn derivatives_of_powers() {
        let p = TruncationPolicy::default();
        let q = c(0.5);
        assert_eq!(q_derivative(|_| Ok(c(4.0)), &c(0.3), &q, &p).unwrap(), c(0.0));
        let d = q_derivative(|x: &Complex64| Ok(x * x), &c(1.0), &q, &p).unwrap();
        assert!((d - c(0.75)).norm() < 1e-15);
        let x = Complex64::new(0.7, -0.2);
        for n in 0..8u32 {
            let d = q_derivative(|y: &Complex64| Ok(y.powu(n)), &x, &q, &p).unwrap();
            let expect = if n == 0 {
                c(0.0)
            } else {
                (1.0 - q.powu(n)) * x.powu(n - 1)
            };
            assert!((d - expect).norm() < 1e-14);
        }
        assert!(q_derivative(|y: &Complex64| Ok(*y), &c(0.0), &q, &p).is_err());
    }

    #[test]
    fn partial_derivatives() {
        let p = TruncationPolicy::default();
        let pt = ParameterPoint::new(c(0.5)).with(Slot::A, c(1.0)).with(Slot::B, c(2.0));
        let f = |pt: &ParameterPoint<Complex64>| Ok(pt.get(Slot::A) * pt.get(Slot::B));
        assert!((q_partial(f, Slot::A, &pt, &p).unwrap() - c(1.0)).norm() < 1e-15);
        let g = |pt: &ParameterPoint<Complex64>| Ok(pt.get(Slot::B) * 3.0);
        assert_eq!(q_partial(g, Slot::A, &pt, &p).unwrap(), c(0.0));
        assert!(q_partial(f, Slot::C, &pt, &p).is_err());
    }

    #[test]
    fn symmetric_generating_function_satisfies_q_pde() {
        // 1/((at, bt); q)_∞ expands in Rogers–Szegő polynomials
        let p = TruncationPolicy::default();
        let t = Complex64::new(0.4, 0.3);
        let pt = ParameterPoint::new(c(0.6))
            .with(Slot::A, Complex64::new(0.5, -0.2))
            .with(Slot::B, Complex64::new(-0.3, 0.8));
        let f = |pt: &ParameterPoint<Complex64>| {
            Ok(qpoch_infinite_recip(&(pt.get(Slot::A) * t), &pt.q, &p)?
                * qpoch_infinite_recip(&(pt.get(Slot::B) * t), &pt.q, &p)?)
        };
        let da = q_partial(f, Slot::A, &pt, &p).unwrap();
        let db = q_partial(f, Slot::B, &pt, &p).unwrap();
        assert!((da - db).norm() <= 1e-12 * da.norm());
    }
}
