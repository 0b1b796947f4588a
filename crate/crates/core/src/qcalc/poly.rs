use std::f64::consts::PI;

use num_complex::Complex64;

use super::pochhammer::qbinomial_row;
use crate::error::{QError, Result};
use crate::scalar::Scalar;

/// Polynomial in one variable with coefficients listed from the constant term up.
/// Trailing zeros are trimmed, so the empty list is the zero polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct QPolynomial<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> QPolynomial<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &S) -> S {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }
}

/// `h_n(a, b|q) = Σ_k [n k]_q a^k b^{n-k}`.
pub fn rogers_szego<S: Scalar>(n: usize, a: &S, b: &S, q: &S) -> S {
    rogers_szego_poly(n, b, q).eval(a)
}

/// `h_n(·, b|q)` as a polynomial in `a`.
pub fn rogers_szego_poly<S: Scalar>(n: usize, b: &S, q: &S) -> QPolynomial<S> {
    let row = qbinomial_row(n, q);
    let coeffs = row
        .into_iter()
        .enumerate()
        .map(|(k, c)| c * b.pow((n - k) as u64))
        .collect();
    QPolynomial::new(coeffs)
}

/// `H_n(cos θ|q) = Σ_k [n k]_q e^{i(n-2k)θ}` for θ ∈ [0, π].
pub fn q_hermite(n: usize, theta: f64, q: Complex64) -> Result<Complex64> {
    if !(0.0..=PI).contains(&theta) {
        return Err(QError::Domain(format!("theta = {theta} is outside [0, π]")));
    }
    Ok(qbinomial_row(n, &q)
        .into_iter()
        .enumerate()
        .map(|(k, c)| c * Complex64::from_polar(1.0, (n as f64 - 2.0 * k as f64) * theta))
        .sum())
}

/// `H_n(x|q)` in `x = cos θ`, from `2x H_n = H_{n+1} + (1 - q^n) H_{n-1}`.
pub fn q_hermite_poly<S: Scalar>(n: usize, q: &S) -> QPolynomial<S> {
    let one = q.one_like();
    let mut prev: Vec<S> = vec![];
    let mut cur = vec![one.clone()];
    let mut qk = one.clone();
    for _ in 0..n {
        let mut next: Vec<S> = vec![q.zero_like(); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] = next[i + 1].clone() + q.int_like(2) * c.clone();
        }
        let w = one.clone() - qk.clone();
        for (i, c) in prev.iter().enumerate() {
            next[i] = next[i].clone() - w.clone() * c.clone();
        }
        qk = qk * q.clone();
        prev = cur;
        cur = next;
    }
    QPolynomial::new(cur)
}
