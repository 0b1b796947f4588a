use crate::error::Result;
use crate::scalar::{sum_terms, Scalar, TruncationPolicy};

/// Thomae–Jackson q-integral `∫_a^b f(x) d_q x = (1-q) Σ_n [b f(bq^n) - a f(aq^n)] q^n`.
pub fn jackson_qintegral<S, F>(f: F, a: &S, b: &S, q: &S, policy: &TruncationPolicy) -> Result<S>
where
    S: Scalar,
    F: Fn(&S) -> Result<S>,
{
    q.check_base()?;
    let one = q.one_like();
    let mut qn = one.clone();
    let sum = sum_terms(q.zero_like(), policy, |_| {
        let xb = b.clone() * qn.clone();
        let xa = a.clone() * qn.clone();
        let t = (b.clone() * f(&xb)? - a.clone() * f(&xa)?) * qn.clone();
        qn = qn.clone() * q.clone();
        Ok(Some(t))
    })?;
    Ok((one - q.clone()) * sum)
}
