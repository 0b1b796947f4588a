use crate::error::{QError, Result};
use crate::scalar::{Scalar, TruncationPolicy};

/// `(a;q)_n = (1-a)(1-aq)...(1-aq^{n-1})`; the empty product for `n = 0`.
pub fn qpoch_finite<S: Scalar>(a: &S, q: &S, n: usize) -> S {
    let one = a.one_like();
    let mut acc = one.clone();
    let mut t = a.clone();
    for k in 0..n {
        acc = acc * (one.clone() - t.clone());
        if k + 1 < n {
            t = t * q.clone();
        }
    }
    acc
}

/// `(a;q)_∞`, truncated once the logarithmic tail bound
/// `2|aq^K|/(1-|q|)` drops below `tail_tol` (numeric) or `aq^K` vanishes
/// modulo the series order (exact).
pub fn qpoch_infinite<S: Scalar>(a: &S, q: &S, policy: &TruncationPolicy) -> Result<S> {
    infinite_product(a, q, policy, false)
}

/// `1/(a;q)_∞`, rejecting any factor `1 - aq^k` that lies within the pole margin.
pub fn qpoch_infinite_recip<S: Scalar>(a: &S, q: &S, policy: &TruncationPolicy) -> Result<S> {
    let p = infinite_product(a, q, policy, true)?;
    // every factor already cleared the margin; their product may legitimately be smaller
    let relaxed = TruncationPolicy {
        pole_margin: f64::MIN_POSITIVE,
        ..*policy
    };
    p.try_recip(&relaxed)
}

fn infinite_product<S: Scalar>(a: &S, q: &S, policy: &TruncationPolicy, denominator: bool) -> Result<S> {
    q.check_base()?;
    let one = a.one_like();
    let mut acc = one.clone();
    let mut t = a.clone();
    for _ in 0..policy.max_factors {
        if t.product_tail_negligible(q, policy) {
            return Ok(acc);
        }
        let factor = one.clone() - t.clone();
        if denominator {
            factor.check_pole(policy)?;
        }
        acc = acc * factor;
        t = t * q.clone();
    }
    Err(QError::NonConvergent(format!(
        "infinite product needs more than {} factors",
        policy.max_factors
    )))
}

/// Order of a shifted factorial: a finite length or `∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PochOrder {
    Finite(usize),
    Infinite,
}

/// `(a_1, ..., a_m; q)_n`, the product of the single factorials.
pub fn qpoch_multi<S: Scalar>(params: &[S], q: &S, order: PochOrder, policy: &TruncationPolicy) -> Result<S> {
    let mut acc = q.one_like();
    for a in params {
        acc = acc
            * match order {
                PochOrder::Finite(n) => qpoch_finite(a, q, n),
                PochOrder::Infinite => qpoch_infinite(a, q, policy)?,
            };
    }
    Ok(acc)
}

/// Row `n` of the q-Pascal triangle: `[C(n,0)_q, ..., C(n,n)_q]`.
///
/// Built from `C(m,k) = C(m-1,k-1) + q^k C(m-1,k)`, so no division occurs.
pub fn qbinomial_row<S: Scalar>(n: usize, q: &S) -> Vec<S> {
    let one = q.one_like();
    let mut qpow = vec![one.clone()];
    for k in 1..=n {
        let next = qpow[k - 1].clone() * q.clone();
        qpow.push(next);
    }
    let mut row = vec![one.clone()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        next.push(one.clone());
        for k in 1..m {
            next.push(row[k - 1].clone() + qpow[k].clone() * row[k].clone());
        }
        next.push(one.clone());
        row = next;
    }
    row
}

/// Gaussian binomial coefficient `(q;q)_n / ((q;q)_k (q;q)_{n-k})`.
pub fn qbinomial<S: Scalar>(n: usize, k: usize, q: &S) -> Result<S> {
    if k > n {
        return Err(QError::Domain(format!("q-binomial needs k <= n, got k={k}, n={n}")));
    }
    Ok(qbinomial_row(n, q).swap_remove(k))
}
