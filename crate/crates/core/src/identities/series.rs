//! The q-binomial theorem, the q-Mehler formula, the L-function and the
//! Sears transformation.

use super::domain::{pr, Ctx, Domain};
use super::vals;
use crate::error::Result;
use crate::point::{ParameterPoint, Slot::*};
use crate::qcalc::phi_series;
use crate::scalar::Scalar;

type Point<D> = ParameterPoint<<D as Domain>::P>;

pub(super) fn qbinomial_lhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [a, x] = vals(p, [A, X]);
    phi_series(&[cx.s(&a)?], &[], &cx.qs, &cx.s(&x)?, cx.policy())
}

pub(super) fn qbinomial_rhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [a, x] = vals(p, [A, X]);
    Ok(cx.pinf(&[pr!(a, x)])? * cx.pinf_den(&[x])?)
}

/// Successive `h_n(a, b|q)` from `h_{n+1} = (a+b) h_n - ab (1 - q^n) h_{n-1}`.
struct RogersSzego<S> {
    sum: S,
    prod: S,
    prev: S,
    cur: S,
}

impl<S: Scalar> RogersSzego<S> {
    fn new(a: S, b: S) -> Self {
        Self {
            prev: a.zero_like(),
            cur: a.one_like(),
            sum: a.clone() + b.clone(),
            prod: a * b,
        }
    }

    /// Moves from `h_n` to `h_{n+1}` given `q^n`.
    fn advance(&mut self, qn: &S) {
        let w = self.cur.one_like() - qn.clone();
        let next = self.sum.clone() * self.cur.clone() - self.prod.clone() * w * self.prev.clone();
        self.prev = std::mem::replace(&mut self.cur, next);
    }
}

pub(super) fn qmehler_lhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [a, b, s, t, z] = vals(p, [A, B, S, T, Z]);
    let mut hab = RogersSzego::new(cx.s(&a)?, cx.s(&b)?);
    let mut hst = RogersSzego::new(cx.s(&s)?, cx.s(&t)?);
    let zs = cx.s(&z)?;
    let mut weight = cx.one();
    let mut qn = cx.one();
    cx.sum(|_| {
        let term = hab.cur.clone() * hst.cur.clone() * weight.clone();
        hab.advance(&qn);
        hst.advance(&qn);
        qn = qn.clone() * cx.qs.clone();
        weight = weight.clone() * zs.clone() * cx.recip(&(cx.one() - qn.clone()))?;
        Ok(Some(term))
    })
}

pub(super) fn qmehler_rhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [a, b, s, t, z] = vals(p, [A, B, S, T, Z]);
    Ok(cx.pinf(&[pr!(a, b, s, t, z, z)])? * cx.pinf_den(&[pr!(a, s, z), pr!(a, t, z), pr!(b, s, z), pr!(b, t, z)])?)
}

/// `L(a, b, u, v, s, t) = (av, bv, abstu/v)_∞ / (as, at, au, bs, bt, bu)_∞`
/// `× _3φ2(v/s, v/t, v/u; av, bv; q, abstu/v)`.
pub(super) fn l_in<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [a, b, u, v, s, t] = vals(p, [A, B, U, V, S, T]);
    let z = cx.quot(&pr!(a, b, s, t, u), &v)?;
    let phi = cx.series(
        cx.one(),
        &[
            cx.unit(&cx.quot(&v, &s)?)?,
            cx.unit(&cx.quot(&v, &t)?)?,
            cx.lin(&z, &pr!(a, b, s, t))?,
        ],
        &[cx.unit(&cx.q)?, cx.unit(&pr!(a, v))?, cx.unit(&pr!(b, v))?],
    )?;
    Ok(cx.pinf(&[pr!(a, v), pr!(b, v), z])?
        * cx.pinf_den(&[pr!(a, s), pr!(a, t), pr!(a, u), pr!(b, s), pr!(b, t), pr!(b, u)])?
        * phi)
}

fn l_partial<D: Domain>(cx: &Ctx<D>, p: &Point<D>, slot: crate::point::Slot) -> Result<D::S> {
    let x = p.get(slot);
    let shifted = p.clone().with(slot, pr!(cx.q, x));
    Ok((l_in(cx, p)? - l_in(cx, &shifted)?) * cx.recip(&cx.s(&x)?)?)
}

pub(super) fn qpde_lhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    l_partial(cx, p, A)
}

pub(super) fn qpde_rhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    l_partial(cx, p, B)
}

pub(super) fn sears_lhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [a1, a2, a3, b1, b2] = vals(p, [A1, A2, A3, B1, B2]);
    let z = cx.quot(&pr!(b1, b2), &pr!(a1, a2, a3))?;
    cx.series(
        cx.one(),
        &[cx.unit(&a1)?, cx.unit(&a2)?, cx.unit(&a3)?, cx.konst(&z)?],
        &[cx.unit(&cx.q)?, cx.unit(&b1)?, cx.unit(&b2)?],
    )
}

pub(super) fn sears_rhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [a1, a2, a3, b1, b2] = vals(p, [A1, A2, A3, B1, B2]);
    let b2_a3 = cx.quot(&b2, &a3)?;
    let e = cx.quot(&pr!(b1, b2), &pr!(a1, a2))?;
    let z = cx.quot(&e, &a3)?;
    let phi = cx.series(
        cx.one(),
        &[
            cx.unit(&cx.quot(&b1, &a1)?)?,
            cx.unit(&cx.quot(&b1, &a2)?)?,
            cx.lin(&b2_a3, &b2)?,
        ],
        &[cx.unit(&cx.q)?, cx.unit(&b1)?, cx.unit(&e)?],
    )?;
    Ok(cx.pinf(&[b2_a3, e])? * cx.pinf_den(&[b2, z])? * phi)
}
