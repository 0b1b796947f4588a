//! Limiting cases of the five-variable reciprocity formula and the classical
//! theta-function identities they specialize to.

use super::domain::{pr, Ctx, Domain, Param};
use super::vals;
use crate::error::Result;
use crate::point::{ParameterPoint, Slot::*};
use crate::scalar::Scalar;

type Point<D> = ParameterPoint<<D as Domain>::P>;

/// `y q^n / (1 - y q^n)` from the parameter `y q^n`.
fn lambert_term<D: Domain>(cx: &Ctx<D>, yqn: &D::P) -> Result<D::S> {
    cx.dom.div_binomial(&cx.s(yqn)?, &D::P::int(1), yqn)
}

pub(super) fn limit_a_lhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [a, c, d] = vals(p, [A, C, D]);
    let q = &cx.q;
    let num = [cx.lin(&d, q)?, cx.unit(&pr!(a, c))?];
    let den = [cx.unit(&pr!(a, q))?, cx.unit(&pr!(c, q))?];
    let mut w = cx.recip(&((cx.one() - cx.s(&a)?) * (cx.one() - cx.s(&c)?)))?;
    let mut bracket = cx.qs.zero_like();
    let mut qn = D::P::int(1);
    cx.sum(|n| {
        bracket = bracket.clone() + cx.one() + lambert_term(cx, &pr!(a, qn))? + lambert_term(cx, &pr!(c, qn))?;
        if n > 0 {
            bracket = bracket.clone() - cx.dom.div_binomial(&cx.s(&qn)?, &d, &qn)?;
        }
        let t = w.clone() * bracket.clone();
        let qns = cx.s(&qn)?;
        let mut up = w.clone();
        for f in &num {
            up = up * f.at(&qns);
        }
        let mut down = cx.one();
        for f in &den {
            let v = f.at(&qns);
            v.check_pole(cx.policy())?;
            down = down * v;
        }
        w = up * cx.recip(&down)?;
        qn = pr!(qn, q);
        Ok(Some(t))
    })
}

pub(super) fn limit_a_rhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [a, c, d] = vals(p, [A, C, D]);
    let q = cx.q.clone();
    let den = cx.pinf_den(&[a.clone(), c.clone(), d.clone()])?;
    Ok(cx.pinf(&[q.clone(), q.clone(), q])? * cx.pinf(&[pr!(a, c), pr!(a, d), pr!(c, d)])? * den.clone() * den)
}

pub(super) fn limit_euler_lhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [d] = vals(p, [D]);
    let q = &cx.q;
    let mut w = cx.one();
    let mut bracket = cx.qs.zero_like();
    let mut qn = D::P::int(1);
    cx.sum(|n| {
        bracket = bracket.clone() + cx.one();
        if n > 0 {
            bracket = bracket.clone() - cx.dom.div_binomial(&cx.s(&qn)?, &d, &qn)?;
        }
        let t = w.clone() * bracket.clone();
        qn = pr!(qn, q);
        w = w.clone() * (cx.s(&d)? - cx.s(&qn)?);
        Ok(Some(t))
    })
}

pub(super) fn limit_euler_rhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [d] = vals(p, [D]);
    let q = cx.q.clone();
    let den = cx.pinf_den(&[d])?;
    Ok(cx.pinf(&[q.clone(), q.clone(), q])? * den.clone() * den)
}

pub(super) fn limit_negq_lhs<D: Domain>(cx: &Ctx<D>, _p: &Point<D>) -> Result<D::S> {
    let q = &cx.q;
    let mut weight = -cx.qs.clone();
    let mut bracket = cx.int(5);
    let mut qn = q.clone();
    let tail = cx.sum(|_| {
        let t = weight.clone() * bracket.clone();
        let one_plus = cx.one() + cx.s(&qn)?;
        weight = weight.clone() * (-cx.qs.clone()) * one_plus;
        bracket = bracket.clone()
            + cx.int(2)
            + cx.dom
                .div_binomial(&cx.s(&pr!(qn, D::P::int(2)))?, &D::P::int(1), &-qn.clone())?;
        qn = pr!(qn, q);
        Ok(Some(t))
    })?;
    Ok(cx.one() + tail)
}

pub(super) fn limit_negq_rhs<D: Domain>(cx: &Ctx<D>, _p: &Point<D>) -> Result<D::S> {
    let q = cx.q.clone();
    Ok(cx.pinf(&[q.clone(), q.clone(), q.clone()])? * cx.pinf_den(&[-q.clone(), -q])?)
}

/// `Σ_{n≥1} n w^n / (1 - y q^n)`.
fn weighted_lambert<D: Domain>(cx: &Ctx<D>, w: &D::P, y: &D::P) -> Result<D::S> {
    let mut wn = w.clone();
    let mut yqn = pr!(y, cx.q);
    cx.sum(|n| {
        let t = cx.int(n as i64 + 1) * cx.dom.div_binomial(&cx.s(&wn)?, &D::P::int(1), &yqn)?;
        wn = pr!(wn, w);
        yqn = pr!(yqn, cx.q);
        Ok(Some(t))
    })
}

pub(super) fn lambert4_lhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [a] = vals(p, [A]);
    let q = cx.q.clone();
    let qq = cx.pinf(std::slice::from_ref(&q))?;
    let den = cx.pinf_den(&[pr!(q, a), cx.quot(&q, &a)?])?;
    Ok(qq.pow(4) * den.clone() * den)
}

pub(super) fn lambert4_rhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [a] = vals(p, [A]);
    let q = &cx.q;
    let inv_a = D::P::int(1).quot(&a)?;
    let one_minus_a = cx.one() - cx.s(&a)?;
    let one_minus_inv = cx.one() - cx.s(&inv_a)?;
    Ok(cx.one()
        + one_minus_a.clone() * one_minus_a * weighted_lambert(cx, &cx.quot(q, &a)?, &a)?
        + one_minus_inv.clone() * one_minus_inv * weighted_lambert(cx, &pr!(q, a), &inv_a)?)
}

pub(super) fn four_square_lhs<D: Domain>(cx: &Ctx<D>, _p: &Point<D>) -> Result<D::S> {
    let theta = cx.sum(|n| {
        let n = n as i64 + 1;
        Ok(Some(cx.s(&cx.q.ipow(n * n)?)?))
    })?;
    Ok((cx.one() + cx.int(2) * theta).pow(4))
}

/// `Σ_{n≥1} n y^n / (1 - y^n)`.
fn divisor_sum<D: Domain>(cx: &Ctx<D>, y: &D::P) -> Result<D::S> {
    let mut yn = y.clone();
    cx.sum(|n| {
        let t = cx.int(n as i64 + 1) * cx.dom.div_binomial(&cx.s(&yn)?, &D::P::int(1), &yn)?;
        yn = pr!(yn, y);
        Ok(Some(t))
    })
}

pub(super) fn four_square_rhs<D: Domain>(cx: &Ctx<D>, _p: &Point<D>) -> Result<D::S> {
    Ok(cx.one() + cx.int(8) * divisor_sum(cx, &cx.q)? - cx.int(32) * divisor_sum(cx, &cx.q.ipow(4)?)?)
}

pub(super) fn four_triangular_lhs<D: Domain>(cx: &Ctx<D>, _p: &Point<D>) -> Result<D::S> {
    let psi = cx.sum(|n| {
        let n = n as i64;
        Ok(Some(cx.s(&cx.q.ipow(n * (n + 1) / 2)?)?))
    })?;
    Ok(psi.pow(4))
}

pub(super) fn four_triangular_rhs<D: Domain>(cx: &Ctx<D>, _p: &Point<D>) -> Result<D::S> {
    let q = &cx.q;
    let mut qn = D::P::int(1);
    let mut q2n1 = q.clone();
    cx.sum(|n| {
        let t = cx.int(2 * n as i64 + 1) * cx.dom.div_binomial(&cx.s(&qn)?, &D::P::int(1), &q2n1)?;
        qn = pr!(qn, q);
        q2n1 = pr!(q2n1, q, q);
        Ok(Some(t))
    })
}
