//! Ramanujan-type reciprocity formulas and the double series ρ.

use super::domain::{pr, Ctx, Domain, Param};
use super::vals;
use crate::error::Result;
use crate::point::{ParameterPoint, Slot::*};
use crate::qcalc::Linear;
use crate::scalar::Scalar;

type Point<D> = ParameterPoint<<D as Domain>::P>;

/// `term · Π num(q^n) / Π den(q^n)`.
fn step<D: Domain>(cx: &Ctx<D>, term: &D::S, num: &[Linear<D::S>], den: &[Linear<D::S>], qn: &D::S) -> Result<D::S> {
    let mut up = term.clone();
    let mut down = cx.one();
    for f in num {
        up = up * f.at(qn);
    }
    for f in den {
        let v = f.at(qn);
        v.check_pole(cx.policy())?;
        down = down * v;
    }
    Ok(up * cx.recip(&down)?)
}

/// `Σ_n (-1)^n q^{n(n+1)/2} w^n / (y;q)_{n+1}`.
fn ramanujan_sum<D: Domain>(cx: &Ctx<D>, w: &D::P, y: &D::P) -> Result<D::S> {
    let start = cx.recip(&(cx.one() - cx.s(y)?))?;
    cx.series(
        start,
        &[cx.lin(&D::P::int(0), &pr!(cx.q, w))?],
        &[cx.unit(&pr!(y, cx.q))?],
    )
}

pub(super) fn ramanujan_lhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [a, u, v] = vals(p, [A, U, V]);
    Ok(cx.pinf(&[cx.q.clone(), cx.quot(&v, &u)?, cx.quot(&u, &v)?])? * cx.pinf_den(&[pr!(a, u), pr!(a, v)])?)
}

pub(super) fn ramanujan_rhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [a, u, v] = vals(p, [A, U, V]);
    let (vu, uv) = (cx.quot(&v, &u)?, cx.quot(&u, &v)?);
    Ok((cx.one() - cx.s(&vu)?) * ramanujan_sum(cx, &vu, &pr!(a, v))?
        + (cx.one() - cx.s(&uv)?) * ramanujan_sum(cx, &uv, &pr!(a, u))?)
}

/// `Σ_n (q/du, acuv; q)_n (dv)^n / (av, cv; q)_{n+1}`.
fn recip5_sum<D: Domain>(cx: &Ctx<D>, a: &D::P, c: &D::P, d: &D::P, u: &D::P, v: &D::P) -> Result<D::S> {
    let start = cx.recip(&((cx.one() - cx.s(&pr!(a, v))?) * (cx.one() - cx.s(&pr!(c, v))?)))?;
    cx.series(
        start,
        &[
            cx.lin(&pr!(d, v), &cx.quot(&pr!(cx.q, v), u)?)?,
            cx.unit(&pr!(a, c, u, v))?,
        ],
        &[cx.unit(&pr!(a, v, cx.q))?, cx.unit(&pr!(c, v, cx.q))?],
    )
}

pub(super) fn recip5_lhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [a, c, d, u, v] = vals(p, [A, C, D, U, V]);
    Ok(cx.s(&v)? * recip5_sum(cx, &a, &c, &d, &u, &v)? - cx.s(&u)? * recip5_sum(cx, &a, &c, &d, &v, &u)?)
}

pub(super) fn recip5_rhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [a, c, d, u, v] = vals(p, [A, C, D, U, V]);
    Ok(cx.delta(&u, &v)?
        * cx.pinf(&[pr!(a, d, u, v), pr!(a, c, u, v), pr!(c, d, u, v)])?
        * cx.pinf_den(&[pr!(a, u), pr!(a, v), pr!(c, u), pr!(c, v), pr!(d, u), pr!(d, v)])?)
}

/// `Σ_n w^n / (1 - y q^n)`.
fn lambert_sum<D: Domain>(cx: &Ctx<D>, w: &D::P, y: &D::P) -> Result<D::S> {
    let one = D::P::int(1);
    let mut wn = one.clone();
    let mut yqn = y.clone();
    cx.sum(|_| {
        let t = cx.dom.div_binomial(&cx.s(&wn)?, &one, &yqn)?;
        wn = pr!(wn, w);
        yqn = pr!(yqn, cx.q);
        Ok(Some(t))
    })
}

pub(super) fn lambert_lhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [c, u, v] = vals(p, [C, U, V]);
    let w_u = cx.quot(&cx.q, &pr!(c, u))?;
    let w_v = cx.quot(&cx.q, &pr!(c, v))?;
    Ok(cx.s(&v)? * lambert_sum(cx, &w_u, &pr!(c, v))? - cx.s(&u)? * lambert_sum(cx, &w_v, &pr!(c, u))?)
}

pub(super) fn lambert_rhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [c, u, v] = vals(p, [C, U, V]);
    let q = &cx.q;
    Ok(cx.s(&v)?
        * cx.pinf(&[q.clone(), q.clone(), cx.quot(&u, &v)?, cx.quot(&pr!(q, v), &u)?])?
        * cx.pinf_den(&[pr!(c, u), pr!(c, v), cx.quot(q, &pr!(c, u))?, cx.quot(q, &pr!(c, v))?])?)
}

/// The double series `ρ(a, b, c, d, r, u, v)`:
/// `v Σ_n (q/du, acuv, bcuv; q)_n (dv)^n / (av, bv, cv; q)_{n+1}`
/// `× _3φ2(q^{n+1}, vq^{n+1}/r, q/cu; avq^{n+1}, bvq^{n+1}; q, abcruv/q)`.
///
/// The inner series is summed afresh for every `n`. Both `(q/du;q)_n (dv)^n`
/// and the inner numerator pairs are expanded as polynomials, so `c`, `d` or
/// `r` equal to zero give the limiting value.
pub(super) fn rho_in<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [a, b, c, d, r, u, v] = vals(p, [A, B, C, D, R, U, V]);
    let q = &cx.q;
    let outer_num = [
        cx.lin(&pr!(d, v), &cx.quot(&pr!(q, v), &u)?)?,
        cx.unit(&pr!(a, c, u, v))?,
        cx.unit(&pr!(b, c, u, v))?,
    ];
    let outer_den = [
        cx.unit(&pr!(a, v, q))?,
        cx.unit(&pr!(b, v, q))?,
        cx.unit(&pr!(c, v, q))?,
    ];
    let first = (cx.one() - cx.s(&pr!(a, v))?) * (cx.one() - cx.s(&pr!(b, v))?) * (cx.one() - cx.s(&pr!(c, v))?);
    let mut cn = cx.recip(&first)?;
    let z_rest = cx.quot(&pr!(a, b, u, v), q)?;
    let q_over_u = cx.quot(q, &u)?;
    let mut qn = D::P::int(1);
    let total = cx.sum(|_| {
        let qn1 = pr!(qn, q);
        let inner = cx.series(
            cx.one(),
            &[
                cx.unit(&qn1)?,
                cx.lin(&c, &q_over_u)?,
                cx.lin(&r, &pr!(v, qn1))?,
                cx.konst(&z_rest)?,
            ],
            &[cx.unit(q)?, cx.unit(&pr!(a, v, qn1))?, cx.unit(&pr!(b, v, qn1))?],
        )?;
        let t = cn.clone() * inner;
        cn = step(cx, &cn, &outer_num, &outer_den, &cx.s(&qn)?)?;
        qn = qn1;
        Ok(Some(t))
    })?;
    Ok(cx.s(&v)? * total)
}

pub(super) fn recip7_lhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    Ok(rho_in(cx, p)? - rho_in(cx, &p.swapped(U, V))?)
}

fn recip_dens<D: Domain>(cx: &Ctx<D>, p: &Point<D>, extra: D::P) -> Result<D::S> {
    let [a, b, c, d, u, v] = vals(p, [A, B, C, D, U, V]);
    cx.pinf_den(&[
        pr!(a, u),
        pr!(a, v),
        pr!(b, u),
        pr!(b, v),
        pr!(c, u),
        pr!(c, v),
        pr!(d, u),
        pr!(d, v),
        extra,
    ])
}

pub(super) fn recip7_rhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [a, b, c, d, r, u, v] = vals(p, [A, B, C, D, R, U, V]);
    let abr_d = cx.quot(&pr!(a, b, r), &d)?;
    let phi = cx.series(
        cx.one(),
        &[
            cx.unit(&pr!(d, u))?,
            cx.unit(&pr!(d, v))?,
            cx.lin(&abr_d, &pr!(a, b, u, v))?,
        ],
        &[cx.unit(&cx.q)?, cx.unit(&pr!(a, d, u, v))?, cx.unit(&pr!(b, d, u, v))?],
    )?;
    let last = cx.quot(&pr!(a, b, c, r, u, v), &cx.q)?;
    Ok(cx.delta(&u, &v)?
        * cx.pinf(&[
            pr!(a, c, u, v),
            pr!(a, d, u, v),
            pr!(b, c, u, v),
            pr!(b, d, u, v),
            pr!(c, d, u, v),
            abr_d,
        ])?
        * recip_dens(cx, p, last)?
        * phi)
}

fn with_r_duv<D: Domain>(p: &Point<D>) -> Point<D> {
    let [d, u, v] = vals(p, [D, U, V]);
    p.clone().with(R, pr!(d, u, v))
}

pub(super) fn recip6_lhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    recip7_lhs(cx, &with_r_duv::<D>(p))
}

pub(super) fn recip6_rhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [a, b, c, d, u, v] = vals(p, [A, B, C, D, U, V]);
    let last = cx.quot(&pr!(a, b, c, d, u, u, v, v), &cx.q)?;
    Ok(cx.delta(&u, &v)?
        * cx.pinf(&[
            pr!(a, b, u, v),
            pr!(a, c, u, v),
            pr!(a, d, u, v),
            pr!(b, c, u, v),
            pr!(b, d, u, v),
            pr!(c, d, u, v),
        ])?
        * recip_dens(cx, p, last)?)
}
