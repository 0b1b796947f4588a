//! Theta sums and the Thomae–Jackson q-beta integrals.

use super::domain::{pr, Ctx, Domain, Param};
use super::vals;
use crate::error::Result;
use crate::point::{ParameterPoint, Slot::*};
use crate::scalar::Scalar;

type Point<D> = ParameterPoint<<D as Domain>::P>;

pub(super) fn jtp_lhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [x] = vals(p, [X]);
    cx.pinf(&[cx.q.clone(), x.clone(), cx.quot(&cx.q, &x)?])
}

pub(super) fn jtp_rhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [x] = vals(p, [X]);
    let n_max = cx.dom.theta_cutoff(&cx.q, &x)? as i64;
    let mut acc = cx.qs.zero_like();
    for n in -n_max..=n_max {
        let mut t = pr!(cx.q.ipow(n * (n - 1) / 2)?, x.ipow(n)?);
        if n % 2 != 0 {
            t = -t;
        }
        acc = acc + cx.s(&t)?;
    }
    Ok(acc)
}

/// `(qx/u, qx/v; q)_∞`, the factor vanishing past the endpoints.
fn endpoint_factor<D: Domain>(cx: &Ctx<D>, x: &D::P, u: &D::P, v: &D::P) -> Result<D::S> {
    let qx = pr!(cx.q, x);
    cx.pinf(&[cx.quot(&qx, u)?, cx.quot(&qx, v)?])
}

/// `(1-q) Δ(u, v)`.
fn integral_scale<D: Domain>(cx: &Ctx<D>, u: &D::P, v: &D::P) -> Result<D::S> {
    Ok((cx.one() - cx.qs.clone()) * cx.delta(u, v)?)
}

/// `_3φ2(cu, cv, cuv/r; acuv, bcuv; q, abr/c)` with `cuv/r` paired against the argument.
pub(super) fn qint_phi<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [a, b, c, r, u, v] = vals(p, [A, B, C, R, U, V]);
    let z = cx.quot(&pr!(a, b, r), &c)?;
    cx.series(
        cx.one(),
        &[
            cx.unit(&pr!(c, u))?,
            cx.unit(&pr!(c, v))?,
            cx.lin(&z, &pr!(a, b, u, v))?,
        ],
        &[cx.unit(&cx.q)?, cx.unit(&pr!(a, c, u, v))?, cx.unit(&pr!(b, c, u, v))?],
    )
}

pub(super) fn andrews_askey_lhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [a, b, u, v] = vals(p, [A, B, U, V]);
    cx.jackson(&u, &v, |x| {
        Ok(endpoint_factor(cx, x, &u, &v)? * cx.pinf_den(&[pr!(a, x), pr!(b, x)])?)
    })
}

pub(super) fn andrews_askey_rhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [a, b, u, v] = vals(p, [A, B, U, V]);
    Ok(integral_scale(cx, &u, &v)?
        * cx.pinf(&[pr!(a, b, u, v)])?
        * cx.pinf_den(&[pr!(a, u), pr!(b, u), pr!(a, v), pr!(b, v)])?)
}

pub(super) fn al_salam_verma_lhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [a, b, c, u, v] = vals(p, [A, B, C, U, V]);
    cx.jackson(&u, &v, |x| {
        Ok(endpoint_factor(cx, x, &u, &v)?
            * cx.pinf(&[pr!(a, b, c, u, v, x)])?
            * cx.pinf_den(&[pr!(a, x), pr!(b, x), pr!(c, x)])?)
    })
}

pub(super) fn al_salam_verma_rhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [a, b, c, u, v] = vals(p, [A, B, C, U, V]);
    Ok(integral_scale(cx, &u, &v)?
        * cx.pinf(&[pr!(a, b, u, v), pr!(a, c, u, v), pr!(b, c, u, v)])?
        * cx.pinf_den(&[pr!(a, u), pr!(b, u), pr!(c, u), pr!(a, v), pr!(b, v), pr!(c, v)])?)
}

pub(super) fn qint6_lhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [a, b, c, r, u, v] = vals(p, [A, B, C, R, U, V]);
    cx.jackson(&u, &v, |x| {
        Ok(endpoint_factor(cx, x, &u, &v)?
            * cx.pinf(&[pr!(a, b, r, x)])?
            * cx.pinf_den(&[pr!(a, x), pr!(b, x), pr!(c, x)])?)
    })
}

pub(super) fn qint6_rhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [a, b, c, r, u, v] = vals(p, [A, B, C, R, U, V]);
    let abr_c = cx.quot(&pr!(a, b, r), &c)?;
    Ok(integral_scale(cx, &u, &v)?
        * cx.pinf(&[pr!(a, c, u, v), pr!(b, c, u, v), abr_c])?
        * cx.pinf_den(&[pr!(a, u), pr!(a, v), pr!(b, u), pr!(b, v), pr!(c, u), pr!(c, v)])?
        * qint_phi(cx, p)?)
}

/// `_3φ2(ar, ax, cx; acduvx, abrx; q, bduv)`.
fn qint7_inner<D: Domain>(cx: &Ctx<D>, p: &Point<D>, x: &D::P) -> Result<D::S> {
    let [a, b, c, d, r, u, v] = vals(p, [A, B, C, D, R, U, V]);
    cx.series(
        cx.one(),
        &[
            cx.unit(&pr!(a, r))?,
            cx.unit(&pr!(a, x))?,
            cx.unit(&pr!(c, x))?,
            cx.konst(&pr!(b, d, u, v))?,
        ],
        &[
            cx.unit(&cx.q)?,
            cx.unit(&pr!(a, c, d, u, v, x))?,
            cx.unit(&pr!(a, b, r, x))?,
        ],
    )
}

pub(super) fn qint7_lhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [a, b, c, d, r, u, v] = vals(p, [A, B, C, D, R, U, V]);
    cx.jackson(&u, &v, |x| {
        Ok(endpoint_factor(cx, x, &u, &v)?
            * cx.pinf(&[pr!(a, c, d, u, v, x), pr!(a, b, r, x)])?
            * cx.pinf_den(&[pr!(a, x), pr!(b, x), pr!(c, x), pr!(d, x)])?
            * qint7_inner(cx, p, x)?)
    })
}

fn eight_denominators<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
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
    ])
}

pub(super) fn qint7_rhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [a, b, c, d, r, u, v] = vals(p, [A, B, C, D, R, U, V]);
    let abr_c = cx.quot(&pr!(a, b, r), &c)?;
    Ok(integral_scale(cx, &u, &v)?
        * cx.pinf(&[
            pr!(a, c, u, v),
            pr!(a, d, u, v),
            pr!(b, c, u, v),
            pr!(c, d, u, v),
            abr_c,
        ])?
        * eight_denominators(cx, p)?
        * qint_phi(cx, p)?)
}

pub(super) fn qint7_r_lhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [a, b, c, d, u, v] = vals(p, [A, B, C, D, U, V]);
    cx.jackson(&u, &v, |x| {
        let inner = cx.series(
            cx.one(),
            &[
                cx.unit(&pr!(a, c, u, v))?,
                cx.unit(&pr!(a, x))?,
                cx.unit(&pr!(c, x))?,
                cx.konst(&pr!(b, d, u, v))?,
            ],
            &[
                cx.unit(&cx.q)?,
                cx.unit(&pr!(a, b, c, u, v, x))?,
                cx.unit(&pr!(a, c, d, u, v, x))?,
            ],
        )?;
        Ok(endpoint_factor(cx, x, &u, &v)?
            * cx.pinf(&[pr!(a, b, c, u, v, x), pr!(a, c, d, u, v, x)])?
            * cx.pinf_den(&[pr!(a, x), pr!(b, x), pr!(c, x), pr!(d, x)])?
            * inner)
    })
}

pub(super) fn qint7_r_rhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [a, b, c, d, u, v] = vals(p, [A, B, C, D, U, V]);
    Ok(integral_scale(cx, &u, &v)?
        * cx.pinf(&[
            pr!(a, b, u, v),
            pr!(a, c, u, v),
            pr!(a, d, u, v),
            pr!(b, c, u, v),
            pr!(c, d, u, v),
        ])?
        * eight_denominators(cx, p)?)
}

pub(super) fn sears_equiv_lhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [a, b, c, d, r, u, v] = vals(p, [A, B, C, D, R, U, V]);
    let abr_c = cx.quot(&pr!(a, b, r), &c)?;
    cx.jackson(&u, &v, |x| {
        // _3φ2(cduv, cduvx/r, cx; acduvx, bcduvx; q, abr/c)
        let inner = cx.series(
            cx.one(),
            &[
                cx.unit(&pr!(c, d, u, v))?,
                cx.lin(&abr_c, &pr!(a, b, d, u, v, x))?,
                cx.unit(&pr!(c, x))?,
            ],
            &[
                cx.unit(&cx.q)?,
                cx.unit(&pr!(a, c, d, u, v, x))?,
                cx.unit(&pr!(b, c, d, u, v, x))?,
            ],
        )?;
        Ok(endpoint_factor(cx, x, &u, &v)?
            * cx.pinf(&[pr!(a, c, d, u, v, x), pr!(b, c, d, u, v, x)])?
            * cx.pinf_den(&[pr!(a, x), pr!(b, x), pr!(c, x), pr!(d, x)])?
            * inner)
    })
}

pub(super) fn sears_equiv_rhs<D: Domain>(cx: &Ctx<D>, p: &Point<D>) -> Result<D::S> {
    let [a, b, c, d, u, v] = vals(p, [A, B, C, D, U, V]);
    Ok(integral_scale(cx, &u, &v)?
        * cx.pinf(&[
            pr!(a, c, u, v),
            pr!(a, d, u, v),
            pr!(b, c, u, v),
            pr!(b, d, u, v),
            pr!(c, d, u, v),
        ])?
        * eight_denominators(cx, p)?
        * qint_phi(cx, p)?)
}
