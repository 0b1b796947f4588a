use std::f64::consts::PI;

use num_complex::Complex64;
use qrecip::qcalc::qpoch_infinite;
use qrecip::quadrature::*;
use qrecip::{QError, TruncationPolicy};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn re(x: f64) -> Complex64 {
    c(x, 0.0)
}

fn pol() -> TruncationPolicy {
    TruncationPolicy::default()
}

fn cfg() -> QuadratureConfig {
    QuadratureConfig::default()
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm())
}

#[test]
fn elementary_integrals() {
    let one = integrate_theta(|_| Ok(re(1.0)), &cfg()).unwrap();
    assert!((one.value - re(PI)).norm() < 1e-13);
    for k in 1..6 {
        let v = integrate_theta(|t| Ok(re((k as f64 * t).cos())), &cfg()).unwrap();
        assert!(v.value.norm() < 1e-12, "k={k}");
    }
    let sq = integrate_theta(|t| Ok(re(t.cos().powi(2))), &cfg()).unwrap();
    assert!((sq.value - re(PI / 2.0)).norm() < 1e-13);
}

#[test]
fn askey_wilson_with_zero_parameters() {
    let q = re(0.5);
    let v = askey_wilson_integral([re(0.0); 4], q, &pol(), &cfg()).unwrap();
    let expect = 2.0 * PI / qpoch_infinite(&q, &q, &pol()).unwrap();
    assert!(rel(v.value, expect) < 1e-10);
}

#[test]
fn askey_wilson_real_point() {
    let p = [re(0.3), re(0.2), re(0.1), re(0.4)];
    let q = re(0.5);
    let v = askey_wilson_integral(p, q, &pol(), &cfg()).unwrap();
    let w = askey_wilson_closed_form(p, q, &pol()).unwrap();
    assert!(rel(v.value, w) < 1e-8);
    assert!(v.is_real());
}

#[test]
fn askey_wilson_is_symmetric() {
    let p = [c(0.3, 0.1), re(0.2), c(-0.1, 0.4), re(0.6)];
    let q = re(0.6);
    let base = askey_wilson_integral(p, q, &pol(), &cfg()).unwrap().value;
    for perm in [[1, 0, 2, 3], [3, 2, 1, 0], [2, 3, 0, 1], [0, 3, 1, 2]] {
        let v = askey_wilson_integral(perm.map(|i| p[i]), q, &pol(), &cfg())
            .unwrap()
            .value;
        assert!(rel(v, base) < 1e-10);
    }
}

#[test]
fn askey_wilson_rejects_large_parameters() {
    let r = askey_wilson_integral([re(1.2), re(0.1), re(0.1), re(0.1)], re(0.5), &pol(), &cfg());
    assert!(matches!(r, Err(QError::Domain(_))));
}

#[test]
fn beta_at_r_equal_c_is_askey_wilson() {
    let (a, b, cc, d) = (re(0.3), c(0.1, 0.2), re(0.5), re(-0.4));
    let q = re(0.45);
    let beta = beta_integral([a, b, cc, d, cc], q, &pol(), &cfg()).unwrap().value;
    let aw = askey_wilson_integral([a, b, cc, d], q, &pol(), &cfg()).unwrap().value;
    assert!(rel(beta, aw) < 1e-9);
}

#[test]
fn beta_integral_matches_closed_form() {
    let p = [re(0.3), re(0.25), re(0.6), re(0.2), re(1.5)];
    let q = re(0.5);
    let v = beta_integral(p, q, &pol(), &cfg()).unwrap();
    let w = beta_closed_form(p, q, &pol()).unwrap();
    assert!(rel(v.value, w) < 1e-7);
    assert!(v.is_real());
}

#[test]
fn beta_integral_at_sampled_points() {
    for pt in sample_beta_points(11, 10) {
        let q = re(pt.q);
        let v = beta_integral(pt.params, q, &pol(), &cfg()).unwrap().value;
        let w = beta_closed_form(pt.params, q, &pol()).unwrap();
        assert!(rel(v, w) < 1e-7, "{pt:?}");
    }
}

#[test]
fn beta_integrand_is_even() {
    let p = [c(0.3, 0.1), re(0.25), c(0.5, -0.2), re(0.2), c(0.7, 0.3)];
    let q = re(0.6);
    for t in [0.1, 0.7, 1.9, 3.0] {
        let f = beta_integrand(t, p, q, &pol()).unwrap();
        let g = beta_integrand(-t, p, q, &pol()).unwrap();
        assert!(rel(f, g) < 1e-13);
    }
}

#[test]
fn sampler_is_deterministic_and_admissible() {
    let a = sample_beta_points(3, 20);
    assert_eq!(a, sample_beta_points(3, 20));
    for pt in a {
        let [x, y, z, _, r] = pt.params;
        assert!((x * y * r / z).norm() <= 0.8);
        assert!(pt.q > 0.0 && pt.q < 0.8);
        assert!(pt.params[..4].iter().all(|p| p.norm() < 0.8));
    }
}

#[test]
fn qhermite_orthogonality_cases() {
    let v = qhermite_orthogonality(0, 0, 0.5, &pol(), &cfg()).unwrap().value;
    assert!(rel(v, re(qhermite_norm(0, 0, 0.5, &pol()).unwrap())) < 1e-10);
    let v = qhermite_orthogonality(1, 2, 0.5, &pol(), &cfg()).unwrap().value;
    assert!(v.norm() <= 1e-9);
    let v = qhermite_orthogonality(3, 3, 0.3, &pol(), &cfg()).unwrap().value;
    assert!(rel(v, re(qhermite_norm(3, 3, 0.3, &pol()).unwrap())) < 1e-8);
    assert!(qhermite_orthogonality(13, 0, 0.5, &pol(), &cfg()).is_err());
}

#[test]
fn qhermite_generating_function() {
    let at_zero = qhermite_gf_check(re(0.0), 1.1, 0.5, &pol()).unwrap();
    assert_eq!(at_zero.lhs, re(1.0));
    assert!(at_zero.abs_err < 1e-15);
    let g = qhermite_gf_check(re(0.5), PI / 3.0, 0.5, &pol()).unwrap();
    assert!(g.abs_err <= 1e-10);
    let g = qhermite_gf_check(c(0.3, 0.4), 0.0, 0.7, &pol()).unwrap();
    assert!(g.rel_err <= 1e-10);
    assert!(qhermite_gf_check(re(1.0), 0.0, 0.5, &pol()).is_err());
}

#[test]
fn a0_constant() {
    let g = a0_check(c(0.3, 0.2), re(0.5), c(-0.4, 0.1), re(1.7), re(0.6), &pol()).unwrap();
    assert!(g.rel_err <= 1e-12);
}

#[test]
fn doubling_panel_order_stays_within_estimate() {
    let p = [re(0.3), c(0.2, 0.3), re(-0.5), re(0.6)];
    let q = re(0.7);
    let lo = askey_wilson_integral(p, q, &pol(), &cfg()).unwrap();
    let hi_cfg = QuadratureConfig {
        panel_order: 32,
        ..cfg()
    };
    let hi = askey_wilson_integral(p, q, &pol(), &hi_cfg).unwrap();
    let tol = lo.err_estimate.max(lo.value.norm() * 1e-13);
    assert!((lo.value - hi.value).norm() <= tol, "{lo:?} {hi:?}");
}

#[test]
fn complex_parameters_give_complex_value() {
    let p = [c(0.3, 0.3), re(0.2), re(0.1), re(0.4)];
    let v = askey_wilson_integral(p, re(0.5), &pol(), &cfg()).unwrap();
    assert!(!v.is_real());
}
