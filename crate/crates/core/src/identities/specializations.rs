use super::IdentityId;
use crate::exact::Monomial;
use crate::point::{ParameterPoint, Slot};

fn m(s: &str) -> Monomial {
    s.parse().expect("built-in monomial")
}

/// Exact point with base `λq`.
fn pt(lambda: &str, slots: &[(Slot, &str)]) -> ParameterPoint<Monomial> {
    let l = m(lambda);
    let mut p = ParameterPoint::new(Monomial::new(l.coeff, 1));
    for (s, v) in slots {
        p.set(*s, m(v));
    }
    p
}

/// Built-in rational specializations for exact checks. Parameter-free
/// identities are specialized through the base `λq`.
pub fn exact_points(id: IdentityId) -> Vec<ParameterPoint<Monomial>> {
    use IdentityId::*;
    use Slot::*;
    let lambdas = ["1", "2", "-1", "1/2", "-3/2"];
    match id {
        Jtp => [("1", "2"), ("1", "-1"), ("2", "1/3"), ("-1", "-5/2"), ("1/2", "7/4")]
            .iter()
            .map(|(l, x)| pt(l, &[(X, x)]))
            .collect(),
        RamRecip => vec![
            pt("1", &[(A, "1/5"), (U, "2"), (V, "3")]),
            pt("1", &[(A, "-1"), (U, "1/3"), (V, "5/2")]),
            pt("2", &[(A, "2"), (U, "-1/2"), (V, "3/4")]),
            pt("1", &[(A, "0"), (U, "1"), (V, "-2")]),
            pt("-1/2", &[(A, "3/7"), (U, "5"), (V, "1/5")]),
        ],
        Recip5 => vec![
            pt("1", &[(A, "1/5"), (C, "1/3"), (D, "q"), (U, "2"), (V, "5/2")]),
            pt("1", &[(A, "-1"), (C, "2"), (D, "-1/2*q"), (U, "1/3"), (V, "3/4")]),
            pt("1", &[(A, "0"), (C, "0"), (D, "2*q"), (U, "1"), (V, "-1")]),
            pt("-1", &[(A, "3"), (C, "-1/4"), (D, "q^2"), (U, "1/5"), (V, "2/7")]),
            pt("2", &[(A, "1/2"), (C, "1/7"), (D, "3*q"), (U, "-3"), (V, "5")]),
        ],
        Lambert => vec![
            pt("1", &[(C, "2"), (U, "1/3"), (V, "1/5")]),
            pt("1", &[(C, "-1"), (U, "2"), (V, "3")]),
            pt("2", &[(C, "1/2"), (U, "-1"), (V, "5")]),
            pt("-1", &[(C, "3"), (U, "1/7"), (V, "2/9")]),
            pt("1/2", &[(C, "-2/3"), (U, "3/4"), (V, "-5/2")]),
        ],
        LimitEulerD => [("1", "0"), ("1", "1/2*q"), ("1", "-q"), ("2", "3*q"), ("-1", "2*q^2")]
            .iter()
            .map(|(l, d)| pt(l, &[(D, d)]))
            .collect(),
        LimitA => vec![
            pt("1", &[(A, "1/2"), (C, "1/3"), (D, "2*q")]),
            pt("1", &[(A, "-1"), (C, "2"), (D, "-q")]),
            pt("2", &[(A, "0"), (C, "3"), (D, "1/3*q")]),
            pt("1", &[(A, "1/5"), (C, "0"), (D, "2*q^2")]),
            pt("-1", &[(A, "3"), (C, "-1/2"), (D, "-2*q")]),
        ],
        Lambert4 => [("1", "2"), ("1", "-1"), ("2", "1/3"), ("-1", "-5/2"), ("1/2", "3/4")]
            .iter()
            .map(|(l, a)| pt(l, &[(A, a)]))
            .collect(),
        QbinomialThm => vec![
            pt("1", &[(A, "2"), (X, "q")]),
            pt("1", &[(A, "-1/3"), (X, "2*q")]),
            pt("2", &[(A, "5"), (X, "-1/2*q")]),
            pt("1", &[(A, "1/2"), (X, "q^2")]),
            pt("-1", &[(A, "0"), (X, "3*q")]),
        ],
        Qmehler => vec![
            pt("1", &[(A, "1"), (B, "2"), (S, "-1"), (T, "1/2"), (Z, "q")]),
            pt("1", &[(A, "1/3"), (B, "-2"), (S, "3"), (T, "1"), (Z, "2*q")]),
            pt("2", &[(A, "0"), (B, "1"), (S, "1"), (T, "0"), (Z, "-q")]),
            pt("1", &[(A, "5"), (B, "-1/5"), (S, "2/3"), (T, "-3"), (Z, "q^2")]),
            pt("-1/2", &[(A, "1"), (B, "1"), (S, "1"), (T, "1"), (Z, "q")]),
        ],
        LimitDNegq | FourSquare | FourTriangular => lambdas.iter().map(|l| pt(l, &[])).collect(),
        _ => Vec::new(),
    }
}
