//! Scalar-generic q-calculus: shifted factorials, q-binomials, basic
//! hypergeometric series, the theta product, Jackson integrals, q-derivatives
//! and the Rogers–Szegő and continuous q-Hermite polynomials.

mod deriv;
mod hyper;
mod jackson;
mod pochhammer;
mod poly;
mod theta;

pub use deriv::{q_derivative, q_partial};
pub use hyper::{phi_series, ratio_series, Linear};
pub use jackson::jackson_qintegral;
pub use pochhammer::{
    qbinomial, qbinomial_row, qpoch_finite, qpoch_infinite, qpoch_infinite_recip, qpoch_multi, PochOrder,
};
pub use poly::{q_hermite, q_hermite_poly, rogers_szego, rogers_szego_poly, QPolynomial};
pub use theta::{delta_theta, h_factor, hprod};
