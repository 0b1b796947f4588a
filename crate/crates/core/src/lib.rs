//! q-series primitives and identity verification in floating-point and
//! exact (formal power series) arithmetic.

// `!(x < 1.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod error;
pub mod exact;
pub mod identities;
pub mod point;
pub mod qcalc;
pub mod quadrature;
pub mod scalar;
pub mod wide;

pub use error::{QError, Result};
pub use exact::{FormalSeries, Monomial, Rational};
pub use point::{ParameterPoint, Slot, SlotValue};
pub use scalar::{sum_terms, Scalar, TruncationPolicy};
