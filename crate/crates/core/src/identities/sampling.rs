use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{violations, IdentityId};
use crate::error::{QError, Result};
use crate::point::{ParameterPoint, Slot};
use crate::scalar::TruncationPolicy;

/// Sampled moduli stay below this fraction of their bound.
pub const SAMPLE_BOUND_FACTOR: f64 = 0.8;
/// Sampled denominators and nonzero quantities stay this far from 0.
pub const SAMPLE_MIN_DISTANCE: f64 = 1e-3;
const Q_RANGE: (f64, f64) = (0.05, 0.8);
const DRAWS_PER_POINT: usize = 1000;

/// Slack applied to a domain predicate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Margins {
    /// Bounded moduli must be below this.
    pub bound: f64,
    /// Nonzero quantities must exceed this modulus.
    pub nonzero: f64,
    /// Minimum distance of a denominator factor from 0.
    pub pole: f64,
}

impl Margins {
    pub fn strict(policy: &TruncationPolicy) -> Self {
        Self {
            bound: 1.0,
            nonzero: 0.0,
            pole: policy.pole_margin,
        }
    }

    pub fn sampling() -> Self {
        Self {
            bound: SAMPLE_BOUND_FACTOR,
            nonzero: SAMPLE_MIN_DISTANCE,
            pole: SAMPLE_MIN_DISTANCE,
        }
    }
}

fn modulus_range(id: IdentityId, slot: Slot) -> (f64, f64) {
    use IdentityId::*;
    use Slot::*;
    match (id, slot) {
        (Jtp, X) => (0.2, 5.0),
        (Lambert, C) => (0.5, 4.0),
        (Lambert4, A) => (0.3, 3.0),
        (RamRecip, A) => (0.05, 2.0),
        (_, U | V) => (0.2, 1.5),
        (_, A1 | A2 | A3) => (0.4, 2.5),
        (_, R) => (0.05, 2.0),
        _ => (0.05, 1.0),
    }
}

/// `count` deterministic points inside the domain of `id`, with real
/// `q ∈ [0.05, 0.8]` and complex slot values of uniform argument.
pub fn sample_domain(id: IdentityId, seed: u64, count: usize) -> Result<Vec<ParameterPoint<Complex64>>> {
    if count == 0 {
        return Err(QError::Domain("sample count must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((id as u64 + 1) << 40));
    let margins = Margins::sampling();
    let budget = DRAWS_PER_POINT * count;
    let mut out = Vec::with_capacity(count);
    for _ in 0..budget {
        let q = rng.gen_range(Q_RANGE.0..=Q_RANGE.1);
        let mut point = ParameterPoint::new(Complex64::new(q, 0.0));
        for &slot in id.def().slots {
            let (lo, hi) = modulus_range(id, slot);
            let r = rng.gen_range(lo..hi);
            let arg = rng.gen_range(0.0..TAU);
            point.set(slot, Complex64::from_polar(r, arg));
        }
        if violations(id, &point, &margins).is_empty() {
            out.push(point);
            if out.len() == count {
                return Ok(out);
            }
        }
    }
    Err(QError::SamplingExhausted {
        identity: id.name().to_string(),
        draws: budget,
    })
}
