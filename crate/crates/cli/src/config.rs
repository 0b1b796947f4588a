use std::path::PathBuf;

use qrecip::identities::{IdentityId, Mode, DEFAULT_ORDER, DEFAULT_TOL};
use qrecip::TruncationPolicy;
use serde_json::{json, Value};

use crate::report::num;

pub const DEFAULT_SEED: u64 = 7;
pub const SUITE_SAMPLES: usize = 100;
pub const INTEGRAL_SAMPLES: usize = 20;

/// Everything that determines the content of a report.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub mode: Mode,
    pub seed: u64,
    pub samples: usize,
    pub tol: f64,
    /// Truncation order of exact checks.
    pub order: usize,
    pub policy: TruncationPolicy,
    /// Empty means every identity.
    pub only: Vec<IdentityId>,
    pub out: Option<PathBuf>,
    /// Worker threads; does not affect report content.
    pub jobs: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            mode: Mode::Numeric,
            seed: DEFAULT_SEED,
            samples: SUITE_SAMPLES,
            tol: DEFAULT_TOL,
            order: DEFAULT_ORDER,
            policy: TruncationPolicy::default(),
            only: Vec::new(),
            out: None,
            jobs: 1,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.samples == 0 {
            return Err("--samples must be positive".into());
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(format!("--tol must be a positive number, got {}", self.tol));
        }
        if self.order == 0 {
            return Err("--order must be positive".into());
        }
        if self.jobs == 0 {
            return Err("--jobs must be positive".into());
        }
        self.policy.validate().map_err(|e| e.to_string())
    }

    pub fn selected(&self) -> Vec<IdentityId> {
        if self.only.is_empty() {
            IdentityId::ALL.to_vec()
        } else {
            self.only.clone()
        }
    }

    /// Config echo for reports. `out` and `jobs` are left out since they do not
    /// influence results.
    pub fn to_json(&self) -> Value {
        json!({
            "mode": self.mode.to_string(),
            "seed": self.seed.to_string(),
            "samples": self.samples,
            "tolerance": num(self.tol),
            "order": self.order,
            "policy": {
                "max_terms": self.policy.max_terms,
                "max_factors": self.policy.max_factors,
                "tail_tol": num(self.policy.tail_tol),
                "pole_margin": num(self.policy.pole_margin),
            },
            "only": self.only.iter().map(|id| id.name()).collect::<Vec<_>>(),
        })
    }
}

/// Parses a comma-separated identity list.
pub fn parse_only(list: &str) -> Result<Vec<IdentityId>, String> {
    let mut out = Vec::new();
    for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let id: IdentityId = name.parse().map_err(|e: qrecip::QError| e.to_string())?;
        if !out.contains(&id) {
            out.push(id);
        }
    }
    Ok(out)
}
