use std::time::Duration;

use num_complex::Complex64;
use qrecip::identities::{IdentityReport, Mode, Point, Value as Side};
use qrecip::{FormalSeries, ParameterPoint, SlotValue};
use serde_json::{json, Map, Value};

use crate::config::RunConfig;

/// 17 significant digits, enough to round-trip any `f64`.
pub fn num(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        x.to_string()
    }
}

pub fn complex(z: Complex64) -> Value {
    json!({ "re": num(z.re), "im": num(z.im) })
}

fn series(s: &FormalSeries) -> Value {
    Value::Array(s.coeffs().iter().map(|c| Value::String(c.to_string())).collect())
}

fn side(v: &Side) -> Value {
    match v {
        Side::Numeric(z) => complex(*z),
        Side::Exact(s) => series(s),
    }
}

fn point_map<T: SlotValue>(p: &ParameterPoint<T>, f: impl Fn(&T) -> Value) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("q".into(), f(&p.q));
    for (slot, v) in p.iter() {
        m.insert(slot.name().into(), f(v));
    }
    if let Some(t) = p.theta {
        m.insert("theta".into(), Value::String(num(t)));
    }
    m
}

pub fn point_json(p: &Point) -> Value {
    Value::Object(match p {
        Point::Numeric(p) => point_map(p, |z| complex(*z)),
        Point::Exact(p) => point_map(p, |m| Value::String(m.to_string())),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// The point lies outside the domain of the check.
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

/// One check at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct Entry {
    /// Identity name or quadrature check name.
    pub check: String,
    pub mode: Mode,
    pub point: Value,
    pub lhs: Option<Value>,
    pub rhs: Option<Value>,
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
    pub status: Status,
    pub near_trivial: bool,
    pub diagnostics: String,
}

impl Entry {
    pub fn from_report(r: &IdentityReport) -> Self {
        Self {
            check: r.identity.name().into(),
            mode: r.mode,
            point: point_json(&r.point),
            lhs: Some(side(&r.lhs)),
            rhs: Some(side(&r.rhs)),
            abs_err: Some(r.abs_err),
            rel_err: Some(r.rel_err),
            status: if r.pass { Status::Pass } else { Status::Fail },
            near_trivial: r.near_trivial,
            diagnostics: r.diagnostics.clone(),
        }
    }

    /// An entry that never reached a comparison.
    pub fn unevaluated(check: &str, mode: Mode, point: Value, status: Status, why: String) -> Self {
        Self {
            check: check.into(),
            mode,
            point,
            lhs: None,
            rhs: None,
            abs_err: None,
            rel_err: None,
            status,
            near_trivial: false,
            diagnostics: why,
        }
    }

    pub fn to_json(&self) -> Value {
        let opt = |x: Option<f64>| x.map_or(Value::Null, |x| Value::String(num(x)));
        json!({
            "check": self.check,
            "mode": self.mode.to_string(),
            "status": self.status.as_str(),
            "point": self.point,
            "lhs": self.lhs.clone().unwrap_or(Value::Null),
            "rhs": self.rhs.clone().unwrap_or(Value::Null),
            "abs_err": opt(self.abs_err),
            "rel_err": opt(self.rel_err),
            "near_trivial": self.near_trivial,
            "diagnostics": self.diagnostics,
        })
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub near_trivial: usize,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub config: RunConfig,
    pub entries: Vec<Entry>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn summary(&self) -> Summary {
        let mut s = Summary {
            total: self.entries.len(),
            ..Default::default()
        };
        for e in &self.entries {
            match e.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Skipped => s.skipped += 1,
            }
            s.near_trivial += usize::from(e.near_trivial);
        }
        s
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(self.summary().fail > 0)
    }

    /// Everything except timing; identical configs give identical bodies.
    pub fn body_json(&self) -> Value {
        let s = self.summary();
        json!({
            "config": self.config.to_json(),
            "results": self.entries.iter().map(Entry::to_json).collect::<Vec<_>>(),
            "summary": {
                "total": s.total,
                "pass": s.pass,
                "fail": s.fail,
                "skipped": s.skipped,
                "near_trivial": s.near_trivial,
            },
        })
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.body_json();
        v["timing"] = json!({
            "elapsed_seconds": num(self.elapsed.as_secs_f64()),
            "jobs": self.config.jobs,
        });
        v
    }

    /// Per-check tallies, one line each, followed by failure details.
    pub fn text_summary(&self) -> String {
        let mut names: Vec<&str> = Vec::new();
        for e in &self.entries {
            if !names.contains(&e.check.as_str()) {
                names.push(&e.check);
            }
        }
        let mut out = String::new();
        for name in names {
            let of = |st| {
                self.entries
                    .iter()
                    .filter(|e| e.check == name && e.status == st)
                    .count()
            };
            out += &format!(
                "{name:<24} pass {:>4}  fail {:>4}  skipped {:>4}\n",
                of(Status::Pass),
                of(Status::Fail),
                of(Status::Skipped)
            );
        }
        for e in self.entries.iter().filter(|e| e.status == Status::Fail) {
            let rel = e.rel_err.map_or("-".to_string(), |x| format!("{x:.3e}"));
            out += &format!("FAIL {} rel_err={rel} {} {}\n", e.check, e.point, e.diagnostics);
        }
        let s = self.summary();
        out += &format!(
            "{} checks: {} pass, {} fail, {} skipped, {} near-trivial ({:.2}s)\n",
            s.total,
            s.pass,
            s.fail,
            s.skipped,
            s.near_trivial,
            self.elapsed.as_secs_f64()
        );
        out
    }
}
