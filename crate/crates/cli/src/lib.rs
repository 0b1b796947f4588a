//! Library side of the `qverify` command: run configuration, suite execution
//! and JSON reports.

pub mod config;
pub mod report;
pub mod run;

use num_complex::Complex64;
use qrecip::identities::{Mode, Point};
use qrecip::{Monomial, ParameterPoint, Slot};

pub use config::{parse_only, RunConfig};
pub use report::{Entry, Status, SuiteReport, Summary};
pub use run::{list_table, run_check, run_integrals, run_suite};

/// Builds an explicit point from textual slot values. Numeric values use the
/// `num-complex` syntax (`0.3`, `0.2-0.1i`); exact values are monomials
/// (`1/2`, `-q`, `3*q^2`) and the base defaults to `q`.
pub fn parse_point(mode: Mode, q: Option<&str>, slots: &[(Slot, String)], theta: Option<f64>) -> Result<Point, String> {
    match mode {
        Mode::Numeric => {
            let parse = |s: &str| {
                s.trim()
                    .parse::<Complex64>()
                    .map_err(|_| format!("cannot parse complex number '{s}'"))
            };
            let q = q.ok_or("an explicit numeric point needs --q")?;
            let mut p = ParameterPoint::new(parse(q)?);
            for (slot, v) in slots {
                p.set(*slot, parse(v)?);
            }
            p.theta = theta;
            Ok(Point::Numeric(p))
        }
        Mode::Exact => {
            let parse = |s: &str| s.parse::<Monomial>().map_err(|e| e.to_string());
            let mut p = ParameterPoint::new(parse(q.unwrap_or("q"))?);
            for (slot, v) in slots {
                p.set(*slot, parse(v)?);
            }
            if theta.is_some() {
                return Err("--theta is numeric only".into());
            }
            Ok(Point::Exact(p))
        }
    }
}
