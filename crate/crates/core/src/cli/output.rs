//! Records emitted by the command-line front end.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::complexity::{formula_names, MeasureReport, Provenance, Space};
use crate::states::StateSpec;

/// Fixed column order of state rows in CSV output.
pub const STATE_COLUMNS: [&str; 13] = [
    "D",
    "Z",
    "n",
    "mu",
    "space",
    "method",
    "disequilibrium",
    "entropy_radial",
    "entropy_angular",
    "entropy_total",
    "complexity",
    "error_estimate",
    "converged",
];

pub const DENSITY_COLUMNS: [&str; 4] = ["D", "n", "r", "radial_density"];

/// One state in one space, as emitted in JSON.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateRecord {
    #[serde(rename = "D")]
    pub dim: usize,
    #[serde(rename = "Z")]
    pub charge: f64,
    pub n: u32,
    pub mu: Vec<i64>,
    pub space: Space,
    pub method: Option<Provenance>,
    pub disequilibrium: f64,
    pub entropy_radial: f64,
    pub entropy_angular: f64,
    pub entropy_total: f64,
    pub complexity: f64,
    pub error_estimate: f64,
    pub converged: bool,
    pub formulas: Vec<String>,
}

impl StateRecord {
    pub fn from_report(spec: &StateSpec, r: &MeasureReport) -> Self {
        StateRecord {
            dim: spec.dim(),
            charge: spec.charge(),
            n: spec.n(),
            mu: spec.mu().to_vec(),
            space: r.space,
            method: Some(r.method),
            disequilibrium: r.disequilibrium,
            entropy_radial: r.entropy_radial,
            entropy_angular: r.entropy_angular,
            entropy_total: r.entropy_total,
            complexity: r.complexity,
            error_estimate: r.error_estimate,
            converged: true,
            formulas: formula_names(spec, r.space, r.method)
                .into_iter()
                .map(String::from)
                .collect(),
        }
    }

    /// Row for a computation that failed; numeric fields are NaN.
    pub fn failed(spec: &StateSpec, space: Space) -> Self {
        StateRecord {
            dim: spec.dim(),
            charge: spec.charge(),
            n: spec.n(),
            mu: spec.mu().to_vec(),
            space,
            method: None,
            disequilibrium: f64::NAN,
            entropy_radial: f64::NAN,
            entropy_angular: f64::NAN,
            entropy_total: f64::NAN,
            complexity: f64::NAN,
            error_estimate: f64::NAN,
            converged: false,
            formulas: Vec::new(),
        }
    }

    pub fn csv_fields(&self, digits: usize) -> Vec<String> {
        let num = |x: f64| fmt_num(x, digits);
        vec![
            self.dim.to_string(),
            num(self.charge),
            self.n.to_string(),
            self.mu
                .iter()
                .map(i64::to_string)
                .collect::<Vec<_>>()
                .join(";"),
            self.space.as_str().to_string(),
            self.method.map_or("none", Provenance::as_str).to_string(),
            num(self.disequilibrium),
            num(self.entropy_radial),
            num(self.entropy_angular),
            num(self.entropy_total),
            num(self.complexity),
            num(self.error_estimate),
            self.converged.to_string(),
        ]
    }

    pub fn write_text(&self, w: &mut dyn Write) -> std::io::Result<()> {
        let mu: Vec<String> = self.mu.iter().map(i64::to_string).collect();
        writeln!(
            w,
            "D={} Z={} n={} mu=({}) {} [{}]",
            self.dim,
            self.charge,
            self.n,
            mu.join(","),
            self.space.as_str(),
            self.method.map_or("failed", Provenance::as_str)
        )?;
        writeln!(w, "  disequilibrium   {:.12e}", self.disequilibrium)?;
        writeln!(w, "  entropy radial   {:.12}", self.entropy_radial)?;
        writeln!(w, "  entropy angular  {:.12}", self.entropy_angular)?;
        writeln!(w, "  entropy total    {:.12}", self.entropy_total)?;
        writeln!(w, "  complexity       {:.12}", self.complexity)?;
        writeln!(w, "  error estimate   {:.3e}", self.error_estimate)
    }
}

/// `digits` significant digits in scientific notation; NaN and infinities verbatim.
pub fn fmt_num(x: f64, digits: usize) -> String {
    if x.is_finite() {
        format!("{:.*e}", digits.max(1) - 1, x)
    } else {
        x.to_string()
    }
}
