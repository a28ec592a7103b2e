//! Reproducible run reports: one schema for every command, rendered as
//! JSON, CSV or a text table.

mod config;
mod run;
mod simplicity;

use std::time::Duration;

use serde::Serialize;
use serde_json::{Number, Value};

pub use config::{Command, Format, ModeChoice, RunConfig};
pub use run::{exit_code, run};
pub use simplicity::{simplicity_report, PowersEvidence, SimplicityEvidence, Status};

use crate::error::Result;

pub const SCHEMA_VERSION: u32 = 1;

/// A single asserted fact with the result it rests on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub name: String,
    pub pass: bool,
    pub citation: String,
}

impl Claim {
    pub fn new(name: impl Into<String>, pass: bool, citation: impl Into<String>) -> Self {
        Claim { name: name.into(), pass, citation: citation.into() }
    }
}

/// One CSV line. Columns that do not apply to a command stay empty.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CsvRow {
    pub group: String,
    pub operator: String,
    pub radius: Option<usize>,
    pub lower: Option<f64>,
    pub upper: Option<f64>,
    pub n: Option<usize>,
    pub ceiling: Option<f64>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub config: RunConfig,
    pub group: Option<String>,
    pub results: Value,
    pub claims: Vec<Claim>,
    pub pass: bool,
    #[serde(skip)]
    pub rows: Vec<CsvRow>,
    /// Wall-clock time, kept out of the JSON so that reruns are byte-identical.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Report {
    pub fn new(
        command: Command,
        config: &RunConfig,
        group: Option<String>,
        results: Value,
        claims: Vec<Claim>,
    ) -> Self {
        let pass = claims.iter().all(|c| c.pass);
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.name().into(),
            config: config.clone(),
            group,
            results,
            claims,
            pass,
            rows: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn with_rows(mut self, rows: Vec<CsvRow>) -> Self {
        self.rows = rows;
        self
    }

    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&fix_floats(value)).expect("report serializes")
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let rows: Vec<CsvRow> = if self.rows.is_empty() {
            self.claims
                .iter()
                .map(|c| CsvRow {
                    group: self.group.clone().unwrap_or_default(),
                    operator: c.name.clone(),
                    pass: c.pass,
                    ..Default::default()
                })
                .collect()
        } else {
            self.rows.clone()
        };
        w.write_record(["group", "operator", "R", "lower", "upper", "N", "ceiling", "pass"])?;
        for row in rows {
            w.write_record([
                row.group,
                row.operator,
                opt(row.radius.map(|r| r.to_string())),
                opt(row.lower.map(sig17)),
                opt(row.upper.map(sig17)),
                opt(row.n.map(|n| n.to_string())),
                opt(row.ceiling.map(sig17)),
                row.pass.to_string(),
            ])?;
        }
        let bytes = w.into_inner().map_err(|e| std::io::Error::other(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv is utf-8"))
    }

    pub fn to_table(&self) -> String {
        let mut out = format!(
            "{}  group: {}  {}\n",
            self.command,
            self.group.as_deref().unwrap_or("-"),
            if self.pass { "PASS" } else { "FAIL" }
        );
        let width = self.claims.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.claims {
            out += &format!("  {}  {:width$}  [{}]\n", if c.pass { "pass" } else { "FAIL" }, c.name, c.citation);
        }
        if let Value::Object(map) = &self.results {
            for (k, v) in map {
                let shown = match v {
                    Value::Number(n) if n.is_u64() || n.is_i64() => n.to_string(),
                    Value::Number(n) => n.as_f64().map(sig17).unwrap_or_else(|| n.to_string()),
                    Value::String(s) => s.clone(),
                    Value::Bool(b) => b.to_string(),
                    Value::Null => "-".into(),
                    _ => continue,
                };
                out += &format!("  {k}: {shown}\n");
            }
        }
        out += &format!("  elapsed: {:.3}s\n", self.elapsed.as_secs_f64());
        out
    }

    pub fn render(&self, format: Format) -> Result<String> {
        Ok(match format {
            Format::Json => self.to_json() + "\n",
            Format::Csv => self.to_csv()?,
            Format::Table => self.to_table(),
        })
    }
}

fn opt(s: Option<String>) -> String {
    s.unwrap_or_default()
}

/// A float with 17 significant digits.
pub fn sig17(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        x.to_string()
    }
}

/// Rewrites every non-integer JSON number with 17 significant digits.
fn fix_floats(v: Value) -> Value {
    match v {
        Value::Number(n) if !(n.is_i64() || n.is_u64()) => match n.as_f64() {
            Some(x) if x.is_finite() => Value::Number(sig17(x).parse::<Number>().expect("valid number")),
            _ => Value::Null,
        },
        Value::Array(a) => Value::Array(a.into_iter().map(fix_floats).collect()),
        Value::Object(m) => Value::Object(m.into_iter().map(|(k, v)| (k, fix_floats(v))).collect()),
        other => other,
    }
}
