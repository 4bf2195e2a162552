use std::io::{ErrorKind, Write};
use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::Value;

use crate::args::Format;

pub const SCHEMA: &str = "rankmetric-report/1";

/// Result of one command: the JSON report, a text summary and whether the
/// checked property holds.
pub struct Outcome {
    pub holds: bool,
    pub report: Value,
    pub summary: String,
}

impl Outcome {
    pub fn new<T: Serialize>(holds: bool, report: &T, summary: impl Into<String>) -> Result<Self> {
        Ok(Outcome {
            holds,
            report: serde_json::to_value(report)?,
            summary: summary.into(),
        })
    }
}

#[derive(Serialize)]
struct Envelope<'a> {
    schema: &'static str,
    command: &'a str,
    holds: bool,
    report: &'a Value,
}

pub fn emit(command: &str, out: &Outcome, format: Format, json_file: Option<&Path>) -> Result<()> {
    let env = Envelope {
        schema: SCHEMA,
        command,
        holds: out.holds,
        report: &out.report,
    };
    let json = serde_json::to_string_pretty(&env)?;
    if let Some(path) = json_file {
        std::fs::write(path, format!("{json}\n"))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    let text = match format {
        Format::Json => json,
        Format::Text => {
            let s = out.summary.trim_end();
            if s.is_empty() {
                if out.holds { "holds" } else { "fails" }.to_string()
            } else {
                s.to_string()
            }
        }
    };
    match writeln!(std::io::stdout().lock(), "{text}") {
        Err(e) if e.kind() != ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}
