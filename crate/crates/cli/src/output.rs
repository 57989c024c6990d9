//! JSON-lines records, the footer with its run manifest, and table mode.

use std::io::{self, Write};
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

#[derive(Serialize)]
pub struct RunManifest {
    pub command_line: String,
    pub tool_version: &'static str,
    pub wall_time_ms: u128,
    pub input_digest: Option<String>,
}

pub struct Output {
    table: bool,
    started: Instant,
    command_line: String,
    input_digest: Option<String>,
    out: io::StdoutLock<'static>,
}

impl Output {
    pub fn new(table: bool) -> Self {
        let command_line = std::env::args().collect::<Vec<_>>().join(" ");
        Output {
            table,
            started: Instant::now(),
            command_line,
            input_digest: None,
            out: io::stdout().lock(),
        }
    }

    pub fn set_input_digest(&mut self, digest: String) {
        self.input_digest = Some(digest);
    }

    /// One record: a JSON object tagged with `kind`, or in table mode the
    /// given row text.
    pub fn record(
        &mut self,
        kind: &str,
        payload: Value,
        row: impl FnOnce() -> String,
    ) -> io::Result<()> {
        if self.table {
            writeln!(self.out, "{}", row())
        } else {
            writeln!(self.out, "{}", tagged(kind, payload))
        }
    }

    /// A line written as-is in both modes.
    pub fn raw(&mut self, line: &str) -> io::Result<()> {
        writeln!(self.out, "{line}")
    }

    pub fn manifest(&self) -> RunManifest {
        RunManifest {
            command_line: self.command_line.clone(),
            tool_version: env!("CARGO_PKG_VERSION"),
            wall_time_ms: self.started.elapsed().as_millis(),
            input_digest: self.input_digest.clone(),
        }
    }

    /// The closing record. In table mode the summary rows are printed and
    /// the manifest follows as `#` comments.
    pub fn footer(&mut self, summary: Value, rows: Vec<String>) -> io::Result<()> {
        let manifest = self.manifest();
        if self.table {
            for row in rows {
                writeln!(self.out, "{row}")?;
            }
            writeln!(
                self.out,
                "# {} {}",
                manifest.tool_version, manifest.command_line
            )?;
            if let Some(d) = &manifest.input_digest {
                writeln!(self.out, "# input {d}")?;
            }
            writeln!(self.out, "# wall time {} ms", manifest.wall_time_ms)
        } else {
            let record = json!({ "summary": summary, "manifest": manifest });
            writeln!(self.out, "{}", tagged("footer", record))
        }
    }

    /// The manifest alone, on standard error, for outputs that are not
    /// records (plain graph6 streams).
    pub fn manifest_to_stderr(&self) {
        let m = serde_json::to_string(&self.manifest()).expect("manifest serializes");
        eprintln!("{m}");
    }
}

fn tagged(kind: &str, payload: Value) -> String {
    let mut object = serde_json::Map::new();
    object.insert("record".into(), Value::from(kind));
    match payload {
        Value::Object(fields) => object.extend(fields),
        other => {
            object.insert("value".into(), other);
        }
    }
    Value::Object(object).to_string()
}
