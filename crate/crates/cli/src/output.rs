//! Rendering of command results.
//!
//! Every output starts with the resolved run configuration: a `# config:` comment
//! line for text and CSV, a `config` key for JSON. CSV output opens with
//! `# rankmetric <kind> csv v<N>`; the column list of a given version never changes.

use serde_json::{json, Value};

use crate::args::Format;
use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    Usage = 1,
    Verification = 2,
    Inconclusive = 3,
}

pub struct Csv {
    pub kind: &'static str,
    pub version: u32,
    pub columns: &'static [&'static str],
    pub rows: Vec<Vec<String>>,
}

pub struct Report {
    pub json: Value,
    pub text: String,
    pub csv: Option<Csv>,
    pub exit: Exit,
    pub default_format: Format,
}

impl Report {
    pub fn new(json: Value, text: String) -> Self {
        Report { json, text, csv: None, exit: Exit::Ok, default_format: Format::Text }
    }

    pub fn with_csv(mut self, csv: Csv) -> Self {
        self.csv = Some(csv);
        self.default_format = Format::Csv;
        self
    }

    pub fn with_exit(mut self, exit: Exit) -> Self {
        self.exit = exit;
        self
    }

    pub fn render(&self, format: Option<Format>, config: &Value) -> Result<String, CliError> {
        let config_line = format!("# config: {config}\n");
        match format.unwrap_or(self.default_format) {
            Format::Text => Ok(config_line + &self.text),
            Format::Json => {
                let doc = json!({ "config": config, "result": self.json });
                Ok(serde_json::to_string_pretty(&doc).expect("json values serialize") + "\n")
            }
            Format::Csv => {
                let csv = self.csv.as_ref().ok_or_else(|| CliError::Usage("this command has no csv output".into()))?;
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(csv.columns)?;
                for row in &csv.rows {
                    w.write_record(row)?;
                }
                let body = String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8 fields");
                Ok(format!("# rankmetric {} csv v{}\n{config_line}{body}", csv.kind, csv.version))
            }
        }
    }
}
