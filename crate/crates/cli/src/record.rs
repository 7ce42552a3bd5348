//! Output records and their plain, JSON and CSV renderings.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Plain,
    Json,
    Csv,
}

/// Result of a count or enumeration. The complexity is a decimal string so
/// values beyond 64 bits survive any JSON consumer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub n: usize,
    pub gaps: Vec<usize>,
    pub method: String,
    pub complexity: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub words: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesRow {
    pub n: usize,
    pub coefficient: String,
}

fn gap_text(gaps: &[usize]) -> String {
    let items: Vec<String> = gaps.iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(","))
}

fn csv_string(write: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>) -> Result<String, CliError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    write(&mut writer)?;
    let bytes = writer.into_inner().map_err(|e| csv::Error::from(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

impl OutputRecord {
    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => Ok(serde_json::to_string_pretty(self)? + "\n"),
            Format::Plain => Ok(match &self.words {
                None => format!("{}\n", self.complexity),
                Some(words) => {
                    let mut out = String::new();
                    for w in words {
                        writeln!(out, "{w}").unwrap();
                    }
                    writeln!(out, "count: {}", self.complexity).unwrap();
                    out
                }
            }),
            Format::Csv => csv_string(|w| match &self.words {
                None => {
                    w.write_record(["n", "gaps", "method", "complexity"])?;
                    w.write_record([
                        self.n.to_string(),
                        gap_text(&self.gaps),
                        self.method.clone(),
                        self.complexity.clone(),
                    ])
                }
                Some(words) => {
                    w.write_record(["kind", "value"])?;
                    for word in words {
                        w.write_record(["word", word])?;
                    }
                    w.write_record(["count", &self.complexity])
                }
            }),
        }
    }
}

pub fn render_series(rows: &[SeriesRow], format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(rows)? + "\n"),
        Format::Plain => Ok(rows.iter().map(|r| format!("{},{}\n", r.n, r.coefficient)).collect()),
        Format::Csv => csv_string(|w| {
            w.write_record(["n", "coefficient"])?;
            rows.iter().try_for_each(|r| w.write_record([r.n.to_string(), r.coefficient.clone()]))
        }),
    }
}
