//! Output rendering: human tables by default, `--format json` / `--format
//! csv` for machines. Exact rationals are serialized as `p/q` strings in
//! JSON, never floats; CSV carries both the exact value and a float
//! rendering column for plotting.

use anyhow::Result;
use serde_json::{Map, Value};
use std::fmt::Write as _;
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format \"{other}\" (expected table, json, or csv)")),
        }
    }
}

/// A key/value report: one quantity per line, optional float rendering.
/// When a canonicalized input document is attached, the JSON rendering
/// embeds it, so machine output is a standalone reproducer.
pub struct FieldReport {
    pub title: String,
    pub status: Option<String>,
    pub fields: Vec<(String, String, Option<f64>)>,
    pub document: Option<Value>,
}

impl FieldReport {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => {
                let mut out = String::new();
                let _ = writeln!(out, "{}", self.title);
                if let Some(s) = &self.status {
                    let _ = writeln!(out, "  status: {s}");
                }
                for (key, exact, float) in &self.fields {
                    match float {
                        Some(f) => {
                            let _ = writeln!(out, "  {key:<22} {exact}  (~{f})");
                        }
                        None => {
                            let _ = writeln!(out, "  {key:<22} {exact}");
                        }
                    }
                }
                out
            }
            Format::Json => {
                let mut fields = Map::new();
                for (key, exact, _) in &self.fields {
                    fields.insert(key.clone(), Value::String(exact.clone()));
                }
                let mut root = Map::new();
                if let Some(s) = &self.status {
                    root.insert("status".into(), Value::String(s.clone()));
                }
                if let Some(doc) = &self.document {
                    root.insert("document".into(), doc.clone());
                }
                root.insert("fields".into(), Value::Object(fields));
                let mut text = serde_json::to_string_pretty(&Value::Object(root)).unwrap();
                text.push('\n');
                text
            }
            Format::Csv => {
                let mut out = String::from("quantity,exact,float\n");
                if let Some(s) = &self.status {
                    let _ = writeln!(out, "status,{s},");
                }
                for (key, exact, float) in &self.fields {
                    match float {
                        Some(f) => {
                            let _ = writeln!(out, "{key},{exact},{f}");
                        }
                        None => {
                            let _ = writeln!(out, "{key},{exact},");
                        }
                    }
                }
                out
            }
        }
    }
}

/// A row-oriented report with a fixed column set.
pub struct RowReport {
    pub title: String,
    pub columns: Vec<String>,
    /// Pre-rendered cells, one vector per row.
    pub rows: Vec<Vec<String>>,
}

impl RowReport {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => {
                let mut widths: Vec<usize> = self.columns.iter().map(|c| c.len()).collect();
                for row in &self.rows {
                    for (i, cell) in row.iter().enumerate() {
                        widths[i] = widths[i].max(cell.len());
                    }
                }
                let mut out = String::new();
                let _ = writeln!(out, "{}", self.title);
                let header: Vec<String> = self
                    .columns
                    .iter()
                    .enumerate()
                    .map(|(i, c)| format!("{c:<w$}", w = widths[i]))
                    .collect();
                let _ = writeln!(out, "  {}", header.join("  "));
                for row in &self.rows {
                    let line: Vec<String> = row
                        .iter()
                        .enumerate()
                        .map(|(i, c)| format!("{c:<w$}", w = widths[i]))
                        .collect();
                    let _ = writeln!(out, "  {}", line.join("  "));
                }
                out
            }
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let mut obj = Map::new();
                        for (col, cell) in self.columns.iter().zip(row.iter()) {
                            obj.insert(col.clone(), Value::String(cell.clone()));
                        }
                        Value::Object(obj)
                    })
                    .collect();
                let mut root = Map::new();
                root.insert("rows".into(), Value::Array(rows));
                let mut text = serde_json::to_string_pretty(&Value::Object(root)).unwrap();
                text.push('\n');
                text
            }
            Format::Csv => {
                let mut out = String::new();
                let _ = writeln!(out, "{}", self.columns.join(","));
                for row in &self.rows {
                    let _ = writeln!(out, "{}", row.join(","));
                }
                out
            }
        }
    }
}

/// Writes to `--out` when given, stdout otherwise.
pub fn emit(text: &str, out: &Option<PathBuf>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}
