//! The output record and its JSON and CSV renderings.

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub command: &'static str,
    pub inputs: Value,
    pub results: Value,
    pub provenance: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl OutputRecord {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("record serializes");
                s.push('\n');
                s
            }
            Format::Csv => {
                let (header, rows) = if self.command == "chartable" {
                    table_rows(&self.results)
                } else {
                    flat_rows(&self.results)
                };
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&header).expect("in-memory write");
                for row in rows {
                    w.write_record(&row).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
            }
        }
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Bool(_) | Value::Number(_) => v.to_string(),
        other => other.to_string(),
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

/// Scalars become one column each; arrays of scalars become `key_0, key_1,
/// …`; anything deeper is embedded as compact JSON.
fn flatten(row: &Map<String, Value>) -> Vec<(String, String)> {
    let mut out = Vec::new();
    for (k, v) in row {
        match v {
            Value::Array(items) if items.iter().all(is_scalar) => {
                for (i, item) in items.iter().enumerate() {
                    out.push((format!("{k}_{i}"), cell(item)));
                }
            }
            _ => out.push((k.clone(), cell(v))),
        }
    }
    out
}

/// One CSV row per result object. New columns are placed right after the
/// previous column of the row that introduced them.
fn flat_rows(results: &Value) -> (Vec<String>, Vec<Vec<String>>) {
    let objects: Vec<&Map<String, Value>> = match results {
        Value::Array(items) => items.iter().filter_map(Value::as_object).collect(),
        Value::Object(m) => vec![m],
        _ => Vec::new(),
    };
    let flat: Vec<Vec<(String, String)>> = objects.into_iter().map(flatten).collect();
    let mut header: Vec<String> = Vec::new();
    for row in &flat {
        let mut at = 0;
        for (k, _) in row {
            match header.iter().position(|h| h == k) {
                Some(pos) => at = pos + 1,
                None => {
                    header.insert(at, k.clone());
                    at += 1;
                }
            }
        }
    }
    let rows = flat
        .iter()
        .map(|row| {
            header
                .iter()
                .map(|h| {
                    row.iter()
                        .find(|(k, _)| k == h)
                        .map(|(_, v)| v.clone())
                        .unwrap_or_default()
                })
                .collect()
        })
        .collect();
    (header, rows)
}

/// Character table layout: one row per irrep, one column per class.
fn table_rows(results: &Value) -> (Vec<String>, Vec<Vec<String>>) {
    let labels = |key: &str| -> Vec<String> {
        results[key]
            .as_array()
            .map(|a| a.iter().map(|e| cell(&e["label"])).collect())
            .unwrap_or_default()
    };
    let classes = labels("classes");
    let irreps = labels("irreps");
    let mut header = vec!["irrep".to_string(), "dimension".to_string()];
    header.extend(classes.iter().cloned());
    let mut size_row = vec!["class size".to_string(), String::new()];
    if let Some(cs) = results["classes"].as_array() {
        size_row.extend(cs.iter().map(|c| cell(&c["size"])));
    }
    let mut rows = vec![size_row];
    for (r, label) in irreps.iter().enumerate() {
        let mut row = vec![label.clone(), cell(&results["irreps"][r]["dimension"])];
        if let Some(vals) = results["values"][r].as_array() {
            row.extend(vals.iter().map(|v| {
                serde_json::from_value::<altchar::QuadValue>(v.clone())
                    .map(|q| q.to_string())
                    .unwrap_or_default()
            }));
        }
        rows.push(row);
    }
    (header, rows)
}
