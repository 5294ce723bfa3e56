//! Rendering of result documents as JSON, CSV or aligned text.
//!
//! JSON objects come from `serde_json::Value`, whose maps keep keys
//! sorted, so output is byte-stable for a fixed input.

use std::collections::{BTreeMap, BTreeSet};

use clap::ValueEnum;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// What a command produced: the JSON document and the flat rows used by
/// the tabular formats.
pub struct Document {
    pub json: Value,
    pub rows: Vec<Value>,
}

impl Document {
    pub fn single(row: Value) -> Self {
        Document {
            json: row.clone(),
            rows: vec![row],
        }
    }
}

pub fn render(format: Format, doc: &Document) -> String {
    match format {
        Format::Json => format!("{}\n", doc.json),
        Format::Csv => render_csv(&doc.rows),
        Format::Text => render_text(&doc.rows),
    }
}

/// Flattens nested objects into dotted keys.
fn flatten(value: &Value) -> BTreeMap<String, String> {
    fn walk(prefix: &str, v: &Value, out: &mut BTreeMap<String, String>) {
        match v {
            Value::Object(map) => {
                for (k, child) in map {
                    let key = if prefix.is_empty() {
                        k.clone()
                    } else {
                        format!("{prefix}.{k}")
                    };
                    walk(&key, child, out);
                }
            }
            Value::String(s) => {
                out.insert(prefix.to_string(), s.clone());
            }
            Value::Null => {
                out.insert(prefix.to_string(), String::new());
            }
            other => {
                out.insert(prefix.to_string(), other.to_string());
            }
        }
    }
    let mut out = BTreeMap::new();
    walk("", value, &mut out);
    out
}

fn columns(rows: &[BTreeMap<String, String>]) -> Vec<String> {
    let set: BTreeSet<&String> = rows.iter().flat_map(|r| r.keys()).collect();
    set.into_iter().cloned().collect()
}

fn render_csv(rows: &[Value]) -> String {
    let flat: Vec<_> = rows.iter().map(flatten).collect();
    let cols = columns(&flat);
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&cols).expect("writing to memory");
    for row in &flat {
        w.write_record(cols.iter().map(|c| row.get(c).map_or("", String::as_str)))
            .expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flushing to memory")).expect("csv output is UTF-8")
}

fn render_text(rows: &[Value]) -> String {
    let flat: Vec<_> = rows.iter().map(flatten).collect();
    let mut out = String::new();
    if let [row] = flat.as_slice() {
        let width = row.keys().map(String::len).max().unwrap_or(0);
        for (k, v) in row {
            out.push_str(&format!("{k:<width$}  {v}\n"));
        }
        return out;
    }
    let cols = columns(&flat);
    let widths: Vec<usize> = cols
        .iter()
        .map(|c| {
            flat.iter()
                .map(|r| r.get(c).map_or(0, String::len))
                .max()
                .unwrap_or(0)
                .max(c.len())
        })
        .collect();
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    out.push_str(&line(cols.iter().map(String::as_str).collect()));
    for row in &flat {
        out.push_str(&line(cols.iter().map(|c| row.get(c).map_or("", String::as_str)).collect()));
    }
    out
}
