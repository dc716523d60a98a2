//! Rendering of command results as JSON, CSV or plain text.

use anyhow::Result;
use serde_json::{Map, Value};

use crate::Format;

/// A command result: metadata, a table and its plain-text form.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub meta: Vec<(&'static str, Value)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
    pub text: Vec<String>,
}

pub fn render(report: &Report, format: Format) -> Result<String> {
    match format {
        Format::Json => json(report),
        Format::Csv => csv(report),
        Format::Text => Ok(report.text.iter().map(|l| format!("{l}\n")).collect()),
    }
}

fn json(report: &Report) -> Result<String> {
    let mut doc = Map::new();
    doc.insert("command".into(), Value::from(report.command));
    for (key, value) in &report.meta {
        doc.insert((*key).into(), value.clone());
    }
    let rows = report
        .rows
        .iter()
        .map(|row| {
            let obj: Map<String, Value> =
                report.columns.iter().zip(row).map(|(c, v)| ((*c).to_string(), v.clone())).collect();
            Value::Object(obj)
        })
        .collect();
    doc.insert("rows".into(), Value::Array(rows));
    let mut text = serde_json::to_string_pretty(&Value::Object(doc))?;
    text.push('\n');
    Ok(text)
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn csv(report: &Report) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&report.columns)?;
    for row in &report.rows {
        w.write_record(row.iter().map(cell))?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}
