//! Rendering of command results as JSON, CSV or plain text.

use std::io::Write;

use friable_core::decomp::DecompositionCertificate;
use friable_core::SortedIntSet;
use serde_json::Value;

use crate::config::Format;
use crate::CliError;

pub enum Output {
    Set(SortedIntSet),
    Report(Value),
    /// A report whose CSV form is the certificate list.
    Certificates {
        report: Value,
        certificates: Vec<DecompositionCertificate>,
    },
}

impl Output {
    pub fn report<T: serde::Serialize>(value: &T) -> Self {
        Output::Report(serde_json::to_value(value).expect("reports serialize"))
    }

    pub fn render(&self, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
        match (self, format) {
            (Output::Set(s), Format::Json) => writeln!(out, "{}", serde_json::to_string(s)?)?,
            (Output::Set(s), Format::Text) => out.write_all(s.to_lines().as_bytes())?,
            (Output::Set(s), Format::Csv) => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(["n"])?;
                for n in s {
                    w.write_record([n.to_string()])?;
                }
                w.flush()?;
            }
            (Output::Report(v) | Output::Certificates { report: v, .. }, Format::Json) => {
                writeln!(out, "{}", serde_json::to_string(v)?)?
            }
            (Output::Report(v) | Output::Certificates { report: v, .. }, Format::Text) => write_text(v, out)?,
            (Output::Report(v), Format::Csv) => write_object_csv(v, out)?,
            (Output::Certificates { certificates, .. }, Format::Csv) => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(["b", "c", "mode", "verify_lo", "verify_hi"])?;
                for c in certificates {
                    w.write_record([
                        join(c.b.as_slice()),
                        join(c.c.as_slice()),
                        c.mode.to_string(),
                        c.verify_lo.to_string(),
                        c.verify_hi.to_string(),
                    ])?;
                }
                w.flush()?;
            }
        }
        Ok(())
    }
}

fn join(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            items.iter().map(scalar).collect::<Vec<_>>().join(" ")
        }
        other => other.to_string(),
    }
}

fn write_text(v: &Value, out: &mut dyn Write) -> Result<(), CliError> {
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                writeln!(out, "{k}: {}", scalar(val))?;
            }
        }
        Value::Array(items) => {
            for item in items {
                write_text(item, out)?;
                writeln!(out)?;
            }
        }
        other => writeln!(out, "{}", scalar(other))?,
    }
    Ok(())
}

/// One header row and one data row per object; arrays of objects give one
/// data row per element.
fn write_object_csv(v: &Value, out: &mut dyn Write) -> Result<(), CliError> {
    let rows: Vec<&serde_json::Map<String, Value>> = match v {
        Value::Object(map) => vec![map],
        Value::Array(items) => items.iter().filter_map(Value::as_object).collect(),
        _ => Vec::new(),
    };
    let mut w = csv::Writer::from_writer(out);
    if let Some(first) = rows.first() {
        w.write_record(first.keys())?;
        for row in rows {
            w.write_record(row.values().map(scalar))?;
        }
    }
    w.flush()?;
    Ok(())
}
