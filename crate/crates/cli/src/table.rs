//! Tabular output as CSV (header row) or JSON (array of objects), with
//! every float printed to 17 significant digits.

use serde_json::{Map, Value};
use std::io::Write;

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
    /// No value; the row's status column says why.
    Empty,
}

pub fn fmt_f64(x: f64) -> String {
    let s = format!("{x:.16e}");
    // signed exponent, as serde_json writes it
    match s.split_once('e') {
        Some((mant, exp)) if !exp.starts_with('-') => format!("{mant}e+{exp}"),
        _ => s,
    }
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(x) => fmt_f64(*x),
            Cell::Int(k) => k.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(x) if x.is_finite() => serde_json::from_str(&fmt_f64(*x)).expect("formatted float is a JSON number"),
            Cell::Num(_) | Cell::Empty => Value::Null,
            Cell::Int(k) => Value::from(*k),
            Cell::Text(s) => Value::from(s.as_str()),
        }
    }
}

/// A float cell, or an empty one for a non-finite value so that no NaN is
/// ever printed.
pub fn num(x: f64) -> Cell {
    if x.is_finite() {
        Cell::Num(x)
    } else {
        Cell::Empty
    }
}

#[derive(Clone, Debug, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table { columns: columns.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|r| Value::Object(self.columns.iter().cloned().zip(r.iter().map(Cell::json)).collect::<Map<_, _>>()))
                .collect(),
        )
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
        match format {
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.columns)?;
                for r in &self.rows {
                    w.write_record(r.iter().map(Cell::csv))?;
                }
                w.flush()
            }
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.to_json())?;
                writeln!(out)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits() {
        assert_eq!(fmt_f64(0.1), "1.0000000000000001e-1");
        assert_eq!(fmt_f64(-2.5), "-2.5000000000000000e+0");
        assert_eq!(fmt_f64(0.1).parse::<f64>().unwrap(), 0.1);
        let mut t = Table::new(&["x", "value"]);
        t.push(vec![num(0.1), num(f64::NAN)]);
        let mut buf = Vec::new();
        t.write(Format::Json, &mut buf).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert!(s.contains("1.0000000000000001e-1") && s.contains("null"), "{s}");
    }
}
