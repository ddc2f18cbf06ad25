//! Tabular results and their CSV / JSON renderings.
//!
//! Reals are written with 17 significant digits in both formats, so a CSV
//! file and a JSON file of the same run carry the same numeric text.

use std::str::FromStr;

use serde_json::{Map, Number, Value};

use crate::defaults::DEFAULTS_VERSION;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Bool(bool),
    Text(String),
    Empty,
}

impl Cell {
    pub fn opt(value: Option<f64>) -> Self {
        value.map_or(Cell::Empty, Cell::Num)
    }

    pub fn count(value: usize) -> Self {
        Cell::Int(i64::try_from(value).unwrap_or(i64::MAX))
    }

    pub fn text(value: impl Into<String>) -> Self {
        Cell::Text(value.into())
    }

    fn csv_field(&self) -> String {
        match self {
            Cell::Num(x) => format_real(*x).unwrap_or_default(),
            Cell::Int(i) => i.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn json_value(&self) -> Value {
        match self {
            Cell::Num(x) => match format_real(*x) {
                Some(text) => Value::Number(Number::from_str(&text).expect("formatted real is a JSON number")),
                None => Value::Null,
            },
            Cell::Int(i) => Value::from(*i),
            Cell::Bool(b) => Value::Bool(*b),
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Empty => Value::Null,
        }
    }
}

/// `x` with 17 significant digits in exponent form with an explicit exponent
/// sign (`3.0000000000000000e+0`); `None` for NaN and infinities.
pub fn format_real(x: f64) -> Option<String> {
    if !x.is_finite() {
        return None;
    }
    let text = format!("{x:.16e}");
    Some(match text.split_once('e') {
        Some((mantissa, exponent)) if !exponent.starts_with('-') => format!("{mantissa}e+{exponent}"),
        _ => text,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub command: &'static str,
    pub parameters: Vec<(&'static str, Cell)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    /// Run-level figures (maxima, pass counts) written to stderr as JSON.
    pub summary: Vec<(&'static str, Cell)>,
}

impl Report {
    pub fn new(command: &'static str, columns: &[&'static str]) -> Self {
        Self {
            command,
            columns: columns.to_vec(),
            ..Self::default()
        }
    }

    pub fn param(&mut self, name: &'static str, value: Cell) {
        self.parameters.push((name, value));
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len(), "row width for {}", self.command);
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> Result<Vec<u8>, csv::Error> {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => {
                let mut text = serde_json::to_string_pretty(&self.to_json()).expect("JSON values serialize");
                text.push('\n');
                Ok(text.into_bytes())
            }
        }
    }

    fn to_csv(&self) -> Result<Vec<u8>, csv::Error> {
        let mut writer = csv::WriterBuilder::new()
            .terminator(csv::Terminator::CRLF)
            .from_writer(Vec::new());
        writer.write_record(&self.columns)?;
        for row in &self.rows {
            writer.write_record(row.iter().map(Cell::csv_field))?;
        }
        writer.into_inner().map_err(|e| e.into_error().into())
    }

    pub fn to_json(&self) -> Value {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let object: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(name, cell)| ((*name).to_string(), cell.json_value()))
                    .collect();
                Value::Object(object)
            })
            .collect();
        let mut doc = Map::new();
        doc.insert("command".into(), Value::String(self.command.into()));
        doc.insert("defaults_version".into(), Value::from(DEFAULTS_VERSION));
        doc.insert("parameters".into(), pairs_to_json(&self.parameters));
        doc.insert("rows".into(), Value::Array(rows));
        Value::Object(doc)
    }

    pub fn summary_json(&self) -> Option<Value> {
        if self.summary.is_empty() {
            return None;
        }
        let mut doc = Map::new();
        doc.insert("command".into(), Value::String(self.command.into()));
        doc.insert("summary".into(), pairs_to_json(&self.summary));
        Some(Value::Object(doc))
    }
}

fn pairs_to_json(pairs: &[(&'static str, Cell)]) -> Value {
    Value::Object(pairs.iter().map(|(k, v)| ((*k).to_string(), v.json_value())).collect())
}
