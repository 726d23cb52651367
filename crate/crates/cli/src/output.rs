//! Rendering of command results as plain text, csv, or json.
//!
//! Every command produces a [`Table`]: named columns, rows of fields, and the
//! lines it prints in plain mode. Integers are always rendered in full
//! decimal; csv quotes every field and json carries integers as strings.

use std::io::{self, Write};

use clap::ValueEnum;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Plain,
    Csv,
    Json,
}

/// One cell of a result row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Field {
    Text(String),
    Bool(bool),
    List(Vec<String>),
}

impl Field {
    fn flat(&self) -> String {
        match self {
            Field::Text(s) => s.clone(),
            Field::Bool(b) => b.to_string(),
            Field::List(items) => items.join(" "),
        }
    }

    fn json(&self) -> Value {
        match self {
            Field::Text(s) => Value::String(s.clone()),
            Field::Bool(b) => Value::Bool(*b),
            Field::List(items) => items.iter().cloned().map(Value::String).collect(),
        }
    }
}

impl<T: ToString> From<T> for Field {
    fn from(v: T) -> Self {
        Field::Text(v.to_string())
    }
}

/// Tabular command output plus the parameters that produced it.
#[derive(Debug, Clone)]
pub struct Table {
    pub command: &'static str,
    pub params: Vec<(&'static str, String)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Field>>,
    pub plain: Vec<String>,
}

impl Table {
    pub fn new(command: &'static str, columns: Vec<&'static str>) -> Self {
        Self {
            command,
            params: Vec::new(),
            columns,
            rows: Vec::new(),
            plain: Vec::new(),
        }
    }

    pub fn param(mut self, name: &'static str, value: impl ToString) -> Self {
        self.params.push((name, value.to_string()));
        self
    }

    pub fn push(&mut self, row: Vec<Field>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// Adds a line to the plain-text rendering.
    pub fn line(&mut self, line: impl Into<String>) {
        self.plain.push(line.into());
    }

    pub fn write(&self, format: OutputFormat, out: &mut impl Write) -> io::Result<()> {
        match format {
            OutputFormat::Plain => self.write_plain(out),
            OutputFormat::Csv => self.write_csv(out),
            OutputFormat::Json => self.write_json(out),
        }
    }

    fn write_plain(&self, out: &mut impl Write) -> io::Result<()> {
        for line in &self.plain {
            writeln!(out, "{line}")?;
        }
        Ok(())
    }

    fn write_csv(&self, out: &mut impl Write) -> io::Result<()> {
        let mut w = csv::WriterBuilder::new()
            .quote_style(csv::QuoteStyle::Always)
            .from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Field::flat))?;
        }
        w.flush()
    }

    fn write_json(&self, out: &mut impl Write) -> io::Result<()> {
        let params: Map<String, Value> = self
            .params
            .iter()
            .map(|(k, v)| (k.to_string(), Value::String(v.clone())))
            .collect();
        let results: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, v)| (c.to_string(), v.json()))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let doc = json!({
            "command": self.command,
            "params": params,
            "results": results,
        });
        serde_json::to_writer_pretty(&mut *out, &doc)?;
        writeln!(out)
    }
}
