//! Rendering of flat records as aligned text, JSON or CSV.

use std::io::{self, Write};

use clap::ValueEnum;

/// Output format selected with `--format`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

/// How human output lays out records.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Layout {
    /// `key  value` lines, records separated by a blank line.
    Block,
    /// One row per record under a header of keys.
    Table,
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Value {
    Num(f64),
    Int(u64),
    Text(String),
    Bool(bool),
    Null,
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Num(x)
    }
}

impl From<Option<f64>> for Value {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Value::Null, Value::Num)
    }
}

impl From<usize> for Value {
    fn from(n: usize) -> Self {
        Value::Int(n as u64)
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_owned())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

/// An ordered list of `snake_case` keys and values.
#[derive(Debug, Clone, Default, PartialEq)]
pub(crate) struct Record(Vec<(&'static str, Value)>);

impl Record {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn push(&mut self, key: &'static str, value: impl Into<Value>) -> &mut Self {
        self.0.push((key, value.into()));
        self
    }

    fn keys(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.0.iter().map(|(k, _)| *k)
    }
}

/// Twelve significant digits, fixed notation for moderate magnitudes.
pub(crate) fn human_number(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".to_owned();
    }
    let exponent = x.abs().log10().floor() as i32;
    if (-5..12).contains(&exponent) {
        format!("{:.*}", (11 - exponent) as usize, x)
    } else {
        format!("{x:.11e}")
    }
}

/// Seventeen significant digits, enough to round-trip any `f64`.
pub(crate) fn machine_number(x: f64) -> Option<String> {
    x.is_finite().then(|| format!("{x:.16e}"))
}

fn human_value(v: &Value) -> String {
    match v {
        Value::Num(x) => human_number(*x),
        Value::Int(n) => n.to_string(),
        Value::Text(s) => s.clone(),
        Value::Bool(b) => if *b { "yes" } else { "no" }.to_owned(),
        Value::Null => "indet.".to_owned(),
    }
}

fn json_value(v: &Value) -> String {
    match v {
        Value::Num(x) => machine_number(*x).unwrap_or_else(|| "null".to_owned()),
        Value::Int(n) => n.to_string(),
        Value::Text(s) => serde_json::to_string(s).expect("strings always serialize"),
        Value::Bool(b) => b.to_string(),
        Value::Null => "null".to_owned(),
    }
}

fn csv_value(v: &Value) -> String {
    match v {
        Value::Num(x) => machine_number(*x).unwrap_or_default(),
        Value::Int(n) => n.to_string(),
        Value::Text(s) => s.clone(),
        Value::Bool(b) => b.to_string(),
        Value::Null => String::new(),
    }
}

pub(crate) fn render(
    out: &mut dyn Write,
    records: &[Record],
    format: Format,
    layout: Layout,
) -> io::Result<()> {
    match format {
        Format::Human => match layout {
            Layout::Block => render_blocks(out, records),
            Layout::Table => render_table(out, records),
        },
        Format::Json => render_json(out, records),
        Format::Csv => render_csv(out, records),
    }
}

fn render_blocks(out: &mut dyn Write, records: &[Record]) -> io::Result<()> {
    for (i, r) in records.iter().enumerate() {
        if i > 0 {
            writeln!(out)?;
        }
        let width = r.keys().map(str::len).max().unwrap_or(0);
        for (k, v) in &r.0 {
            writeln!(out, "{k:<width$}  {}", human_value(v))?;
        }
    }
    Ok(())
}

fn render_table(out: &mut dyn Write, records: &[Record]) -> io::Result<()> {
    let Some(first) = records.first() else {
        return Ok(());
    };
    let header: Vec<&str> = first.keys().collect();
    let cells: Vec<Vec<String>> = records
        .iter()
        .map(|r| r.0.iter().map(|(_, v)| human_value(v)).collect())
        .collect();
    let widths: Vec<usize> = header
        .iter()
        .enumerate()
        .map(|(j, h)| {
            cells
                .iter()
                .map(|row| row[j].chars().count())
                .chain([h.len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |row: Vec<&str>| {
        row.iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_owned()
    };
    writeln!(out, "{}", line(header.clone()))?;
    for row in &cells {
        writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
    }
    Ok(())
}

fn render_json(out: &mut dyn Write, records: &[Record]) -> io::Result<()> {
    if records.is_empty() {
        return writeln!(out, "[]");
    }
    writeln!(out, "[")?;
    for (i, r) in records.iter().enumerate() {
        let fields: Vec<String> =
            r.0.iter()
                .map(|(k, v)| format!("\"{k}\": {}", json_value(v)))
                .collect();
        let sep = if i + 1 < records.len() { "," } else { "" };
        writeln!(out, "  {{{}}}{sep}", fields.join(", "))?;
    }
    writeln!(out, "]")
}

fn render_csv(out: &mut dyn Write, records: &[Record]) -> io::Result<()> {
    let Some(first) = records.first() else {
        return Ok(());
    };
    let mut w = csv::Writer::from_writer(out);
    w.write_record(first.keys())?;
    for r in records {
        w.write_record(r.0.iter().map(|(_, v)| csv_value(v)))?;
    }
    w.flush()
}
