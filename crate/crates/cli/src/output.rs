//! Output envelope and the json / csv / text renderings.

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Rows for CSV output.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Table {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push<S: ToString>(&mut self, row: impl IntoIterator<Item = S>) {
        self.rows.push(row.into_iter().map(|s| s.to_string()).collect());
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for line in std::iter::once(&self.header).chain(&self.rows) {
            let cells: Vec<String> = line.iter().map(|c| csv_cell(c)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Everything a subcommand produced, before rendering.
#[derive(Debug, Clone)]
pub struct Output {
    pub command: &'static str,
    pub parameters: Map<String, Value>,
    pub result: Value,
    pub table: Table,
    pub text: String,
}

/// The single JSON object printed for `--format json`.
#[derive(Debug, Serialize)]
pub struct OutputEnvelope<'a> {
    pub command: &'a str,
    pub parameters: &'a Map<String, Value>,
    pub result: &'a Value,
    pub elapsed_ms: u64,
    pub version: &'static str,
}

impl Output {
    pub fn envelope(&self, elapsed_ms: u64) -> OutputEnvelope<'_> {
        OutputEnvelope {
            command: self.command,
            parameters: &self.parameters,
            result: &self.result,
            elapsed_ms,
            version: env!("CARGO_PKG_VERSION"),
        }
    }

    pub fn render(&self, format: Format, elapsed_ms: u64) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.envelope(elapsed_ms))
                    .expect("json values always serialize");
                s.push('\n');
                s
            }
            Format::Csv => self.table.to_csv(),
            Format::Text => {
                let mut s = self.text.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                s
            }
        }
    }
}

/// Builds a parameter map from `(name, value)` pairs.
#[macro_export]
macro_rules! params {
    ($($k:expr => $v:expr),* $(,)?) => {{
        let mut m = serde_json::Map::new();
        $( m.insert($k.to_string(), serde_json::json!($v)); )*
        m
    }};
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn csv_quotes_when_needed() {
        let mut t = Table::new(["a", "b"]);
        t.push(["1", "x,y"]);
        assert_eq!(t.to_csv(), "a,b\n1,\"x,y\"\n");
    }

    #[test]
    fn envelope_has_exactly_five_fields() {
        let out = Output {
            command: "runs",
            parameters: params! { "word" => "aa" },
            result: json!({"trl": 2}),
            table: Table::default(),
            text: "trl 2".into(),
        };
        let v: Value = serde_json::from_str(&out.render(Format::Json, 3)).unwrap();
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        assert_eq!(
            keys,
            ["command", "elapsed_ms", "parameters", "result", "version"]
        );
        assert_eq!(out.render(Format::Text, 0), "trl 2\n");
    }
}
