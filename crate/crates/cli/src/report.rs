use std::fmt::Display;

use clap::ValueEnum;
use serde_json::{Map, Value};

pub const SCHEMA: &str = "autfree/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Markdown,
}

/// A command result in every output form. Field order in `data` is the
/// emitted order.
pub struct Report {
    data: Map<String, Value>,
    text: Option<String>,
    csv: Option<Vec<Vec<String>>>,
    markdown: Option<String>,
}

impl Report {
    pub fn new(command: &str, data: Value) -> Self {
        let mut map = Map::new();
        map.insert("schema".into(), SCHEMA.into());
        map.insert("command".into(), command.into());
        if let Value::Object(m) = data {
            map.extend(m);
        }
        Report { data: map, text: None, csv: None, markdown: None }
    }

    pub fn text(mut self, s: String) -> Self {
        self.text = Some(s);
        self
    }

    /// Rows including the header row.
    pub fn csv(mut self, rows: Vec<Vec<String>>) -> Self {
        self.csv = Some(rows);
        self
    }

    pub fn markdown(mut self, s: String) -> Self {
        self.markdown = Some(s);
        self
    }

    /// Top-level fields other than the schema, scalars as-is and the rest as compact JSON.
    fn fields(&self) -> Vec<Vec<String>> {
        self.data
            .iter()
            .filter(|(k, _)| *k != "schema")
            .map(|(k, v)| vec![k.clone(), scalar(v)])
            .collect()
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => json_string(&Value::Object(self.data.clone())),
            Format::Text => match &self.text {
                Some(t) => ensure_newline(t),
                None => self.fields().iter().map(|r| format!("{}: {}\n", r[0], r[1])).collect(),
            },
            Format::Csv => {
                let rows = match &self.csv {
                    Some(r) => r.clone(),
                    None => {
                        let mut r = vec![vec!["field".to_string(), "value".to_string()]];
                        r.extend(self.fields());
                        r
                    }
                };
                csv_string(&rows)
            }
            Format::Markdown => match &self.markdown {
                Some(m) => ensure_newline(m),
                None => {
                    let mut rows = vec![vec!["field".to_string(), "value".to_string()]];
                    rows.extend(self.fields());
                    markdown_table(&rows, false)
                }
            },
        }
    }
}

pub fn json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn ensure_newline(s: &str) -> String {
    if s.ends_with('\n') {
        s.to_string()
    } else {
        format!("{s}\n")
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

pub fn csv_string(rows: &[Vec<String>]) -> String {
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

/// First row is the header. `numeric` right-aligns every column but the first.
pub fn markdown_table(rows: &[Vec<String>], numeric: bool) -> String {
    let Some(head) = rows.first() else { return String::new() };
    let esc = |s: &String| s.replace('|', "\\|");
    let line = |r: &Vec<String>| format!("| {} |\n", r.iter().map(esc).collect::<Vec<_>>().join(" | "));
    let mut out = line(head);
    let rule: Vec<&str> = (0..head.len()).map(|k| if numeric && k > 0 { "---:" } else { "---" }).collect();
    out.push_str(&format!("| {} |\n", rule.join(" | ")));
    for r in &rows[1..] {
        out.push_str(&line(r));
    }
    out
}

/// Whitespace-aligned table for text output.
pub fn text_table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let width: Vec<usize> =
        (0..cols).map(|k| rows.iter().filter_map(|r| r.get(k)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(k, s)| if k == 0 { format!("{s:<w$}", w = width[k]) } else { format!("{s:>w$}", w = width[k]) })
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// An integer as a JSON number when it fits, otherwise as a string.
pub fn int(n: impl Display) -> Value {
    let s = n.to_string();
    match s.parse::<i64>() {
        Ok(v) => Value::from(v),
        Err(_) => Value::String(s),
    }
}

pub fn strings<T: Display>(xs: impl IntoIterator<Item = T>) -> Vec<String> {
    xs.into_iter().map(|x| x.to_string()).collect()
}
