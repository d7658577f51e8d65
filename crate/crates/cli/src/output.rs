//! Rendering command results as JSON, CSV or text.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{Map, Number, Value};

use crate::number::fmt17;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Num(f64),
    Int(u64),
    Str(String),
    Bool(bool),
    Null,
}

impl Field {
    fn json(&self) -> Value {
        match self {
            Field::Num(v) if v.is_finite() => Value::Number(
                fmt17(*v)
                    .parse::<Number>()
                    .expect("formatted float is valid JSON"),
            ),
            Field::Num(_) | Field::Null => Value::Null,
            Field::Int(n) => Value::Number((*n).into()),
            Field::Str(s) => Value::String(s.clone()),
            Field::Bool(b) => Value::Bool(*b),
        }
    }

    fn text(&self) -> String {
        match self {
            Field::Num(v) => fmt17(*v),
            Field::Int(n) => n.to_string(),
            Field::Str(s) => s.clone(),
            Field::Bool(b) => b.to_string(),
            Field::Null => String::new(),
        }
    }
}

impl From<f64> for Field {
    fn from(v: f64) -> Self {
        Field::Num(v)
    }
}

impl From<&str> for Field {
    fn from(s: &str) -> Self {
        Field::Str(s.to_string())
    }
}

impl From<String> for Field {
    fn from(s: String) -> Self {
        Field::Str(s)
    }
}

impl From<usize> for Field {
    fn from(n: usize) -> Self {
        Field::Int(n as u64)
    }
}

impl From<bool> for Field {
    fn from(b: bool) -> Self {
        Field::Bool(b)
    }
}

impl<T: Into<Field>> From<Option<T>> for Field {
    fn from(v: Option<T>) -> Self {
        v.map(Into::into).unwrap_or(Field::Null)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub name: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Field>>,
}

impl Table {
    pub fn new(name: &'static str, columns: &[&'static str]) -> Self {
        Table {
            name,
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Field>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// Summary fields plus optional tables. JSON nests the tables as arrays of
/// objects; CSV writes the first table, or the summary as a single row when
/// there is no table; text prints everything.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Output {
    pub summary: Vec<(&'static str, Field)>,
    pub tables: Vec<Table>,
}

impl Output {
    pub fn field(mut self, key: &'static str, v: impl Into<Field>) -> Self {
        self.summary.push((key, v.into()));
        self
    }

    pub fn table(mut self, t: Table) -> Self {
        self.tables.push(t);
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.json(),
            Format::Csv => self.csv(),
            Format::Text => self.text(),
        }
    }

    fn json(&self) -> String {
        let mut obj = Map::new();
        for (k, v) in &self.summary {
            obj.insert((*k).to_string(), v.json());
        }
        for t in &self.tables {
            let rows = t
                .rows
                .iter()
                .map(|r| {
                    Value::Object(
                        t.columns
                            .iter()
                            .zip(r)
                            .map(|(c, f)| ((*c).to_string(), f.json()))
                            .collect(),
                    )
                })
                .collect();
            obj.insert(t.name.to_string(), Value::Array(rows));
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(obj)).expect("JSON value");
        s.push('\n');
        s
    }

    fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let write = |w: &mut csv::Writer<Vec<u8>>, header: Vec<&str>, rows: Vec<Vec<String>>| {
            w.write_record(header).expect("in-memory write");
            for r in rows {
                w.write_record(r).expect("in-memory write");
            }
        };
        match self.tables.first() {
            Some(t) => write(
                &mut w,
                t.columns.clone(),
                t.rows
                    .iter()
                    .map(|r| r.iter().map(Field::text).collect())
                    .collect(),
            ),
            None => write(
                &mut w,
                self.summary.iter().map(|(k, _)| *k).collect(),
                vec![self.summary.iter().map(|(_, v)| v.text()).collect()],
            ),
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8 CSV")
    }

    fn text(&self) -> String {
        let mut s = String::new();
        let width = self.summary.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in &self.summary {
            let _ = writeln!(s, "{k:<width$}  {}", v.text());
        }
        for t in &self.tables {
            let cells: Vec<Vec<String>> = t
                .rows
                .iter()
                .map(|r| r.iter().map(Field::text).collect())
                .collect();
            let widths: Vec<usize> = t
                .columns
                .iter()
                .enumerate()
                .map(|(i, c)| cells.iter().map(|r| r[i].len()).fold(c.len(), usize::max))
                .collect();
            let line = |items: Vec<&str>| {
                items
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            };
            if !s.is_empty() {
                s.push('\n');
            }
            let _ = writeln!(s, "{}:", t.name);
            let _ = writeln!(s, "{}", line(t.columns.clone()));
            for r in &cells {
                let _ = writeln!(s, "{}", line(r.iter().map(String::as_str).collect()));
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Output {
        let mut t = Table::new("rows", &["i", "value"]);
        t.push(vec![0usize.into(), 0.25.into()]);
        t.push(vec![1usize.into(), f64::NAN.into()]);
        Output::default()
            .field("count", 2usize)
            .field("ok", true)
            .table(t)
    }

    #[test]
    fn json_keeps_seventeen_digits_and_nulls_non_finite() {
        let s = sample().render(Format::Json);
        assert!(s.contains("2.5000000000000000e-1"), "{s}");
        let v: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["count"], 2);
        assert!(v["rows"][1]["value"].is_null());
    }

    #[test]
    fn csv_writes_the_first_table() {
        let s = sample().render(Format::Csv);
        assert_eq!(s, "i,value\n0,2.5000000000000000e-1\n1,nan\n");
        let summary_only = Output::default().field("a", 1.0).field("b", "x");
        assert_eq!(
            summary_only.render(Format::Csv),
            "a,b\n1.0000000000000000e0,x\n"
        );
    }

    #[test]
    fn text_lists_fields_and_tables() {
        let s = sample().render(Format::Text);
        assert!(s.starts_with("count  2\nok     true\n"), "{s}");
        assert!(
            s.contains("rows:\ni  value\n0  2.5000000000000000e-1\n"),
            "{s}"
        );
    }
}
