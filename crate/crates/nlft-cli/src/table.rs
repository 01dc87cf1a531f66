//! Table rendering: one schema, two encodings (CSV and JSON), both
//! byte-deterministic for a fixed run configuration.
//!
//! CSV: comma separators, `.` decimal point, floats at 17 significant
//! digits, counts in full decimal; footer checksums as trailing `#` comment
//! lines. JSON mirrors the same schema; counts that exceed 2^53 are encoded
//! as strings so they round-trip exactly.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone)]
pub enum Cell {
    /// Exact non-negative count.
    Count(BigUint),
    Int(i64),
    Float(f64),
    Bool(bool),
}

impl Cell {
    fn to_csv_field(&self) -> String {
        match self {
            Cell::Count(v) => v.to_string(),
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => format!("{v:.16e}"),
            Cell::Bool(v) => v.to_string(),
        }
    }

    fn to_json_value(&self) -> Value {
        match self {
            Cell::Count(v) => match v.to_u64() {
                // Above 2^53 an f64-backed JSON number would silently round.
                Some(small) if small < (1u64 << 53) => json!(small),
                _ => Value::String(v.to_string()),
            },
            Cell::Int(v) => json!(v),
            Cell::Float(v) => json!(v),
            Cell::Bool(v) => json!(v),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Table {
    pub command: String,
    pub params: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub footers: Vec<(String, Cell)>,
}

impl Table {
    pub fn new(command: &str, columns: &[&str]) -> Self {
        Self {
            command: command.to_string(),
            params: Vec::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            footers: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.params.push((key.to_string(), value.to_string()));
    }

    pub fn push_row(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width mismatch");
        self.rows.push(row);
    }

    pub fn footer(&mut self, key: &str, value: Cell) {
        self.footers.push((key.to_string(), value));
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let fields: Vec<String> = row.iter().map(Cell::to_csv_field).collect();
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        for (key, value) in &self.footers {
            out.push_str(&format!("# {key},{}\n", value.to_csv_field()));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut params = Map::new();
        for (k, v) in &self.params {
            params.insert(k.clone(), Value::String(v.clone()));
        }
        let mut footers = Map::new();
        for (k, v) in &self.footers {
            footers.insert(k.clone(), v.to_json_value());
        }
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| Value::Array(row.iter().map(Cell::to_json_value).collect()))
            .collect();
        let doc = json!({
            "command": self.command,
            "params": Value::Object(params),
            "columns": self.columns,
            "rows": rows,
            "footers": Value::Object(footers),
        });
        let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
        text.push('\n');
        text
    }

    pub fn render(&self, format: crate::OutputFormat) -> String {
        match format {
            crate::OutputFormat::Csv => self.to_csv(),
            crate::OutputFormat::Json => self.to_json(),
        }
    }
}
