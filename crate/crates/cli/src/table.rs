//! Tabular output shared by every subcommand.

use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Int(u64),
    Real(f64),
    Blank,
}

/// Rounds `x` to `digits` significant digits and prints the shortest
/// exponent form that reads back to the rounded value.
pub fn format_real(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{:.*e}", digits - 1, x)
        .parse()
        .expect("float formatting round-trips");
    // drop the sign of zero so output does not depend on how a zero was reached
    let rounded = if rounded == 0.0 { 0.0 } else { rounded };
    format!("{rounded:e}")
}

#[derive(Debug, Clone)]
pub struct Table {
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
    /// Key/value pairs written after the rows.
    summary: Vec<(&'static str, Cell)>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Table {
            columns: columns.to_vec(),
            rows: Vec::new(),
            summary: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn summarize(&mut self, key: &'static str, value: Cell) {
        self.summary.push((key, value));
    }

    fn text(cell: Cell, digits: usize) -> String {
        match cell {
            Cell::Int(v) => v.to_string(),
            Cell::Real(v) => format_real(v, digits),
            Cell::Blank => String::new(),
        }
    }

    fn json(cell: Cell, digits: usize) -> Value {
        match cell {
            Cell::Int(v) => Value::from(v),
            Cell::Real(v) if v.is_finite() => {
                let rounded: f64 = format_real(v, digits)
                    .parse()
                    .expect("formatted float parses");
                Value::from(rounded)
            }
            Cell::Real(_) | Cell::Blank => Value::Null,
        }
    }

    pub fn to_csv(&self, digits: usize) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let fields: Vec<String> = row.iter().map(|&c| Self::text(c, digits)).collect();
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        if !self.summary.is_empty() {
            let pairs: Vec<String> = self
                .summary
                .iter()
                .map(|&(k, v)| format!("{k}={}", Self::text(v, digits)))
                .collect();
            out.push_str("# ");
            out.push_str(&pairs.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self, digits: usize) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(&name, &c)| (name.to_string(), Self::json(c, digits)))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let mut doc = Map::new();
        doc.insert("columns".into(), Value::from(self.columns.clone()));
        doc.insert("rows".into(), Value::Array(rows));
        if !self.summary.is_empty() {
            let summary: Map<String, Value> = self
                .summary
                .iter()
                .map(|&(k, v)| (k.to_string(), Self::json(v, digits)))
                .collect();
            doc.insert("summary".into(), Value::Object(summary));
        }
        let mut text = serde_json::to_string_pretty(&Value::Object(doc)).expect("json encodes");
        text.push('\n');
        text
    }
}
