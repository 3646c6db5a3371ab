//! Report values and their two renderings.
//!
//! Every command produces one [`Report`]; `--json` serializes it with sorted
//! keys and exact scalar strings, and the default text mode renders the same
//! value as aligned tables. Neither form contains timestamps or other
//! run-dependent data, so repeated runs are byte-identical.

use serde_json::{Map, Value};

/// Version stamp included in every report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// One command's output: identification plus command-specific results.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: &'static str,
    /// Algebra identifier (builtin name or file path); `Null` for commands
    /// that take no algebra.
    pub algebra: Value,
    /// Field display form, e.g. `Q`, `Qi`, `GF(2)`; `Null` alongside a
    /// `Null` algebra.
    pub field: Value,
    pub results: Value,
}

impl Report {
    pub fn new(command: &'static str, algebra: Option<&str>, field: Option<&str>) -> Report {
        let wrap = |v: Option<&str>| match v {
            Some(s) => Value::String(s.to_string()),
            None => Value::Null,
        };
        Report {
            command,
            algebra: wrap(algebra),
            field: wrap(field),
            results: Value::Object(Map::new()),
        }
    }

    /// Key-sorted JSON with the fixed top-level keys `algebra`, `command`,
    /// `field`, `results`, `version`.
    pub fn to_json(&self) -> String {
        let mut top = Map::new();
        top.insert("algebra".to_string(), self.algebra.clone());
        top.insert("command".to_string(), Value::String(self.command.to_string()));
        top.insert("field".to_string(), self.field.clone());
        top.insert("results".to_string(), self.results.clone());
        top.insert("version".to_string(), Value::String(VERSION.to_string()));
        let mut text =
            serde_json::to_string_pretty(&Value::Object(top)).expect("reports serialize");
        text.push('\n');
        text
    }

    /// Aligned-table rendering of the same data.
    pub fn to_table(&self) -> String {
        let mut head = Map::new();
        head.insert("command".to_string(), Value::String(self.command.to_string()));
        head.insert("algebra".to_string(), self.algebra.clone());
        head.insert("field".to_string(), self.field.clone());
        head.insert("version".to_string(), Value::String(VERSION.to_string()));
        let mut out = String::new();
        render_object(&head, 0, &mut out);
        out.push('\n');
        render_value(&self.results, 0, &mut out);
        out
    }
}

fn char_len(s: &str) -> usize {
    s.chars().count()
}

fn pad_to(s: &str, width: usize) -> String {
    let mut t = s.to_string();
    for _ in char_len(s)..width {
        t.push(' ');
    }
    t
}

fn indent_str(indent: usize) -> String {
    " ".repeat(indent)
}

/// Text form of a leaf value, `None` for objects and arrays.
fn leaf_text(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".to_string()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn render_value(v: &Value, indent: usize, out: &mut String) {
    match v {
        Value::Object(map) => render_object(map, indent, out),
        Value::Array(items) => render_array(items, indent, out),
        leaf => {
            out.push_str(&indent_str(indent));
            out.push_str(&leaf_text(leaf).expect("leaf"));
            out.push('\n');
        }
    }
}

/// Leaf entries first as an aligned two-column block, then nested entries
/// under `key:` headers. Map iteration is key-sorted.
fn render_object(map: &Map<String, Value>, indent: usize, out: &mut String) {
    if map.is_empty() {
        out.push_str(&indent_str(indent));
        out.push_str("(empty)\n");
        return;
    }
    let key_width = map
        .iter()
        .filter(|(_, v)| leaf_text(v).is_some())
        .map(|(k, _)| char_len(k))
        .max()
        .unwrap_or(0);
    for (k, v) in map {
        if let Some(text) = leaf_text(v) {
            out.push_str(&indent_str(indent));
            out.push_str(&pad_to(k, key_width));
            out.push_str("  ");
            out.push_str(&text);
            out.push('\n');
        }
    }
    for (k, v) in map {
        if leaf_text(v).is_none() {
            out.push_str(&indent_str(indent));
            out.push_str(k);
            out.push_str(":\n");
            render_value(v, indent + 2, out);
        }
    }
}

/// Arrays of same-shaped leaf objects render as a column table; arrays of
/// leaves as one line each; anything else as indexed blocks.
fn render_array(items: &[Value], indent: usize, out: &mut String) {
    if items.is_empty() {
        out.push_str(&indent_str(indent));
        out.push_str("(none)\n");
        return;
    }
    if let Some(rows) = uniform_leaf_rows(items) {
        render_column_table(&rows, indent, out);
        return;
    }
    if items.iter().all(|v| leaf_text(v).is_some()) {
        for item in items {
            out.push_str(&indent_str(indent));
            out.push_str(&leaf_text(item).expect("leaf"));
            out.push('\n');
        }
        return;
    }
    for (i, item) in items.iter().enumerate() {
        out.push_str(&indent_str(indent));
        out.push_str(&format!("[{i}]\n"));
        render_value(item, indent + 2, out);
    }
}

/// `Some(rows)` when every element is an object with the same keys and only
/// leaf values; rows are (header, cell-text) pairs in key order.
fn uniform_leaf_rows(items: &[Value]) -> Option<Vec<Vec<(String, String)>>> {
    let mut rows = Vec::with_capacity(items.len());
    let mut keys: Option<Vec<&String>> = None;
    for item in items {
        let map = item.as_object()?;
        let item_keys: Vec<&String> = map.keys().collect();
        match &keys {
            None => keys = Some(item_keys),
            Some(k) if *k == item_keys => {}
            _ => return None,
        }
        let mut row = Vec::with_capacity(map.len());
        for (k, v) in map {
            row.push((k.clone(), leaf_text(v)?));
        }
        rows.push(row);
    }
    Some(rows)
}

fn render_column_table(rows: &[Vec<(String, String)>], indent: usize, out: &mut String) {
    let columns = rows[0].len();
    let mut widths: Vec<usize> = rows[0].iter().map(|(k, _)| char_len(k)).collect();
    for row in rows {
        for (j, (_, cell)) in row.iter().enumerate() {
            widths[j] = widths[j].max(char_len(cell));
        }
    }
    out.push_str(&indent_str(indent));
    for (j, (k, _)) in rows[0].iter().enumerate() {
        out.push_str(&pad_to(k, widths[j]));
        if j + 1 < columns {
            out.push_str("  ");
        }
    }
    out.push('\n');
    for row in rows {
        out.push_str(&indent_str(indent));
        for (j, (_, cell)) in row.iter().enumerate() {
            out.push_str(&pad_to(cell, widths[j]));
            if j + 1 < columns {
                out.push_str("  ");
            }
        }
        out.push('\n');
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn json_rendering_is_key_sorted_with_fixed_top_level() {
        let mut r = Report::new("check", Some("complex"), Some("Q"));
        r.results = json!({"zeta": 1, "alpha": "x"});
        let text = r.to_json();
        let alg = text.find("\"algebra\"").unwrap();
        let cmd = text.find("\"command\"").unwrap();
        let fld = text.find("\"field\"").unwrap();
        let res = text.find("\"results\"").unwrap();
        let ver = text.find("\"version\"").unwrap();
        assert!(alg < cmd && cmd < fld && fld < res && res < ver);
        assert!(text.find("\"alpha\"").unwrap() < text.find("\"zeta\"").unwrap());
        assert!(text.ends_with('\n'));
    }

    #[test]
    fn table_rendering_aligns_and_nests() {
        let mut r = Report::new("cohomology", Some("poly:2"), Some("Q"));
        r.results = json!({
            "ok": true,
            "degrees": [
                {"degree": 1, "h": 0},
                {"degree": 2, "h": 4}
            ],
            "notes": ["first", "second"],
            "witness": null
        });
        let table = r.to_table();
        assert!(table.contains("command  cohomology"));
        assert!(table.contains("ok       true"));
        assert!(table.contains("witness  -"));
        assert!(table.contains("degrees:\n  degree  h\n  1       0\n  2       4\n"));
        assert!(table.contains("notes:\n  first\n  second\n"));
    }

    #[test]
    fn heterogeneous_arrays_fall_back_to_indexed_blocks() {
        let mut r = Report::new("deform", Some("group:Z2"), Some("Q"));
        r.results = json!({"basis": [{"λ": "1"}, {"q": "2", "r": "-1"}]});
        let table = r.to_table();
        assert!(table.contains("[0]"));
        assert!(table.contains("λ  1"));
        assert!(table.contains("[1]"));
        assert!(table.contains("q  2"));
    }
}
