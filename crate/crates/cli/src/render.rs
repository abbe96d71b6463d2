//! Output rendering: JSON is the native format; CSV covers the flat
//! numeric reports (analyze, spectrum, motion); text is a generic
//! path = value flattening of the JSON document.

use serde_json::Value;

/// Flattens a JSON document into `path = value` lines for terminal reading.
pub fn to_text(doc: &Value) -> String {
    let mut out = String::new();
    flatten("", doc, &mut out);
    out
}

fn is_scalar_array(values: &[Value]) -> bool {
    values
        .iter()
        .all(|v| !matches!(v, Value::Object(_) | Value::Array(_)))
}

fn flatten(path: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (key, val) in map {
                let sub = if path.is_empty() {
                    key.clone()
                } else {
                    format!("{path}.{key}")
                };
                flatten(&sub, val, out);
            }
        }
        Value::Array(items) if is_scalar_array(items) => {
            let rendered: Vec<String> = items.iter().map(render_scalar).collect();
            out.push_str(&format!("{path} = [{}]\n", rendered.join(", ")));
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                flatten(&format!("{path}[{i}]"), item, out);
            }
        }
        scalar => out.push_str(&format!("{path} = {}\n", render_scalar(scalar))),
    }
}

fn render_scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// CSV escape: quote fields containing commas, quotes, or newlines.
fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Emits one CSV table from a header and rows of stringified fields.
pub fn csv_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        let escaped: Vec<String> = row.iter().map(|f| csv_field(f)).collect();
        out.push_str(&escaped.join(","));
        out.push('\n');
    }
    out
}
