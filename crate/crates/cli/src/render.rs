//! Plain-text rendering of command results: nested objects become indented
//! key/value blocks and arrays of objects become aligned tables.

use serde_json::Value;

use crate::output::CommandResult;

pub fn pretty(r: &CommandResult) -> String {
    let mut out = String::new();
    match &r.error {
        None => out.push_str(&format!("{}: ok\n", r.command)),
        Some(e) => {
            let at = match (e.line, e.column) {
                (Some(l), Some(c)) => format!(" at line {l}, column {c}"),
                _ => String::new(),
            };
            out.push_str(&format!("{}: error [{}]{at}: {}\n", r.command, e.kind, e.message));
        }
    }
    if !r.payload.is_null() {
        block(&r.payload, 0, &mut out);
    }
    for d in &r.diagnostics {
        if r.error.is_none() || d.level != "error" {
            out.push_str(&format!("{}: {}\n", d.level, d.message));
        }
    }
    out.trim_end().to_string()
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) => {
            let parts: Option<Vec<String>> = items.iter().map(scalar).collect();
            parts.map(|p| format!("({})", p.join(",")))
        }
        Value::Object(_) => None,
    }
}

fn block(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    let Value::Object(map) = v else {
        out.push_str(&format!("{pad}{}\n", scalar(v).unwrap_or_default()));
        return;
    };
    for (k, val) in map {
        if let Some(s) = scalar(val) {
            out.push_str(&format!("{pad}{k}: {s}\n"));
        } else if let Some(t) = table(val) {
            out.push_str(&format!("{pad}{k}:\n"));
            for line in t {
                out.push_str(&format!("{pad}  {line}\n"));
            }
        } else if let Value::Array(items) = val {
            out.push_str(&format!("{pad}{k}:\n"));
            for (i, item) in items.iter().enumerate() {
                out.push_str(&format!("{pad}  [{i}]\n"));
                block(item, indent + 4, out);
            }
        } else {
            out.push_str(&format!("{pad}{k}:\n"));
            block(val, indent + 2, out);
        }
    }
}

/// An array of objects whose fields are all scalars, as aligned rows.
fn table(v: &Value) -> Option<Vec<String>> {
    let Value::Array(items) = v else { return None };
    let first = items.first()?.as_object()?;
    let keys: Vec<&String> = first.keys().collect();
    let mut rows = vec![keys.iter().map(|k| k.to_string()).collect::<Vec<_>>()];
    for item in items {
        let obj = item.as_object()?;
        if obj.len() != keys.len() {
            return None;
        }
        let row: Option<Vec<String>> = keys.iter().map(|k| obj.get(*k).and_then(scalar)).collect();
        rows.push(row?);
    }
    let widths: Vec<usize> = (0..keys.len()).map(|j| rows.iter().map(|r| r[j].chars().count()).max().unwrap()).collect();
    Some(
        rows.iter()
            .map(|r| {
                r.iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            })
            .collect(),
    )
}
