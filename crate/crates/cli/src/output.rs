use serde_json::{Map, Value};

use crate::args::Format;

/// Renders a report object as pretty JSON or `key = value` lines.
/// Arrays of objects print their length followed by indexed entries;
/// empty arrays named in `lists` print `0`.
pub fn render(value: &Value, format: Format, lists: &[&str]) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = String::new();
            if let Value::Object(map) = value {
                flatten(map, "", lists, &mut out);
            } else {
                push_line(&mut out, "value", &scalar(value));
            }
            out
        }
    }
}

fn push_line(out: &mut String, key: &str, value: &str) {
    out.push_str(key);
    out.push_str(" =");
    if !value.is_empty() {
        out.push(' ');
        out.push_str(value);
    }
    out.push('\n');
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "none".to_string(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn flatten(map: &Map<String, Value>, prefix: &str, lists: &[&str], out: &mut String) {
    for (k, v) in map {
        let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
        match v {
            Value::Object(inner) => flatten(inner, &key, lists, out),
            Value::Array(items) if items.is_empty() && lists.contains(&k.as_str()) => {
                push_line(out, &key, "0");
            }
            Value::Array(items) if items.iter().all(is_scalar) => {
                let joined: Vec<String> = items.iter().map(scalar).collect();
                push_line(out, &key, &joined.join(" "));
            }
            Value::Array(items) => {
                push_line(out, &key, &items.len().to_string());
                for (i, item) in items.iter().enumerate() {
                    let item_key = format!("{key}[{i}]");
                    match item {
                        Value::Object(inner) => flatten(inner, &item_key, lists, out),
                        Value::Array(xs) if xs.iter().all(is_scalar) => {
                            let joined: Vec<String> = xs.iter().map(scalar).collect();
                            push_line(out, &item_key, &joined.join(" "));
                        }
                        other => push_line(out, &item_key, &other.to_string()),
                    }
                }
            }
            scalar_value => push_line(out, &key, &scalar(scalar_value)),
        }
    }
}
