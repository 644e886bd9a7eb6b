//! JSON report plumbing shared by every subcommand.

use serde_json::{json, Value};

/// Identifier stamped into every JSON report.
pub const SCHEMA: &str = "pencilbox/1";

/// Wrap a subcommand's body object with the schema and command tags.
pub fn wrap(command: &str, body: Value) -> Value {
    let mut out = json!({
        "schema": SCHEMA,
        "command": command,
    });
    let obj = out.as_object_mut().expect("object");
    if let Value::Object(extra) = body {
        for (k, v) in extra {
            obj.insert(k, v);
        }
    }
    out
}

/// Print either the JSON report or the human summary.
pub fn emit(json_mode: bool, value: &Value, human: &str) {
    if json_mode {
        println!(
            "{}",
            serde_json::to_string_pretty(value).expect("serializable")
        );
    } else {
        print!("{human}");
    }
}

/// A JSON array of strings.
pub fn strings(items: Vec<String>) -> Value {
    Value::Array(items.into_iter().map(Value::String).collect())
}
