use std::io::Write;
use std::process::ExitCode;

use clap::ValueEnum;
use rankbrittle::{Error, SolverCaps};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

pub fn print_report(doc: &Value, format: Format) {
    let text = match format {
        Format::Json => serde_json::to_string_pretty(doc).expect("json"),
        Format::Table => table(doc),
    };
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn table(doc: &Value) -> String {
    let mut out = String::new();
    let Some(map) = doc.as_object() else {
        return doc.to_string();
    };
    let width = map.keys().map(String::len).max().unwrap_or(0);
    for (key, value) in map {
        if key == "checks" {
            continue;
        }
        let shown = match value {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        out += &format!("{key:<width$}  {shown}\n");
    }
    if let Some(checks) = map.get("checks").and_then(Value::as_array) {
        for c in checks {
            let mark = if c["pass"].as_bool() == Some(true) {
                "PASS"
            } else {
                "FAIL"
            };
            out += &format!("{mark}  {}\n", c["name"].as_str().unwrap_or(""));
        }
    }
    out.trim_end().to_string()
}

/// Reports `e` and maps it to the exit code: 2 input, 3 resource, 1 otherwise.
pub fn print_error(
    command: &str,
    e: &Error,
    caps: Option<&SolverCaps>,
    format: Format,
) -> ExitCode {
    let (kind, code) = match e {
        Error::Input(_) | Error::Format { .. } => ("input", 2),
        Error::Resource(_) => ("resource", 3),
        Error::Witness(_) => ("witness", 1),
    };
    let mut doc =
        json!({ "command": command, "error": { "kind": kind, "message": e.to_string() } });
    if let Some(caps) = caps {
        doc["caps"] = json!(caps);
    }
    print_report(&doc, format);
    eprintln!("error: {e}");
    ExitCode::from(code)
}
