use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use convexity::{Budget, Error};

use crate::args::Format;
use crate::input::Inputs;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 64,
            CliError::Io(_) | CliError::Lib(Error::Parse(_)) => 65,
            CliError::Lib(Error::BudgetExceeded { .. } | Error::SizeCapExceeded { .. }) => 3,
            CliError::Lib(_) => 2,
        }
    }

    fn payload(&self) -> Value {
        match self {
            CliError::Usage(msg) => json!({"kind": "usage", "message": msg}),
            CliError::Io(msg) => json!({"kind": "io", "message": msg}),
            CliError::Lib(e) => {
                let mut out = json!({"kind": e.kind(), "message": e.to_string()});
                if let Error::RadonBoundRefuted(cert) = e {
                    out["certificate"] =
                        serde_json::to_value(cert).expect("certificates serialize");
                }
                out
            }
        }
    }
}

pub struct Context<'a> {
    pub verb: &'static str,
    pub seed: Option<u64>,
    pub inputs: &'a Inputs,
    pub budget: &'a Budget,
    pub elapsed_ms: Option<u128>,
}

impl Context<'_> {
    fn envelope(&self) -> Map<String, Value> {
        let mut out = Map::new();
        out.insert("verb".into(), json!(self.verb));
        out.insert("inputs".into(), json!(self.inputs.digests()));
        out.insert(
            "budget".into(),
            json!({"limit": self.budget.limit(), "used": self.budget.used()}),
        );
        if let Some(seed) = self.seed {
            out.insert("seed".into(), json!(seed));
        }
        if let Some(ms) = self.elapsed_ms {
            out.insert("timing_ms".into(), json!(ms as u64));
        }
        out
    }

    pub fn success(&self, result: Value) -> Value {
        let mut out = self.envelope();
        out.insert("result".into(), result);
        Value::Object(out)
    }

    pub fn failure(&self, err: &CliError) -> Value {
        let mut out = self.envelope();
        out.insert("error".into(), err.payload());
        Value::Object(out)
    }
}

pub fn render(report: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "{}", report["verb"].as_str().unwrap_or_default());
            let body = report.get("result").or_else(|| report.get("error"));
            if let Some(Value::Object(map)) = body {
                for (key, value) in map {
                    let shown = match value {
                        Value::String(v) => v.clone(),
                        other => other.to_string(),
                    };
                    let _ = writeln!(s, "  {key}: {shown}");
                }
            }
            let _ = writeln!(s, "  budget used: {}", report["budget"]["used"]);
            s
        }
    }
}
