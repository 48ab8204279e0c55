use std::fmt;
use std::time::Duration;

use kneser_core::KneserError;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug)]
pub enum CliError {
    Core(KneserError),
    /// An input file could not be read or parsed.
    Input(String),
}

impl From<KneserError> for CliError {
    fn from(e: KneserError) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    pub fn input(context: impl fmt::Display, e: impl fmt::Display) -> Self {
        CliError::Input(format!("{context}: {e}"))
    }

    /// 1 for domain errors, 2 for unreadable or malformed input.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_domain() => 1,
            _ => 2,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Core(KneserError::InvalidInput(_)) => "InvalidInput",
            CliError::Core(KneserError::DegenerateInput(_)) => "DegenerateInput",
            CliError::Core(KneserError::Unsupported(_)) => "Unsupported",
            CliError::Core(KneserError::Internal(_)) => "Internal",
            CliError::Core(KneserError::Parse { .. }) => "Parse",
            CliError::Core(KneserError::Io(_)) => "Io",
            CliError::Core(KneserError::Json(_)) => "Json",
            CliError::Input(_) => "Input",
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => e.fmt(f),
            CliError::Input(m) => f.write_str(m),
        }
    }
}

/// The JSON document printed by every run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub results: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timings: Option<Value>,
    pub seed: Option<u64>,
}

impl RunReport {
    pub fn new(command: &str, inputs: Value, seed: Option<u64>) -> Self {
        RunReport { command: command.into(), inputs, results: None, error: None, timings: None, seed }
    }

    pub fn set_error(&mut self, e: &CliError) {
        self.error = Some(json!({ "kind": e.kind(), "message": e.to_string() }));
    }

    pub fn set_elapsed(&mut self, elapsed: Duration) {
        self.timings = Some(json!({ "elapsed_ms": elapsed.as_secs_f64() * 1e3 }));
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_round_trips() {
        let mut r = RunReport::new("bounds", json!({ "k": 4 }), Some(7));
        r.results = Some(json!({ "lower": 6 }));
        r.set_error(&CliError::Core(KneserError::invalid("x")));
        let back: RunReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Core(KneserError::degenerate("x")).exit_code(), 1);
        assert_eq!(CliError::Core(KneserError::Parse { line: 3, message: "x".into() }).exit_code(), 2);
        assert_eq!(CliError::Input("x".into()).exit_code(), 2);
    }
}
