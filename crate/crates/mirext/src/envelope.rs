use mirext_core::Report;
use serde::Serialize;
use serde_json::Value;

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckEntry {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorEntry {
    pub kind: String,
    pub message: String,
}

/// `{command, parameters, result, checks, precision_bits}`; `error` is
/// present only when the command failed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Envelope {
    pub command: String,
    pub parameters: Value,
    pub result: Value,
    pub checks: Vec<CheckEntry>,
    pub precision_bits: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorEntry>,
}

pub fn check_entries(r: &Report) -> Vec<CheckEntry> {
    r.checks
        .iter()
        .map(|c| CheckEntry {
            name: c.name.clone(),
            pass: c.pass,
            detail: c.detail.clone(),
        })
        .collect()
}

impl Envelope {
    pub fn failed(command: &str, parameters: Value, precision_bits: u32, err: &CliError) -> Self {
        Envelope {
            command: command.to_string(),
            parameters,
            result: Value::Null,
            checks: Vec::new(),
            precision_bits,
            error: Some(ErrorEntry {
                kind: err.kind().to_string(),
                message: err.to_string(),
            }),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(|c| c.pass)
    }
}
