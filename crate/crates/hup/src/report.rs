//! The JSON report written by every subcommand.

use std::collections::BTreeMap;
use std::io::Write;

use anyhow::Result;
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub name: String,
    pub value: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Residual {
    pub label: String,
    pub value: f64,
}

/// `{operation, inputs, verdict, diagnostics[], residuals[], tolerances}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub operation: String,
    pub inputs: BTreeMap<String, Value>,
    pub verdict: String,
    pub diagnostics: Vec<Diagnostic>,
    pub residuals: Vec<Residual>,
    pub tolerances: BTreeMap<String, f64>,
}

impl Report {
    pub fn new(operation: &str) -> Self {
        Self {
            operation: operation.into(),
            inputs: BTreeMap::new(),
            verdict: String::new(),
            diagnostics: Vec::new(),
            residuals: Vec::new(),
            tolerances: BTreeMap::new(),
        }
    }

    pub fn input(&mut self, name: &str, value: impl Into<Value>) -> &mut Self {
        self.inputs.insert(name.into(), value.into());
        self
    }

    pub fn diagnostic(&mut self, name: &str, value: impl Into<Value>) -> &mut Self {
        self.diagnostics.push(Diagnostic { name: name.into(), value: value.into() });
        self
    }

    pub fn residual(&mut self, label: impl Into<String>, value: f64) -> &mut Self {
        self.residuals.push(Residual { label: label.into(), value });
        self
    }

    pub fn tolerance(&mut self, name: &str, value: f64) -> &mut Self {
        self.tolerances.insert(name.into(), value);
        self
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().map(|r| r.value).fold(0.0, f64::max)
    }

    pub fn write(&self, mut writer: impl Write) -> Result<()> {
        serde_json::to_writer_pretty(&mut writer, self)?;
        writeln!(writer)?;
        Ok(())
    }
}
