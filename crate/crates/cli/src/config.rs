//! Run configuration: optional JSON file merged under command-line flags.

use std::path::{Path, PathBuf};

use clap::ValueEnum;
use serde::Deserialize;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    #[default]
    Text,
}

/// Settings shared by every subcommand. Tolerances left unset keep the
/// library and case defaults.
#[derive(Debug, Clone, PartialEq, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub rel_tol: Option<f64>,
    pub abs_tol: Option<f64>,
    pub max_terms: Option<usize>,
    #[serde(rename = "format")]
    pub output_format: Option<Format>,
    #[serde(rename = "filter")]
    pub suite_filter: Option<String>,
    #[serde(rename = "out")]
    pub report_path: Option<PathBuf>,
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("config {}: {e}", path.display())))
    }

    /// Fields set in `flags` replace those of `self`.
    pub fn merged_under(self, flags: RunConfig) -> Self {
        Self {
            rel_tol: flags.rel_tol.or(self.rel_tol),
            abs_tol: flags.abs_tol.or(self.abs_tol),
            max_terms: flags.max_terms.or(self.max_terms),
            output_format: flags.output_format.or(self.output_format),
            suite_filter: flags.suite_filter.or(self.suite_filter),
            report_path: flags.report_path.or(self.report_path),
        }
    }

    pub fn validate(self) -> Result<Self, CliError> {
        for (name, v) in [("rel-tol", self.rel_tol), ("abs-tol", self.abs_tol)] {
            if let Some(v) = v {
                if !(v > 0.0 && v.is_finite()) {
                    return Err(CliError::Usage(format!("--{name} must be positive, got {v}")));
                }
            }
        }
        if self.max_terms == Some(0) {
            return Err(CliError::Usage("--max-terms must be at least 1".into()));
        }
        Ok(self)
    }

    pub fn format(&self) -> Format {
        self.output_format.unwrap_or_default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_win_over_file() {
        let file: RunConfig = serde_json::from_str(r#"{"rel_tol": 1e-6, "max_terms": 50, "format": "csv"}"#).unwrap();
        let flags = RunConfig { rel_tol: Some(1e-9), ..Default::default() };
        let c = file.merged_under(flags);
        assert_eq!(c.rel_tol, Some(1e-9));
        assert_eq!(c.max_terms, Some(50));
        assert_eq!(c.format(), Format::Csv);
    }

    #[test]
    fn unknown_keys_and_bad_values_are_rejected() {
        assert!(serde_json::from_str::<RunConfig>(r#"{"tolerance": 1}"#).is_err());
        assert!(serde_json::from_str::<RunConfig>(r#"{"format": "xml"}"#).is_err());
        assert!(RunConfig { abs_tol: Some(0.0), ..Default::default() }.validate().is_err());
        assert!(RunConfig { rel_tol: Some(-1.0), ..Default::default() }.validate().is_err());
        assert!(RunConfig { max_terms: Some(0), ..Default::default() }.validate().is_err());
    }
}
