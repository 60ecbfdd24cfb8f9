//! Run configuration: built-in defaults, an optional JSON file, then flags.

use std::path::Path;

use friable_core::decomp::SearchLimits;
use friable_core::psi::{DeBruijnCorridor, DeBruijnGrid};
use friable_core::SmoothnessThreshold;
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const TABLE_LIMIT_ENV: &str = "FRIABLE_TABLE_LIMIT";
pub const DEFAULT_TABLE_LIMIT: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    /// Largest factor table a command may build.
    pub table_limit: u64,
    pub threshold: Option<SmoothnessThreshold>,
    pub format: Format,
    pub search: SearchLimits,
    pub corridor: DeBruijnCorridor,
    pub debruijn_grid: DeBruijnGrid,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            table_limit: DEFAULT_TABLE_LIMIT,
            threshold: None,
            format: Format::Json,
            search: SearchLimits::default(),
            corridor: DeBruijnCorridor::default(),
            debruijn_grid: DeBruijnGrid::default(),
        }
    }
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        let cfg: RunConfig =
            serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("bad config {}: {e}", path.display())))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.table_limit == 0 {
            return Err(CliError::Usage("table_limit must be positive".into()));
        }
        if self.search.max_nodes == 0 || self.search.max_certificates == Some(0) {
            return Err(CliError::Usage("search limits must be positive".into()));
        }
        DeBruijnCorridor::new(self.corridor.lower, self.corridor.upper)?;
        if let Some(t) = &self.threshold {
            t.validate()?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_file_keeps_defaults() {
        let cfg: RunConfig = serde_json::from_str(r#"{"format":"csv"}"#).unwrap();
        assert_eq!(cfg.format, Format::Csv);
        assert_eq!(cfg.table_limit, DEFAULT_TABLE_LIMIT);
        assert!(serde_json::from_str::<RunConfig>(r#"{"tablelimit":3}"#).is_err());
    }

    #[test]
    fn zero_limit_rejected() {
        let cfg = RunConfig { table_limit: 0, ..RunConfig::default() };
        assert!(cfg.validate().is_err());
    }
}
