use std::path::Path;

use anyhow::Context;
use brokeneyes::corpus::CurationConfig;
use brokeneyes::FilterParams;
use serde::{Deserialize, Serialize};

/// Optional JSON config. Absent keys keep module defaults, unknown keys are
/// rejected. Command-line flags take precedence over anything set here.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ToolConfig {
    pub filters: FilterParams,
    pub curation: CurationConfig,
    pub seed: Option<u64>,
    /// Worker threads, 0 picks one per core.
    pub threads: Option<usize>,
}

impl ToolConfig {
    pub fn load(path: Option<&Path>) -> anyhow::Result<Self> {
        let Some(path) = path else {
            return Ok(Self::default());
        };
        let text = std::fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
        let config: Self = serde_json::from_str(&text).with_context(|| format!("parsing config {}", path.display()))?;
        config.filters.validate()?;
        config.curation.validate()?;
        Ok(config)
    }

    /// `--seed`, then the top-level `seed`, then `curation.global_seed`.
    pub fn effective_seed(&self, flag: Option<u64>) -> u64 {
        flag.or(self.seed).unwrap_or(self.curation.global_seed)
    }
}
