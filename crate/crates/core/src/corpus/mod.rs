//! Corpus curation: ingest, resolution filter, dedup, class balancing,
//! stratified splitting, and fan-out into one filtered copy per condition.

mod curate;
mod generate;
mod manifest;
mod resize;

use std::fmt;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::filters::Condition;

pub use curate::{balance_classes, dedup_by_hash, filter_min_resolution, scan_directory, split_counts, stratified_split, ScanReport};
pub use generate::{generate_dataset, output_path};
pub use manifest::{read_manifest, write_manifest, Manifest};
pub use resize::resize_image;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassLabel {
    Human,
    NonHuman,
}

impl ClassLabel {
    pub const ALL: [ClassLabel; 2] = [ClassLabel::Human, ClassLabel::NonHuman];

    pub fn slug(self) -> &'static str {
        match self {
            ClassLabel::Human => "human",
            ClassLabel::NonHuman => "non_human",
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Split {
    Train,
    Val,
    Test,
    Unassigned,
}

/// One image in a manifest. Field order is the JSON-Lines column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ImageRecord {
    pub path: PathBuf,
    #[serde(rename = "class")]
    pub class_label: ClassLabel,
    pub condition: Condition,
    pub split: Split,
    /// Lower-case hex SHA-256 of the file bytes.
    pub sha256: String,
    pub width: u32,
    pub height: u32,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SplitRatios {
    pub train: f64,
    pub val: f64,
    pub test: f64,
}

impl Default for SplitRatios {
    fn default() -> Self {
        Self {
            train: 0.70,
            val: 0.15,
            test: 0.15,
        }
    }
}

impl SplitRatios {
    pub fn validate(&self) -> Result<()> {
        let all_positive = [self.train, self.val, self.test].iter().all(|r| *r > 0.0);
        if all_positive && (self.train + self.val + self.test - 1.0).abs() <= 1e-9 {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "split ratios must be positive and sum to 1, got {}/{}/{}",
                self.train, self.val, self.test
            )))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CurationConfig {
    pub min_resolution: u32,
    pub target_size: u32,
    pub split_ratios: SplitRatios,
    pub balance_tolerance: f64,
    pub global_seed: u64,
}

impl Default for CurationConfig {
    fn default() -> Self {
        Self {
            min_resolution: 64,
            target_size: 224,
            split_ratios: SplitRatios::default(),
            balance_tolerance: 0.10,
            global_seed: 0,
        }
    }
}

impl CurationConfig {
    pub fn validate(&self) -> Result<()> {
        self.split_ratios.validate()?;
        if !(0.0..=1.0).contains(&self.balance_tolerance) {
            return Err(Error::InvalidParameter(format!(
                "balance_tolerance must lie in [0, 1], got {}",
                self.balance_tolerance
            )));
        }
        if self.target_size == 0 {
            return Err(Error::InvalidParameter("target_size must be >= 1".into()));
        }
        Ok(())
    }

    /// SHA-256 over the canonical JSON encoding.
    pub fn digest(&self) -> String {
        sha256_hex(&serde_json::to_vec(self).expect("config serializes"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        CurationConfig::default().validate().unwrap();
        let mut c = CurationConfig::default();
        c.split_ratios.test = 0.2;
        assert!(c.validate().is_err());
        let c = CurationConfig { balance_tolerance: 1.5, ..Default::default() };
        assert!(c.validate().is_err());
        let c = CurationConfig {
            split_ratios: SplitRatios { train: 1.0, val: 0.0, test: 0.0 },
            ..Default::default()
        };
        assert!(c.validate().is_err());
    }

    #[test]
    fn digest_tracks_config() {
        let a = CurationConfig::default();
        let b = CurationConfig { global_seed: 1, ..a };
        assert_eq!(a.digest(), CurationConfig::default().digest());
        assert_ne!(a.digest(), b.digest());
        assert_eq!(a.digest().len(), 64);
    }

    #[test]
    fn sha256_known_value() {
        assert_eq!(sha256_hex(b"abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    }
}
