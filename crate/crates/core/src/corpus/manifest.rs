use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use chrono::{DateTime, Utc};

use crate::error::{Error, Result};

use super::{ClassLabel, ImageRecord};
use crate::filters::Condition;

/// Dataset ledger. Only `records` is persisted (one JSON object per line);
/// `created_at` and `config_digest` describe the in-memory run.
#[derive(Debug, Clone, PartialEq)]
pub struct Manifest {
    pub records: Vec<ImageRecord>,
    pub created_at: DateTime<Utc>,
    /// Digest of the curation config that produced the manifest, when known.
    pub config_digest: Option<String>,
}

impl Manifest {
    pub fn new(records: Vec<ImageRecord>, config_digest: Option<String>) -> Self {
        Self {
            records,
            created_at: Utc::now(),
            config_digest,
        }
    }

    /// Rewrites record paths under `base` relative to it; other paths are left as is.
    pub fn relative_to(mut self, base: &Path) -> Self {
        for r in &mut self.records {
            if let Ok(rel) = r.path.strip_prefix(base) {
                r.path = rel.to_path_buf();
            }
        }
        self
    }

    pub fn count(&self, condition: Condition, class: ClassLabel) -> usize {
        self.records
            .iter()
            .filter(|r| r.condition == condition && r.class_label == class)
            .count()
    }
}

pub fn write_manifest(manifest: &Manifest, path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut out = BufWriter::new(file);
    for record in &manifest.records {
        serde_json::to_writer(&mut out, record).map_err(|e| Error::io(path, e.into()))?;
        out.write_all(b"\n").map_err(|e| Error::io(path, e))?;
    }
    out.flush().map_err(|e| Error::io(path, e))
}

/// Reads a JSON-Lines manifest. Blank lines are skipped; line numbers in
/// errors are 1-based.
pub fn read_manifest(path: &Path) -> Result<Manifest> {
    let file = File::open(path).map_err(|e| {
        if e.kind() == std::io::ErrorKind::NotFound {
            Error::NotFound(path.to_path_buf())
        } else {
            Error::io(path, e)
        }
    })?;
    let created_at = file
        .metadata()
        .and_then(|m| m.modified())
        .map(DateTime::<Utc>::from)
        .unwrap_or_else(|_| Utc::now());

    let mut records = Vec::new();
    for (idx, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| Error::io(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        let record = serde_json::from_str(&line).map_err(|e| Error::Parse {
            line: idx + 1,
            message: e.to_string(),
        })?;
        records.push(record);
    }
    Ok(Manifest {
        records,
        created_at,
        config_digest: None,
    })
}
