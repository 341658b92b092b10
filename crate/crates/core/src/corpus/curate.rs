use std::collections::HashMap;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use walkdir::WalkDir;

use crate::error::{Error, Result};
use crate::filters::Condition;
use crate::raster::RgbImage;
use crate::rng::{derive_seed, Rng64};

use super::{sha256_hex, ClassLabel, ImageRecord, Split, SplitRatios};

/// Outcome of [`scan_directory`]: decodable images plus the files that were skipped.
#[derive(Debug, Default)]
pub struct ScanReport {
    pub records: Vec<ImageRecord>,
    pub warnings: Vec<(PathBuf, String)>,
}

/// Walks `dir` recursively and records every file that decodes as an image,
/// ordered by path.
pub fn scan_directory(dir: &Path, class_label: ClassLabel) -> Result<ScanReport> {
    if !dir.is_dir() {
        return Err(Error::NotFound(dir.to_path_buf()));
    }
    let mut files = Vec::new();
    for entry in WalkDir::new(dir).follow_links(true) {
        let entry = entry.map_err(|e| {
            let path = e.path().unwrap_or(dir).to_path_buf();
            Error::io(path, e.into())
        })?;
        if entry.file_type().is_file() {
            files.push(entry.into_path());
        }
    }
    files.sort();

    let scanned: Vec<_> = files
        .into_par_iter()
        .map(|path| {
            let outcome = std::fs::read(&path)
                .map_err(|e| e.to_string())
                .and_then(|bytes| {
                    RgbImage::decode(&bytes)
                        .map(|img| (sha256_hex(&bytes), img.width(), img.height()))
                        .map_err(|e| e.to_string())
                });
            (path, outcome)
        })
        .collect();

    let mut report = ScanReport::default();
    for (path, outcome) in scanned {
        match outcome {
            Ok((sha256, width, height)) => report.records.push(ImageRecord {
                path,
                class_label,
                condition: Condition::Normal,
                split: Split::Unassigned,
                sha256,
                width,
                height,
            }),
            Err(msg) => report.warnings.push((path, msg)),
        }
    }
    Ok(report)
}

/// Keeps records whose shorter side is at least `min_resolution`.
pub fn filter_min_resolution(records: Vec<ImageRecord>, min_resolution: u32) -> Vec<ImageRecord> {
    records
        .into_iter()
        .filter(|r| r.width.min(r.height) >= min_resolution)
        .collect()
}

/// Drops exact duplicates within each (class, condition) group. Of a set of
/// byte-identical files the one with the lexicographically smallest path
/// survives; survivors keep their input order.
pub fn dedup_by_hash(records: Vec<ImageRecord>) -> Vec<ImageRecord> {
    let mut keeper: HashMap<(ClassLabel, Condition, &str), usize> = HashMap::new();
    for (i, r) in records.iter().enumerate() {
        keeper
            .entry((r.class_label, r.condition, r.sha256.as_str()))
            .and_modify(|k| {
                if r.path < records[*k].path {
                    *k = i;
                }
            })
            .or_insert(i);
    }
    let mut keep = vec![false; records.len()];
    for i in keeper.into_values() {
        keep[i] = true;
    }
    records
        .into_iter()
        .zip(keep)
        .filter_map(|(r, k)| k.then_some(r))
        .collect()
}

/// Truncates the larger class when it exceeds the smaller one by more than
/// `tolerance` (as a fraction of the smaller count).
///
/// The larger class is shuffled with `seed`, cut to
/// `ceil(smaller * (1 + tolerance))`, and the survivors are returned in their
/// original order.
pub fn balance_classes(
    human: Vec<ImageRecord>,
    non_human: Vec<ImageRecord>,
    tolerance: f64,
    seed: u64,
) -> Result<(Vec<ImageRecord>, Vec<ImageRecord>)> {
    if human.is_empty() {
        return Err(Error::EmptyClass(ClassLabel::Human.to_string()));
    }
    if non_human.is_empty() {
        return Err(Error::EmptyClass(ClassLabel::NonHuman.to_string()));
    }
    if !(0.0..=1.0).contains(&tolerance) {
        return Err(Error::InvalidParameter(format!("balance tolerance must lie in [0, 1], got {tolerance}")));
    }
    let smaller = human.len().min(non_human.len());
    // the epsilon keeps products like 100 * 1.1 = 110.00000000000001 at 110
    let cap = ((smaller as f64 * (1.0 + tolerance)) - 1e-9).ceil() as usize;
    let cap = cap.max(smaller);

    let truncate = |records: Vec<ImageRecord>| {
        if records.len() <= cap {
            return records;
        }
        let mut order: Vec<usize> = (0..records.len()).collect();
        Rng64::new(seed).shuffle(&mut order);
        let mut keep = vec![false; records.len()];
        for &i in &order[..cap] {
            keep[i] = true;
        }
        records
            .into_iter()
            .zip(keep)
            .filter_map(|(r, k)| k.then_some(r))
            .collect()
    };
    Ok((truncate(human), truncate(non_human)))
}

/// `(train, val, test)` sizes for `n` items: floor for train and val, the
/// remainder to test.
pub fn split_counts(n: usize, ratios: &SplitRatios) -> (usize, usize, usize) {
    let floor = |r: f64| ((n as f64 * r + 1e-9).floor() as usize).min(n);
    let train = floor(ratios.train);
    let val = floor(ratios.val).min(n - train);
    (train, val, n - train - val)
}

/// Assigns a split to every record, class by class. Each class is shuffled
/// with a seed derived from `seed` and its name, then cut according to
/// [`split_counts`]. Records come back in input order.
pub fn stratified_split(mut records: Vec<ImageRecord>, ratios: &SplitRatios, seed: u64) -> Result<Vec<ImageRecord>> {
    ratios.validate()?;
    if records.is_empty() {
        return Err(Error::EmptyClass("no records to split".into()));
    }
    for class in ClassLabel::ALL {
        let mut members: Vec<usize> = (0..records.len())
            .filter(|&i| records[i].class_label == class)
            .collect();
        if members.is_empty() {
            continue;
        }
        Rng64::new(derive_seed(seed, class.slug().as_bytes())).shuffle(&mut members);
        let (train, val, _) = split_counts(members.len(), ratios);
        for (rank, &i) in members.iter().enumerate() {
            records[i].split = if rank < train {
                Split::Train
            } else if rank < train + val {
                Split::Val
            } else {
                Split::Test
            };
        }
    }
    Ok(records)
}
