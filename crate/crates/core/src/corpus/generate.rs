use std::collections::HashSet;
use std::ffi::OsStr;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::filters::{apply_condition, Condition, FilterParams};
use crate::raster::RgbImage;
use crate::rng::derive_seed;

use super::{sha256_hex, ClassLabel, CurationConfig, ImageRecord, Manifest};

/// `out_dir/<condition>/<class>/<file_name>`.
pub fn output_path(out_dir: &Path, condition: Condition, class: ClassLabel, file_name: &str) -> PathBuf {
    out_dir.join(condition.slug()).join(class.slug()).join(file_name)
}

/// Output file names for one class, in source order. A repeated stem gets the
/// first eight hex digits of its content hash appended.
fn file_names(records: &[ImageRecord]) -> Vec<String> {
    let mut seen = HashSet::new();
    records
        .iter()
        .map(|r| {
            let stem = r.path.file_stem().and_then(OsStr::to_str).unwrap_or("image").to_string();
            let mut name = stem.clone();
            if !seen.insert(name.clone()) {
                name = format!("{stem}_{}", &r.sha256[..8.min(r.sha256.len())]);
                let mut n = 1;
                while !seen.insert(name.clone()) {
                    name = format!("{stem}_{}_{n}", &r.sha256[..8.min(r.sha256.len())]);
                    n += 1;
                }
            }
            format!("{name}.png")
        })
        .collect()
}

/// Resizes every source image to `config.target_size` and writes one filtered
/// PNG per condition.
///
/// Each source image is filtered with `derive_seed(seed, source_path)`, so the
/// output does not depend on how the work is scheduled. Records come back
/// condition-major (in [`Condition::ALL`] order), then human before non-human,
/// then source order; each carries the split of its source record.
pub fn generate_dataset(
    human: &[ImageRecord],
    non_human: &[ImageRecord],
    params: &FilterParams,
    config: &CurationConfig,
    seed: u64,
    out_dir: &Path,
) -> Result<Manifest> {
    params.validate()?;
    config.validate()?;
    for condition in Condition::ALL {
        for class in ClassLabel::ALL {
            let dir = output_path(out_dir, condition, class, "");
            std::fs::create_dir_all(&dir).map_err(|e| Error::io(dir, e))?;
        }
    }

    let mut jobs = Vec::with_capacity(human.len() + non_human.len());
    for (class, records) in [(ClassLabel::Human, human), (ClassLabel::NonHuman, non_human)] {
        for (record, name) in records.iter().zip(file_names(records)) {
            jobs.push((class, record, name));
        }
    }

    // per source: one record per condition, in Condition::ALL order
    let per_source: Vec<Vec<ImageRecord>> = jobs
        .par_iter()
        .map(|&(class, source, ref name)| {
            let image = crate::corpus::resize_image(&RgbImage::open(&source.path)?, config.target_size);
            let image_seed = derive_seed(seed, source.path.as_os_str().as_encoded_bytes());
            Condition::ALL
                .iter()
                .map(|&condition| {
                    let filtered = apply_condition(&image, condition, params, image_seed)?;
                    let bytes = filtered.encode_png();
                    let path = output_path(out_dir, condition, class, name);
                    std::fs::write(&path, &bytes).map_err(|e| Error::io(&path, e))?;
                    Ok(ImageRecord {
                        path,
                        class_label: class,
                        condition,
                        split: source.split,
                        sha256: sha256_hex(&bytes),
                        width: filtered.width(),
                        height: filtered.height(),
                    })
                })
                .collect()
        })
        .collect::<Result<_>>()?;

    let mut records = Vec::with_capacity(per_source.len() * Condition::ALL.len());
    for ci in 0..Condition::ALL.len() {
        records.extend(per_source.iter().map(|recs| recs[ci].clone()));
    }
    Ok(Manifest::new(records, Some(config.digest())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::Split;

    fn rec(path: &str, sha: &str) -> ImageRecord {
        ImageRecord {
            path: path.into(),
            class_label: ClassLabel::Human,
            condition: Condition::Normal,
            split: Split::Train,
            sha256: sha.into(),
            width: 1,
            height: 1,
        }
    }

    #[test]
    fn colliding_stems_get_hash_suffix() {
        let names = file_names(&[
            rec("a/x.jpg", "1111111122"),
            rec("b/x.png", "3333333344"),
            rec("c/y.png", "55"),
        ]);
        assert_eq!(names, ["x.png", "x_33333333.png", "y.png"]);
    }

    #[test]
    fn single_image_fans_out() {
        let dir = tempfile::tempdir().unwrap();
        let src = dir.path().join("face.png");
        RgbImage::from_fn(40, 30, |x, y| [(x * 5) as u8, (y * 7) as u8, 99])
            .unwrap()
            .save_png(&src)
            .unwrap();
        let mut source = rec(src.to_str().unwrap(), "ab");
        source.split = Split::Val;
        let out = dir.path().join("out");
        let config = CurationConfig { target_size: 32, ..Default::default() };
        let m = generate_dataset(&[source], &[], &FilterParams::default(), &config, 7, &out).unwrap();
        assert_eq!(m.records.len(), 6);
        for (r, c) in m.records.iter().zip(Condition::ALL) {
            assert_eq!(r.condition, c);
            assert_eq!(r.split, Split::Val);
            assert_eq!((r.width, r.height), (32, 32));
            assert_eq!(r.path, out.join(c.slug()).join("human").join("face.png"));
            assert_eq!(sha256_hex(&std::fs::read(&r.path).unwrap()), r.sha256);
        }
        assert_eq!(m.config_digest.as_deref(), Some(config.digest().as_str()));
    }

    #[test]
    fn unreadable_source_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        let r = rec(dir.path().join("missing.png").to_str().unwrap(), "ab");
        let cfg = CurationConfig::default();
        assert!(generate_dataset(&[r], &[], &FilterParams::default(), &cfg, 0, dir.path()).is_err());
    }
}
