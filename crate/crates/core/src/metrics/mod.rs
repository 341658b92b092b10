//! Feature-map comparison: activation energy, cosine similarity, and
//! difference heatmaps between a baseline model and disorder-trained models.

mod heatmap;
mod report;
mod tensor;

use std::collections::BTreeMap;
use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::filters::Condition;

pub use heatmap::{deviation_field, diff_heatmap, HeatmapImage};
pub use report::{format_significant, write_report, ReportFormat};
pub use tensor::{read_tensor, write_tensor, FeatureTensor, HEADER_LEN};

/// One row of the feature-map comparison table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MetricsRecord {
    pub condition: Condition,
    pub activation_energy: f64,
    pub cosine_similarity: f64,
}

/// Sum of absolute activations, accumulated in `f64` in storage order.
pub fn activation_energy(t: &FeatureTensor) -> f64 {
    t.values().iter().map(|&v| f64::from(v).abs()).sum()
}

/// Cosine of the angle between the flattened tensors, clamped to `[-1, 1]`.
///
/// An all-zero operand is an error: its angle is undefined.
pub fn cosine_similarity(a: &FeatureTensor, b: &FeatureTensor) -> Result<f64> {
    check_shapes(a, b)?;
    let (mut dot, mut aa, mut bb) = (0.0f64, 0.0f64, 0.0f64);
    for (&x, &y) in a.values().iter().zip(b.values()) {
        let (x, y) = (f64::from(x), f64::from(y));
        dot += x * y;
        aa += x * x;
        bb += y * y;
    }
    if aa == 0.0 || bb == 0.0 {
        return Err(Error::DegenerateInput("cosine similarity of an all-zero tensor".into()));
    }
    Ok((dot / (aa.sqrt() * bb.sqrt())).clamp(-1.0, 1.0))
}

pub(crate) fn check_shapes(a: &FeatureTensor, b: &FeatureTensor) -> Result<()> {
    if a.shape() == b.shape() {
        Ok(())
    } else {
        Err(Error::Shape(format!("{:?} vs {:?}", a.shape(), b.shape())))
    }
}

/// Metrics for each disorder tensor against the baseline, in
/// [`Condition::DISORDERS`] order regardless of the order conditions finish in.
pub fn compare_tensors(baseline: &FeatureTensor, disorders: &BTreeMap<Condition, FeatureTensor>) -> Result<Vec<MetricsRecord>> {
    Condition::DISORDERS
        .par_iter()
        .map(|&condition| {
            let with_condition = |cause: Error| Error::Condition {
                condition,
                cause: Box::new(cause),
            };
            let tensor = disorders
                .get(&condition)
                .ok_or_else(|| with_condition(Error::InvalidParameter("no tensor supplied".into())))?;
            Ok(MetricsRecord {
                condition,
                activation_energy: activation_energy(tensor),
                cosine_similarity: cosine_similarity(baseline, tensor).map_err(with_condition)?,
            })
        })
        .collect()
}

/// Loads the baseline and one tensor per disorder, then runs [`compare_tensors`].
/// Load failures name the offending condition.
pub fn compare_conditions(baseline: &std::path::Path, disorder_paths: &BTreeMap<Condition, PathBuf>) -> Result<Vec<MetricsRecord>> {
    let baseline = read_tensor(baseline)?;
    let tensors = load_disorder_tensors(disorder_paths)?;
    compare_tensors(&baseline, &tensors)
}

/// Reads the tensor of every disorder in [`Condition::DISORDERS`].
pub fn load_disorder_tensors(paths: &BTreeMap<Condition, PathBuf>) -> Result<BTreeMap<Condition, FeatureTensor>> {
    Condition::DISORDERS
        .par_iter()
        .map(|&condition| {
            let loaded = match paths.get(&condition) {
                Some(path) => read_tensor(path),
                None => Err(Error::InvalidParameter("no tensor path supplied".into())),
            };
            loaded.map(|t| (condition, t)).map_err(|e| Error::Condition {
                condition,
                cause: Box::new(e),
            })
        })
        .collect()
}
