//! Shared inputs for the criterion benches.

use brokeneyes::fixtures::synthetic_scene;
use brokeneyes::{FeatureTensor, RgbImage, Rng64};

pub const SCENE_SIDE: u32 = 224;

pub fn scene() -> RgbImage {
    synthetic_scene(SCENE_SIDE, SCENE_SIDE, 1)
}

/// Uniform values in [-1, 1), shaped like a late convolutional feature map.
pub fn feature_map(seed: u64) -> FeatureTensor {
    let (c, h, w) = (512, 7, 7);
    let mut rng = Rng64::new(seed);
    let values = (0..c * h * w).map(|_| (rng.next_unit() * 2.0 - 1.0) as f32).collect();
    FeatureTensor::new(c, h, w, values).expect("finite values of the declared shape")
}
