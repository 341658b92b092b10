#![allow(dead_code)]

use brokeneyes::fixtures::synthetic_scene;
use brokeneyes::RgbImage;

/// Twenty scenes of assorted sizes, including non-square and tiny ones.
pub fn fixture_images() -> Vec<RgbImage> {
    let sizes = [(224, 224), (96, 64), (64, 96), (50, 50), (17, 9)];
    (0..20)
        .map(|i| {
            let (w, h) = sizes[i % sizes.len()];
            synthetic_scene(w, h, 1000 + i as u64)
        })
        .collect()
}

/// Sum of absolute horizontal and vertical neighbour differences.
pub fn total_variation(img: &RgbImage) -> u64 {
    let mut tv = 0u64;
    for y in 0..img.height() {
        for x in 0..img.width() {
            let p = img.get(x, y);
            if x + 1 < img.width() {
                let q = img.get(x + 1, y);
                tv += (0..3).map(|c| u64::from(p[c].abs_diff(q[c]))).sum::<u64>();
            }
            if y + 1 < img.height() {
                let q = img.get(x, y + 1);
                tv += (0..3).map(|c| u64::from(p[c].abs_diff(q[c]))).sum::<u64>();
            }
        }
    }
    tv
}

pub fn channel_variance(img: &RgbImage, c: usize) -> f64 {
    let n = img.pixels().len() as f64;
    let mean = img.pixels().iter().map(|p| f64::from(p[c])).sum::<f64>() / n;
    img.pixels().iter().map(|p| (f64::from(p[c]) - mean).powi(2)).sum::<f64>() / n
}
