use std::path::Path;

use crate::error::Result;
use crate::raster::{to_channel, RgbImage};

use super::{check_shapes, FeatureTensor};

/// Colour rendering of a per-position deviation field, `H` rows by `W` columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeatmapImage(RgbImage);

impl HeatmapImage {
    pub fn image(&self) -> &RgbImage {
        &self.0
    }

    pub fn into_image(self) -> RgbImage {
        self.0
    }

    pub fn encode_png(&self) -> Vec<u8> {
        self.0.encode_png()
    }

    pub fn save_png(&self, path: &Path) -> Result<()> {
        self.0.save_png(path)
    }
}

/// Channel-mean absolute difference at each spatial position, row-major `H x W`.
pub fn deviation_field(a: &FeatureTensor, b: &FeatureTensor) -> Result<Vec<f64>> {
    check_shapes(a, b)?;
    let (c, h, w) = a.shape();
    let plane = h * w;
    let mut field = vec![0.0f64; plane];
    for k in 0..c {
        let (pa, pb) = (&a.values()[k * plane..(k + 1) * plane], &b.values()[k * plane..(k + 1) * plane]);
        for ((d, &x), &y) in field.iter_mut().zip(pa).zip(pb) {
            *d += (f64::from(x) - f64::from(y)).abs();
        }
    }
    if c > 0 {
        field.iter_mut().for_each(|d| *d /= c as f64);
    }
    Ok(field)
}

/// Blue (no deviation) to red (largest deviation) heatmap of
/// [`deviation_field`], min-max normalized. A flat field renders all blue.
pub fn diff_heatmap(a: &FeatureTensor, b: &FeatureTensor) -> Result<HeatmapImage> {
    let field = deviation_field(a, b)?;
    let (lo, hi) = field
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v)));
    let span = hi - lo;
    let pixels = field
        .iter()
        .map(|&d| {
            let v = if span > 0.0 { (d - lo) / span } else { 0.0 };
            [to_channel(255.0 * v), 0, to_channel(255.0 * (1.0 - v))]
        })
        .collect();
    let image = RgbImage::new(a.width() as u32, a.height() as u32, pixels)?;
    Ok(HeatmapImage(image))
}
