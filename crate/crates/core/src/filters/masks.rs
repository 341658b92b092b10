//! Radial masks shared by the glaucoma vignette and the AMD scotoma.

use crate::blur::blur_plane;
use crate::error::Result;
use crate::raster::{to_channel, RgbImage};

use super::params::{AmdParams, GlaucomaParams};

/// 1 inside `inner`, linear down to 0 at `outer`, 0 beyond; distance measured
/// from the image center to pixel centers. The ramp is then blurred.
fn radial_mask(width: u32, height: u32, inner: f64, outer: f64, sigma: f64) -> Result<Vec<f64>> {
    let (w, h) = (width as usize, height as usize);
    let (cx, cy) = (f64::from(width) / 2.0, f64::from(height) / 2.0);
    let mut ramp = Vec::with_capacity(w * h);
    for y in 0..h {
        for x in 0..w {
            let d = (x as f64 + 0.5 - cx).hypot(y as f64 + 0.5 - cy);
            let v = if d <= inner {
                1.0
            } else if d >= outer {
                0.0
            } else {
                (outer - d) / (outer - inner)
            };
            ramp.push(v);
        }
    }
    let mut mask = blur_plane(&ramp, w, h, 1, sigma)?;
    mask.iter_mut().for_each(|m| *m = m.clamp(0.0, 1.0));
    Ok(mask)
}

/// Transparency of the glaucoma overlay: 1 keeps a pixel, 0 blacks it out.
pub fn glaucoma_mask(width: u32, height: u32, p: &GlaucomaParams) -> Result<Vec<f64>> {
    p.validate()?;
    let m = f64::from(width.min(height));
    radial_mask(
        width,
        height,
        p.clear_radius_frac * m,
        p.fade_radius_frac * m,
        p.mask_blur_sigma_frac * m,
    )
}

/// Opacity of the AMD scotoma: 1 blacks a pixel out, 0 leaves it alone.
pub fn amd_mask(width: u32, height: u32, p: &AmdParams) -> Result<Vec<f64>> {
    p.validate()?;
    let m = f64::from(width.min(height));
    radial_mask(
        width,
        height,
        p.opaque_radius_frac * m,
        p.fade_radius_frac * m,
        p.mask_blur_sigma_frac * m,
    )
}

fn scale_by(img: &RgbImage, factors: impl Iterator<Item = f64>) -> Result<RgbImage> {
    let pixels = img
        .pixels()
        .iter()
        .zip(factors)
        .map(|(px, a)| px.map(|c| to_channel(f64::from(c) * a)))
        .collect();
    RgbImage::new(img.width(), img.height(), pixels)
}

/// Tunnel vision: keeps the center, fades the periphery to black.
pub fn apply_glaucoma(img: &RgbImage, p: &GlaucomaParams) -> Result<RgbImage> {
    let alpha = glaucoma_mask(img.width(), img.height(), p)?;
    scale_by(img, alpha.into_iter())
}

/// Central scotoma: blacks out the center with a soft edge.
pub fn apply_amd(img: &RgbImage, p: &AmdParams) -> Result<RgbImage> {
    let beta = amd_mask(img.width(), img.height(), p)?;
    scale_by(img, beta.into_iter().map(|b| 1.0 - b))
}
