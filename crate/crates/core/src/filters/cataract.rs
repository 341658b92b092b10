use crate::blur::gaussian_blur;
use crate::color::{hsv_to_rgb, rgb_to_hsv};
use crate::error::Result;
use crate::raster::{to_channel, RgbImage};

use super::params::CataractParams;

/// Scales HSV saturation of every pixel by `scale`.
pub fn desaturate(img: &RgbImage, scale: f64) -> Result<RgbImage> {
    let pixels = img
        .pixels()
        .iter()
        .map(|&[r, g, b]| {
            let (h, s, v) = rgb_to_hsv(r, g, b);
            hsv_to_rgb(h, s * scale, v)
        })
        .collect();
    RgbImage::new(img.width(), img.height(), pixels)
}

/// Blends every channel towards white: `(1 - strength) * c + strength * 255`.
pub fn haze(img: &RgbImage, strength: f64) -> Result<RgbImage> {
    let pixels = img
        .pixels()
        .iter()
        .map(|px| px.map(|c| to_channel((1.0 - strength) * f64::from(c) + strength * 255.0)))
        .collect();
    RgbImage::new(img.width(), img.height(), pixels)
}

/// Desaturate, haze, blur; each stage quantized to 8 bits.
pub fn apply_cataract(img: &RgbImage, p: &CataractParams) -> Result<RgbImage> {
    p.validate()?;
    let stage = desaturate(img, p.saturation_scale)?;
    let stage = haze(&stage, p.haze_strength)?;
    gaussian_blur(&stage, p.blur_sigma)
}
