//! Separable Gaussian blur with clamp-to-edge boundaries.
//!
//! Both passes run in `f64`; the only quantization happens when the result is
//! stored back into a [`RgbImage`].

use crate::error::{Error, Result};
use crate::raster::{to_channel, RgbImage};

/// Kernel radius for a given sigma: `ceil(3 * sigma)`.
pub fn kernel_radius(sigma: f64) -> usize {
    (3.0 * sigma).ceil() as usize
}

/// Normalized weights `exp(-i^2 / (2 sigma^2))` for `i` in `[-r, r]`.
pub fn gaussian_kernel(sigma: f64) -> Result<Vec<f64>> {
    check_sigma(sigma)?;
    if sigma == 0.0 {
        return Ok(vec![1.0]);
    }
    let r = kernel_radius(sigma) as i64;
    let denom = 2.0 * sigma * sigma;
    let mut weights: Vec<f64> = (-r..=r).map(|i| (-((i * i) as f64) / denom).exp()).collect();
    let total: f64 = weights.iter().sum();
    weights.iter_mut().for_each(|w| *w /= total);
    Ok(weights)
}

fn check_sigma(sigma: f64) -> Result<()> {
    if sigma.is_finite() && sigma >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("blur sigma must be finite and >= 0, got {sigma}")))
    }
}

/// Blurs an interleaved `width x height x channels` plane of floats.
pub fn blur_plane(data: &[f64], width: usize, height: usize, channels: usize, sigma: f64) -> Result<Vec<f64>> {
    assert_eq!(data.len(), width * height * channels, "plane size mismatch");
    let kernel = gaussian_kernel(sigma)?;
    if kernel.len() == 1 {
        return Ok(data.to_vec());
    }
    let r = (kernel.len() / 2) as isize;
    let clamp = |v: isize, n: usize| v.clamp(0, n as isize - 1) as usize;

    let mut horizontal = vec![0.0; data.len()];
    for y in 0..height {
        let row = &data[y * width * channels..(y + 1) * width * channels];
        let out = &mut horizontal[y * width * channels..(y + 1) * width * channels];
        for x in 0..width {
            for (k, w) in kernel.iter().enumerate() {
                let sx = clamp(x as isize + k as isize - r, width);
                for c in 0..channels {
                    out[x * channels + c] += w * row[sx * channels + c];
                }
            }
        }
    }

    let mut vertical = vec![0.0; data.len()];
    let stride = width * channels;
    for y in 0..height {
        let out = &mut vertical[y * stride..(y + 1) * stride];
        for (k, w) in kernel.iter().enumerate() {
            let sy = clamp(y as isize + k as isize - r, height);
            let src = &horizontal[sy * stride..(sy + 1) * stride];
            for (o, s) in out.iter_mut().zip(src) {
                *o += w * s;
            }
        }
    }
    Ok(vertical)
}

/// Gaussian blur of every channel. `sigma == 0` returns the input unchanged.
pub fn gaussian_blur(img: &RgbImage, sigma: f64) -> Result<RgbImage> {
    check_sigma(sigma)?;
    if sigma == 0.0 {
        return Ok(img.clone());
    }
    let (w, h) = (img.width() as usize, img.height() as usize);
    let plane: Vec<f64> = img.pixels().iter().flatten().map(|&c| f64::from(c)).collect();
    let blurred = blur_plane(&plane, w, h, 3, sigma)?;
    let pixels = blurred
        .chunks_exact(3)
        .map(|c| [to_channel(c[0]), to_channel(c[1]), to_channel(c[2])])
        .collect();
    RgbImage::new(img.width(), img.height(), pixels)
}
