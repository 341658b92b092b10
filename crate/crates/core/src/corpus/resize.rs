use crate::raster::{to_channel, RgbImage};

/// Bilinear resize to `target x target` with half-pixel-center sampling.
/// Aspect ratio is not preserved; a same-size resize is the identity.
pub fn resize_image(img: &RgbImage, target: u32) -> RgbImage {
    assert!(target >= 1, "resize target must be positive");
    let (sw, sh) = (img.width(), img.height());
    let xs = sample_positions(sw, target);
    let ys = sample_positions(sh, target);

    let mut pixels = Vec::with_capacity(target as usize * target as usize);
    for &(y0, y1, fy) in &ys {
        for &(x0, x1, fx) in &xs {
            let (a, b, c, d) = (img.get(x0, y0), img.get(x1, y0), img.get(x0, y1), img.get(x1, y1));
            let mut px = [0u8; 3];
            for ch in 0..3 {
                let top = f64::from(a[ch]) * (1.0 - fx) + f64::from(b[ch]) * fx;
                let bottom = f64::from(c[ch]) * (1.0 - fx) + f64::from(d[ch]) * fx;
                px[ch] = to_channel(top * (1.0 - fy) + bottom * fy);
            }
            pixels.push(px);
        }
    }
    RgbImage::new(target, target, pixels).expect("target is positive")
}

/// For each output index: the two source neighbours and the weight of the second.
fn sample_positions(src: u32, dst: u32) -> Vec<(u32, u32, f64)> {
    let scale = f64::from(src) / f64::from(dst);
    (0..dst)
        .map(|i| {
            let s = ((f64::from(i) + 0.5) * scale - 0.5).clamp(0.0, f64::from(src - 1));
            let lo = s.floor() as u32;
            let hi = (lo + 1).min(src - 1);
            (lo, hi, s - f64::from(lo))
        })
        .collect()
}
