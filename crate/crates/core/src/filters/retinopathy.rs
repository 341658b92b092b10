use crate::error::Result;
use crate::raster::RgbImage;
use crate::rng::Rng64;

use super::params::RetinopathyParams;

/// A rotated ellipse in continuous image coordinates (pixel `(x, y)` has its
/// center at `(x + 0.5, y + 0.5)`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ellipse {
    pub center_x: f64,
    pub center_y: f64,
    pub semi_a: f64,
    pub semi_b: f64,
    pub theta: f64,
}

impl Ellipse {
    pub fn contains(&self, px: f64, py: f64) -> bool {
        let (dx, dy) = (px - self.center_x, py - self.center_y);
        let (sin, cos) = self.theta.sin_cos();
        let u = (dx * cos + dy * sin) / self.semi_a;
        let v = (-dx * sin + dy * cos) / self.semi_b;
        u * u + v * v <= 1.0
    }

    pub fn contains_pixel(&self, x: u32, y: u32) -> bool {
        self.contains(f64::from(x) + 0.5, f64::from(y) + 0.5)
    }
}

/// Draws the patch list for an image of the given size.
///
/// Draw order: the count, then per ellipse `center_x, center_y, a, b, theta`.
pub fn retinopathy_patches(width: u32, height: u32, p: &RetinopathyParams, seed: u64) -> Result<Vec<Ellipse>> {
    p.validate()?;
    let mut rng = Rng64::new(seed);
    let m = f64::from(width.min(height));
    let drawn = rng
        .next_uniform(f64::from(p.count_min), f64::from(p.count_max) + 1.0)?
        .floor() as u32;
    let count = drawn.clamp(p.count_min, p.count_max);
    let (axis_lo, axis_hi) = (p.axis_min_frac * m, p.axis_max_frac * m);

    (0..count)
        .map(|_| {
            Ok(Ellipse {
                center_x: rng.next_uniform(0.0, f64::from(width))?,
                center_y: rng.next_uniform(0.0, f64::from(height))?,
                semi_a: rng.next_uniform(axis_lo, axis_hi)?,
                semi_b: rng.next_uniform(axis_lo, axis_hi)?,
                theta: rng.next_uniform(0.0, std::f64::consts::PI)?,
            })
        })
        .collect()
}

/// Fills every drawn ellipse with black.
pub fn apply_retinopathy(img: &RgbImage, p: &RetinopathyParams, seed: u64) -> Result<RgbImage> {
    let patches = retinopathy_patches(img.width(), img.height(), p, seed)?;
    let mut out = img.clone();
    for e in &patches {
        let reach = e.semi_a.max(e.semi_b);
        let x0 = (e.center_x - reach).floor().max(0.0) as u32;
        let y0 = (e.center_y - reach).floor().max(0.0) as u32;
        let x1 = ((e.center_x + reach).ceil() as u32).min(img.width());
        let y1 = ((e.center_y + reach).ceil() as u32).min(img.height());
        for y in y0..y1 {
            for x in x0..x1 {
                if e.contains_pixel(x, y) {
                    out.set(x, y, [0, 0, 0]);
                }
            }
        }
    }
    Ok(out)
}
