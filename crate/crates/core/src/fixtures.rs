//! Synthetic test scenes for tests and benchmarks.

use crate::raster::{to_channel, RgbImage};
use crate::rng::Rng64;

/// A colourful, textured scene: a two-axis gradient, a handful of filled
/// discs and rectangles, and mild per-pixel noise. The same seed always gives
/// the same image.
pub fn synthetic_scene(width: u32, height: u32, seed: u64) -> RgbImage {
    let mut rng = Rng64::new(seed);
    let (w, h) = (f64::from(width), f64::from(height));
    let base = [rng.next_unit() * 255.0, rng.next_unit() * 255.0, rng.next_unit() * 255.0];

    struct Shape {
        disc: bool,
        cx: f64,
        cy: f64,
        rx: f64,
        ry: f64,
        color: [f64; 3],
    }
    let shapes: Vec<Shape> = (0..6)
        .map(|_| Shape {
            disc: rng.next_unit() < 0.5,
            cx: rng.next_unit() * w,
            cy: rng.next_unit() * h,
            rx: (0.05 + 0.2 * rng.next_unit()) * w,
            ry: (0.05 + 0.2 * rng.next_unit()) * h,
            color: [rng.next_unit() * 255.0, rng.next_unit() * 255.0, rng.next_unit() * 255.0],
        })
        .collect();

    let mut noise = Rng64::new(seed ^ 0x5eed);
    RgbImage::from_fn(width, height, |x, y| {
        let (fx, fy) = ((f64::from(x) + 0.5) / w, (f64::from(y) + 0.5) / h);
        let mut px = [
            base[0] * (1.0 - fx) + 255.0 * fx * 0.5,
            base[1] * (1.0 - fy) + 40.0 * fy,
            base[2] * 0.5 + 127.0 * fx * fy,
        ];
        for s in &shapes {
            let (dx, dy) = ((f64::from(x) + 0.5 - s.cx) / s.rx, (f64::from(y) + 0.5 - s.cy) / s.ry);
            let inside = if s.disc { dx * dx + dy * dy <= 1.0 } else { dx.abs() <= 1.0 && dy.abs() <= 1.0 };
            if inside {
                px = s.color;
            }
        }
        px.map(|c| to_channel(c + (noise.next_unit() - 0.5) * 16.0))
    })
    .expect("positive dimensions")
}
