//! Hexcone RGB <-> HSV conversion on 8-bit channels.

use crate::raster::to_channel;

/// Returns `(h, s, v)` with `h` in degrees `[0, 360)` and `s`, `v` in `[0, 1]`.
/// Grays (including black) get hue 0.
pub fn rgb_to_hsv(r: u8, g: u8, b: u8) -> (f64, f64, f64) {
    let (r, g, b) = (f64::from(r) / 255.0, f64::from(g) / 255.0, f64::from(b) / 255.0);
    let max = r.max(g).max(b);
    let min = r.min(g).min(b);
    let chroma = max - min;

    let h = if chroma == 0.0 {
        0.0
    } else if max == r {
        60.0 * ((g - b) / chroma).rem_euclid(6.0)
    } else if max == g {
        60.0 * ((b - r) / chroma + 2.0)
    } else {
        60.0 * ((r - g) / chroma + 4.0)
    };
    let s = if max == 0.0 { 0.0 } else { chroma / max };
    (if h >= 360.0 { h - 360.0 } else { h }, s, max)
}

/// Unquantized inverse of [`rgb_to_hsv`], channels in `[0, 1]`.
pub fn hsv_to_rgb_f64(h: f64, s: f64, v: f64) -> [f64; 3] {
    let chroma = v * s;
    let sector = h.rem_euclid(360.0) / 60.0;
    let x = chroma * (1.0 - ((sector % 2.0) - 1.0).abs());
    let (r, g, b) = match sector as u32 {
        0 => (chroma, x, 0.0),
        1 => (x, chroma, 0.0),
        2 => (0.0, chroma, x),
        3 => (0.0, x, chroma),
        4 => (x, 0.0, chroma),
        _ => (chroma, 0.0, x),
    };
    let m = v - chroma;
    [r + m, g + m, b + m]
}

pub fn hsv_to_rgb(h: f64, s: f64, v: f64) -> [u8; 3] {
    hsv_to_rgb_f64(h, s, v).map(|c| to_channel(c * 255.0))
}
