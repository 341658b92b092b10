use std::io::Cursor;
use std::path::Path;

use image::{ImageFormat, RgbImage as ImageBuffer};

use crate::error::{Error, Result};

/// 8-bit RGB raster, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RgbImage {
    width: u32,
    height: u32,
    pixels: Vec<[u8; 3]>,
}

impl RgbImage {
    pub fn new(width: u32, height: u32, pixels: Vec<[u8; 3]>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::InvalidParameter(format!(
                "image dimensions must be positive, got {width}x{height}"
            )));
        }
        let expected = width as usize * height as usize;
        if pixels.len() != expected {
            return Err(Error::InvalidParameter(format!(
                "{width}x{height} image needs {expected} pixels, got {}",
                pixels.len()
            )));
        }
        Ok(Self {
            width,
            height,
            pixels,
        })
    }

    pub fn filled(width: u32, height: u32, color: [u8; 3]) -> Result<Self> {
        Self::new(width, height, vec![color; width as usize * height as usize])
    }

    pub fn from_fn(width: u32, height: u32, mut f: impl FnMut(u32, u32) -> [u8; 3]) -> Result<Self> {
        let mut pixels = Vec::with_capacity(width as usize * height as usize);
        for y in 0..height {
            for x in 0..width {
                pixels.push(f(x, y));
            }
        }
        Self::new(width, height, pixels)
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    /// `min(width, height)`, the reference length for all radius fractions.
    pub fn min_side(&self) -> u32 {
        self.width.min(self.height)
    }

    pub fn pixels(&self) -> &[[u8; 3]] {
        &self.pixels
    }

    pub fn pixels_mut(&mut self) -> &mut [[u8; 3]] {
        &mut self.pixels
    }

    pub fn into_pixels(self) -> Vec<[u8; 3]> {
        self.pixels
    }

    pub fn get(&self, x: u32, y: u32) -> [u8; 3] {
        self.pixels[y as usize * self.width as usize + x as usize]
    }

    pub fn set(&mut self, x: u32, y: u32, px: [u8; 3]) {
        let w = self.width as usize;
        self.pixels[y as usize * w + x as usize] = px;
    }

    /// Rec. 601 luma averaged over the image, in channel units.
    pub fn mean_luminance(&self) -> f64 {
        let sum: f64 = self
            .pixels
            .iter()
            .map(|p| 0.299 * f64::from(p[0]) + 0.587 * f64::from(p[1]) + 0.114 * f64::from(p[2]))
            .sum();
        sum / self.pixels.len() as f64
    }

    pub fn decode(bytes: &[u8]) -> std::result::Result<Self, image::ImageError> {
        let img = image::load_from_memory(bytes)?.to_rgb8();
        Ok(Self::from_buffer(img))
    }

    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
        Self::decode(&bytes).map_err(|e| Error::image(path, e))
    }

    /// Lossless PNG encoding. Identical images give identical bytes.
    pub fn encode_png(&self) -> Vec<u8> {
        let mut out = Cursor::new(Vec::new());
        self.to_buffer()
            .write_to(&mut out, ImageFormat::Png)
            .expect("PNG encoding into memory cannot fail for a valid RGB8 buffer");
        out.into_inner()
    }

    pub fn save_png(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        std::fs::write(path, self.encode_png()).map_err(|e| Error::io(path, e))
    }

    fn from_buffer(img: ImageBuffer) -> Self {
        let (width, height) = img.dimensions();
        let pixels = img.pixels().map(|p| p.0).collect();
        Self {
            width,
            height,
            pixels,
        }
    }

    fn to_buffer(&self) -> ImageBuffer {
        let raw = self.pixels.iter().flatten().copied().collect();
        ImageBuffer::from_raw(self.width, self.height, raw).expect("pixel count checked at construction")
    }
}

/// Round half away from zero and saturate into a channel byte.
#[inline]
pub(crate) fn to_channel(v: f64) -> u8 {
    v.round().clamp(0.0, 255.0) as u8
}
