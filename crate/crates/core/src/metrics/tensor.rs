//! `C x H x W` float32 activation maps and the TNSR exchange format.
//!
//! Layout, all little-endian:
//!
//! ```text
//! offset  size  field
//!      0     4  magic "TNSR"
//!      4     4  u32 version = 1
//!      8     4  u32 ndim = 3
//!     12    12  u32 dims C, H, W
//!     24     4  u32 dtype code, 1 = float32
//!     28  4*CHW f32 values, channel outermost, row-major
//! ```

use std::path::Path;

use crate::error::{Error, Result};

pub const MAGIC: &[u8; 4] = b"TNSR";
pub const VERSION: u32 = 1;
pub const DTYPE_F32: u32 = 1;
pub const HEADER_LEN: usize = 28;

#[derive(Debug, Clone, PartialEq)]
pub struct FeatureTensor {
    channels: usize,
    height: usize,
    width: usize,
    values: Vec<f32>,
}

impl FeatureTensor {
    /// Fails on a value count other than `C*H*W` or on any non-finite value.
    pub fn new(channels: usize, height: usize, width: usize, values: Vec<f32>) -> Result<Self> {
        let expected = channels
            .checked_mul(height)
            .and_then(|n| n.checked_mul(width))
            .ok_or_else(|| Error::Shape(format!("{channels}x{height}x{width} overflows")))?;
        if values.len() != expected {
            return Err(Error::Shape(format!(
                "{channels}x{height}x{width} tensor needs {expected} values, got {}",
                values.len()
            )));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::Data(format!("non-finite value {} at index {i}", values[i])));
        }
        Ok(Self {
            channels,
            height,
            width,
            values,
        })
    }

    pub fn zeros(channels: usize, height: usize, width: usize) -> Self {
        Self::new(channels, height, width, vec![0.0; channels * height * width]).expect("zeros are finite")
    }

    pub fn shape(&self) -> (usize, usize, usize) {
        (self.channels, self.height, self.width)
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn values(&self) -> &[f32] {
        &self.values
    }

    pub fn get(&self, c: usize, y: usize, x: usize) -> f32 {
        self.values[(c * self.height + y) * self.width + x]
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(HEADER_LEN + 4 * self.values.len());
        out.extend_from_slice(MAGIC);
        for field in [VERSION, 3, self.channels as u32, self.height as u32, self.width as u32, DTYPE_F32] {
            out.extend_from_slice(&field.to_le_bytes());
        }
        for v in &self.values {
            out.extend_from_slice(&v.to_le_bytes());
        }
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        if bytes.len() >= 4 && &bytes[..4] != MAGIC {
            return Err(Error::Format(format!("bad magic {:?}, expected \"TNSR\"", String::from_utf8_lossy(&bytes[..4]))));
        }
        if bytes.len() < HEADER_LEN {
            return Err(Error::Truncation(format!("{} bytes is shorter than the {HEADER_LEN}-byte header", bytes.len())));
        }
        let field = |i: usize| u32::from_le_bytes(bytes[4 + 4 * i..8 + 4 * i].try_into().unwrap());
        let (version, ndim, dtype) = (field(0), field(1), field(5));
        if version != VERSION {
            return Err(Error::Format(format!("unsupported version {version}")));
        }
        if ndim != 3 {
            return Err(Error::Format(format!("expected 3 dimensions, got {ndim}")));
        }
        if dtype != DTYPE_F32 {
            return Err(Error::Format(format!("unsupported dtype code {dtype}")));
        }
        let (c, h, w) = (field(2) as usize, field(3) as usize, field(4) as usize);
        let payload = &bytes[HEADER_LEN..];
        let expected = (c as u128) * (h as u128) * (w as u128) * 4;
        if payload.len() as u128 != expected {
            return Err(Error::Truncation(format!(
                "{c}x{h}x{w} tensor needs {expected} payload bytes, found {}",
                payload.len()
            )));
        }
        let values = payload
            .chunks_exact(4)
            .map(|b| f32::from_le_bytes([b[0], b[1], b[2], b[3]]))
            .collect();
        Self::new(c, h, w, values)
    }
}

pub fn read_tensor(path: &Path) -> Result<FeatureTensor> {
    let bytes = std::fs::read(path).map_err(|e| {
        if e.kind() == std::io::ErrorKind::NotFound {
            Error::NotFound(path.to_path_buf())
        } else {
            Error::io(path, e)
        }
    })?;
    FeatureTensor::from_bytes(&bytes)
}

pub fn write_tensor(tensor: &FeatureTensor, path: &Path) -> Result<()> {
    std::fs::write(path, tensor.to_bytes()).map_err(|e| Error::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_value_layout() {
        let t = FeatureTensor::new(1, 1, 1, vec![1.0]).unwrap();
        let bytes = t.to_bytes();
        assert_eq!(bytes.len(), HEADER_LEN + 4);
        assert_eq!(&bytes[..4], b"TNSR");
        assert_eq!(&bytes[4..8], &[1, 0, 0, 0]);
        assert_eq!(&bytes[8..12], &[3, 0, 0, 0]);
        assert_eq!(&bytes[12..24], &[1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0]);
        assert_eq!(&bytes[24..28], &[1, 0, 0, 0]);
        assert_eq!(&bytes[28..], &[0x00, 0x00, 0x80, 0x3F]);
    }

    #[test]
    fn malformed_inputs() {
        let good = FeatureTensor::new(2, 1, 2, vec![1.0, -2.0, 3.5, 0.0]).unwrap().to_bytes();

        let mut bad_magic = good.clone();
        bad_magic[..4].copy_from_slice(b"XXXX");
        assert!(matches!(FeatureTensor::from_bytes(&bad_magic), Err(Error::Format(_))));

        assert!(matches!(FeatureTensor::from_bytes(&good[..good.len() - 1]), Err(Error::Truncation(_))));
        assert!(matches!(FeatureTensor::from_bytes(&good[..10]), Err(Error::Truncation(_))));
        let mut long = good.clone();
        long.extend_from_slice(&[0; 4]);
        assert!(matches!(FeatureTensor::from_bytes(&long), Err(Error::Truncation(_))));

        let mut version = good.clone();
        version[4] = 2;
        assert!(matches!(FeatureTensor::from_bytes(&version), Err(Error::Format(_))));
        let mut dtype = good.clone();
        dtype[24] = 2;
        assert!(matches!(FeatureTensor::from_bytes(&dtype), Err(Error::Format(_))));

        let mut nan = good.clone();
        nan[28..32].copy_from_slice(&f32::NAN.to_le_bytes());
        assert!(matches!(FeatureTensor::from_bytes(&nan), Err(Error::Data(_))));
        let mut inf = good;
        inf[32..36].copy_from_slice(&f32::INFINITY.to_le_bytes());
        assert!(matches!(FeatureTensor::from_bytes(&inf), Err(Error::Data(_))));
    }

    #[test]
    fn constructor_checks() {
        assert!(matches!(FeatureTensor::new(2, 2, 2, vec![0.0; 7]), Err(Error::Shape(_))));
        assert!(FeatureTensor::new(0, 3, 3, vec![]).is_ok());
        assert_eq!(FeatureTensor::zeros(2, 3, 4).get(1, 2, 3), 0.0);
    }

    #[test]
    fn file_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.tnsr");
        let t = FeatureTensor::new(3, 2, 2, (0..12).map(|i| i as f32 * -0.37).collect()).unwrap();
        write_tensor(&t, &path).unwrap();
        assert_eq!(read_tensor(&path).unwrap(), t);
        assert!(matches!(read_tensor(&dir.path().join("nope.tnsr")), Err(Error::NotFound(_))));
    }
}
