use std::path::PathBuf;

use crate::filters::Condition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid range: lo {lo} > hi {hi}")]
    InvalidRange { lo: f64, hi: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("not found: {}", .0.display())]
    NotFound(PathBuf),

    #[error("empty class: {0}")]
    EmptyClass(String),

    #[error("io error on {}: {cause}", path.display())]
    Io { path: PathBuf, cause: std::io::Error },

    #[error("image error on {}: {cause}", path.display())]
    Image { path: PathBuf, cause: image::ImageError },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("format error: {0}")]
    Format(String),

    #[error("truncated tensor: {0}")]
    Truncation(String),

    #[error("invalid tensor data: {0}")]
    Data(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// Failure while handling one condition's input.
    #[error("{condition}: {cause}")]
    Condition { condition: Condition, cause: Box<Error> },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, cause: std::io::Error) -> Self {
        Error::Io { path: path.into(), cause }
    }

    pub(crate) fn image(path: impl Into<PathBuf>, cause: image::ImageError) -> Self {
        Error::Image { path: path.into(), cause }
    }
}
