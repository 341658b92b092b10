//! Disorder-specific image degradations.
//!
//! | condition        | effect                                   | random |
//! |------------------|------------------------------------------|--------|
//! | glaucoma         | smoothed peripheral vignette             | no     |
//! | refractive error | Gaussian blur with a drawn sigma         | yes    |
//! | AMD              | smoothed central dark scotoma            | no     |
//! | retinopathy      | scattered filled black ellipses          | yes    |
//! | cataract         | desaturation, white haze, wide blur      | no     |
//!
//! The deterministic filters ignore their seed.

mod cataract;
mod masks;
mod params;
mod retinopathy;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::blur::gaussian_blur;
use crate::error::{Error, Result};
use crate::raster::RgbImage;
use crate::rng::Rng64;

pub use cataract::{apply_cataract, desaturate, haze};
pub use masks::{amd_mask, apply_amd, apply_glaucoma, glaucoma_mask};
pub use params::{AmdParams, CataractParams, FilterParams, GlaucomaParams, RefractiveParams, RetinopathyParams};
pub use retinopathy::{apply_retinopathy, retinopathy_patches, Ellipse};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    Normal,
    Amd,
    Cataract,
    Glaucoma,
    #[serde(rename = "refractive")]
    RefractiveError,
    Retinopathy,
}

impl Condition {
    pub const ALL: [Condition; 6] = [
        Condition::Normal,
        Condition::Amd,
        Condition::Cataract,
        Condition::Glaucoma,
        Condition::RefractiveError,
        Condition::Retinopathy,
    ];

    /// The five impairments, in report order.
    pub const DISORDERS: [Condition; 5] = [
        Condition::Amd,
        Condition::Cataract,
        Condition::Glaucoma,
        Condition::RefractiveError,
        Condition::Retinopathy,
    ];

    /// Lower-case name used on the command line and in file paths.
    pub fn slug(self) -> &'static str {
        match self {
            Condition::Normal => "normal",
            Condition::Amd => "amd",
            Condition::Cataract => "cataract",
            Condition::Glaucoma => "glaucoma",
            Condition::RefractiveError => "refractive",
            Condition::Retinopathy => "retinopathy",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Condition::Normal => "Normal",
            Condition::Amd => "AMD",
            Condition::Cataract => "Cataract",
            Condition::Glaucoma => "Glaucoma",
            Condition::RefractiveError => "Refractive Error",
            Condition::Retinopathy => "Retinopathy",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

impl FromStr for Condition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        let found = match lower.as_str() {
            "refractive_error" | "refractive-error" => Some(Condition::RefractiveError),
            other => Condition::ALL.into_iter().find(|c| c.slug() == other),
        };
        found.ok_or_else(|| {
            let valid: Vec<_> = Condition::ALL.iter().map(|c| c.slug()).collect();
            Error::InvalidParameter(format!("unknown condition '{s}', expected one of: {}", valid.join(", ")))
        })
    }
}

/// Blur with a sigma drawn from `[sigma_min, sigma_max)`.
pub fn apply_refractive(img: &RgbImage, p: &RefractiveParams, seed: u64) -> Result<RgbImage> {
    p.validate()?;
    gaussian_blur(img, refractive_sigma(p, seed)?)
}

/// The sigma `apply_refractive` uses for a seed.
pub fn refractive_sigma(p: &RefractiveParams, seed: u64) -> Result<f64> {
    Rng64::new(seed).next_uniform(p.sigma_min, p.sigma_max)
}

/// Applies the filter for `condition`. [`Condition::Normal`] returns a copy of the input.
pub fn apply_condition(img: &RgbImage, condition: Condition, params: &FilterParams, seed: u64) -> Result<RgbImage> {
    match condition {
        Condition::Normal => Ok(img.clone()),
        Condition::Amd => apply_amd(img, &params.amd),
        Condition::Cataract => apply_cataract(img, &params.cataract),
        Condition::Glaucoma => apply_glaucoma(img, &params.glaucoma),
        Condition::RefractiveError => apply_refractive(img, &params.refractive, seed),
        Condition::Retinopathy => apply_retinopathy(img, &params.retinopathy, seed),
    }
}
