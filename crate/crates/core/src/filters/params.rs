use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn invalid(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

/// Peripheral vignette. Radii are fractions of `min(width, height)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GlaucomaParams {
    pub clear_radius_frac: f64,
    pub fade_radius_frac: f64,
    pub mask_blur_sigma_frac: f64,
}

impl Default for GlaucomaParams {
    fn default() -> Self {
        Self {
            clear_radius_frac: 0.30,
            fade_radius_frac: 0.55,
            mask_blur_sigma_frac: 0.05,
        }
    }
}

impl GlaucomaParams {
    pub fn validate(&self) -> Result<()> {
        check_radii("glaucoma", self.clear_radius_frac, self.fade_radius_frac)?;
        check_sigma_frac("glaucoma", self.mask_blur_sigma_frac)
    }
}

/// Defocus blur whose sigma is drawn uniformly from `[sigma_min, sigma_max)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RefractiveParams {
    pub sigma_min: f64,
    pub sigma_max: f64,
}

impl Default for RefractiveParams {
    fn default() -> Self {
        Self {
            sigma_min: 2.0,
            sigma_max: 6.0,
        }
    }
}

impl RefractiveParams {
    pub fn validate(&self) -> Result<()> {
        if self.sigma_min > 0.0 && self.sigma_min <= self.sigma_max && self.sigma_max.is_finite() {
            Ok(())
        } else {
            Err(invalid(format!(
                "refractive: need 0 < sigma_min <= sigma_max, got {} / {}",
                self.sigma_min, self.sigma_max
            )))
        }
    }
}

/// Central scotoma. Radii are fractions of `min(width, height)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AmdParams {
    pub opaque_radius_frac: f64,
    pub fade_radius_frac: f64,
    pub mask_blur_sigma_frac: f64,
}

impl Default for AmdParams {
    fn default() -> Self {
        Self {
            opaque_radius_frac: 0.18,
            fade_radius_frac: 0.35,
            mask_blur_sigma_frac: 0.04,
        }
    }
}

impl AmdParams {
    pub fn validate(&self) -> Result<()> {
        check_radii("amd", self.opaque_radius_frac, self.fade_radius_frac)?;
        check_sigma_frac("amd", self.mask_blur_sigma_frac)
    }
}

/// Scattered black ellipses. Axis lengths are fractions of `min(width, height)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RetinopathyParams {
    pub count_min: u32,
    pub count_max: u32,
    pub axis_min_frac: f64,
    pub axis_max_frac: f64,
}

impl Default for RetinopathyParams {
    fn default() -> Self {
        Self {
            count_min: 5,
            count_max: 15,
            axis_min_frac: 0.02,
            axis_max_frac: 0.08,
        }
    }
}

impl RetinopathyParams {
    pub fn validate(&self) -> Result<()> {
        if !(1 <= self.count_min && self.count_min <= self.count_max) {
            return Err(invalid(format!(
                "retinopathy: need 1 <= count_min <= count_max, got {} / {}",
                self.count_min, self.count_max
            )));
        }
        if !(0.0 < self.axis_min_frac && self.axis_min_frac <= self.axis_max_frac && self.axis_max_frac < 0.5) {
            return Err(invalid(format!(
                "retinopathy: need 0 < axis_min_frac <= axis_max_frac < 0.5, got {} / {}",
                self.axis_min_frac, self.axis_max_frac
            )));
        }
        Ok(())
    }
}

/// Desaturation, haze towards white, then a wide blur.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CataractParams {
    pub saturation_scale: f64,
    pub haze_strength: f64,
    pub blur_sigma: f64,
}

impl Default for CataractParams {
    fn default() -> Self {
        Self {
            saturation_scale: 0.35,
            haze_strength: 0.15,
            blur_sigma: 4.0,
        }
    }
}

impl CataractParams {
    pub fn validate(&self) -> Result<()> {
        let unit = |v: f64| (0.0..=1.0).contains(&v);
        if !unit(self.saturation_scale) || !unit(self.haze_strength) {
            return Err(invalid(format!(
                "cataract: saturation_scale and haze_strength must lie in [0, 1], got {} / {}",
                self.saturation_scale, self.haze_strength
            )));
        }
        if !(self.blur_sigma.is_finite() && self.blur_sigma >= 0.0) {
            return Err(invalid(format!("cataract: blur_sigma must be >= 0, got {}", self.blur_sigma)));
        }
        Ok(())
    }
}

/// Parameters for all five disorders.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FilterParams {
    pub glaucoma: GlaucomaParams,
    pub refractive: RefractiveParams,
    pub amd: AmdParams,
    pub retinopathy: RetinopathyParams,
    pub cataract: CataractParams,
}

impl FilterParams {
    pub fn validate(&self) -> Result<()> {
        self.glaucoma.validate()?;
        self.refractive.validate()?;
        self.amd.validate()?;
        self.retinopathy.validate()?;
        self.cataract.validate()
    }
}

fn check_radii(name: &str, inner: f64, outer: f64) -> Result<()> {
    if 0.0 < inner && inner < outer && outer <= 1.0 {
        Ok(())
    } else {
        Err(invalid(format!("{name}: need 0 < inner radius < fade radius <= 1, got {inner} / {outer}")))
    }
}

fn check_sigma_frac(name: &str, frac: f64) -> Result<()> {
    if frac.is_finite() && frac >= 0.0 {
        Ok(())
    } else {
        Err(invalid(format!("{name}: mask_blur_sigma_frac must be >= 0, got {frac}")))
    }
}
