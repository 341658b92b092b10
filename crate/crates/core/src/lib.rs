//! Deterministic eye-disorder image degradation, corpus curation and
//! feature-map comparison.
//!
//! The crate is organised around three subsystems:
//!
//! * [`filters`] degrades an [`RgbImage`] the way one of five eye disorders
//!   would (glaucoma, refractive error, AMD, diabetic retinopathy, cataract).
//! * [`corpus`] curates a human / non-human image corpus, splits it and fans
//!   it out into one filtered copy per [`Condition`].
//! * [`metrics`] reads exported feature tensors and computes activation
//!   energy, cosine similarity and difference heatmaps.
//!
//! Every operation is a pure function of its inputs. Randomised filters take
//! an explicit seed, usually obtained from [`derive_seed`], so results do not
//! depend on thread count or processing order.

pub mod blur;
pub mod color;
pub mod corpus;
mod error;
pub mod filters;
pub mod fixtures;
pub mod metrics;
mod raster;
pub mod rng;

pub use error::{Error, Result};
pub use filters::{apply_condition, Condition, FilterParams};

pub use metrics::{FeatureTensor, MetricsRecord};
pub use raster::RgbImage;
pub use rng::{derive_seed, Rng64};
