//! Detection and scoring toolkit for photographs of 40 cm indoor archery
//! target faces.
//!
//! The pipeline stages are:
//!
//! 1. **rectify** – map a perspective-distorted photograph into a canonical
//!    metric frame (2048 px ≙ 400 mm) using the face's color boundaries.
//! 2. **heatmap** – ground-truth arrow-center heatmap/offset rendering and the
//!    training losses with analytic gradients.
//! 3. **decode** – sigmoid + max-pool NMS peak extraction with optional
//!    sub-pixel offset refinement and a minimum-separation filter.
//! 4. **scoring** – official line-cutting ring scores from arrow positions.
//! 5. **evaluate** – Hungarian matching, detection metrics, downstream archery
//!    metrics, and the decoder grid search.
//! 6. **synth** – synthetic target-face generator used as the ground-truth
//!    oracle for end-to-end tests.
//!
//! File formats (HMP1 tensors, annotation/config JSON) live in [`formats`].

pub mod decode;
pub mod error;
pub mod evaluate;
pub mod face;
pub mod formats;
pub mod heatmap;
pub mod rectify;
pub mod scoring;
pub mod synth;

pub use error::Error;
pub use face::{px_to_mm, CanonicalFrame, Detection, PointMm, PointPx, TargetFaceSpec};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
