//! Turns raw geospatial trajectories plus a land-usage polygon dataset into
//! element interactions, builds a hierarchical context tree over them, trains
//! the tree as a top-down hierarchical classifier, and evaluates element and
//! context prediction against classical extracted-location baselines.
//!
//! Pipeline stages, in order:
//!
//! 1. [`ingest`] — load trajectories (CSV) and land-usage polygons (GeoJSON),
//!    with a grid index for radius queries.
//! 2. [`augment`] — attach to each trajectory point the `n` land-usage
//!    elements it most plausibly interacted with, scored over a sliding
//!    time buffer.
//! 3. [`summarise`] — collapse the augmented stream into `(element, start,
//!    end)` interactions.
//! 4. [`ctree`] — cluster elements into a context tree under a hybrid
//!    semantic/feature similarity, with optional pruning.
//! 5. [`pct`] — train a binary classifier per tree node and predict
//!    elements or contexts top-down.
//! 6. [`evalkit`] — instance generation, chronological splits, correctness
//!    scoring and parameter sweeps.
//!
//! [`locations`] provides the classical visit-extraction + DBSCAN baseline,
//! [`baselines`] the flat one-vs-rest and Markov predictors, and
//! [`synthgen`] a deterministic synthetic world/agent generator used for
//! testing and demos.

pub mod augment;
pub mod baselines;
pub mod ctree;
pub mod error;
pub mod evalkit;
pub mod geo;
pub mod ingest;
pub mod locations;
pub mod pct;
pub mod pipeline;
pub mod summarise;
pub mod synthgen;

pub use error::{Error, Result};
