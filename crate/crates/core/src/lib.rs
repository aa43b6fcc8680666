//! Solar irradiance forecasting over multiple intra-day horizons.
//!
//! The crate covers the full pipeline: SURFRAD ground-measurement ingestion,
//! solar geometry and Bird clear-sky irradiance, clear-sky-index dataset
//! construction, recurrent-network (RNN/LSTM) training with exact
//! backpropagation through time, and RMSE benchmark reporting.
//!
//! Modules, in pipeline order:
//!
//! - [`surfrad`]: daily station file parsing, series merging, QC summaries,
//!   and the canonical per-station-year CSV format.
//! - [`clearsky`]: solar position, the Bird & Hulstrom (1981) clear-sky
//!   model, and tilted-surface irradiance composition.
//! - [`dataset`]: hourly aggregation, clear-sky-index targets, imputation,
//!   outlier removal, normalization, and sliding-window tensor construction.
//! - [`neural`]: dense tensors, RNN/LSTM cells, sequence forward pass, MSE
//!   loss, hand-derived BPTT gradients, and SGD/Adam optimizers.
//! - [`trainer`]: training orchestration, checkpoints, and inference.
//! - [`evaluate`]: persistence baselines, RMSE reports, and literature
//!   comparison tables.
//! - [`synth`]: deterministic synthetic station generator for end-to-end
//!   testing and demos.

pub mod clearsky;
pub mod dataset;
pub mod error;
pub mod evaluate;
pub mod neural;
pub mod stations;
pub mod surfrad;
pub mod synth;
pub mod trainer;

pub use error::{Error, Result};
pub use stations::StationMeta;
