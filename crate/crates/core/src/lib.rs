//! Differentiable parameter learning (dPL) for hydrologic models.
//!
//! Instead of calibrating process-based model parameters site by site, a
//! neural network (`gA` from static attributes, `gZ` from attributes plus
//! forcing/response time series) is trained to emit the parameters for every
//! site at once, back-propagating a domain-wide loss through a differentiable
//! model (HBV) or through an LSTM surrogate of one (VIC-style soil column).
//! A shuffled-complex-evolution (SCE-UA) calibrator is included as the
//! site-by-site baseline, along with the evaluation metrics and synthetic
//! benchmark domains used to compare the two approaches.
//!
//! Crate layout:
//! - [`autodiff`]: reverse-mode tape over dense `f64` tensors.
//! - [`nets`]: LSTM / MLP building blocks, the `gA` / `gZ` heads, parameter
//!   descaling, checkpoints.
//! - [`hbv`]: differentiable HBV bucket model (generic over plain `f64` or
//!   tape values).
//! - [`vic_lite`]: forward-only VIC-style two-layer soil column.
//! - [`surrogate`]: LSTM emulator of `vic_lite` plus fidelity audit.
//! - [`dpl_train`]: end-to-end dPL training loop, loss, epoch ledger,
//!   evaluation protocols.
//! - [`sceua`]: SCE-UA global optimizer and per-site calibration driver.
//! - [`metrics`]: bias / ubRMSE / correlation / NSE / KGE.
//! - [`dataland`]: synthetic grid domains, basin sets, sampling schemes,
//!   CSV ingestion.

pub mod autodiff;
pub mod dataland;
pub mod dpl_train;
pub mod error;
pub mod hbv;
pub mod metrics;
pub mod nets;
pub mod optim;
pub mod par;
pub mod rng;
pub mod sceua;
pub mod surrogate;
pub mod vic_lite;

pub use error::DplError;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, DplError>;
