//! Dual-modal finger pose estimation.
//!
//! Estimates the 2-D pose (center offset and direction) of a finger from two
//! complementary inputs captured by a smartphone: a high-resolution ridge
//! patch from the under-screen sensor and a low-resolution capacitive contact
//! image from the touch screen. The pipeline covers:
//!
//! - [`codec`] — decoupled probability-distribution pose representation over
//!   frozen bin embeddings, with expectation and argmax decoding.
//! - [`synth`] — paired sample synthesis from plain fingerprints: ridge-patch
//!   cropping, capacitive-grid simulation, augmentation, dataset I/O.
//! - [`nn`] — a small reverse-mode autodiff engine and the layers the model
//!   is built from (grouped convolutions, batch norm, attention, MLPs).
//! - [`model`] — the dual-branch encoder, mixture-of-experts fusion with a
//!   router, distribution heads, the frozen teacher, and checkpointing.
//! - [`training`] — losses (distribution distance, relation-based knowledge
//!   transfer), AdamW with cosine annealing, and the training loop.
//! - [`eval`] — pose-error metrics, ECDF export, and the pose-gated
//!   verification / indexing harness over externally supplied match scores.

pub mod codec;
pub mod error;
pub mod eval;
pub mod model;
pub mod nn;
pub mod pose;
pub mod synth;
pub mod training;

pub use error::Error;
pub use pose::Pose;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
