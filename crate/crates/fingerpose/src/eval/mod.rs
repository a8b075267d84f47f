//! Pose-accuracy metrics and the pose-gated matching harness.
//!
//! Matching scores are supplied externally (CSV of pair scores); this module
//! evaluates how pose estimates and pose gating change verification and
//! indexing outcomes, and exports summary statistics and ECDF curves.

mod gate;
mod indexing;
mod metrics;
pub mod plot;
mod verification;

pub use gate::{pose_gate, threshold_search, GateThresholds, ThresholdGrid};
pub use indexing::{indexing_report, IndexingCurve, IndexingPoint};
pub use metrics::{ecdf, pose_error, summarize, EcdfPoint, ErrorSummary};
pub use verification::{verification_report, VerificationReport};

use serde::{Deserialize, Serialize};

use crate::pose::Pose;

/// Center / direction deviation between a predicted and a reference pose.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PoseError {
    /// Euclidean center error in pixels.
    pub trans_err: f64,
    /// Absolute angular error in degrees, in [0, 180].
    pub rot_err: f64,
}

/// One externally scored comparison pair with the poses of both sides.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoredPair {
    pub query_id: String,
    pub candidate_id: String,
    pub score: f64,
    pub genuine: bool,
    pub pose_query: Pose,
    pub pose_candidate: Pose,
}
