use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::eval::verification::eer_of_scores;
use crate::eval::ScoredPair;
use crate::pose::{wrap_diff_deg, Pose};
use crate::Result;

/// Conjunctive pose-difference thresholds for pre-matching exclusion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GateThresholds {
    /// Maximum center distance in pixels; `inf` disables the check.
    pub trans: f64,
    /// Maximum absolute direction difference in degrees.
    pub rot: f64,
}

impl GateThresholds {
    /// A gate that keeps every pair.
    pub fn vacuous() -> Self {
        GateThresholds {
            trans: f64::INFINITY,
            rot: 180.0,
        }
    }
}

/// True iff the pair is kept: both center distance and direction difference
/// are within their thresholds.
pub fn pose_gate(a: &Pose, b: &Pose, th_trans: f64, th_rot: f64) -> bool {
    let dx = a.x - b.x;
    let dy = a.y - b.y;
    (dx * dx + dy * dy).sqrt() <= th_trans && wrap_diff_deg(a.theta, b.theta).abs() <= th_rot
}

/// Score after gating: excluded pairs are forced to -inf.
pub(crate) fn gated_score(p: &ScoredPair, g: &GateThresholds) -> f64 {
    if pose_gate(&p.pose_query, &p.pose_candidate, g.trans, g.rot) {
        p.score
    } else {
        f64::NEG_INFINITY
    }
}

/// Grid of candidate thresholds for the exhaustive gate search.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThresholdGrid {
    pub trans: Vec<f64>,
    pub rot: Vec<f64>,
}

impl Default for ThresholdGrid {
    /// trans 10..200 step 10 plus infinity; rot 10..180 step 10.
    fn default() -> Self {
        let mut trans: Vec<f64> = (1..=20).map(|k| k as f64 * 10.0).collect();
        trans.push(f64::INFINITY);
        let rot = (1..=18).map(|k| k as f64 * 10.0).collect();
        ThresholdGrid { trans, rot }
    }
}

/// Exhaustively search the grid for the gate minimizing EER.
///
/// Ties break toward the more permissive gate: larger trans first, then
/// larger rot. Returns the winning thresholds and the achieved EER.
pub fn threshold_search(
    pairs: &[ScoredPair],
    grid: &ThresholdGrid,
) -> Result<(GateThresholds, f64)> {
    if !pairs.iter().any(|p| p.genuine) || !pairs.iter().any(|p| !p.genuine) {
        return Err(Error::DegenerateLabels);
    }
    let mut trans_sorted = grid.trans.clone();
    trans_sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let mut rot_sorted = grid.rot.clone();
    rot_sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());

    let mut best: Option<(GateThresholds, f64)> = None;
    for &tt in &trans_sorted {
        for &tr in &rot_sorted {
            let g = GateThresholds { trans: tt, rot: tr };
            let mut genuine = Vec::new();
            let mut impostor = Vec::new();
            for p in pairs {
                let s = gated_score(p, &g);
                if p.genuine {
                    genuine.push(s);
                } else {
                    impostor.push(s);
                }
            }
            let eer = eer_of_scores(&genuine, &impostor);
            match best {
                Some((_, b)) if eer >= b => {}
                _ => best = Some((g, eer)),
            }
        }
    }
    Ok(best.expect("non-empty grid"))
}
