use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::eval::gate::{gated_score, GateThresholds};
use crate::eval::ScoredPair;
use crate::Result;

/// Verification metrics over one (optionally gated) score population.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub eer: f64,
    pub eer_threshold: f64,
    pub fnmr_at_fmr_1e3: f64,
    pub fnmr_at_fmr_1e4: f64,
    pub genuine_count: usize,
    pub impostor_count: usize,
    /// Pairs the gate excluded (their scores were forced to -inf).
    pub gated_out: usize,
}

/// Internal score table split by label. Gated-out pairs keep their slot with
/// a -inf score so misses are counted, never hidden.
struct ScoreSets {
    genuine: Vec<f64>,
    impostor: Vec<f64>,
    gated_out: usize,
}

fn apply_gate(pairs: &[ScoredPair], gate: Option<&GateThresholds>) -> Result<ScoreSets> {
    let mut genuine = Vec::new();
    let mut impostor = Vec::new();
    let mut gated_out = 0;
    for p in pairs {
        let s = match gate {
            Some(g) => gated_score(p, g),
            None => p.score,
        };
        if s == f64::NEG_INFINITY {
            gated_out += 1;
        }
        if p.genuine {
            genuine.push(s);
        } else {
            impostor.push(s);
        }
    }
    if genuine.is_empty() || impostor.is_empty() {
        return Err(Error::DegenerateLabels);
    }
    Ok(ScoreSets {
        genuine,
        impostor,
        gated_out,
    })
}

/// Operating point at one decision threshold (match iff score >= threshold).
#[derive(Debug, Clone, Copy)]
struct RocPoint {
    threshold: f64,
    fmr: f64,
    fnmr: f64,
}

/// Enumerate operating points at every distinct finite score, between a
/// reject-all sentinel and the accept-all limit. FMR is nondecreasing along
/// the returned list.
fn roc_points(sets: &ScoreSets) -> Vec<RocPoint> {
    let mut thresholds: Vec<f64> = sets
        .genuine
        .iter()
        .chain(&sets.impostor)
        .copied()
        .filter(|s| s.is_finite())
        .collect();
    thresholds.sort_by(|a, b| a.partial_cmp(b).unwrap());
    thresholds.dedup();

    let rate = |scores: &[f64], t: f64, accept: bool| -> f64 {
        let n = scores.len() as f64;
        let hits = scores
            .iter()
            .filter(|&&s| if accept { s >= t } else { s < t })
            .count() as f64;
        hits / n
    };

    let mut points = Vec::with_capacity(thresholds.len() + 2);
    // reject-all sentinel (threshold above every finite score)
    points.push(RocPoint {
        threshold: f64::INFINITY,
        fmr: 0.0,
        fnmr: 1.0,
    });
    for &t in thresholds.iter().rev() {
        points.push(RocPoint {
            threshold: t,
            fmr: rate(&sets.impostor, t, true),
            fnmr: rate(&sets.genuine, t, false),
        });
    }
    // accept-all limit
    points.push(RocPoint {
        threshold: f64::NEG_INFINITY,
        fmr: 1.0,
        fnmr: 0.0,
    });
    points
}

/// Equal error rate: (FMR + FNMR) / 2 at the threshold minimizing |FMR -
/// FNMR|; among equal gaps the higher threshold (earlier point) wins.
fn eer_of(points: &[RocPoint]) -> (f64, f64) {
    let mut best = &points[0];
    let mut best_gap = (best.fmr - best.fnmr).abs();
    for p in &points[1..] {
        let gap = (p.fmr - p.fnmr).abs();
        if gap < best_gap {
            best = p;
            best_gap = gap;
        }
    }
    ((best.fmr + best.fnmr) / 2.0, best.threshold)
}

/// FNMR at a target FMR by linear interpolation along the ROC.
fn fnmr_at_fmr(points: &[RocPoint], target: f64) -> f64 {
    debug_assert!(points.first().map(|p| p.fmr) == Some(0.0));
    let mut prev = points[0];
    for p in &points[1..] {
        if p.fmr >= target {
            if p.fmr == prev.fmr {
                return p.fnmr;
            }
            let frac = (target - prev.fmr) / (p.fmr - prev.fmr);
            return prev.fnmr + (p.fnmr - prev.fnmr) * frac;
        }
        prev = *p;
    }
    prev.fnmr
}

/// EER plus FNMR at FMR in {1e-3, 1e-4} over gated scores.
pub fn verification_report(
    pairs: &[ScoredPair],
    gate: Option<&GateThresholds>,
) -> Result<VerificationReport> {
    let sets = apply_gate(pairs, gate)?;
    let points = roc_points(&sets);
    let (eer, eer_threshold) = eer_of(&points);
    Ok(VerificationReport {
        eer,
        eer_threshold,
        fnmr_at_fmr_1e3: fnmr_at_fmr(&points, 1e-3),
        fnmr_at_fmr_1e4: fnmr_at_fmr(&points, 1e-4),
        genuine_count: sets.genuine.len(),
        impostor_count: sets.impostor.len(),
        gated_out: sets.gated_out,
    })
}

/// EER of raw score/label slices; shared by the gate threshold search.
pub(crate) fn eer_of_scores(genuine: &[f64], impostor: &[f64]) -> f64 {
    let sets = ScoreSets {
        genuine: genuine.to_vec(),
        impostor: impostor.to_vec(),
        gated_out: 0,
    };
    eer_of(&roc_points(&sets)).0
}
