use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::eval::PoseError;
use crate::pose::{wrap_diff_deg, Pose};
use crate::Result;

/// Translation and rotation deviation between two poses.
pub fn pose_error(pred: &Pose, gt: &Pose) -> PoseError {
    let dx = pred.x - gt.x;
    let dy = pred.y - gt.y;
    PoseError {
        trans_err: (dx * dx + dy * dy).sqrt(),
        rot_err: wrap_diff_deg(pred.theta, gt.theta).abs(),
    }
}

/// Aggregate statistics over a population of pose errors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorSummary {
    pub count: usize,
    pub mean_trans: f64,
    pub mean_rot: f64,
    pub median_trans: f64,
    pub median_rot: f64,
    pub p95_trans: f64,
    pub p95_rot: f64,
}

/// Mean / median / 95th-percentile translation and rotation errors.
pub fn summarize(errors: &[PoseError]) -> Result<ErrorSummary> {
    if errors.is_empty() {
        return Err(Error::EmptyInput {
            context: "summarize over zero pose errors".into(),
        });
    }
    let n = errors.len() as f64;
    let mean_trans = errors.iter().map(|e| e.trans_err).sum::<f64>() / n;
    let mean_rot = errors.iter().map(|e| e.rot_err).sum::<f64>() / n;
    let mut trans: Vec<f64> = errors.iter().map(|e| e.trans_err).collect();
    let mut rot: Vec<f64> = errors.iter().map(|e| e.rot_err).collect();
    trans.sort_by(|a, b| a.partial_cmp(b).unwrap());
    rot.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(ErrorSummary {
        count: errors.len(),
        mean_trans,
        mean_rot,
        median_trans: percentile(&trans, 0.5),
        median_rot: percentile(&rot, 0.5),
        p95_trans: percentile(&trans, 0.95),
        p95_rot: percentile(&rot, 0.95),
    })
}

/// Linear-interpolation percentile over an already sorted slice.
fn percentile(sorted: &[f64], q: f64) -> f64 {
    let pos = q * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    if lo == hi {
        sorted[lo]
    } else {
        let frac = pos - lo as f64;
        sorted[lo] * (1.0 - frac) + sorted[hi] * frac
    }
}

/// One step of an empirical cumulative distribution function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EcdfPoint {
    pub value: f64,
    pub fraction: f64,
}

/// Right-continuous ECDF: one point per distinct value, at the cumulative
/// fraction of samples `<=` that value. Ends at 1.0.
pub fn ecdf(values: &[f64]) -> Result<Vec<EcdfPoint>> {
    if values.is_empty() {
        return Err(Error::EmptyInput {
            context: "ecdf over zero values".into(),
        });
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = sorted.len() as f64;
    let mut points = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let v = sorted[i];
        let mut j = i;
        while j + 1 < sorted.len() && sorted[j + 1] == v {
            j += 1;
        }
        points.push(EcdfPoint {
            value: v,
            fraction: (j + 1) as f64 / n,
        });
        i = j + 1;
    }
    Ok(points)
}

/// Serialize an ECDF as a two-column CSV.
pub fn ecdf_to_csv(points: &[EcdfPoint]) -> String {
    let mut out = String::from("value,fraction\n");
    for p in points {
        out.push_str(&format!("{},{}\n", p.value, p.fraction));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn identical_poses_zero_error() {
        let p = Pose::new(5.0, -3.0, 42.0);
        let e = pose_error(&p, &p);
        assert_relative_eq!(e.trans_err, 0.0);
        assert_relative_eq!(e.rot_err, 0.0);
    }

    #[test]
    fn rotation_error_wraps() {
        let a = Pose::new(0.0, 0.0, 179.0);
        let b = Pose::new(0.0, 0.0, -179.0);
        assert_relative_eq!(pose_error(&a, &b).rot_err, 2.0);
        assert_relative_eq!(pose_error(&b, &a).rot_err, 2.0);
    }

    #[test]
    fn three_four_five_triangle() {
        let a = Pose::new(3.0, 4.0, 0.0);
        let b = Pose::new(0.0, 0.0, 0.0);
        assert_relative_eq!(pose_error(&a, &b).trans_err, 5.0);
    }

    #[test]
    fn summarize_single_and_pair() {
        let one = summarize(&[PoseError {
            trans_err: 10.0,
            rot_err: 5.0,
        }])
        .unwrap();
        assert_relative_eq!(one.mean_trans, 10.0);
        assert_relative_eq!(one.mean_rot, 5.0);

        let two = summarize(&[
            PoseError {
                trans_err: 0.0,
                rot_err: 0.0,
            },
            PoseError {
                trans_err: 10.0,
                rot_err: 10.0,
            },
        ])
        .unwrap();
        assert_relative_eq!(two.mean_trans, 5.0);
        assert_relative_eq!(two.mean_rot, 5.0);
    }

    #[test]
    fn summarize_matches_naive_sums() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let errors: Vec<PoseError> = (0..1000)
            .map(|_| PoseError {
                trans_err: rng.gen_range(0.0..100.0),
                rot_err: rng.gen_range(0.0..180.0),
            })
            .collect();
        let s = summarize(&errors).unwrap();
        let mut t = 0.0;
        let mut r = 0.0;
        for e in &errors {
            t += e.trans_err;
            r += e.rot_err;
        }
        assert_relative_eq!(s.mean_trans, t / 1000.0, epsilon = 1e-9);
        assert_relative_eq!(s.mean_rot, r / 1000.0, epsilon = 1e-9);
    }

    #[test]
    fn summarize_empty_rejected() {
        assert!(summarize(&[]).is_err());
    }

    #[test]
    fn ecdf_small_cases() {
        let pts = ecdf(&[1.0, 2.0, 3.0]).unwrap();
        assert_eq!(pts.len(), 3);
        assert_relative_eq!(pts[0].fraction, 1.0 / 3.0);
        assert_relative_eq!(pts[1].fraction, 2.0 / 3.0);
        assert_relative_eq!(pts[2].fraction, 1.0);

        let flat = ecdf(&[7.0, 7.0, 7.0]).unwrap();
        assert_eq!(flat.len(), 1);
        assert_relative_eq!(flat[0].value, 7.0);
        assert_relative_eq!(flat[0].fraction, 1.0);
    }

    #[test]
    fn ecdf_nondecreasing_ends_at_one() {
        let vals = [4.0, 1.0, 2.0, 2.0, 9.0, 0.5];
        let pts = ecdf(&vals).unwrap();
        for w in pts.windows(2) {
            assert!(w[0].value < w[1].value);
            assert!(w[0].fraction < w[1].fraction);
        }
        assert_relative_eq!(pts.last().unwrap().fraction, 1.0);
    }

    #[test]
    fn ecdf_uniform_close_to_identity() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let vals: Vec<f64> = (0..10_000).map(|_| rng.gen_range(0.0..1.0)).collect();
        let pts = ecdf(&vals).unwrap();
        let max_dev = pts
            .iter()
            .map(|p| (p.fraction - p.value).abs())
            .fold(0.0, f64::max);
        assert!(max_dev <= 0.03, "max deviation {max_dev}");
    }
}
