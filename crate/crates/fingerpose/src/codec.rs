//! Decoupled probability-distribution pose codec.
//!
//! Each pose scalar (x, y, cos θ, sin θ) is represented as an independent
//! discrete distribution over frozen, uniformly spaced bin centers. Encoding
//! places a normalized Gaussian over the bins; decoding takes either the
//! probability-weighted mean of the bin centers or the argmax center. The
//! direction is carried by (sin, cos) and recovered with the two-argument
//! arctangent, so the two synonymous ends of the angle axis never meet.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::pose::{normalize_deg, Pose};
use crate::Result;

/// Number of segments for the position (x, y) tables.
pub const POS_SEGMENTS: usize = 256;
/// Number of segments for the trigonometric (cos, sin) tables.
pub const TRIG_SEGMENTS: usize = 120;
/// Position domain half-width in pixels.
pub const POS_RANGE: f64 = 256.0;

/// Gaussian width for position targets, in bin widths.
pub const SIGMA_POS: f64 = 3.5;
/// Gaussian width for trigonometric targets, in bin widths.
pub const SIGMA_TRIG: f64 = 2.5;

const MASS_EPS: f64 = 1e-12;
const DIRECTION_EPS: f64 = 1e-6;
const DOMAIN_TOL: f64 = 1e-9;

/// Frozen bin-center values for one pose component.
///
/// Centers are `lo + (t + 0.5) * step` with `step = (hi - lo) / n`, so a
/// uniform distribution decodes to the domain midpoint.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassEmbeddingTable {
    values: Vec<f64>,
    lo: f64,
    hi: f64,
    n: usize,
}

impl ClassEmbeddingTable {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Width of one segment.
    pub fn step(&self) -> f64 {
        (self.hi - self.lo) / self.n as f64
    }
}

/// Four discrete probability vectors describing one pose.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PoseDistributionSet {
    pub dx: Vec<f64>,
    pub dy: Vec<f64>,
    pub dcos: Vec<f64>,
    pub dsin: Vec<f64>,
}

impl PoseDistributionSet {
    pub fn components(&self) -> [&[f64]; 4] {
        [&self.dx, &self.dy, &self.dcos, &self.dsin]
    }
}

/// The four frozen tables used by every encoder/decoder in the pipeline.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CodecTables {
    pub pos: ClassEmbeddingTable,
    pub trig: ClassEmbeddingTable,
    /// Gaussian widths in bin units; converted via `step()` when encoding.
    pub sigma_pos: f64,
    pub sigma_trig: f64,
}

impl Default for CodecTables {
    fn default() -> Self {
        CodecTables {
            pos: build_embeddings(-POS_RANGE, POS_RANGE, POS_SEGMENTS)
                .expect("default position table"),
            trig: build_embeddings(-1.0, 1.0, TRIG_SEGMENTS).expect("default trig table"),
            sigma_pos: SIGMA_POS,
            sigma_trig: SIGMA_TRIG,
        }
    }
}

/// How a distribution is turned back into a scalar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecodeMode {
    /// Probability-weighted mean of the bin centers.
    Sum,
    /// Center of the highest-response bin.
    Max,
}

/// Build a frozen table of `n` uniformly spaced bin centers over `[lo, hi]`.
pub fn build_embeddings(lo: f64, hi: f64, n: usize) -> Result<ClassEmbeddingTable> {
    if !(lo < hi) || n < 2 {
        return Err(Error::InvalidRange { lo, hi, n });
    }
    let step = (hi - lo) / n as f64;
    let values = (0..n).map(|t| lo + (t as f64 + 0.5) * step).collect();
    Ok(ClassEmbeddingTable { values, lo, hi, n })
}

/// Encode a scalar as a normalized Gaussian over the table's bin centers.
///
/// `sigma` is in the same units as `v`. The result is nonnegative and sums
/// to 1.
pub fn encode_value(v: f64, table: &ClassEmbeddingTable, sigma: f64) -> Result<Vec<f64>> {
    if !v.is_finite() || v < table.lo - DOMAIN_TOL || v > table.hi + DOMAIN_TOL {
        return Err(Error::OutOfDomain {
            value: v,
            lo: table.lo,
            hi: table.hi,
        });
    }
    assert!(sigma > 0.0, "sigma must be positive");
    let inv = 1.0 / (2.0 * sigma * sigma);
    let mut d: Vec<f64> = table
        .values
        .iter()
        .map(|&e| (-(v - e) * (v - e) * inv).exp())
        .collect();
    let total: f64 = d.iter().sum();
    for w in &mut d {
        *w /= total;
    }
    Ok(d)
}

/// Decode a nonnegative vector to the probability-weighted mean bin center.
///
/// Unnormalized inputs are accepted; normalization happens internally, so the
/// result is invariant to positive rescaling.
pub fn decode_value(d: &[f64], table: &ClassEmbeddingTable) -> Result<f64> {
    check_dist(d, table)?;
    let mass: f64 = d.iter().sum();
    if mass < MASS_EPS {
        return Err(Error::DegenerateDistribution { mass });
    }
    let weighted: f64 = d.iter().zip(&table.values).map(|(&w, &e)| w * e).sum();
    Ok(weighted / mass)
}

/// Decode to the center of the highest-response bin; ties go to the lowest
/// index.
pub fn decode_value_argmax(d: &[f64], table: &ClassEmbeddingTable) -> Result<f64> {
    check_dist(d, table)?;
    let mass: f64 = d.iter().sum();
    if mass < MASS_EPS {
        return Err(Error::DegenerateDistribution { mass });
    }
    let mut best = 0usize;
    for (i, &w) in d.iter().enumerate() {
        if w > d[best] {
            best = i;
        }
    }
    Ok(table.values[best])
}

fn check_dist(d: &[f64], table: &ClassEmbeddingTable) -> Result<()> {
    if d.len() != table.n {
        return Err(Error::LengthMismatch {
            expected: table.n,
            got: d.len(),
        });
    }
    if d.iter().any(|&w| w < 0.0 || !w.is_finite()) {
        return Err(Error::DegenerateDistribution {
            mass: f64::NAN,
        });
    }
    Ok(())
}

/// Encode a full pose into its four target distributions.
///
/// `sigma_pos` and `sigma_trig` are in bin widths (multiplied by each table's
/// step before encoding), matching the coordinate-classification convention
/// the target widths were tuned in.
pub fn pose_to_targets(
    p: &Pose,
    tables: &CodecTables,
    sigma_pos: f64,
    sigma_trig: f64,
) -> Result<PoseDistributionSet> {
    let sp = sigma_pos * tables.pos.step();
    let st = sigma_trig * tables.trig.step();
    let (s, c) = p.theta.to_radians().sin_cos();
    Ok(PoseDistributionSet {
        dx: encode_value(p.x, &tables.pos, sp)?,
        dy: encode_value(p.y, &tables.pos, sp)?,
        dcos: encode_value(c, &tables.trig, st)?,
        dsin: encode_value(s, &tables.trig, st)?,
    })
}

/// Recover a pose from four predicted distributions.
///
/// Positions decode with the requested mode; the direction is the arctangent
/// of the decoded (sin, cos) pair, with no unit-norm requirement.
pub fn dists_to_pose_with(
    d: &PoseDistributionSet,
    tables: &CodecTables,
    mode: DecodeMode,
) -> Result<Pose> {
    let dec = |v: &[f64], t: &ClassEmbeddingTable| match mode {
        DecodeMode::Sum => decode_value(v, t),
        DecodeMode::Max => decode_value_argmax(v, t),
    };
    let x = dec(&d.dx, &tables.pos)?;
    let y = dec(&d.dy, &tables.pos)?;
    let c = dec(&d.dcos, &tables.trig)?;
    let s = dec(&d.dsin, &tables.trig)?;
    let norm = (s * s + c * c).sqrt();
    if norm < DIRECTION_EPS {
        return Err(Error::DirectionUndefined { norm });
    }
    let theta = normalize_deg(s.atan2(c).to_degrees());
    Ok(Pose { x, y, theta })
}

/// [`dists_to_pose_with`] using expectation decoding.
pub fn dists_to_pose(d: &PoseDistributionSet, tables: &CodecTables) -> Result<Pose> {
    dists_to_pose_with(d, tables, DecodeMode::Sum)
}
