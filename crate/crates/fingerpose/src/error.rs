use std::path::PathBuf;

/// Errors surfaced by the estimation pipeline.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid range: lo={lo} hi={hi} n={n} (need lo < hi and n >= 2)")]
    InvalidRange { lo: f64, hi: f64, n: usize },

    #[error("value {value} outside table domain [{lo}, {hi}]")]
    OutOfDomain { value: f64, lo: f64, hi: f64 },

    #[error("degenerate distribution: total mass {mass} below threshold")]
    DegenerateDistribution { mass: f64 },

    #[error("direction undefined: |(sin, cos)| = {norm} below threshold")]
    DirectionUndefined { norm: f64 },

    #[error("distribution length {got} does not match table length {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("shape mismatch: expected {expected}, got {got}")]
    ShapeMismatch { expected: String, got: String },

    #[error("crop window out of bounds: center ({cx:.1}, {cy:.1}), angle {angle:.1} deg")]
    OutOfBoundsWindow { cx: f64, cy: f64, angle: f64 },

    #[error("crop rejected: foreground ratio {ratio:.3} below threshold {threshold}")]
    LowForeground { ratio: f64, threshold: f64 },

    #[error("synthesis exhausted after {attempts} rejected draws")]
    SynthesisExhausted { attempts: usize },

    #[error("manifest schema mismatch in record {record}: {reason}")]
    ManifestSchemaMismatch { record: String, reason: String },

    #[error("degenerate feature: zero-norm row {row} (cosine similarity undefined)")]
    DegenerateFeature { row: usize },

    #[error("degenerate labels: need both genuine and impostor pairs")]
    DegenerateLabels,

    #[error("no genuine mate in gallery for query {query}")]
    NoGenuineMate { query: String },

    #[error("empty input: {context}")]
    EmptyInput { context: String },

    #[error("id join mismatch: {context}; offending ids: {ids:?}")]
    JoinMismatch { context: String, ids: Vec<String> },

    #[error("non-finite loss at step {step}: {diagnostics}")]
    NonFiniteLoss { step: usize, diagnostics: String },

    #[error("config error: {0}")]
    Config(String),

    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("image error on {path}: {source}")]
    Image {
        path: PathBuf,
        #[source]
        source: image::ImageError,
    },

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
