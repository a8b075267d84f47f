use serde::{Deserialize, Serialize};

/// 2-D fingerprint pose: center offset in pixels at 500 ppi plus a direction.
///
/// `x` grows rightward and `y` downward (image convention). `theta` is kept
/// normalized to `[-180, 180)` degrees; rotations follow the same convention
/// everywhere in the crate (positive angle rotates `+x` toward `+y`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Pose {
    pub x: f64,
    pub y: f64,
    pub theta: f64,
}

impl Pose {
    pub fn new(x: f64, y: f64, theta: f64) -> Self {
        Pose {
            x,
            y,
            theta: normalize_deg(theta),
        }
    }

    /// Whether the pose lies inside the encodable codec domain.
    pub fn in_codec_domain(&self) -> bool {
        self.x.is_finite()
            && self.y.is_finite()
            && self.theta.is_finite()
            && self.x.abs() <= 256.0
            && self.y.abs() <= 256.0
    }
}

/// Normalize an angle in degrees into `[-180, 180)`.
pub fn normalize_deg(theta: f64) -> f64 {
    let t = theta - 360.0 * ((theta + 180.0) / 360.0).floor();
    // floor can land exactly on 180 for inputs like -180 - 1e-14
    if t >= 180.0 {
        t - 360.0
    } else {
        t
    }
}

/// Signed smallest difference `a - b` in degrees, wrapped into `(-180, 180]`.
pub fn wrap_diff_deg(a: f64, b: f64) -> f64 {
    let d = normalize_deg(a - b);
    if d == -180.0 {
        180.0
    } else {
        d
    }
}

/// Rotate a 2-D vector by `angle_deg` (positive rotates `+x` toward `+y`).
pub fn rotate_vec(v: (f64, f64), angle_deg: f64) -> (f64, f64) {
    let a = angle_deg.to_radians();
    let (s, c) = a.sin_cos();
    (v.0 * c - v.1 * s, v.0 * s + v.1 * c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn normalize_covers_wraparound() {
        assert_relative_eq!(normalize_deg(0.0), 0.0);
        assert_relative_eq!(normalize_deg(180.0), -180.0);
        assert_relative_eq!(normalize_deg(-180.0), -180.0);
        assert_relative_eq!(normalize_deg(540.0), -180.0);
        assert_relative_eq!(normalize_deg(359.0), -1.0);
        assert_relative_eq!(normalize_deg(-359.0), 1.0);
        assert_relative_eq!(normalize_deg(179.9), 179.9, max_relative = 1e-12);
    }

    #[test]
    fn wrap_diff_symmetric_magnitude() {
        assert_relative_eq!(wrap_diff_deg(179.0, -179.0), -2.0);
        assert_relative_eq!(wrap_diff_deg(-179.0, 179.0), 2.0);
        assert_relative_eq!(wrap_diff_deg(0.0, 180.0), 180.0);
        assert_relative_eq!(wrap_diff_deg(180.0, 0.0), 180.0);
    }

    #[test]
    fn rotation_is_counterclockwise_in_xy() {
        let (x, y) = rotate_vec((1.0, 0.0), 90.0);
        assert_relative_eq!(x, 0.0, epsilon = 1e-12);
        assert_relative_eq!(y, 1.0, epsilon = 1e-12);
    }
}
