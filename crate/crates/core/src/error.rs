use thiserror::Error;

/// Errors produced by the rotation toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("degenerate quaternion (norm {norm:e})")]
    DegenerateQuaternion { norm: f64 },

    #[error("invalid rotation matrix: {0}")]
    InvalidRotation(String),

    #[error("invalid fused angles: sin^2(theta) + sin^2(phi) = {sine_sum} exceeds 1")]
    InvalidFusedAngles { sine_sum: f64 },

    #[error("invalid z-vector: norm {norm} is not 1")]
    InvalidZVector { norm: f64 },

    #[error("not a tilt rotation: quaternion z-component {z:e}")]
    InvalidTilt { z: f64 },

    #[error("frame mismatch: {0}")]
    FrameMismatch(String),

    /// The fused yaw is undefined at a tilt angle of pi.
    #[error("fused yaw singularity at alpha = {alpha}")]
    YawSingularity { alpha: f64 },

    /// The tilt axis angle rate is unbounded at zero tilt. The rates that remain
    /// well defined are carried along.
    #[error("tilt axis angle singularity (alpha = 0); dalpha = {dalpha}, dpsi = {dpsi}")]
    TiltAxisSingularity { dalpha: f64, dpsi: f64 },

    /// No rotation has the requested fused yaw. Every candidate has fused yaw `achievable_yaw`.
    #[error("no solution: every candidate has fused yaw {achievable_yaw}")]
    NoSolution { achievable_yaw: f64 },

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("invalid keyframes: {0}")]
    InvalidKeyframes(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors that stem from the geometry itself (singularities, missing
    /// solutions) rather than from malformed input.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::YawSingularity { .. }
                | Error::TiltAxisSingularity { .. }
                | Error::NoSolution { .. }
                | Error::OutOfRange(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
