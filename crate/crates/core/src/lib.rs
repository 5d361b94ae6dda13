//! Tilt rotations and the tilt phase space.
//!
//! Rotations split uniquely into a fused yaw about the global z-axis followed by
//! a tilt about a horizontal axis. This crate converts between quaternions,
//! rotation matrices, tilt angles, fused angles, z-vectors and tilt phases,
//! composes and decomposes yaw and tilt, works in the tilt phase vector space,
//! converts rotational velocities, and interpolates.

pub mod convert;
pub mod error;
pub mod interp;
pub mod io;
pub mod kinematics;
pub mod phase;
pub mod referenced;
pub mod rotation;
pub mod selfcheck;
pub mod verify;
pub mod yaw_tilt;

pub use error::{Error, Result};
pub use rotation::{
    fused_yaw, is_yaw_singular, quat_from_rotmat, rotmat_from_quat, wrap_angle, AbsTiltPhase2, AbsTiltPhase3,
    AngularVelocity, FusedAngles, Hemisphere, Quaternion, RotationMatrix, TiltAngles, TiltPhase2, TiltPhase3,
    ZVector,
};
