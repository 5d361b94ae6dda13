//! Rotational velocity conversions between tilt angles rates, relative and
//! absolute tilt phase velocities, and global angular velocity.
//!
//! Every conversion takes the current orientation as a [`TiltAngles`] state
//! `(psi, gamma, alpha)`; the absolute tilt axis angle `gamma + psi` is derived
//! from it. Tilt phase velocities and angular velocities are related smoothly
//! through zero tilt via the functions `S(alpha) = sin(alpha)/alpha` and
//! `C(alpha) = (1 - cos(alpha))/alpha`, so only the tilt angles rates break
//! down there.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::rotation::{dot3, AngularVelocity, Quaternion, TiltAngles, Vec3};
use crate::yaw_tilt::TILT_Z_TOLERANCE;

/// Below this tilt angle, `S`, `C` and `1/S` switch to their Taylor series.
pub const SERIES_THRESHOLD: f64 = 1e-4;
/// Tilt angles closer than this to a multiple of pi (other than zero) are singular.
pub const YAW_SINGULARITY_BAND: f64 = 1e-6;
/// Tilt angles below this leave the tilt axis angle rate undefined.
pub const TILT_AXIS_SINGULARITY_BAND: f64 = 1e-9;

/// Tilt angles velocity `(dpsi, dgamma, dalpha)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TiltAnglesVel {
    pub dpsi: f64,
    pub dgamma: f64,
    pub dalpha: f64,
}

impl TiltAnglesVel {
    pub const fn new(dpsi: f64, dgamma: f64, dalpha: f64) -> Self {
        Self { dpsi, dgamma, dalpha }
    }

    /// Rate of the absolute tilt axis angle, `dgamma + dpsi`.
    pub fn dgamma_abs(&self) -> f64 {
        self.dgamma + self.dpsi
    }
}

/// Relative tilt phase velocity. `dpz` is the fused yaw rate.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TiltPhaseVel {
    pub dpx: f64,
    pub dpy: f64,
    pub dpz: f64,
}

/// Absolute tilt phase velocity. `dpz` is the fused yaw rate.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct AbsTiltPhaseVel {
    pub dpx: f64,
    pub dpy: f64,
    pub dpz: f64,
}

impl TiltPhaseVel {
    pub const fn new(dpx: f64, dpy: f64, dpz: f64) -> Self {
        Self { dpx, dpy, dpz }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.dpx, self.dpy, self.dpz]
    }
}

impl AbsTiltPhaseVel {
    pub const fn new(dpx: f64, dpy: f64, dpz: f64) -> Self {
        Self { dpx, dpy, dpz }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.dpx, self.dpy, self.dpz]
    }
}

/// `S = sin(alpha)/alpha` and `C = (1 - cos(alpha))/alpha`, with `S(0) = 1`, `C(0) = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmoothSC {
    pub s: f64,
    pub c: f64,
}

pub fn smooth_sc(alpha: f64) -> SmoothSC {
    if alpha.abs() < SERIES_THRESHOLD {
        let a2 = alpha * alpha;
        SmoothSC {
            s: 1.0 - a2 / 6.0 * (1.0 - a2 / 20.0),
            c: alpha * (0.5 - a2 / 24.0 * (1.0 - a2 / 30.0)),
        }
    } else {
        let sh = (0.5 * alpha).sin();
        SmoothSC { s: alpha.sin() / alpha, c: 2.0 * sh * sh / alpha }
    }
}

/// `1/S = alpha / sin(alpha)`, smooth through zero.
pub fn inv_smooth_s(alpha: f64) -> f64 {
    if alpha.abs() < SERIES_THRESHOLD {
        let a2 = alpha * alpha;
        1.0 + a2 / 6.0 + 7.0 * a2 * a2 / 360.0
    } else {
        alpha / alpha.sin()
    }
}

fn check_yaw_singularity(alpha: f64) -> Result<()> {
    let k = (alpha / PI).round();
    if k != 0.0 && (alpha - k * PI).abs() < YAW_SINGULARITY_BAND {
        return Err(Error::YawSingularity { alpha });
    }
    Ok(())
}

/// The four vectors whose dot products with the angular velocity give the tilt
/// angles rates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TiltRateBasis {
    pub v_psi: Vec3,
    pub v_gamma: Vec3,
    pub v_alpha: Vec3,
    pub v_gamma_abs: Vec3,
}

/// Valid away from `alpha = 0` and multiples of pi.
pub fn tilt_rate_basis(state: &TiltAngles) -> TiltRateBasis {
    let (sgt, cgt) = state.gamma_abs().sin_cos();
    let (sa, ca) = state.alpha.sin_cos();
    // sin(alpha) / (1 + cos(alpha))
    let th = (0.5 * state.alpha).tan();
    TiltRateBasis {
        v_psi: [th * sgt, -th * cgt, 1.0],
        v_gamma: [-sgt / sa, cgt / sa, 0.0],
        v_alpha: [cgt, sgt, 0.0],
        v_gamma_abs: [-ca * sgt / sa, ca * cgt / sa, 1.0],
    }
}

/// Relative to absolute tilt phase velocity.
pub fn abs_phasevel_from_phasevel(v: &TiltPhaseVel, state: &TiltAngles) -> AbsTiltPhaseVel {
    let (sp, cp) = state.psi.sin_cos();
    let (sgt, cgt) = state.gamma_abs().sin_cos();
    let (ptx, pty) = (state.alpha * cgt, state.alpha * sgt);
    AbsTiltPhaseVel::new(
        cp * v.dpx - sp * v.dpy - pty * v.dpz,
        sp * v.dpx + cp * v.dpy + ptx * v.dpz,
        v.dpz,
    )
}

/// Absolute to relative tilt phase velocity.
pub fn phasevel_from_abs_phasevel(v: &AbsTiltPhaseVel, state: &TiltAngles) -> TiltPhaseVel {
    let (sp, cp) = state.psi.sin_cos();
    let (sg, cg) = state.gamma.sin_cos();
    let (px, py) = (state.alpha * cg, state.alpha * sg);
    TiltPhaseVel::new(
        cp * v.dpx + sp * v.dpy + py * v.dpz,
        -sp * v.dpx + cp * v.dpy - px * v.dpz,
        v.dpz,
    )
}

/// Tilt angles velocity from the relative tilt phase velocity. At zero tilt the
/// tilt axis angle rate is unbounded; the error then carries `dalpha` and `dpsi`.
pub fn tiltvel_from_phasevel(v: &TiltPhaseVel, state: &TiltAngles) -> Result<TiltAnglesVel> {
    let (sg, cg) = state.gamma.sin_cos();
    let dalpha = cg * v.dpx + sg * v.dpy;
    if state.alpha.abs() < TILT_AXIS_SINGULARITY_BAND {
        return Err(Error::TiltAxisSingularity { dalpha, dpsi: v.dpz });
    }
    let dgamma = (cg * v.dpy - sg * v.dpx) / state.alpha;
    Ok(TiltAnglesVel::new(v.dpz, dgamma, dalpha))
}

/// Tilt angles velocity from the absolute tilt phase velocity.
pub fn tiltvel_from_abs_phasevel(v: &AbsTiltPhaseVel, state: &TiltAngles) -> Result<TiltAnglesVel> {
    let (sgt, cgt) = state.gamma_abs().sin_cos();
    let dalpha = cgt * v.dpx + sgt * v.dpy;
    if state.alpha.abs() < TILT_AXIS_SINGULARITY_BAND {
        return Err(Error::TiltAxisSingularity { dalpha, dpsi: v.dpz });
    }
    let dgamma_abs = (cgt * v.dpy - sgt * v.dpx) / state.alpha;
    Ok(TiltAnglesVel::new(v.dpz, dgamma_abs - v.dpz, dalpha))
}

/// Relative tilt phase velocity from tilt angles velocity; stable everywhere.
pub fn phasevel_from_tiltvel(v: &TiltAnglesVel, state: &TiltAngles) -> TiltPhaseVel {
    let (sg, cg) = state.gamma.sin_cos();
    let ag = state.alpha * v.dgamma;
    TiltPhaseVel::new(cg * v.dalpha - sg * ag, sg * v.dalpha + cg * ag, v.dpsi)
}

/// Absolute tilt phase velocity from tilt angles velocity; stable everywhere.
pub fn abs_phasevel_from_tiltvel(v: &TiltAnglesVel, state: &TiltAngles) -> AbsTiltPhaseVel {
    let (sgt, cgt) = state.gamma_abs().sin_cos();
    let ag = state.alpha * v.dgamma_abs();
    AbsTiltPhaseVel::new(cgt * v.dalpha - sgt * ag, sgt * v.dalpha + cgt * ag, v.dpsi)
}

/// Global angular velocity from tilt angles velocity.
pub fn angvel_from_tiltvel(v: &TiltAnglesVel, state: &TiltAngles) -> AngularVelocity {
    let (sgt, cgt) = state.gamma_abs().sin_cos();
    let (sa, ca) = state.alpha.sin_cos();
    AngularVelocity::new(
        cgt * v.dalpha - sgt * sa * v.dgamma,
        sgt * v.dalpha + cgt * sa * v.dgamma,
        v.dpsi + (1.0 - ca) * v.dgamma,
    )
}

/// Tilt angles velocity from global angular velocity.
///
/// Fails at multiples of pi (where the fused yaw is singular, or the tilt wraps
/// a full revolution) and, carrying `dalpha` and `dpsi`, at zero tilt.
pub fn tiltvel_from_angvel(w: &AngularVelocity, state: &TiltAngles) -> Result<TiltAnglesVel> {
    check_yaw_singularity(state.alpha)?;
    let omega = w.to_array();
    let basis = tilt_rate_basis(state);
    let dpsi = dot3(omega, basis.v_psi);
    let dalpha = dot3(omega, basis.v_alpha);
    if state.alpha.abs() < TILT_AXIS_SINGULARITY_BAND {
        return Err(Error::TiltAxisSingularity { dalpha, dpsi });
    }
    Ok(TiltAnglesVel::new(dpsi, dot3(omega, basis.v_gamma), dalpha))
}

fn angvel_from_rates(state: &TiltAngles, dalpha: f64, dgamma_alpha: f64, dpsi: f64) -> AngularVelocity {
    let (sgt, cgt) = state.gamma_abs().sin_cos();
    let SmoothSC { s, c } = smooth_sc(state.alpha);
    AngularVelocity::new(
        cgt * dalpha - s * sgt * dgamma_alpha,
        sgt * dalpha + s * cgt * dgamma_alpha,
        dpsi + c * dgamma_alpha,
    )
}

/// Global angular velocity from the relative tilt phase velocity; smooth
/// through zero tilt, where it equals the absolute tilt phase velocity.
pub fn angvel_from_phasevel(v: &TiltPhaseVel, state: &TiltAngles) -> AngularVelocity {
    if state.alpha == 0.0 {
        let a = abs_phasevel_from_phasevel(v, state);
        return AngularVelocity::new(a.dpx, a.dpy, a.dpz);
    }
    let (sg, cg) = state.gamma.sin_cos();
    let dalpha = cg * v.dpx + sg * v.dpy;
    let dgamma_alpha = cg * v.dpy - sg * v.dpx;
    angvel_from_rates(state, dalpha, dgamma_alpha, v.dpz)
}

/// Global angular velocity from the absolute tilt phase velocity.
pub fn angvel_from_abs_phasevel(v: &AbsTiltPhaseVel, state: &TiltAngles) -> AngularVelocity {
    if state.alpha == 0.0 {
        return AngularVelocity::new(v.dpx, v.dpy, v.dpz);
    }
    let (sgt, cgt) = state.gamma_abs().sin_cos();
    let dalpha = cgt * v.dpx + sgt * v.dpy;
    let dgamma_alpha = cgt * v.dpy - sgt * v.dpx - state.alpha * v.dpz;
    angvel_from_rates(state, dalpha, dgamma_alpha, v.dpz)
}

fn v_psi(state: &TiltAngles) -> Vec3 {
    tilt_rate_basis(state).v_psi
}

/// Relative tilt phase velocity from global angular velocity. Smooth through
/// zero tilt; fails only near multiples of pi.
pub fn phasevel_from_angvel(w: &AngularVelocity, state: &TiltAngles) -> Result<TiltPhaseVel> {
    check_yaw_singularity(state.alpha)?;
    let omega = w.to_array();
    let (sg, cg) = state.gamma.sin_cos();
    let (sgt, cgt) = state.gamma_abs().sin_cos();
    let k = inv_smooth_s(state.alpha);
    let v_x = [cg * cgt + k * sg * sgt, cg * sgt - k * sg * cgt, 0.0];
    let v_y = [sg * cgt - k * cg * sgt, sg * sgt + k * cg * cgt, 0.0];
    Ok(TiltPhaseVel::new(dot3(omega, v_x), dot3(omega, v_y), dot3(omega, v_psi(state))))
}

/// Absolute tilt phase velocity from global angular velocity.
pub fn abs_phasevel_from_angvel(w: &AngularVelocity, state: &TiltAngles) -> Result<AbsTiltPhaseVel> {
    check_yaw_singularity(state.alpha)?;
    let omega = w.to_array();
    let (s, c) = state.gamma_abs().sin_cos();
    let k = state.alpha.cos() * inv_smooth_s(state.alpha);
    let a = state.alpha;
    let v_x = [c * c + k * s * s, c * s * (1.0 - k), -a * s];
    let v_y = [c * s * (1.0 - k), s * s + k * c * c, a * c];
    Ok(AbsTiltPhaseVel::new(dot3(omega, v_x), dot3(omega, v_y), dot3(omega, v_psi(state))))
}

/// Residual `omega . (y, -x, w)` for a tilt rotation `q`. Zero exactly when the
/// angular velocity keeps the rotation on the manifold of tilt rotations.
pub fn tangent_check(w: &AngularVelocity, q: &Quaternion) -> Result<f64> {
    if q.z.abs() > TILT_Z_TOLERANCE {
        return Err(Error::InvalidTilt { z: q.z });
    }
    Ok(dot3(w.to_array(), [q.y, -q.x, q.w]))
}
