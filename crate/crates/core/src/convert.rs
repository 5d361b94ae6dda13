//! Conversions between quaternions, rotation matrices, tilt angles, fused
//! angles, z-vectors and the relative/absolute tilt phase spaces.
//!
//! Pairs with a direct closed form (tilt and fused angles, tilt angles and
//! z-vectors, tilt angles and tilt phases) are converted directly; everything
//! else goes through the quaternion.

use crate::error::{Error, Result};
use crate::rotation::{
    fused_yaw, FusedAngles, Hemisphere, Quaternion, RotationMatrix, TiltAngles,
    AbsTiltPhase2, AbsTiltPhase3, TiltPhase2, TiltPhase3, ZVector, rotmat_from_quat,
};

/// Sine sums up to `1 + FUSED_TOLERANCE` are cropped back onto the unit circle.
pub const FUSED_TOLERANCE: f64 = 1e-9;
/// Z-vectors within this distance of unit norm are renormalised.
pub const ZVECTOR_TOLERANCE: f64 = 1e-6;

/// `atan2` with `atan2(0, 0) = 0` regardless of the signs of zero.
#[inline]
pub(crate) fn atan2_or_zero(y: f64, x: f64) -> f64 {
    if y == 0.0 && x == 0.0 {
        0.0
    } else {
        y.atan2(x)
    }
}

/// Tilt angles of a unit quaternion, with `alpha` in `[0, pi]`.
///
/// The tilt axis angle is `atan2(-R31, R32)`. Both of those entries vanish at
/// zero tilt, where `gamma = 0`, and at the fused yaw singularity `w = z = 0`,
/// where `psi = 0` and `gamma` is read from the quaternion itself so that the
/// result still reconstructs `q`.
pub fn tilt_from_quat(q: &Quaternion) -> TiltAngles {
    let Quaternion { w, x, y, z } = *q;
    let psi = fused_yaw(q);
    // -R31 / 2 and R32 / 2
    let a = w * y - x * z;
    let b = w * x + y * z;
    let gamma = if w == 0.0 && z == 0.0 {
        atan2_or_zero(y, x)
    } else {
        atan2_or_zero(a, b)
    };
    // Same as acos(R33) for unit q, without the loss of precision near 0 and pi.
    let alpha = 2.0 * (x * x + y * y).sqrt().atan2((w * w + z * z).sqrt());
    TiltAngles::new(psi, gamma, alpha)
}

/// `q = q_z(psi) * (cos(alpha/2), sin(alpha/2) cos(gamma), sin(alpha/2) sin(gamma), 0)`.
///
/// Any `alpha` is accepted; multiples of a full revolution land on the other
/// cover (e.g. `alpha = 2 pi` gives `-1`).
pub fn quat_from_tilt(t: &TiltAngles) -> Quaternion {
    let (sp, cp) = (0.5 * t.psi).sin_cos();
    let (sa, ca) = (0.5 * t.alpha).sin_cos();
    let (sg, cg) = t.gamma.sin_cos();
    let tilt = Quaternion::new(ca, sa * cg, sa * sg, 0.0);
    Quaternion::new(cp, 0.0, 0.0, sp) * tilt
}

/// Fused angles of a unit quaternion, `h = sign(R33)` with `sign(0) = +1`.
pub fn fused_from_quat(q: &Quaternion) -> FusedAngles {
    let r = rotmat_from_quat(q);
    let theta = (-r.entry(3, 1)).clamp(-1.0, 1.0).asin();
    let phi = r.entry(3, 2).clamp(-1.0, 1.0).asin();
    let r33 = (q.w * q.w + q.z * q.z) - (q.x * q.x + q.y * q.y);
    FusedAngles::new(fused_yaw(q), theta, phi, Hemisphere::from_sign(r33))
}

/// `(sin theta, sin phi, sine sum)` after validating and cropping the sine sum.
fn checked_sines(f: &FusedAngles) -> Result<(f64, f64, f64)> {
    if !(f.psi.is_finite() && f.theta.is_finite() && f.phi.is_finite()) {
        return Err(Error::InvalidArgument("non-finite fused angles".into()));
    }
    let (st, sp) = (f.theta.sin(), f.phi.sin());
    let sum = st * st + sp * sp;
    if sum > 1.0 + FUSED_TOLERANCE {
        return Err(Error::InvalidFusedAngles { sine_sum: sum });
    }
    Ok(crop_sines(st, sp, sum))
}

fn crop_sines(st: f64, sp: f64, sum: f64) -> (f64, f64, f64) {
    if sum > 1.0 {
        let k = sum.sqrt().recip();
        (st * k, sp * k, 1.0)
    } else {
        (st, sp, sum)
    }
}

/// Tilt angles from fused angles, `alpha` in `[0, pi]`.
pub fn tilt_from_fused(f: &FusedAngles) -> Result<TiltAngles> {
    let (st, sp, sum) = checked_sines(f)?;
    let gamma = atan2_or_zero(st, sp);
    let sa = sum.sqrt();
    let ca = f.hemisphere.sign() * (1.0 - sum).max(0.0).sqrt();
    Ok(TiltAngles::new(f.psi, gamma, sa.atan2(ca)))
}

/// Fused angles from tilt angles.
///
/// Fused angles describe orientations, so tilts beyond half a revolution fold
/// back onto the equivalent orientation and the revolution count is lost.
pub fn fused_from_tilt(t: &TiltAngles) -> FusedAngles {
    let (sa, ca) = t.alpha.sin_cos();
    let (sg, cg) = t.gamma.sin_cos();
    FusedAngles::new(
        t.psi,
        (sa * sg).clamp(-1.0, 1.0).asin(),
        (sa * cg).clamp(-1.0, 1.0).asin(),
        Hemisphere::from_sign(ca),
    )
}

pub fn quat_from_fused(f: &FusedAngles) -> Result<Quaternion> {
    Ok(quat_from_tilt(&tilt_from_fused(f)?))
}

/// `(-sin alpha sin gamma, sin alpha cos gamma, cos alpha)`; independent of `psi`.
pub fn zvec_from_tilt(t: &TiltAngles) -> ZVector {
    let (sa, ca) = t.alpha.sin_cos();
    let (sg, cg) = t.gamma.sin_cos();
    ZVector::new(-sa * sg, sa * cg, ca)
}

/// `(-sin theta, sin phi, h sqrt(1 - sin^2 theta - sin^2 phi))`. Sine sums above
/// one are cropped radially so the result is always a unit vector.
pub fn zvec_from_fused(f: &FusedAngles) -> ZVector {
    let (st, sp) = (f.theta.sin(), f.phi.sin());
    let (st, sp, sum) = crop_sines(st, sp, st * st + sp * sp);
    ZVector::new(-st, sp, f.hemisphere.sign() * (1.0 - sum).max(0.0).sqrt())
}

/// Third row of the rotation matrix of `q`.
pub fn zvec_from_quat(q: &Quaternion) -> ZVector {
    let [x, y, z] = rotmat_from_quat(q).z_vector();
    ZVector::new(x, y, z)
}

/// Normalises a z-vector, rejecting anything further than
/// [`ZVECTOR_TOLERANCE`] from unit length.
pub fn checked_zvec(z: &ZVector) -> Result<ZVector> {
    let n = z.norm();
    if !n.is_finite() || (n - 1.0).abs() > ZVECTOR_TOLERANCE {
        return Err(Error::InvalidZVector { norm: n });
    }
    Ok(ZVector::new(z.x / n, z.y / n, z.z / n))
}

/// Tilt angles (with `psi = 0`) of the tilt rotation that has z-vector `z`.
pub fn tilt_from_zvec(z: &ZVector) -> Result<TiltAngles> {
    let z = checked_zvec(z)?;
    let gamma = atan2_or_zero(-z.x, z.y);
    let alpha = z.x.hypot(z.y).atan2(z.z);
    Ok(TiltAngles::new(0.0, gamma, alpha))
}

pub fn phase3_from_tilt(t: &TiltAngles) -> TiltPhase3 {
    let (s, c) = t.gamma.sin_cos();
    TiltPhase3::new(t.alpha * c, t.alpha * s, t.psi)
}

pub fn phase2_from_tilt(t: &TiltAngles) -> TiltPhase2 {
    phase3_from_tilt(t).xy()
}

pub fn abs_phase3_from_tilt(t: &TiltAngles) -> AbsTiltPhase3 {
    let (s, c) = t.gamma_abs().sin_cos();
    AbsTiltPhase3::new(t.alpha * c, t.alpha * s, t.psi)
}

pub fn abs_phase2_from_tilt(t: &TiltAngles) -> AbsTiltPhase2 {
    abs_phase3_from_tilt(t).xy()
}

/// Polar form of the phase: `psi = pz`, `gamma = atan2(py, px)`, `alpha = |(px, py)|`.
pub fn tilt_from_phase3(p: &TiltPhase3) -> TiltAngles {
    TiltAngles::new(p.pz, atan2_or_zero(p.py, p.px), p.px.hypot(p.py))
}

pub fn tilt_from_phase2(p: &TiltPhase2) -> TiltAngles {
    tilt_from_phase3(&TiltPhase3::new(p.px, p.py, 0.0))
}

pub fn tilt_from_abs_phase3(p: &AbsTiltPhase3) -> TiltAngles {
    let gamma_abs = atan2_or_zero(p.py, p.px);
    TiltAngles::new(p.pz, gamma_abs - p.pz, p.px.hypot(p.py))
}

/// Without a yaw the absolute and relative 2D phases coincide.
pub fn tilt_from_abs_phase2(p: &AbsTiltPhase2) -> TiltAngles {
    tilt_from_abs_phase3(&AbsTiltPhase3::new(p.px, p.py, 0.0))
}

/// Relative to absolute phase: rotate `(px, py)` by `+psi`.
pub fn abs_from_rel(p: &TiltPhase3) -> AbsTiltPhase3 {
    let (s, c) = p.pz.sin_cos();
    AbsTiltPhase3::new(c * p.px - s * p.py, s * p.px + c * p.py, p.pz)
}

/// Absolute to relative phase: rotate `(px, py)` by `-psi`.
pub fn rel_from_abs(p: &AbsTiltPhase3) -> TiltPhase3 {
    let (s, c) = p.pz.sin_cos();
    TiltPhase3::new(c * p.px + s * p.py, -s * p.px + c * p.py, p.pz)
}

pub fn phase3_from_quat(q: &Quaternion) -> TiltPhase3 {
    phase3_from_tilt(&tilt_from_quat(q))
}

pub fn quat_from_phase3(p: &TiltPhase3) -> Quaternion {
    quat_from_tilt(&tilt_from_phase3(p))
}

pub fn tilt_from_rotmat(r: &RotationMatrix) -> TiltAngles {
    tilt_from_quat(&crate::rotation::quat_from_rotmat(r))
}
