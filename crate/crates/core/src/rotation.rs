//! Rotation value types, angle conventions and fused yaw.
//!
//! All rotations are passive descriptions of a body frame `B` relative to a
//! global frame `G` with the z-axis pointing up. A quaternion `q = (w, x, y, z)`
//! and rotation matrix `R` both describe the rotation from `G` to `B`, so the
//! columns of `R` are the axes of `B` expressed in `G`, and the third row of `R`
//! is the global z-axis expressed in `B` (the z-vector).
//!
//! Quaternions are not forced into the `w >= 0` half: `q` and `-q` are the same
//! rotation and every operation here accepts either.

use std::f64::consts::PI;
use std::ops::{Mul, Neg};

use crate::error::{Error, Result};

/// Below this norm a quaternion cannot be normalised.
pub const DEGENERATE_NORM: f64 = 1e-12;
/// Orthonormality tolerance for rotation matrices.
pub const ROTMAT_TOLERANCE: f64 = 1e-9;
/// Band around `w = z = 0` inside which the fused yaw is numerically meaningless.
pub const YAW_SINGULAR_BAND: f64 = 1e-7;

pub(crate) type Vec3 = [f64; 3];

#[inline]
pub(crate) fn dot3(a: Vec3, b: Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

#[inline]
pub(crate) fn cross3(a: Vec3, b: Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

#[inline]
pub(crate) fn norm3(a: Vec3) -> f64 {
    dot3(a, a).sqrt()
}

/// Wraps a finite angle into `(-pi, pi]`.
pub fn wrap_angle(a: f64) -> Result<f64> {
    if !a.is_finite() {
        return Err(Error::InvalidArgument(format!("cannot wrap non-finite angle {a}")));
    }
    Ok(wrap(a))
}

/// Unchecked [`wrap_angle`]. Angles already in range are returned untouched, so
/// the function is exactly idempotent.
#[inline]
pub(crate) fn wrap(a: f64) -> f64 {
    if a > -PI && a <= PI {
        return a;
    }
    let r = a.rem_euclid(2.0 * PI);
    if r > PI {
        r - 2.0 * PI
    } else {
        r
    }
}

/// Quaternion `w + xi + yj + zk`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const IDENTITY: Quaternion = Quaternion { w: 1.0, x: 0.0, y: 0.0, z: 0.0 };

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    /// Rotation by `angle` about `axis`. The axis need not be normalised; a zero
    /// axis gives the identity.
    pub fn from_axis_angle(axis: [f64; 3], angle: f64) -> Self {
        let n = norm3(axis);
        if n == 0.0 {
            return Self::IDENTITY;
        }
        let (s, c) = (0.5 * angle).sin_cos();
        let k = s / n;
        Self::new(c, k * axis[0], k * axis[1], k * axis[2])
    }

    /// Pure z-rotation by `psi`.
    pub fn from_yaw(psi: f64) -> Self {
        let (s, c) = (0.5 * psi).sin_cos();
        Self::new(c, 0.0, 0.0, s)
    }

    /// Rotation vector exponential: rotation by `|v|` about `v`.
    pub fn from_rotation_vector(v: [f64; 3]) -> Self {
        Self::from_axis_angle(v, norm3(v))
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub fn from_array(a: [f64; 4]) -> Self {
        Self::new(a[0], a[1], a[2], a[3])
    }

    pub fn norm_squared(&self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }

    /// Scales to unit norm, preserving direction (and therefore sign).
    pub fn normalize(&self) -> Result<Self> {
        let n = self.norm();
        if !(n > DEGENERATE_NORM) || !n.is_finite() {
            return Err(Error::DegenerateQuaternion { norm: n });
        }
        Ok(self.scale(1.0 / n))
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn scale(&self, k: f64) -> Self {
        Self::new(k * self.w, k * self.x, k * self.y, k * self.z)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z)
    }

    pub fn vector(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    /// Rotates a vector by this (unit) quaternion: `q v q*`.
    pub fn rotate(&self, v: [f64; 3]) -> [f64; 3] {
        let u = self.vector();
        let t = cross3(u, v);
        let t = [2.0 * t[0], 2.0 * t[1], 2.0 * t[2]];
        let ut = cross3(u, t);
        [
            v[0] + self.w * t[0] + ut[0],
            v[1] + self.w * t[1] + ut[1],
            v[2] + self.w * t[2] + ut[2],
        ]
    }

    /// Largest componentwise difference to `other`, taking the smaller of the two
    /// covers.
    pub fn distance_up_to_sign(&self, other: &Self) -> f64 {
        let d = |a: &Self, b: &Self| {
            (a.w - b.w)
                .abs()
                .max((a.x - b.x).abs())
                .max((a.y - b.y).abs())
                .max((a.z - b.z).abs())
        };
        d(self, other).min(d(self, &-*other))
    }

    /// The representative with `w >= 0` (and `z > 0` when `w == 0`).
    pub fn canonical(&self) -> Self {
        if self.w < 0.0 || (self.w == 0.0 && self.z < 0.0) {
            -*self
        } else {
            *self
        }
    }

    pub fn is_finite(&self) -> bool {
        self.w.is_finite() && self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

impl Default for Quaternion {
    fn default() -> Self {
        Self::IDENTITY
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

/// Hamilton product; `a * b` applies `b` first when acting on vectors.
impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, b: Quaternion) -> Quaternion {
        let a = self;
        Quaternion::new(
            a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
        )
    }
}

/// Orthonormal 3x3 matrix with `det = +1`, stored row-major (`m[row][col]`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationMatrix {
    m: [[f64; 3]; 3],
}

impl RotationMatrix {
    pub const IDENTITY: RotationMatrix = RotationMatrix {
        m: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
    };

    /// Validates orthonormality and handedness within [`ROTMAT_TOLERANCE`].
    pub fn new(m: [[f64; 3]; 3]) -> Result<Self> {
        if m.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::InvalidRotation("non-finite entry".into()));
        }
        let r = Self { m };
        let rtr = r.transpose().mul_mat(&r);
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j { 1.0 } else { 0.0 };
                let err = (rtr.m[i][j] - expected).abs();
                if err > ROTMAT_TOLERANCE {
                    return Err(Error::InvalidRotation(format!(
                        "R^T R deviates from identity by {err:e} at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let det = r.determinant();
        if (det - 1.0).abs() > ROTMAT_TOLERANCE {
            return Err(Error::InvalidRotation(format!("determinant {det} is not +1")));
        }
        Ok(r)
    }

    pub(crate) const fn from_rows_unchecked(m: [[f64; 3]; 3]) -> Self {
        Self { m }
    }

    pub fn rows(&self) -> [[f64; 3]; 3] {
        self.m
    }

    /// Entry `R_ij` with one-based indices, matching the usual notation.
    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.m[i - 1][j - 1]
    }

    pub fn transpose(&self) -> Self {
        let m = self.m;
        Self {
            m: [
                [m[0][0], m[1][0], m[2][0]],
                [m[0][1], m[1][1], m[2][1]],
                [m[0][2], m[1][2], m[2][2]],
            ],
        }
    }

    pub fn mul_mat(&self, other: &Self) -> Self {
        let mut out = [[0.0; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = (0..3).map(|k| self.m[i][k] * other.m[k][j]).sum();
            }
        }
        Self { m: out }
    }

    pub fn apply(&self, v: [f64; 3]) -> [f64; 3] {
        [dot3(self.m[0], v), dot3(self.m[1], v), dot3(self.m[2], v)]
    }

    pub fn determinant(&self) -> f64 {
        dot3(self.m[0], cross3(self.m[1], self.m[2]))
    }

    /// Third row: the global z-axis expressed in body coordinates.
    pub fn z_vector(&self) -> [f64; 3] {
        self.m[2]
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.m
            .iter()
            .flatten()
            .zip(other.m.iter().flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Tilt angles `(psi, gamma, alpha)`: fused yaw, tilt axis angle and tilt angle.
///
/// `alpha` is in `[0, pi]` for orientations but may be any non-negative value to
/// describe tilt rotations of more than half a revolution.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TiltAngles {
    pub psi: f64,
    pub gamma: f64,
    pub alpha: f64,
}

impl TiltAngles {
    pub const fn new(psi: f64, gamma: f64, alpha: f64) -> Self {
        Self { psi, gamma, alpha }
    }

    /// Unit tilt axis `(cos gamma, sin gamma, 0)`.
    pub fn tilt_axis(&self) -> [f64; 3] {
        let (s, c) = self.gamma.sin_cos();
        [c, s, 0.0]
    }

    /// Absolute tilt axis angle `gamma + psi`.
    pub fn gamma_abs(&self) -> f64 {
        self.gamma + self.psi
    }
}

/// Which hemisphere the body z-axis lies in relative to the global z-axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Hemisphere {
    #[default]
    Upper,
    Lower,
}

impl Hemisphere {
    /// `sign(v)` with `sign(0) = +1`.
    pub fn from_sign(v: f64) -> Self {
        if v < 0.0 {
            Hemisphere::Lower
        } else {
            Hemisphere::Upper
        }
    }

    pub fn sign(self) -> f64 {
        match self {
            Hemisphere::Upper => 1.0,
            Hemisphere::Lower => -1.0,
        }
    }
}

/// Fused angles `(psi, theta, phi, h)`: fused yaw, fused pitch, fused roll and
/// hemisphere.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FusedAngles {
    pub psi: f64,
    pub theta: f64,
    pub phi: f64,
    pub hemisphere: Hemisphere,
}

impl FusedAngles {
    pub const fn new(psi: f64, theta: f64, phi: f64, hemisphere: Hemisphere) -> Self {
        Self { psi, theta, phi, hemisphere }
    }

    /// `sin^2(theta) + sin^2(phi)`, at most 1 for valid fused angles.
    pub fn sine_sum(&self) -> f64 {
        let (st, sp) = (self.theta.sin(), self.phi.sin());
        st * st + sp * sp
    }
}

/// The global z-axis expressed in body coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl ZVector {
    pub const UP: ZVector = ZVector { x: 0.0, y: 0.0, z: 1.0 };

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn norm(&self) -> f64 {
        norm3(self.to_array())
    }
}

macro_rules! phase_types {
    ($($(#[$doc:meta])* $name:ident { $($field:ident),+ })+) => {$(
        $(#[$doc])*
        #[derive(Debug, Clone, Copy, PartialEq, Default)]
        pub struct $name {
            $(pub $field: f64,)+
        }

        impl $name {
            pub const ZERO: $name = $name { $($field: 0.0,)+ };

            pub const fn new($($field: f64),+) -> Self {
                Self { $($field),+ }
            }
        }
    )+};
}

phase_types! {
    /// Relative 2D tilt phase `(alpha cos gamma, alpha sin gamma)`.
    TiltPhase2 { px, py }
    /// Relative 3D tilt phase `(alpha cos gamma, alpha sin gamma, psi)`.
    TiltPhase3 { px, py, pz }
    /// Absolute 2D tilt phase, using `gamma + psi` as the axis angle.
    AbsTiltPhase2 { px, py }
    /// Absolute 3D tilt phase `(alpha cos(gamma + psi), alpha sin(gamma + psi), psi)`.
    AbsTiltPhase3 { px, py, pz }
}

impl TiltPhase3 {
    pub fn xy(&self) -> TiltPhase2 {
        TiltPhase2::new(self.px, self.py)
    }
}

impl AbsTiltPhase3 {
    pub fn xy(&self) -> AbsTiltPhase2 {
        AbsTiltPhase2::new(self.px, self.py)
    }
}

/// Angular velocity in global coordinates (rad/s).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct AngularVelocity {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl AngularVelocity {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn from_array(a: [f64; 3]) -> Self {
        Self::new(a[0], a[1], a[2])
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

/// True when `w` and `z` are both within [`YAW_SINGULAR_BAND`] of zero, where the
/// fused yaw cannot be determined reliably.
pub fn is_yaw_singular(q: &Quaternion) -> bool {
    q.w.abs() < YAW_SINGULAR_BAND && q.z.abs() < YAW_SINGULAR_BAND
}

/// Fused yaw `wrap(2 atan2(z, w))`. Returns 0 at the singularity `w = z = 0`.
pub fn fused_yaw(q: &Quaternion) -> f64 {
    if q.w == 0.0 && q.z == 0.0 {
        return 0.0;
    }
    wrap(2.0 * q.z.atan2(q.w))
}

pub fn normalize_quat(q: &Quaternion) -> Result<Quaternion> {
    q.normalize()
}

/// Rotation matrix of a unit quaternion.
pub fn rotmat_from_quat(q: &Quaternion) -> RotationMatrix {
    let Quaternion { w, x, y, z } = *q;
    let (xx, yy, zz) = (x * x, y * y, z * z);
    let (xy, xz, yz) = (x * y, x * z, y * z);
    let (wx, wy, wz) = (w * x, w * y, w * z);
    RotationMatrix::from_rows_unchecked([
        [1.0 - 2.0 * (yy + zz), 2.0 * (xy - wz), 2.0 * (xz + wy)],
        [2.0 * (xy + wz), 1.0 - 2.0 * (xx + zz), 2.0 * (yz - wx)],
        [2.0 * (xz - wy), 2.0 * (yz + wx), 1.0 - 2.0 * (xx + yy)],
    ])
}

/// Shepperd's method: pick the largest of `w^2, x^2, y^2, z^2` as the pivot.
pub fn quat_from_rotmat(r: &RotationMatrix) -> Quaternion {
    let m = r.rows();
    let trace = m[0][0] + m[1][1] + m[2][2];
    let candidates = [trace, m[0][0], m[1][1], m[2][2]];
    let pivot = (0..4)
        .max_by(|&a, &b| candidates[a].total_cmp(&candidates[b]))
        .unwrap_or(0);
    let q = match pivot {
        0 => {
            let s = 2.0 * (1.0 + trace).sqrt();
            Quaternion::new(
                0.25 * s,
                (m[2][1] - m[1][2]) / s,
                (m[0][2] - m[2][0]) / s,
                (m[1][0] - m[0][1]) / s,
            )
        }
        1 => {
            let s = 2.0 * (1.0 + m[0][0] - m[1][1] - m[2][2]).sqrt();
            Quaternion::new(
                (m[2][1] - m[1][2]) / s,
                0.25 * s,
                (m[0][1] + m[1][0]) / s,
                (m[0][2] + m[2][0]) / s,
            )
        }
        2 => {
            let s = 2.0 * (1.0 - m[0][0] + m[1][1] - m[2][2]).sqrt();
            Quaternion::new(
                (m[0][2] - m[2][0]) / s,
                (m[0][1] + m[1][0]) / s,
                0.25 * s,
                (m[1][2] + m[2][1]) / s,
            )
        }
        _ => {
            let s = 2.0 * (1.0 - m[0][0] - m[1][1] + m[2][2]).sqrt();
            Quaternion::new(
                (m[1][0] - m[0][1]) / s,
                (m[0][2] + m[2][0]) / s,
                (m[1][2] + m[2][1]) / s,
                0.25 * s,
            )
        }
    };
    let q = q.canonical();
    // One more normalisation absorbs the rounding of the square root.
    q.scale(1.0 / q.norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2};

    #[test]
    fn wrap_examples() {
        assert_eq!(wrap_angle(0.0).unwrap(), 0.0);
        assert_abs_diff_eq!(wrap_angle(3.0 * PI).unwrap(), PI, epsilon = 1e-12);
        assert_eq!(wrap_angle(-PI).unwrap(), PI);
        assert_eq!(wrap_angle(PI).unwrap(), PI);
        assert_abs_diff_eq!(wrap_angle(-3.0 * PI / 2.0).unwrap(), FRAC_PI_2, epsilon = 1e-15);
        assert_eq!(wrap_angle(-4.0 * PI).unwrap(), 0.0);
    }

    #[test]
    fn wrap_rejects_non_finite() {
        assert!(matches!(wrap_angle(f64::NAN), Err(Error::InvalidArgument(_))));
        assert!(matches!(wrap_angle(f64::INFINITY), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn normalize_examples() {
        let q = Quaternion::new(2.0, 0.0, 0.0, 0.0).normalize().unwrap();
        assert_eq!(q, Quaternion::IDENTITY);
        assert_eq!(Quaternion::IDENTITY.normalize().unwrap(), Quaternion::IDENTITY);
        let q = Quaternion::new(1.0, 1.0, 1.0, 1.0).normalize().unwrap();
        assert_eq!(q, Quaternion::new(0.5, 0.5, 0.5, 0.5));
        assert!(matches!(
            Quaternion::new(1e-13, 0.0, 0.0, 0.0).normalize(),
            Err(Error::DegenerateQuaternion { .. })
        ));
    }

    #[test]
    fn fused_yaw_examples() {
        assert_eq!(fused_yaw(&Quaternion::IDENTITY), 0.0);
        let q = Quaternion::new(FRAC_1_SQRT_2, 0.0, 0.0, FRAC_1_SQRT_2);
        assert_abs_diff_eq!(fused_yaw(&q), FRAC_PI_2, epsilon = 1e-15);
        let flip = Quaternion::new(0.0, 1.0, 0.0, 0.0);
        assert_eq!(fused_yaw(&flip), 0.0);
        assert!(is_yaw_singular(&flip));
        assert!(!is_yaw_singular(&q));
        // Negative zero must not produce pi.
        assert_eq!(fused_yaw(&Quaternion::new(-0.0, 0.6, 0.8, 0.0)), 0.0);
    }

    #[test]
    fn fused_yaw_half_turn_is_pi_for_both_covers() {
        let q = Quaternion::from_yaw(PI);
        assert_abs_diff_eq!(fused_yaw(&q), PI, epsilon = 1e-15);
        assert_abs_diff_eq!(fused_yaw(&-q), PI, epsilon = 1e-15);
    }

    #[test]
    fn rotmat_examples() {
        assert_eq!(quat_from_rotmat(&RotationMatrix::IDENTITY), Quaternion::IDENTITY);
        let rz = RotationMatrix::new([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]]).unwrap();
        let q = quat_from_rotmat(&rz);
        assert_abs_diff_eq!(q.w, FRAC_1_SQRT_2, epsilon = 1e-15);
        assert_abs_diff_eq!(q.z, FRAC_1_SQRT_2, epsilon = 1e-15);
        assert_eq!((q.x, q.y), (0.0, 0.0));
    }

    #[test]
    fn rotmat_validation() {
        let bad = [[1.0, 0.1, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
        assert!(matches!(RotationMatrix::new(bad), Err(Error::InvalidRotation(_))));
        let reflection = [[-1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
        assert!(matches!(RotationMatrix::new(reflection), Err(Error::InvalidRotation(_))));
    }

    #[test]
    fn rotmat_from_axis_angle_oracle() {
        // Rodrigues' formula built independently of the quaternion path.
        let axis = [0.3, -0.5, 0.81];
        let n = norm3(axis);
        let k = [axis[0] / n, axis[1] / n, axis[2] / n];
        let angle = 2.1_f64;
        let (s, c) = angle.sin_cos();
        let mut r = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                let id = if i == j { 1.0 } else { 0.0 };
                r[i][j] = c * id + (1.0 - c) * k[i] * k[j];
            }
        }
        r[0][1] -= s * k[2];
        r[0][2] += s * k[1];
        r[1][0] += s * k[2];
        r[1][2] -= s * k[0];
        r[2][0] -= s * k[1];
        r[2][1] += s * k[0];
        let r = RotationMatrix::new(r).unwrap();
        let q = quat_from_rotmat(&r);
        assert!(rotmat_from_quat(&q).max_abs_diff(&r) < 1e-12);
        let expected = Quaternion::from_axis_angle(axis, angle);
        assert!(q.distance_up_to_sign(&expected) < 1e-12);
    }

    #[test]
    fn hamilton_product_composes_rotations() {
        let a = Quaternion::from_axis_angle([1.0, 2.0, 3.0], 0.7);
        let b = Quaternion::from_axis_angle([-1.0, 0.5, 0.2], 1.9);
        let v = [0.3, -0.2, 0.9];
        let lhs = (a * b).rotate(v);
        let rhs = a.rotate(b.rotate(v));
        for i in 0..3 {
            assert_abs_diff_eq!(lhs[i], rhs[i], epsilon = 1e-14);
        }
        let ra = rotmat_from_quat(&a);
        let rb = rotmat_from_quat(&b);
        assert!(ra.mul_mat(&rb).max_abs_diff(&rotmat_from_quat(&(a * b))) < 1e-14);
    }
}
