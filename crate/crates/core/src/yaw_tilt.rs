//! Splitting rotations into fused yaw and tilt components, and building
//! rotations back up from them.

use crate::convert::{checked_zvec, quat_from_tilt, tilt_from_fused};
use crate::error::{Error, Result};
use crate::rotation::{fused_yaw, wrap, FusedAngles, Hemisphere, Quaternion, TiltAngles, ZVector};

/// Largest quaternion z-component still accepted as a pure tilt.
pub const TILT_Z_TOLERANCE: f64 = 1e-9;
/// `F` below this is treated as the degenerate case `alpha_G + alpha_C = pi`.
pub const MISMATCH_F_THRESHOLD: f64 = 1e-9;
/// Yaw agreement required to accept the degenerate case as solvable.
pub const MISMATCH_YAW_TOLERANCE: f64 = 1e-6;

/// `q = yaw * tilt` with `yaw` a pure z-rotation and `tilt` a pure tilt.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Decomposition {
    pub yaw: Quaternion,
    pub tilt: Quaternion,
}

/// Splits `q` into `q_z(psi) * q_t`.
///
/// `yaw` is returned in the `w >= 0` form `(cos(psi/2), 0, 0, sin(psi/2))`; the
/// sign of `tilt` follows so that the product reproduces `q` exactly. The tilt
/// factor always has an exact zero z-component. At the yaw singularity the yaw
/// factor is the identity and the tilt factor is `q` itself.
pub fn decompose(q: &Quaternion) -> Decomposition {
    let Quaternion { w, x, y, z } = *q;
    let n = w.hypot(z);
    if n == 0.0 {
        return Decomposition { yaw: Quaternion::IDENTITY, tilt: *q };
    }
    let (a, c) = (w / n, z / n);
    // conj(q_y) * q with the z-component cancelling identically
    let tilt = Quaternion::new(n, a * x + c * y, a * y - c * x, 0.0);
    let yaw = Quaternion::new(a, 0.0, 0.0, c);
    if a < 0.0 || (a == 0.0 && c < 0.0) {
        Decomposition { yaw: -yaw, tilt: -tilt }
    } else {
        Decomposition { yaw, tilt }
    }
}

/// A tilt rotation component in any of its parameterisations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Tilt {
    Angles { gamma: f64, alpha: f64 },
    Fused { theta: f64, phi: f64, hemisphere: Hemisphere },
    Quat(Quaternion),
}

impl Tilt {
    /// Quaternion of the tilt rotation.
    pub fn to_quat(&self) -> Result<Quaternion> {
        match *self {
            Tilt::Angles { gamma, alpha } => Ok(quat_from_tilt(&TiltAngles::new(0.0, gamma, alpha))),
            Tilt::Fused { theta, phi, hemisphere } => {
                let t = tilt_from_fused(&FusedAngles::new(0.0, theta, phi, hemisphere))?;
                Ok(quat_from_tilt(&t))
            }
            Tilt::Quat(q) => {
                let q = q.normalize()?;
                if q.z.abs() > TILT_Z_TOLERANCE {
                    return Err(Error::InvalidTilt { z: q.z });
                }
                Ok(q)
            }
        }
    }
}

/// `q_z(psi) * q_t`.
pub fn compose_yaw_tilt(psi: f64, tilt: &Tilt) -> Result<Quaternion> {
    Ok(Quaternion::from_yaw(psi) * tilt.to_quat()?)
}

/// Builds the rotation with fused yaw `psi` whose tilt component has z-vector `z`,
/// constructing the quaternion components directly.
pub fn compose_yaw_zvec(psi: f64, z: &ZVector) -> Result<Quaternion> {
    let z = checked_zvec(z)?;
    let n_wz = 0.5 * (1.0 + z.z);
    // 1 - n_wz, computed without cancellation when z.z is close to 1
    let one_minus = if z.z > 0.0 {
        0.5 * (z.x * z.x + z.y * z.y) / (1.0 + z.z)
    } else {
        0.5 * (1.0 - z.z)
    };
    let root = n_wz.sqrt();
    let (qw, qz, xt, yt) = if psi == 0.0 {
        (root, 0.0, z.y, -z.x)
    } else {
        let (s, c) = (0.5 * psi).sin_cos();
        let (qw, qz) = (c * root, s * root);
        (qw, qz, z.x * qz + z.y * qw, z.y * qz - z.x * qw)
    };
    let d = xt * xt + yt * yt;
    if d == 0.0 {
        // Either no tilt at all, or the yaw singularity.
        if n_wz > 0.5 {
            return Quaternion::new(qw, 0.0, 0.0, qz).normalize();
        }
        return Ok(Quaternion::new(0.0, 1.0, 0.0, 0.0));
    }
    let a = (one_minus / d).sqrt();
    Ok(Quaternion::new(qw, a * xt, a * yt, qz))
}

/// Result of composing a yaw relative to one frame with a tilt relative to another.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MismatchedComposition {
    /// Rotation from `H` to the constructed frame `B`.
    pub q_hb: Quaternion,
    /// Rotation from `G` to `B`.
    pub q_gb: Quaternion,
    /// Set in the degenerate case where every rotation with the requested tilt
    /// has the requested yaw; the returned rotation is one of infinitely many.
    pub multiple_solutions: bool,
}

/// Finds the frame `B` with fused yaw `psi_g` relative to `G` and the same tilt
/// component relative to `H` as `q_hc`.
///
/// Fails with [`Error::NoSolution`] when `alpha_G + alpha_C = pi` and `psi_g`
/// differs from the one yaw every candidate shares.
pub fn compose_mismatched(psi_g: f64, q_gh: &Quaternion, q_hc: &Quaternion) -> Result<MismatchedComposition> {
    let g = q_gh.normalize()?;
    let c = q_hc.normalize()?;

    let ta = g.x * c.x + g.y * c.y;
    let tb = g.x * c.y - g.y * c.x;
    let tc = g.w * c.z + g.z * c.w;
    let td = g.w * c.w - g.z * c.z;

    let (big_a, big_b, big_c, big_d) = (td - ta, tb - tc, tb + tc, td + ta);
    let (s, co) = (0.5 * psi_g).sin_cos();
    let big_g = big_d * co - big_b * s;
    let big_h = big_a * s - big_c * co;
    let f = big_g.hypot(big_h);

    if f < MISMATCH_F_THRESHOLD {
        let achievable_yaw = fused_yaw(&(g * c));
        if wrap(psi_g - achievable_yaw).abs() > MISMATCH_YAW_TOLERANCE {
            return Err(Error::NoSolution { achievable_yaw });
        }
        return Ok(MismatchedComposition { q_hb: c, q_gb: g * c, multiple_solutions: true });
    }

    let referenced_yaw = Quaternion::new(big_g / f, 0.0, 0.0, big_h / f);
    let q_hb = referenced_yaw * c;
    Ok(MismatchedComposition { q_hb, q_gb: g * q_hb, multiple_solutions: false })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convert::{tilt_from_quat, zvec_from_quat, zvec_from_tilt};
    use crate::rotation::rotmat_from_quat;
    use crate::verify::RotationSampler;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};

    fn close(a: &Quaternion, b: &Quaternion, tol: f64) -> bool {
        a.distance_up_to_sign(b) < tol
    }

    #[test]
    fn decompose_examples() {
        let d = decompose(&Quaternion::IDENTITY);
        assert_eq!((d.yaw, d.tilt), (Quaternion::IDENTITY, Quaternion::IDENTITY));

        let q = Quaternion::new(0.5, -0.5, 0.5, 0.5);
        let d = decompose(&q);
        assert!(close(&d.yaw, &Quaternion::from_yaw(FRAC_PI_2), 1e-15));
        assert!(close(&d.tilt, &Quaternion::new(FRAC_1_SQRT_2, 0.0, FRAC_1_SQRT_2, 0.0), 1e-15));
        // oracle: multiplying the factors back
        assert!(close(&(d.yaw * d.tilt), &q, 1e-15));

        let flip = Quaternion::new(0.0, 1.0, 0.0, 0.0);
        let d = decompose(&flip);
        assert_eq!((d.yaw, d.tilt), (Quaternion::IDENTITY, flip));
    }

    #[test]
    fn decompose_matches_rotation_matrix_form() {
        let mut s = RotationSampler::new(21);
        for _ in 0..200 {
            let q = s.next_quat();
            let d = decompose(&q);
            let t = tilt_from_quat(&q);
            let (sg, cg) = t.gamma.sin_cos();
            let (sa, ca) = t.alpha.sin_cos();
            let rt = [
                [cg * cg + ca * sg * sg, cg * sg * (1.0 - ca), sa * sg],
                [cg * sg * (1.0 - ca), sg * sg + ca * cg * cg, -sa * cg],
                [-sa * sg, sa * cg, ca],
            ];
            let got = rotmat_from_quat(&d.tilt).rows();
            for i in 0..3 {
                for j in 0..3 {
                    assert_abs_diff_eq!(got[i][j], rt[i][j], epsilon = 1e-12);
                }
            }
            assert!(close(&d.yaw, &Quaternion::from_yaw(t.psi), 1e-12));
        }
    }

    #[test]
    fn decompose_negative_w_reconstructs_exactly() {
        let q = Quaternion::new(-0.3, 0.5, -0.1, 0.8).normalize().unwrap();
        let d = decompose(&q);
        assert!(d.yaw.w >= 0.0);
        let r = d.yaw * d.tilt;
        assert!((r.w - q.w).abs() < 1e-15 && (r.z - q.z).abs() < 1e-15);
        assert_eq!(d.tilt.z, 0.0);
        assert_eq!(fused_yaw(&d.tilt), 0.0);
    }

    #[test]
    fn compose_yaw_tilt_examples() {
        let q = compose_yaw_tilt(FRAC_PI_2, &Tilt::Angles { gamma: FRAC_PI_2, alpha: FRAC_PI_2 }).unwrap();
        assert!(close(&q, &Quaternion::new(0.5, -0.5, 0.5, 0.5), 1e-15));

        let tq = quat_from_tilt(&TiltAngles::new(0.0, -0.4, 1.3));
        assert_eq!(compose_yaw_tilt(0.0, &Tilt::Quat(tq)).unwrap(), tq);

        let q = compose_yaw_tilt(PI, &Tilt::Angles { gamma: 0.0, alpha: 0.0 }).unwrap();
        assert!(close(&q, &Quaternion::new(0.0, 0.0, 0.0, 1.0), 1e-15));

        let q = compose_yaw_tilt(
            0.7,
            &Tilt::Fused { theta: 0.2, phi: -0.3, hemisphere: Hemisphere::Lower },
        )
        .unwrap();
        assert_abs_diff_eq!(fused_yaw(&q), 0.7, epsilon = 1e-14);
        let f = crate::convert::fused_from_quat(&q);
        assert_abs_diff_eq!(f.theta, 0.2, epsilon = 1e-14);
        assert_abs_diff_eq!(f.phi, -0.3, epsilon = 1e-14);
        assert_eq!(f.hemisphere, Hemisphere::Lower);
    }

    #[test]
    fn compose_yaw_tilt_rejects_non_tilt() {
        let q = Quaternion::from_axis_angle([0.0, 0.0, 1.0], 0.1);
        assert!(matches!(compose_yaw_tilt(0.3, &Tilt::Quat(q)), Err(Error::InvalidTilt { .. })));
    }

    #[test]
    fn compose_yaw_zvec_examples() {
        let q = compose_yaw_zvec(0.0, &ZVector::UP).unwrap();
        assert_eq!(q, Quaternion::IDENTITY);
        // oracle: quat_from_tilt(0, 0, pi/2) has z-vector (0, 1, 0)
        let expected = quat_from_tilt(&TiltAngles::new(0.0, 0.0, FRAC_PI_2));
        let z = zvec_from_tilt(&TiltAngles::new(0.0, 0.0, FRAC_PI_2));
        assert!(close(&compose_yaw_zvec(0.0, &z).unwrap(), &expected, 1e-15));
        assert!(close(&compose_yaw_zvec(0.0, &ZVector::new(0.0, 1.0, 0.0)).unwrap(), &expected, 1e-15));
        for &psi in &[0.0, 0.4, -2.0, PI] {
            let q = compose_yaw_zvec(psi, &ZVector::new(0.0, 0.0, -1.0)).unwrap();
            assert_eq!(q, Quaternion::new(0.0, 1.0, 0.0, 0.0));
        }
        assert!(matches!(
            compose_yaw_zvec(0.0, &ZVector::new(0.0, 0.5, 0.5)),
            Err(Error::InvalidZVector { .. })
        ));
    }

    #[test]
    fn compose_yaw_zvec_reconstructs() {
        let mut s = RotationSampler::new(99);
        for _ in 0..2000 {
            let q = s.next_quat();
            if tilt_from_quat(&q).alpha > PI - 1e-3 {
                continue;
            }
            let r = compose_yaw_zvec(fused_yaw(&q), &zvec_from_quat(&q)).unwrap();
            assert!(close(&r, &q, 1e-9), "{q:?} -> {r:?}");
        }
    }

    #[test]
    fn mismatched_with_identity_frame() {
        let tilt = quat_from_tilt(&TiltAngles::new(0.0, 0.8, 1.1));
        let m = compose_mismatched(0.0, &Quaternion::IDENTITY, &tilt).unwrap();
        assert!(!m.multiple_solutions);
        assert!(close(&m.q_gb, &tilt, 1e-15));

        // oracle: decompose q_HC and drop the yaw factor
        let q_hc = quat_from_tilt(&TiltAngles::new(1.2, 0.8, 1.1));
        let m = compose_mismatched(0.0, &Quaternion::IDENTITY, &q_hc).unwrap();
        assert_abs_diff_eq!(fused_yaw(&m.q_hb), 0.0, epsilon = 1e-15);
        assert!(close(&m.q_hb, &decompose(&q_hc).tilt, 1e-15));
    }

    #[test]
    fn mismatched_agrees_with_plain_composition() {
        let mut s = RotationSampler::new(4);
        for _ in 0..500 {
            let q_hc = s.next_quat();
            let psi = s.uniform(-PI, PI);
            let t = tilt_from_quat(&q_hc);
            if t.alpha > PI - 0.01 {
                continue;
            }
            let m = compose_mismatched(psi, &Quaternion::IDENTITY, &q_hc).unwrap();
            let direct = compose_yaw_tilt(psi, &Tilt::Angles { gamma: t.gamma, alpha: t.alpha }).unwrap();
            assert!(close(&m.q_gb, &direct, 1e-12));
        }
    }

    #[test]
    fn mismatched_degenerate_cases() {
        // Hand evaluation: q_GH = (0,1,0,0), q_HC = identity gives a = b = c = d = 0.
        let q_gh = Quaternion::new(0.0, 1.0, 0.0, 0.0);
        let m = compose_mismatched(0.0, &q_gh, &Quaternion::IDENTITY).unwrap();
        assert!(m.multiple_solutions);
        assert_eq!(m.q_gb, q_gh);
        match compose_mismatched(0.3, &q_gh, &Quaternion::IDENTITY) {
            Err(Error::NoSolution { achievable_yaw }) => assert_eq!(achievable_yaw, 0.0),
            other => panic!("expected no solution, got {other:?}"),
        }
    }
}
