//! Slerp and cubic splines in the tilt phase space.

use crate::convert::{phase2_from_tilt, quat_from_tilt, tilt_from_abs_phase3, tilt_from_phase2, tilt_from_phase3, tilt_from_quat};
use crate::error::{Error, Result};
use crate::kinematics::{angvel_from_abs_phasevel, angvel_from_phasevel, AbsTiltPhaseVel, TiltPhaseVel};
use crate::rotation::{AbsTiltPhase3, AngularVelocity, Quaternion, TiltPhase2, TiltPhase3};

/// Below this angle between the inputs, slerp falls back to normalized lerp.
pub const SLERP_LERP_THRESHOLD: f64 = 1e-6;

/// Spherical linear interpolation between unit quaternions, taking the short way.
pub fn slerp(q0: &Quaternion, q1: &Quaternion, u: f64) -> Quaternion {
    let q1 = if q0.dot(q1) < 0.0 { -*q1 } else { *q1 };
    let omega = 2.0 * q0.sub(&q1).norm().atan2(q0.add(&q1).norm());
    if omega < SLERP_LERP_THRESHOLD {
        let lerp = q0.scale(1.0 - u).add(&q1.scale(u));
        return lerp.normalize().unwrap_or(*q0);
    }
    let s = omega.sin();
    q0.scale(((1.0 - u) * omega).sin() / s).add(&q1.scale((u * omega).sin() / s))
}

/// Slerp between two pure tilts given as relative tilt phases. The result is
/// again a pure tilt.
pub fn slerp_tilt(p0: &TiltPhase2, p1: &TiltPhase2, u: f64) -> Result<TiltPhase2> {
    let to_quat = |p: &TiltPhase2| {
        let t = tilt_from_phase2(p);
        if t.alpha > std::f64::consts::PI {
            return Err(Error::OutOfRange(format!("tilt angle {} exceeds pi", t.alpha)));
        }
        Ok(quat_from_tilt(&t))
    };
    let q = slerp(&to_quat(p0)?, &to_quat(p1)?, u);
    let mut t = tilt_from_quat(&q);
    t.psi = 0.0;
    Ok(phase2_from_tilt(&t))
}

/// Whether spline keys hold relative or absolute tilt phases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PhaseKind {
    #[default]
    Relative,
    Absolute,
}

/// One spline key: time, phase and an optional velocity to clamp to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Keyframe {
    pub t: f64,
    pub phase: [f64; 3],
    pub vel: Option<[f64; 3]>,
}

impl Keyframe {
    pub fn new(t: f64, phase: [f64; 3]) -> Self {
        Self { t, phase, vel: None }
    }

    pub fn with_vel(mut self, vel: [f64; 3]) -> Self {
        self.vel = Some(vel);
        self
    }
}

/// A sample of a [`PhaseSpline`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SplineSample {
    pub phase: [f64; 3],
    pub vel: [f64; 3],
    pub omega: AngularVelocity,
}

/// Componentwise piecewise cubic Hermite spline through phase keys.
///
/// Knot velocities not given by the keys are solved for so that the spline is
/// twice differentiable there; unspecified end velocities give natural ends.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseSpline {
    kind: PhaseKind,
    times: Vec<f64>,
    values: Vec<[f64; 3]>,
    slopes: Vec<[f64; 3]>,
}

fn solve_tridiagonal(sub: &[f64], diag: &[f64], sup: &[f64], rhs: &[f64]) -> Vec<f64> {
    let n = diag.len();
    let mut c = vec![0.0; n];
    let mut d = vec![0.0; n];
    c[0] = sup[0] / diag[0];
    d[0] = rhs[0] / diag[0];
    for i in 1..n {
        let m = diag[i] - sub[i] * c[i - 1];
        c[i] = sup[i] / m;
        d[i] = (rhs[i] - sub[i] * d[i - 1]) / m;
    }
    for i in (0..n - 1).rev() {
        d[i] -= c[i] * d[i + 1];
    }
    d
}

impl PhaseSpline {
    pub fn build(keys: &[Keyframe], kind: PhaseKind) -> Result<Self> {
        if keys.len() < 2 {
            return Err(Error::InvalidKeyframes("at least two keys are required".into()));
        }
        for k in keys {
            let finite = k.t.is_finite()
                && k.phase.iter().all(|v| v.is_finite())
                && k.vel.is_none_or(|v| v.iter().all(|x| x.is_finite()));
            if !finite {
                return Err(Error::InvalidKeyframes("non-finite key".into()));
            }
        }
        if let Some(w) = keys.windows(2).find(|w| w[1].t <= w[0].t) {
            return Err(Error::InvalidKeyframes(format!(
                "times must be strictly increasing ({} then {})",
                w[0].t, w[1].t
            )));
        }

        let n = keys.len();
        let times: Vec<f64> = keys.iter().map(|k| k.t).collect();
        let values: Vec<[f64; 3]> = keys.iter().map(|k| k.phase).collect();
        let h: Vec<f64> = times.windows(2).map(|w| w[1] - w[0]).collect();
        let mut slopes = vec![[0.0; 3]; n];

        for axis in 0..3 {
            let d: Vec<f64> = (0..n - 1).map(|i| (values[i + 1][axis] - values[i][axis]) / h[i]).collect();
            let (mut sub, mut diag, mut sup, mut rhs) = (vec![0.0; n], vec![0.0; n], vec![0.0; n], vec![0.0; n]);
            for i in 0..n {
                if let Some(v) = keys[i].vel {
                    diag[i] = 1.0;
                    rhs[i] = v[axis];
                } else if i == 0 {
                    diag[i] = 2.0;
                    sup[i] = 1.0;
                    rhs[i] = 3.0 * d[0];
                } else if i == n - 1 {
                    sub[i] = 1.0;
                    diag[i] = 2.0;
                    rhs[i] = 3.0 * d[n - 2];
                } else {
                    let (a, b) = (1.0 / h[i - 1], 1.0 / h[i]);
                    sub[i] = a;
                    diag[i] = 2.0 * (a + b);
                    sup[i] = b;
                    rhs[i] = 3.0 * (d[i - 1] * a + d[i] * b);
                }
            }
            for (i, m) in solve_tridiagonal(&sub, &diag, &sup, &rhs).into_iter().enumerate() {
                slopes[i][axis] = m;
            }
        }
        Ok(Self { kind, times, values, slopes })
    }

    pub fn kind(&self) -> PhaseKind {
        self.kind
    }

    pub fn start(&self) -> f64 {
        self.times[0]
    }

    pub fn end(&self) -> f64 {
        self.times[self.times.len() - 1]
    }

    /// Knot velocities, solved or given.
    pub fn knot_velocities(&self) -> &[[f64; 3]] {
        &self.slopes
    }

    /// Phase and phase velocity at `t`. Outside the key range the end value is
    /// held with zero velocity.
    pub fn eval_phase(&self, t: f64) -> ([f64; 3], [f64; 3]) {
        let last = self.times.len() - 1;
        if t <= self.times[0] {
            let v = if t == self.times[0] { self.slopes[0] } else { [0.0; 3] };
            return (self.values[0], v);
        }
        if t >= self.times[last] {
            let v = if t == self.times[last] { self.slopes[last] } else { [0.0; 3] };
            return (self.values[last], v);
        }
        let i = self.times.partition_point(|&k| k <= t) - 1;
        if t == self.times[i] {
            return (self.values[i], self.slopes[i]);
        }
        let h = self.times[i + 1] - self.times[i];
        let s = (t - self.times[i]) / h;
        let (s2, s3) = (s * s, s * s * s);
        let (h10, h01, h11) = (s3 - 2.0 * s2 + s, -2.0 * s3 + 3.0 * s2, s3 - s2);
        let (d10, d01, d11) = (3.0 * s2 - 4.0 * s + 1.0, 6.0 * (s - s2), 3.0 * s2 - 2.0 * s);
        let (mut p, mut v) = ([0.0; 3], [0.0; 3]);
        for a in 0..3 {
            let (y0, y1) = (self.values[i][a], self.values[i + 1][a]);
            let (m0, m1) = (self.slopes[i][a] * h, self.slopes[i + 1][a] * h);
            p[a] = y0 + h01 * (y1 - y0) + h10 * m0 + h11 * m1;
            v[a] = (d01 * (y1 - y0) + d10 * m0 + d11 * m1) / h;
        }
        (p, v)
    }

    /// Phase, phase velocity and global angular velocity at `t`.
    pub fn eval(&self, t: f64) -> SplineSample {
        let (phase, vel) = self.eval_phase(t);
        let [x, y, z] = phase;
        let [dx, dy, dz] = vel;
        let omega = match self.kind {
            PhaseKind::Relative => {
                angvel_from_phasevel(&TiltPhaseVel::new(dx, dy, dz), &tilt_from_phase3(&TiltPhase3::new(x, y, z)))
            }
            PhaseKind::Absolute => angvel_from_abs_phasevel(
                &AbsTiltPhaseVel::new(dx, dy, dz),
                &tilt_from_abs_phase3(&AbsTiltPhase3::new(x, y, z)),
            ),
        };
        SplineSample { phase, vel, omega }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convert::{quat_from_phase3, tilt_from_quat};
    use crate::rotation::fused_yaw;
    use crate::verify::{angvel_reference, RotationSampler};
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_8};

    #[test]
    fn slerp_examples() {
        let mut s = RotationSampler::new(2);
        let (a, b) = (s.next_quat(), s.next_quat());
        assert!(slerp(&a, &b, 0.0).distance_up_to_sign(&a) < 1e-15);
        assert!(slerp(&a, &b, 1.0).distance_up_to_sign(&b) < 1e-15);
        assert_eq!(slerp(&a, &b, 0.3), slerp(&a, &-b, 0.3));

        let qx = Quaternion::from_axis_angle([1.0, 0.0, 0.0], FRAC_PI_2);
        let m = slerp(&Quaternion::IDENTITY, &qx, 0.5);
        let expected = Quaternion::from_axis_angle([1.0, 0.0, 0.0], FRAC_PI_2 / 2.0);
        assert_abs_diff_eq!(m.w, FRAC_PI_8.cos(), epsilon = 1e-15);
        assert!(m.distance_up_to_sign(&expected) < 1e-15);
    }

    #[test]
    fn slerp_nearly_equal_inputs() {
        let a = Quaternion::from_axis_angle([0.0, 1.0, 0.0], 0.3);
        let b = Quaternion::from_axis_angle([0.0, 1.0, 0.0], 0.3 + 1e-9);
        let m = slerp(&a, &b, 0.5);
        assert!((m.norm() - 1.0).abs() < 1e-15);
        assert!(m.distance_up_to_sign(&Quaternion::from_axis_angle([0.0, 1.0, 0.0], 0.3 + 5e-10)) < 1e-14);
    }

    #[test]
    fn slerp_tilt_examples() {
        let p1 = TiltPhase2::new(0.6, -0.9);
        for &u in &[0.0, 0.25, 0.5, 1.0] {
            let p = slerp_tilt(&TiltPhase2::ZERO, &p1, u).unwrap();
            assert_abs_diff_eq!(p.px, u * p1.px, epsilon = 1e-12);
            assert_abs_diff_eq!(p.py, u * p1.py, epsilon = 1e-12);
        }

        let (a, b) = (TiltPhase2::new(FRAC_PI_2, 0.0), TiltPhase2::new(0.0, FRAC_PI_2));
        let p = slerp_tilt(&a, &b, 0.5).unwrap();
        let q = slerp(&quat_from_tilt(&tilt_from_phase2(&a)), &quat_from_tilt(&tilt_from_phase2(&b)), 0.5);
        assert!(q.z.abs() <= 1e-12);
        assert!(fused_yaw(&q).abs() <= 1e-12);
        let expected = phase2_from_tilt(&tilt_from_quat(&q));
        assert_abs_diff_eq!(p.px, expected.px, epsilon = 1e-12);
        assert_abs_diff_eq!(p.py, expected.py, epsilon = 1e-12);

        assert!(matches!(slerp_tilt(&TiltPhase2::new(3.5, 0.0), &b, 0.5), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn spline_two_keys_is_a_line() {
        let keys = [Keyframe::new(1.0, [0.0, 1.0, -1.0]), Keyframe::new(3.0, [2.0, 0.0, 3.0])];
        let sp = PhaseSpline::build(&keys, PhaseKind::Relative).unwrap();
        for &t in &[1.0, 1.5, 2.2, 3.0] {
            let (p, v) = sp.eval_phase(t);
            let u = (t - 1.0) / 2.0;
            for a in 0..3 {
                assert_abs_diff_eq!(p[a], keys[0].phase[a] + u * (keys[1].phase[a] - keys[0].phase[a]), epsilon = 1e-14);
                assert_abs_diff_eq!(v[a], (keys[1].phase[a] - keys[0].phase[a]) / 2.0, epsilon = 1e-14);
            }
        }
    }

    #[test]
    fn spline_interpolates_and_is_c2() {
        let keys = [
            Keyframe::new(0.0, [0.1, 0.2, 0.0]),
            Keyframe::new(0.7, [0.9, -0.4, 0.5]),
            Keyframe::new(1.5, [-0.3, 0.8, 1.0]),
            Keyframe::new(2.0, [0.0, 0.0, 0.2]),
        ];
        let sp = PhaseSpline::build(&keys, PhaseKind::Relative).unwrap();
        for k in &keys {
            assert_eq!(sp.eval_phase(k.t).0, k.phase);
        }
        // second derivative continuity via one-sided differences of velocity
        let e = 1e-7;
        for k in &keys[1..3] {
            let (_, vl) = sp.eval_phase(k.t - e);
            let (_, vm) = sp.eval_phase(k.t);
            let (_, vr) = sp.eval_phase(k.t + e);
            for a in 0..3 {
                let (left, right) = ((vm[a] - vl[a]) / e, (vr[a] - vm[a]) / e);
                assert!((left - right).abs() < 1e-4, "{left} {right}");
            }
        }
        // natural ends
        let (_, v0) = sp.eval_phase(0.0);
        let (_, v1) = sp.eval_phase(e);
        for a in 0..3 {
            assert!(((v1[a] - v0[a]) / e).abs() < 1e-4);
        }
    }

    #[test]
    fn spline_clamped_velocities() {
        let keys = [
            Keyframe::new(0.0, [0.0; 3]).with_vel([1.0, 0.0, -1.0]),
            Keyframe::new(1.0, [1.0, 1.0, 0.0]),
            Keyframe::new(2.0, [0.0, 2.0, 1.0]).with_vel([0.0, 0.0, 0.0]),
        ];
        let sp = PhaseSpline::build(&keys, PhaseKind::Relative).unwrap();
        assert_eq!(sp.eval_phase(0.0).1, [1.0, 0.0, -1.0]);
        assert_eq!(sp.eval_phase(2.0).1, [0.0, 0.0, 0.0]);
        assert_eq!(sp.eval_phase(1.0).0, [1.0, 1.0, 0.0]);
    }

    #[test]
    fn spline_rejects_bad_keys() {
        let k = Keyframe::new(0.0, [0.0; 3]);
        assert!(matches!(PhaseSpline::build(&[k], PhaseKind::Relative), Err(Error::InvalidKeyframes(_))));
        assert!(matches!(PhaseSpline::build(&[k, k], PhaseKind::Relative), Err(Error::InvalidKeyframes(_))));
        let later = Keyframe::new(-1.0, [0.0; 3]);
        assert!(PhaseSpline::build(&[k, later], PhaseKind::Relative).is_err());
    }

    #[test]
    fn spline_clamps_outside_and_constant_keys() {
        let keys = [Keyframe::new(0.0, [0.4, 0.1, 0.3]), Keyframe::new(1.0, [0.4, 0.1, 0.3]), Keyframe::new(2.0, [0.4, 0.1, 0.3])];
        let sp = PhaseSpline::build(&keys, PhaseKind::Absolute).unwrap();
        for &t in &[-1.0, 0.0, 0.3, 1.7, 2.0, 5.0] {
            let s = sp.eval(t);
            assert_eq!(s.phase, [0.4, 0.1, 0.3]);
            assert_eq!(s.vel, [0.0; 3]);
            assert_eq!(s.omega.to_array(), [0.0; 3]);
        }
    }

    #[test]
    fn spline_pure_tilt_keys_stay_pure_tilt() {
        let keys = [
            Keyframe::new(0.0, [0.3, -0.2, 0.0]),
            Keyframe::new(1.0, [2.0, 1.5, 0.0]),
            Keyframe::new(2.0, [-0.5, 0.4, 0.0]),
        ];
        let sp = PhaseSpline::build(&keys, PhaseKind::Relative).unwrap();
        for i in 0..=100 {
            let (p, _) = sp.eval_phase(0.02 * i as f64);
            let q = quat_from_phase3(&TiltPhase3::new(p[0], p[1], p[2]));
            assert!(q.z.abs() <= 1e-12);
        }
    }

    #[test]
    fn spline_angular_velocity_matches_quaternion_derivative() {
        let keys = [
            Keyframe::new(0.0, [0.3, -0.2, 0.1]),
            Keyframe::new(1.0, [1.1, 0.5, -0.4]),
            Keyframe::new(2.0, [-0.5, 0.9, 0.6]),
        ];
        for kind in [PhaseKind::Relative, PhaseKind::Absolute] {
            let sp = PhaseSpline::build(&keys, kind).unwrap();
            let quat_at = |t: f64| {
                let [x, y, z] = sp.eval_phase(t).0;
                let tilt = match kind {
                    PhaseKind::Relative => tilt_from_phase3(&TiltPhase3::new(x, y, z)),
                    PhaseKind::Absolute => tilt_from_abs_phase3(&AbsTiltPhase3::new(x, y, z)),
                };
                quat_from_tilt(&tilt)
            };
            for &t in &[0.3, 0.8, 1.4] {
                let reference = angvel_reference(quat_at, t, 1e-5);
                let omega = sp.eval(t).omega;
                for (a, b) in omega.to_array().iter().zip(reference.to_array()) {
                    assert_abs_diff_eq!(*a, b, epsilon = 1e-8);
                }
            }
        }
    }
}
