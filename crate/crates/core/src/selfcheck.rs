//! Randomized invariant suites behind the `fuzz` command.

use std::f64::consts::PI;

use crate::convert::*;
use crate::kinematics::*;
use crate::phase::phase_invert;
use crate::referenced::{ref_rot, ref_rot_change_frame};
use crate::interp::slerp;
use crate::rotation::{fused_yaw, quat_from_rotmat, rotmat_from_quat, wrap, Quaternion, TiltAngles};
use crate::verify::RotationSampler;
use crate::yaw_tilt::{compose_mismatched, compose_yaw_zvec, decompose};

/// Outcome of one invariant suite.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub skipped: usize,
    pub failures: usize,
    pub max_error: f64,
    pub tolerance: f64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FuzzReport {
    pub suites: Vec<SuiteReport>,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }
}

fn suite(
    name: &'static str,
    tolerance: f64,
    n: usize,
    seed: u64,
    mut case: impl FnMut(&mut RotationSampler) -> Option<f64>,
) -> SuiteReport {
    let mut s = RotationSampler::new(seed);
    let mut r = SuiteReport { name, cases: 0, skipped: 0, failures: 0, max_error: 0.0, tolerance };
    for _ in 0..n {
        match case(&mut s) {
            None => r.skipped += 1,
            Some(e) => {
                r.cases += 1;
                if !(e <= tolerance) {
                    r.failures += 1;
                }
                if e > r.max_error || e.is_nan() {
                    r.max_error = e;
                }
            }
        }
    }
    r
}

fn near_singular(q: &Quaternion) -> bool {
    (tilt_from_quat(q).alpha - PI).abs() < 1e-3
}

fn pure_tilt(t: TiltAngles) -> TiltAngles {
    TiltAngles::new(0.0, t.gamma, t.alpha)
}

fn diff(a: [f64; 3], b: [f64; 3]) -> f64 {
    (0..3).map(|i| (a[i] - b[i]).abs()).fold(0.0, f64::max)
}

/// Runs every suite on `n` samples each. Deterministic in `seed`.
pub fn run_fuzz(n: usize, seed: u64) -> FuzzReport {
    let sub = |k: u64| seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(k);
    let mut suites = Vec::new();

    suites.push(suite("roundtrip-rotmat", 1e-9, n, sub(1), |s| {
        let q = s.next_quat();
        Some(quat_from_rotmat(&rotmat_from_quat(&q)).distance_up_to_sign(&q))
    }));
    suites.push(suite("roundtrip-tilt", 1e-9, n, sub(2), |s| {
        let q = s.next_quat();
        (!near_singular(&q)).then(|| quat_from_tilt(&tilt_from_quat(&q)).distance_up_to_sign(&q))
    }));
    suites.push(suite("roundtrip-fused", 1e-9, n, sub(3), |s| {
        let q = s.next_quat();
        if near_singular(&q) {
            return None;
        }
        quat_from_fused(&fused_from_quat(&q)).ok().map(|b| b.distance_up_to_sign(&q)).or(Some(f64::INFINITY))
    }));
    suites.push(suite("roundtrip-zvec", 1e-9, n, sub(4), |s| {
        let q = s.next_quat();
        if near_singular(&q) {
            return None;
        }
        let back = compose_yaw_zvec(fused_yaw(&q), &zvec_from_quat(&q));
        Some(back.map_or(f64::INFINITY, |b| b.distance_up_to_sign(&q)))
    }));
    suites.push(suite("roundtrip-phase3", 1e-9, n, sub(5), |s| {
        let q = s.next_quat();
        (!near_singular(&q)).then(|| quat_from_phase3(&phase3_from_quat(&q)).distance_up_to_sign(&q))
    }));
    suites.push(suite("decompose", 1e-12, n, sub(6), |s| {
        let q = s.next_quat();
        let d = decompose(&q);
        Some((d.yaw * d.tilt).distance_up_to_sign(&q).max(d.tilt.z.abs()).max(fused_yaw(&d.tilt).abs()))
    }));
    suites.push(suite("slerp-tilt-closure", 1e-12, n, sub(7), |s| {
        let a = quat_from_tilt(&pure_tilt(s.next_tilt(0.0, PI)));
        let b = quat_from_tilt(&pure_tilt(s.next_tilt(0.0, PI)));
        let u = s.uniform(0.0, 1.0);
        Some(slerp(&a, &b, u).z.abs())
    }));
    suites.push(suite("phase-inverse", 1e-12, n, sub(8), |s| {
        let q = s.next_quat();
        if near_singular(&q) {
            return None;
        }
        let inv = quat_from_tilt(&tilt_from_abs_phase3(&phase_invert(&phase3_from_quat(&q))));
        Some(inv.distance_up_to_sign(&q.conjugate()))
    }));
    suites.push(suite("phase-norm", 4.0 * f64::EPSILON, n, sub(9), |s| {
        let t = s.next_tilt(0.0, 10.0);
        Some((phase2_from_tilt(&t).tilt_norm() - t.alpha).abs() / t.alpha.max(1.0))
    }));
    suites.push(suite("velocity-commutation", 1e-9, n, sub(10), |s| {
        let state = s.next_tilt(0.01, PI - 0.01);
        let tv = TiltAnglesVel::new(s.uniform(-1.0, 1.0), s.uniform(-1.0, 1.0), s.uniform(-1.0, 1.0));
        let w = angvel_from_tiltvel(&tv, &state);
        let pv = phasevel_from_tiltvel(&tv, &state);
        let apv = abs_phasevel_from_tiltvel(&tv, &state);
        let (Ok(t1), Ok(p1), Ok(a1)) = (
            tiltvel_from_angvel(&w, &state),
            phasevel_from_angvel(&w, &state),
            abs_phasevel_from_angvel(&w, &state),
        ) else {
            return Some(f64::INFINITY);
        };
        let w1 = angvel_from_phasevel(&pv, &state);
        let w2 = angvel_from_abs_phasevel(&apv, &state);
        let a2 = abs_phasevel_from_phasevel(&pv, &state);
        let e = [
            diff([t1.dpsi, t1.dgamma, t1.dalpha], [tv.dpsi, tv.dgamma, tv.dalpha]),
            diff(p1.to_array(), pv.to_array()),
            diff(a1.to_array(), apv.to_array()),
            diff(w1.to_array(), w.to_array()),
            diff(w2.to_array(), w.to_array()),
            diff(a2.to_array(), apv.to_array()),
        ];
        Some(e.into_iter().fold(0.0, f64::max))
    }));
    suites.push(suite("origin-smoothness", 1e-12, n, sub(11), |s| {
        let state = TiltAngles::new(s.uniform(-PI, PI), s.uniform(-PI, PI), 0.0);
        let v = AbsTiltPhaseVel::new(s.uniform(-1.0, 1.0), s.uniform(-1.0, 1.0), s.uniform(-1.0, 1.0));
        let w = angvel_from_abs_phasevel(&v, &state);
        let Ok(back) = abs_phasevel_from_angvel(&w, &state) else {
            return Some(f64::INFINITY);
        };
        Some(diff(w.to_array(), v.to_array()).max(diff(back.to_array(), v.to_array())))
    }));
    suites.push(suite("mismatched-composition", 1e-9, n, sub(12), |s| {
        let g = s.next_quat();
        let c = s.next_quat();
        if tilt_from_quat(&g).alpha + tilt_from_quat(&c).alpha > PI - 0.01 {
            return None;
        }
        let psi = s.uniform(-PI, PI);
        let Ok(m) = compose_mismatched(psi, &g, &c) else {
            return Some(f64::INFINITY);
        };
        let yaw_err = wrap(fused_yaw(&m.q_gb) - psi).abs();
        let tilt_err = decompose(&m.q_hb).tilt.distance_up_to_sign(&decompose(&c).tilt);
        Some(yaw_err.max(tilt_err))
    }));
    suites.push(suite("referenced-identities", 1e-12, n, sub(13), |s| {
        let (ga, gb, hg) = (s.next_quat(), s.next_quat(), s.next_quat());
        let r = ref_rot(&gb, &ga);
        let (ra, rb) = (rotmat_from_quat(&ga), rotmat_from_quat(&gb));
        let r_ab = ra.transpose().mul_mat(&rb);
        let m = r.matrix();
        let e1 = ra.mul_mat(&r_ab).mul_mat(&ra.transpose()).max_abs_diff(&m);
        let e2 = rb.mul_mat(&r_ab).mul_mat(&rb.transpose()).max_abs_diff(&m);
        let changed = ref_rot_change_frame(&r, &hg, None);
        let direct = ref_rot(&(hg * gb), &(hg * ga));
        Some(e1.max(e2).max(changed.rot.distance_up_to_sign(&direct.rot)))
    }));
    FuzzReport { suites }
}
