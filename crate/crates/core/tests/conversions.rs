use std::f64::consts::PI;

use proptest::prelude::*;
use tiltrot::convert::*;
use tiltrot::phase::{abs_phase_invert, phase_invert};
use tiltrot::verify::RotationSampler;
use tiltrot::yaw_tilt::{compose_yaw_tilt, compose_yaw_zvec, decompose, Tilt};
use tiltrot::{fused_yaw, quat_from_rotmat, rotmat_from_quat, Quaternion, TiltAngles, TiltPhase2};

fn unit_quat() -> impl Strategy<Value = Quaternion> {
    any::<u64>().prop_map(|seed| RotationSampler::new(seed).next_quat())
}

fn away_from_singularity(q: &Quaternion) -> bool {
    (tilt_from_quat(q).alpha - PI).abs() >= 1e-3
}

proptest! {
    #[test]
    fn round_trips(q in unit_quat()) {
        prop_assume!(away_from_singularity(&q));
        prop_assert!(quat_from_rotmat(&rotmat_from_quat(&q)).distance_up_to_sign(&q) < 1e-12);
        prop_assert!(quat_from_tilt(&tilt_from_quat(&q)).distance_up_to_sign(&q) < 1e-9);
        prop_assert!(quat_from_fused(&fused_from_quat(&q)).unwrap().distance_up_to_sign(&q) < 1e-9);
        prop_assert!(quat_from_phase3(&phase3_from_quat(&q)).distance_up_to_sign(&q) < 1e-9);
        let z = compose_yaw_zvec(fused_yaw(&q), &zvec_from_quat(&q)).unwrap();
        prop_assert!(z.distance_up_to_sign(&q) < 1e-9);
        let t = tilt_from_quat(&q);
        let via_abs = tilt_from_abs_phase3(&abs_phase3_from_tilt(&t));
        prop_assert!(quat_from_tilt(&via_abs).distance_up_to_sign(&q) < 1e-9);
    }

    #[test]
    fn tilt_angle_is_the_angle_to_vertical(q in unit_quat()) {
        let t = tilt_from_quat(&q);
        let r33 = rotmat_from_quat(&q).entry(3, 3);
        prop_assert!((t.alpha.cos() - r33).abs() < 1e-12);
        let z = zvec_from_quat(&q);
        let zt = zvec_from_tilt(&t);
        prop_assert!((z.x - zt.x).abs() < 1e-12 && (z.y - zt.y).abs() < 1e-12 && (z.z - zt.z).abs() < 1e-12);
    }

    #[test]
    fn decomposition_contract(q in unit_quat()) {
        let d = decompose(&q);
        prop_assert!((d.yaw * d.tilt).distance_up_to_sign(&q) < 1e-12);
        prop_assert!(d.tilt.z.abs() <= 1e-12);
        prop_assert!(fused_yaw(&d.tilt).abs() <= 1e-9);
        prop_assert!(d.yaw.x == 0.0 && d.yaw.y == 0.0);
    }

    #[test]
    fn compose_all_tilt_forms_agree(psi in -PI..PI, g in -PI..PI, a in 0.0..PI - 1e-3) {
        let t = TiltAngles::new(psi, g, a);
        let f = fused_from_tilt(&t);
        let q1 = compose_yaw_tilt(psi, &Tilt::Angles { gamma: g, alpha: a }).unwrap();
        let q2 = compose_yaw_tilt(psi, &Tilt::Fused { theta: f.theta, phi: f.phi, hemisphere: f.hemisphere }).unwrap();
        let q3 = compose_yaw_tilt(psi, &Tilt::Quat(quat_from_tilt(&TiltAngles::new(0.0, g, a)))).unwrap();
        let q4 = compose_yaw_zvec(psi, &zvec_from_tilt(&t)).unwrap();
        for other in [q2, q3, q4] {
            prop_assert!(q1.distance_up_to_sign(&other) < 1e-9);
        }
    }

    #[test]
    fn phase_inverse_is_conjugation(q in unit_quat()) {
        prop_assume!(away_from_singularity(&q));
        let p = phase3_from_quat(&q);
        let inv = quat_from_tilt(&tilt_from_abs_phase3(&phase_invert(&p)));
        prop_assert!(inv.distance_up_to_sign(&q.conjugate()) < 1e-12);
        let pt = abs_from_rel(&p);
        let inv = quat_from_phase3(&abs_phase_invert(&pt));
        prop_assert!(inv.distance_up_to_sign(&q.conjugate()) < 1e-12);
    }

    #[test]
    fn magnitude_axisymmetry(g in -PI..PI, a in 0.0..50.0f64) {
        let p = phase2_from_tilt(&TiltAngles::new(0.0, g, a));
        prop_assert!((p.tilt_norm() - a).abs() <= 2.0 * f64::EPSILON * a);
        let back = tilt_from_phase2(&TiltPhase2::new(p.px, p.py));
        prop_assert!((back.alpha - p.tilt_norm()).abs() == 0.0);
    }
}
