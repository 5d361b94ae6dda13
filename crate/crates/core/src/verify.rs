//! Numerical oracles: finite differences, a quaternion kinematics reference,
//! seeded random rotations and the fused angles versus tilt phase error scan.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use std::f64::consts::{FRAC_PI_2, PI};

use crate::convert::fused_from_tilt;
use crate::error::{Error, Result};
use crate::rotation::{wrap, AngularVelocity, Quaternion, TiltAngles};

/// Default step for central differences.
pub const DEFAULT_FD_STEP: f64 = 1e-5;
/// Default number of tilt axis angles in the error scan.
pub const DEFAULT_SCAN_GRID: usize = 3600;

/// Central difference `(f(t + h) - f(t - h)) / 2h`.
pub fn fd_derivative<const N: usize>(f: impl Fn(f64) -> [f64; N], t: f64, h: f64) -> [f64; N] {
    let (a, b) = (f(t + h), f(t - h));
    std::array::from_fn(|i| (a[i] - b[i]) / (2.0 * h))
}

/// Central difference of angle-valued components, wrapping the difference
/// into `(-pi, pi]`.
pub fn fd_derivative_wrapped<const N: usize>(f: impl Fn(f64) -> [f64; N], t: f64, h: f64) -> [f64; N] {
    let (a, b) = (f(t + h), f(t - h));
    std::array::from_fn(|i| wrap(a[i] - b[i]) / (2.0 * h))
}

/// Largest componentwise absolute difference.
pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// Ratio of the finite-difference errors at steps `h` and `h/2`. Close to 4 for
/// a correct analytic derivative and a second order difference.
pub fn richardson_ratio(exact: &[f64], at_h: &[f64], at_half_h: &[f64]) -> f64 {
    max_abs_diff(exact, at_h) / max_abs_diff(exact, at_half_h)
}

/// Global angular velocity of a quaternion trajectory, as the vector part of
/// `2 q' q*` with `q'` from central differences.
pub fn angvel_reference(q: impl Fn(f64) -> Quaternion, t: f64, h: f64) -> AngularVelocity {
    let q0 = q(t);
    let align = |p: Quaternion| if p.dot(&q0) < 0.0 { -p } else { p };
    let dq = align(q(t + h)).sub(&align(q(t - h))).scale(1.0 / (2.0 * h));
    let v = (dq * q0.conjugate()).vector();
    AngularVelocity::new(2.0 * v[0], 2.0 * v[1], 2.0 * v[2])
}

/// Deterministic stream of uniformly distributed rotations.
#[derive(Debug, Clone)]
pub struct RotationSampler {
    rng: ChaCha8Rng,
}

impl RotationSampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Uniform on SO(3): a normalized 4D Gaussian sample.
    pub fn next_quat(&mut self) -> Quaternion {
        loop {
            let mut g = || -> f64 { self.rng.sample(StandardNormal) };
            let q = Quaternion::new(g(), g(), g(), g());
            if let Ok(u) = q.normalize() {
                return u;
            }
        }
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.random_range(lo..hi)
    }

    /// Tilt angles with uniformly drawn yaw, tilt axis angle and tilt angle in
    /// `[alpha_lo, alpha_hi)`.
    pub fn next_tilt(&mut self, alpha_lo: f64, alpha_hi: f64) -> TiltAngles {
        let psi = self.uniform(-PI, PI);
        let gamma = self.uniform(-PI, PI);
        TiltAngles::new(psi, gamma, self.uniform(alpha_lo, alpha_hi))
    }
}

/// First rotation of the stream for `seed`.
pub fn random_rotation(seed: u64) -> Quaternion {
    RotationSampler::new(seed).next_quat()
}

/// Outcome of [`fused_phase_error_scan`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorScan {
    /// Maximum over the tilt axis angle of `|p_x - phi| / alpha`.
    pub max_rel_diff: f64,
    /// `(alpha - sin(alpha)) / alpha`, the error of the small angle approximation.
    pub small_angle_rel_diff: f64,
    /// Tilt axis angle at which the maximum was found.
    pub gamma_at_max: f64,
}

/// Relative difference between the tilt phase and the fused angles over a grid
/// of `n_gamma` tilt axis angles in `(-pi, pi]`, at fixed tilt angle.
pub fn fused_phase_error_scan(alpha: f64, n_gamma: usize) -> Result<ErrorScan> {
    if !(alpha > 0.0 && alpha <= FRAC_PI_2) {
        return Err(Error::InvalidArgument(format!("tilt angle {alpha} outside (0, pi/2]")));
    }
    if n_gamma < 360 {
        return Err(Error::InvalidArgument(format!("grid of {n_gamma} points is too coarse")));
    }
    let (mut max_rel_diff, mut gamma_at_max) = (0.0, 0.0);
    for k in 1..=n_gamma {
        let gamma = -PI + 2.0 * PI * k as f64 / n_gamma as f64;
        let rx = fused_phase_diff(gamma, alpha).0.abs();
        if rx > max_rel_diff {
            max_rel_diff = rx;
            gamma_at_max = gamma;
        }
    }
    Ok(ErrorScan { max_rel_diff, small_angle_rel_diff: (alpha - alpha.sin()) / alpha, gamma_at_max })
}

/// `((p_x - phi) / alpha, (p_y - theta) / alpha)` for the pure tilt `(gamma, alpha)`.
pub fn fused_phase_diff(gamma: f64, alpha: f64) -> (f64, f64) {
    let f = fused_from_tilt(&TiltAngles::new(0.0, gamma, alpha));
    let (sg, cg) = gamma.sin_cos();
    ((alpha * cg - f.phi) / alpha, (alpha * sg - f.theta) / alpha)
}
