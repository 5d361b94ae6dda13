//! The vector space of tilt rotations.
//!
//! Tilt vector addition is plain componentwise addition of tilt phases. It is
//! closed, commutative and associative, and matches rotation composition only
//! when both tilts share the same axis. It is **not** rotation composition in
//! general: for that, multiply the quaternions (see [`crate::yaw_tilt`]).
//!
//! The 3D forms add their `pz` (fused yaw) components as well. That extension
//! is a convenience; addition is only meaningful as a tilt operation on the 2D
//! forms.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rotation::{AbsTiltPhase2, AbsTiltPhase3, TiltPhase2, TiltPhase3};

macro_rules! vector_ops {
    ($($name:ident { $($field:ident),+ })+) => {$(
        impl Add for $name {
            type Output = $name;
            fn add(self, o: $name) -> $name {
                $name { $($field: self.$field + o.$field),+ }
            }
        }

        impl Sub for $name {
            type Output = $name;
            fn sub(self, o: $name) -> $name {
                $name { $($field: self.$field - o.$field),+ }
            }
        }

        impl Neg for $name {
            type Output = $name;
            fn neg(self) -> $name {
                $name { $($field: -self.$field),+ }
            }
        }

        impl Mul<$name> for f64 {
            type Output = $name;
            fn mul(self, p: $name) -> $name {
                $name { $($field: self * p.$field),+ }
            }
        }

        impl $name {
            /// Euclidean norm of the tilt components; equals the tilt angle.
            pub fn tilt_norm(&self) -> f64 {
                self.px.hypot(self.py)
            }

            pub fn to_vec(&self) -> Vec<f64> {
                vec![$(self.$field),+]
            }
        }
    )+};
}

vector_ops! {
    TiltPhase2 { px, py }
    TiltPhase3 { px, py, pz }
    AbsTiltPhase2 { px, py }
    AbsTiltPhase3 { px, py, pz }
}

/// Tilt vector addition.
pub fn phase_add(a: TiltPhase2, b: TiltPhase2) -> TiltPhase2 {
    a + b
}

pub fn phase_scale(lambda: f64, p: TiltPhase2) -> TiltPhase2 {
    lambda * p
}

/// Absolute phase of the inverse rotation: `-P`.
pub fn phase_invert(p: &TiltPhase3) -> AbsTiltPhase3 {
    AbsTiltPhase3::new(-p.px, -p.py, -p.pz)
}

/// Relative phase of the inverse rotation: `-P~`.
pub fn abs_phase_invert(p: &AbsTiltPhase3) -> TiltPhase3 {
    TiltPhase3::new(-p.px, -p.py, -p.pz)
}

/// Arithmetic mean of any non-empty set of phases.
pub fn mean<T>(phases: &[T]) -> Result<T>
where
    T: Copy + Add<Output = T>,
    f64: Mul<T, Output = T>,
{
    let (first, rest) = phases
        .split_first()
        .ok_or_else(|| Error::InvalidArgument("mean of an empty set".into()))?;
    let sum = rest.iter().fold(*first, |acc, p| acc + *p);
    Ok((1.0 / phases.len() as f64) * sum)
}

pub fn phase_mean(phases: &[TiltPhase2]) -> Result<TiltPhase2> {
    mean(phases)
}
