//! Referenced rotations: the rotation mapping frame `A` onto frame `B`,
//! expressed in the coordinates of a reference frame `G`.
//!
//! Frame labels are optional and only checked when both sides carry one.

use crate::error::{Error, Result};
use crate::rotation::{rotmat_from_quat, Quaternion, RotationMatrix};

#[derive(Debug, Clone, PartialEq)]
pub struct ReferencedRotation {
    pub rot: Quaternion,
    pub reference: Option<String>,
    pub from: Option<String>,
    pub to: Option<String>,
}

impl ReferencedRotation {
    pub fn new(rot: Quaternion) -> Self {
        Self { rot, reference: None, from: None, to: None }
    }

    pub fn identity() -> Self {
        Self::new(Quaternion::IDENTITY)
    }

    pub fn with_frames(mut self, reference: &str, from: &str, to: &str) -> Self {
        self.reference = Some(reference.to_owned());
        self.from = Some(from.to_owned());
        self.to = Some(to.to_owned());
        self
    }

    pub fn matrix(&self) -> RotationMatrix {
        rotmat_from_quat(&self.rot)
    }
}

fn check_tags(what: &str, a: &Option<String>, b: &Option<String>) -> Result<()> {
    match (a, b) {
        (Some(a), Some(b)) if a != b => Err(Error::FrameMismatch(format!("{what}: {a} != {b}"))),
        _ => Ok(()),
    }
}

/// `R_GB R_GA^T`: the rotation from `A` to `B` referenced by `G`, given the
/// rotations of `A` and `B` relative to `G`.
pub fn ref_rot(q_gb: &Quaternion, q_ga: &Quaternion) -> ReferencedRotation {
    ReferencedRotation::new(*q_gb * q_ga.conjugate())
}

/// Composition `(B -> C) after (A -> B) = (A -> C)`, both referenced by the same frame.
pub fn ref_rot_compose(r_bc: &ReferencedRotation, r_ab: &ReferencedRotation) -> Result<ReferencedRotation> {
    check_tags("reference frame", &r_bc.reference, &r_ab.reference)?;
    check_tags("intermediate frame", &r_bc.from, &r_ab.to)?;
    Ok(ReferencedRotation {
        rot: r_bc.rot * r_ab.rot,
        reference: r_bc.reference.clone().or_else(|| r_ab.reference.clone()),
        from: r_ab.from.clone(),
        to: r_bc.to.clone(),
    })
}

/// Inverse: conjugate rotation with the endpoints swapped.
pub fn ref_rot_invert(r: &ReferencedRotation) -> ReferencedRotation {
    ReferencedRotation {
        rot: r.rot.conjugate(),
        reference: r.reference.clone(),
        from: r.to.clone(),
        to: r.from.clone(),
    }
}

/// Re-expresses a rotation referenced by `G` in frame `H`: `R_HG R R_HG^T`.
pub fn ref_rot_change_frame(
    r: &ReferencedRotation,
    q_hg: &Quaternion,
    new_reference: Option<&str>,
) -> ReferencedRotation {
    ReferencedRotation {
        rot: *q_hg * r.rot * q_hg.conjugate(),
        reference: new_reference.map(str::to_owned),
        from: r.from.clone(),
        to: r.to.clone(),
    }
}
