//! Text formats: comma separated scalars, `{"repr": ..., "data": [...]}` JSON
//! values and spline keyframe files.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::convert::*;
use crate::error::{Error, Result};
use crate::interp::Keyframe;
use crate::rotation::{
    quat_from_rotmat, rotmat_from_quat, AbsTiltPhase2, AbsTiltPhase3, FusedAngles, Hemisphere, Quaternion,
    RotationMatrix, TiltAngles, TiltPhase2, TiltPhase3, ZVector,
};

/// Names of the rotation representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Repr {
    Quat,
    Rotmat,
    Tilt,
    Fused,
    Zvec,
    Phase2,
    Phase3,
    AbsPhase2,
    AbsPhase3,
}

impl Repr {
    pub const ALL: [Repr; 9] = [
        Repr::Quat,
        Repr::Rotmat,
        Repr::Tilt,
        Repr::Fused,
        Repr::Zvec,
        Repr::Phase2,
        Repr::Phase3,
        Repr::AbsPhase2,
        Repr::AbsPhase3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Repr::Quat => "quat",
            Repr::Rotmat => "rotmat",
            Repr::Tilt => "tilt",
            Repr::Fused => "fused",
            Repr::Zvec => "zvec",
            Repr::Phase2 => "phase2",
            Repr::Phase3 => "phase3",
            Repr::AbsPhase2 => "absphase2",
            Repr::AbsPhase3 => "absphase3",
        }
    }

    /// Field names in input and output order.
    pub fn fields(self) -> &'static [&'static str] {
        match self {
            Repr::Quat => &["w", "x", "y", "z"],
            Repr::Rotmat => &["r11", "r12", "r13", "r21", "r22", "r23", "r31", "r32", "r33"],
            Repr::Tilt => &["psi", "gamma", "alpha"],
            Repr::Fused => &["psi", "theta", "phi", "h"],
            Repr::Zvec => &["x", "y", "z"],
            Repr::Phase2 => &["px", "py"],
            Repr::Phase3 => &["px", "py", "pz"],
            Repr::AbsPhase2 => &["ptx", "pty"],
            Repr::AbsPhase3 => &["ptx", "pty", "ptz"],
        }
    }

    /// Number of leading fields that are angles.
    pub fn angular_fields(self) -> usize {
        match self {
            Repr::Quat | Repr::Rotmat | Repr::Zvec => 0,
            Repr::Fused => 3,
            _ => self.fields().len(),
        }
    }
}

impl fmt::Display for Repr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Repr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Repr::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown representation '{s}'")))
    }
}

/// A rotation in one of the named representations. Values are stored as given;
/// validation happens on conversion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ReprValue {
    Quat(Quaternion),
    Rotmat([[f64; 3]; 3]),
    Tilt(TiltAngles),
    Fused(FusedAngles),
    Zvec(ZVector),
    Phase2(TiltPhase2),
    Phase3(TiltPhase3),
    AbsPhase2(AbsTiltPhase2),
    AbsPhase3(AbsTiltPhase3),
}

impl ReprValue {
    pub fn repr(&self) -> Repr {
        match self {
            ReprValue::Quat(_) => Repr::Quat,
            ReprValue::Rotmat(_) => Repr::Rotmat,
            ReprValue::Tilt(_) => Repr::Tilt,
            ReprValue::Fused(_) => Repr::Fused,
            ReprValue::Zvec(_) => Repr::Zvec,
            ReprValue::Phase2(_) => Repr::Phase2,
            ReprValue::Phase3(_) => Repr::Phase3,
            ReprValue::AbsPhase2(_) => Repr::AbsPhase2,
            ReprValue::AbsPhase3(_) => Repr::AbsPhase3,
        }
    }

    pub fn from_scalars(repr: Repr, v: &[f64]) -> Result<Self> {
        let n = repr.fields().len();
        if v.len() != n {
            return Err(Error::Parse(format!("{repr} takes {n} values, got {}", v.len())));
        }
        Ok(match repr {
            Repr::Quat => ReprValue::Quat(Quaternion::new(v[0], v[1], v[2], v[3])),
            Repr::Rotmat => ReprValue::Rotmat([[v[0], v[1], v[2]], [v[3], v[4], v[5]], [v[6], v[7], v[8]]]),
            Repr::Tilt => ReprValue::Tilt(TiltAngles::new(v[0], v[1], v[2])),
            Repr::Fused => {
                if v[3] != 1.0 && v[3] != -1.0 {
                    return Err(Error::Parse(format!("hemisphere must be 1 or -1, got {}", v[3])));
                }
                ReprValue::Fused(FusedAngles::new(v[0], v[1], v[2], Hemisphere::from_sign(v[3])))
            }
            Repr::Zvec => ReprValue::Zvec(ZVector::new(v[0], v[1], v[2])),
            Repr::Phase2 => ReprValue::Phase2(TiltPhase2::new(v[0], v[1])),
            Repr::Phase3 => ReprValue::Phase3(TiltPhase3::new(v[0], v[1], v[2])),
            Repr::AbsPhase2 => ReprValue::AbsPhase2(AbsTiltPhase2::new(v[0], v[1])),
            Repr::AbsPhase3 => ReprValue::AbsPhase3(AbsTiltPhase3::new(v[0], v[1], v[2])),
        })
    }

    pub fn to_scalars(&self) -> Vec<f64> {
        match *self {
            ReprValue::Quat(q) => q.to_array().to_vec(),
            ReprValue::Rotmat(m) => m.iter().flatten().copied().collect(),
            ReprValue::Tilt(t) => vec![t.psi, t.gamma, t.alpha],
            ReprValue::Fused(f) => vec![f.psi, f.theta, f.phi, f.hemisphere.sign()],
            ReprValue::Zvec(z) => z.to_array().to_vec(),
            ReprValue::Phase2(p) => vec![p.px, p.py],
            ReprValue::Phase3(p) => vec![p.px, p.py, p.pz],
            ReprValue::AbsPhase2(p) => vec![p.px, p.py],
            ReprValue::AbsPhase3(p) => vec![p.px, p.py, p.pz],
        }
    }

    /// The rotation as a unit quaternion.
    pub fn to_quat(&self) -> Result<Quaternion> {
        match self {
            ReprValue::Quat(q) => q.normalize(),
            ReprValue::Rotmat(m) => Ok(quat_from_rotmat(&RotationMatrix::new(*m)?)),
            _ => Ok(quat_from_tilt(&self.to_tilt()?)),
        }
    }

    /// The rotation as tilt angles. Tilt phases keep tilts beyond half a revolution.
    pub fn to_tilt(&self) -> Result<TiltAngles> {
        match self {
            ReprValue::Quat(_) | ReprValue::Rotmat(_) => Ok(tilt_from_quat(&self.to_quat()?)),
            ReprValue::Tilt(t) => Ok(*t),
            ReprValue::Fused(f) => tilt_from_fused(f),
            ReprValue::Zvec(z) => tilt_from_zvec(z),
            ReprValue::Phase2(p) => Ok(tilt_from_phase2(p)),
            ReprValue::Phase3(p) => Ok(tilt_from_phase3(p)),
            ReprValue::AbsPhase2(p) => Ok(tilt_from_abs_phase2(p)),
            ReprValue::AbsPhase3(p) => Ok(tilt_from_abs_phase3(p)),
        }
    }

    pub fn from_tilt(t: &TiltAngles, repr: Repr) -> Self {
        match repr {
            Repr::Quat => ReprValue::Quat(quat_from_tilt(t)),
            Repr::Rotmat => ReprValue::Rotmat(rotmat_from_quat(&quat_from_tilt(t)).rows()),
            Repr::Tilt => ReprValue::Tilt(*t),
            Repr::Fused => ReprValue::Fused(fused_from_tilt(t)),
            Repr::Zvec => ReprValue::Zvec(zvec_from_tilt(t)),
            Repr::Phase2 => ReprValue::Phase2(phase2_from_tilt(t)),
            Repr::Phase3 => ReprValue::Phase3(phase3_from_tilt(t)),
            Repr::AbsPhase2 => ReprValue::AbsPhase2(abs_phase2_from_tilt(t)),
            Repr::AbsPhase3 => ReprValue::AbsPhase3(abs_phase3_from_tilt(t)),
        }
    }

    pub fn from_quat(q: &Quaternion, repr: Repr) -> Self {
        match repr {
            Repr::Quat => ReprValue::Quat(*q),
            Repr::Rotmat => ReprValue::Rotmat(rotmat_from_quat(q).rows()),
            _ => Self::from_tilt(&tilt_from_quat(q), repr),
        }
    }

    /// Converts to another representation. Converting to the same
    /// representation returns the value unchanged.
    pub fn convert(&self, to: Repr) -> Result<Self> {
        if to == self.repr() {
            return Ok(*self);
        }
        match (self, to) {
            (ReprValue::Quat(_) | ReprValue::Rotmat(_), Repr::Quat | Repr::Rotmat) => {
                Ok(Self::from_quat(&self.to_quat()?, to))
            }
            _ => Ok(Self::from_tilt(&self.to_tilt()?, to)),
        }
    }
}

/// Parses comma separated finite numbers.
pub fn parse_scalars(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            let v: f64 = tok.parse().map_err(|_| Error::Parse(format!("not a number: '{tok}'")))?;
            if !v.is_finite() {
                return Err(Error::Parse(format!("not a finite number: '{tok}'")));
            }
            Ok(v)
        })
        .collect()
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonValue {
    repr: String,
    data: Vec<f64>,
}

/// Scales the angular fields of a scalar list in place.
pub fn scale_angles(repr: Repr, values: &mut [f64], factor: f64) {
    for v in values.iter_mut().take(repr.angular_fields()) {
        *v *= factor;
    }
}

/// Parses either a JSON object `{"repr": ..., "data": [...]}` or comma separated
/// scalars in the field order of `repr`. A JSON value must agree with `repr`
/// when both are given. With `degrees`, angular fields are converted to radians.
pub fn parse_value(s: &str, repr: Option<Repr>, degrees: bool) -> Result<ReprValue> {
    let s = s.trim();
    let (repr, mut data) = if s.starts_with('{') {
        let j: JsonValue = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let r: Repr = j.repr.parse()?;
        if let Some(expected) = repr.filter(|&e| e != r) {
            return Err(Error::Parse(format!("expected {expected}, got {r}")));
        }
        if let Some(bad) = j.data.iter().find(|v| !v.is_finite()) {
            return Err(Error::Parse(format!("not a finite number: {bad}")));
        }
        (r, j.data)
    } else {
        let r = repr.ok_or_else(|| Error::Parse("representation required for scalar input".into()))?;
        (r, parse_scalars(s)?)
    };
    if degrees {
        scale_angles(repr, &mut data, 1f64.to_radians());
    }
    ReprValue::from_scalars(repr, &data)
}

fn output_scalars(v: &ReprValue, degrees: bool) -> Vec<f64> {
    let mut data = v.to_scalars();
    if degrees {
        scale_angles(v.repr(), &mut data, 1f64.to_degrees());
    }
    data
}

/// Shortest representation that parses back to the same `f64`; scientific
/// notation outside `[1e-5, 1e16)`. Negative zero prints as `0`.
pub fn format_f64(x: f64) -> String {
    let a = x.abs();
    if x == 0.0 {
        "0".to_owned()
    } else if (1e-5..1e16).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

/// `name=value` pairs separated by spaces.
pub fn format_plain(v: &ReprValue, degrees: bool) -> String {
    v.repr()
        .fields()
        .iter()
        .zip(output_scalars(v, degrees))
        .map(|(name, x)| format!("{name}={}", format_f64(x)))
        .collect::<Vec<_>>()
        .join(" ")
}

/// `{"repr": ..., "data": [...]}` with shortest round-trip floats.
pub fn format_json(v: &ReprValue, degrees: bool) -> String {
    let j = JsonValue { repr: v.repr().name().to_owned(), data: output_scalars(v, degrees) };
    serde_json::to_string(&j).expect("finite floats serialize")
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonKeyframe {
    t: f64,
    phase: [f64; 3],
    #[serde(default)]
    vel: Option<[f64; 3]>,
}

/// Parses a keyframe file: an array of `{"t": .., "phase": [..], "vel": [..]}`
/// objects, `vel` optional.
pub fn parse_keyframes(s: &str) -> Result<Vec<Keyframe>> {
    let raw: Vec<JsonKeyframe> = serde_json::from_str(s).map_err(|e| Error::InvalidKeyframes(e.to_string()))?;
    Ok(raw.into_iter().map(|k| Keyframe { t: k.t, phase: k.phase, vel: k.vel }).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn repr_names_round_trip() {
        for r in Repr::ALL {
            assert_eq!(r.name().parse::<Repr>().unwrap(), r);
        }
        assert!(matches!("euler".parse::<Repr>(), Err(Error::Parse(_))));
    }

    #[test]
    fn scalars() {
        assert_eq!(parse_scalars("1, 0,0 ,-2.5e-1").unwrap(), vec![1.0, 0.0, 0.0, -0.25]);
        for bad in ["", "1,,2", "a", "1,nan", "inf"] {
            assert!(parse_scalars(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn plain_output() {
        let v = parse_value("1,0,0,0", Some(Repr::Quat), false).unwrap();
        let t = v.convert(Repr::Tilt).unwrap();
        assert_eq!(format_plain(&t, false), "psi=0 gamma=0 alpha=0");
        let f = ReprValue::Tilt(TiltAngles::new(0.0, 0.0, FRAC_PI_2));
        assert_eq!(format_plain(&f, true), "psi=0 gamma=0 alpha=90");
    }

    #[test]
    fn number_format_round_trips() {
        for x in [0.0, -0.0, 1.0, -2.5, 1e-5, 3.1310047317322554e-9, 1e300, -7e-310, 0.1 + 0.2, 12345678.9] {
            let s = format_f64(x);
            assert_eq!(s.parse::<f64>().unwrap(), x + 0.0, "{s}");
        }
        assert_eq!(format_f64(-0.0), "0");
        assert_eq!(format_f64(2.5e-9), "2.5e-9");
    }

    #[test]
    fn degrees_apply_to_angles_only() {
        let v = parse_value("90,0,0,-1", Some(Repr::Fused), true).unwrap();
        match v {
            ReprValue::Fused(f) => {
                assert_eq!(f.psi, FRAC_PI_2);
                assert_eq!(f.hemisphere, Hemisphere::Lower);
            }
            _ => unreachable!(),
        }
        let v = parse_value("1,0,0,0", Some(Repr::Quat), true).unwrap();
        assert_eq!(v.to_scalars(), vec![1.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let v = ReprValue::Phase3(TiltPhase3::new(0.1 + 0.2, -1.0 / 3.0, std::f64::consts::PI));
        let s = format_json(&v, false);
        assert_eq!(parse_value(&s, None, false).unwrap(), v);
        assert!(parse_value(&s, Some(Repr::Tilt), false).is_err());
        assert!(parse_value(r#"{"repr":"tilt","data":[1,2]}"#, None, false).is_err());
        assert!(parse_value(r#"{"repr":"tilt","data":[1,2,3],"x":1}"#, None, false).is_err());
    }

    #[test]
    fn conversions_route() {
        let q = ReprValue::Quat(Quaternion::new(0.5, -0.5, 0.5, 0.5));
        let m = q.convert(Repr::Rotmat).unwrap();
        let back = m.convert(Repr::Quat).unwrap().to_quat().unwrap();
        assert!(back.distance_up_to_sign(&Quaternion::new(0.5, -0.5, 0.5, 0.5)) < 1e-15);
        let p = ReprValue::Phase2(TiltPhase2::new(4.0, 0.0));
        // tilts beyond pi survive phase-to-phase conversion
        match p.convert(Repr::Phase3).unwrap() {
            ReprValue::Phase3(p3) => assert!((p3.px - 4.0).abs() < 1e-15),
            _ => unreachable!(),
        }
        assert!(ReprValue::Quat(Quaternion::new(0.0, 0.0, 0.0, 0.0)).convert(Repr::Tilt).is_err());
        let bad = ReprValue::from_scalars(Repr::Rotmat, &[1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 2.0]).unwrap();
        assert!(bad.convert(Repr::Quat).is_err());
    }

    #[test]
    fn keyframes() {
        let k = parse_keyframes(r#"[{"t":0,"phase":[0,0,0]},{"t":1,"phase":[1,0,0],"vel":[0,0,0]}]"#).unwrap();
        assert_eq!(k.len(), 2);
        assert_eq!(k[1].vel, Some([0.0; 3]));
        assert!(parse_keyframes(r#"[{"t":0,"phase":[0,0]}]"#).is_err());
        assert!(parse_keyframes("{}").is_err());
    }
}
