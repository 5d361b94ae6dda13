//! Command-line front end for `tiltrot`.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 mathematical domain error
//! (singularities, no solution), 3 fuzz failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tiltrot::interp::{slerp, slerp_tilt, PhaseKind, PhaseSpline};
use tiltrot::io::{format_f64, format_json, format_plain, parse_keyframes, parse_scalars, parse_value, Repr, ReprValue};
use tiltrot::kinematics::*;
use tiltrot::phase::{abs_phase_invert, mean, phase_invert};
use tiltrot::selfcheck::run_fuzz;
use tiltrot::verify::{fused_phase_diff, fused_phase_error_scan, DEFAULT_SCAN_GRID};
use tiltrot::yaw_tilt::{compose_mismatched, compose_yaw_tilt, compose_yaw_zvec, decompose, Tilt};
use tiltrot::{
    AbsTiltPhase2, AbsTiltPhase3, AngularVelocity, Error, Hemisphere, Quaternion, TiltAngles,
    TiltPhase2, TiltPhase3, ZVector,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_FUZZ: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "tiltrot", version, about = "Tilt rotations, fused angles and the tilt phase space")]
struct Cli {
    /// Read and write `{"repr": ..., "data": [...]}` objects
    #[arg(long, global = true)]
    json: bool,
    /// Angles in degrees on input and output
    #[arg(long, global = true)]
    degrees: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Convert a rotation between representations
    Convert {
        #[arg(long)]
        from: Option<String>,
        #[arg(long)]
        to: String,
        #[arg(allow_hyphen_values = true)]
        value: String,
    },
    /// Split a rotation into fused yaw and tilt quaternions
    Decompose {
        #[arg(long)]
        from: Option<String>,
        /// Representation of the two factors
        #[arg(long, default_value = "quat")]
        to: String,
        #[arg(allow_hyphen_values = true)]
        value: String,
    },
    /// Build a rotation from a fused yaw and a tilt
    Compose {
        #[arg(long, allow_hyphen_values = true)]
        psi: f64,
        /// angles: gamma,alpha; fused: theta,phi,h; quat: w,x,y,z
        #[arg(long, value_enum, default_value_t = TiltForm::Angles)]
        tilt_form: TiltForm,
        #[arg(long, default_value = "quat")]
        to: String,
        #[arg(allow_hyphen_values = true)]
        tilt: String,
    },
    /// Build a rotation from a fused yaw and a z-vector
    ComposeZvec {
        #[arg(long, allow_hyphen_values = true)]
        psi: f64,
        #[arg(long, default_value = "quat")]
        to: String,
        #[arg(allow_hyphen_values = true)]
        zvec: String,
    },
    /// Frame B with fused yaw psi_g relative to G and the tilt of q_hc relative to H
    ComposeMismatched {
        #[arg(long, allow_hyphen_values = true)]
        psi_g: f64,
        /// Rotation from G to H
        #[arg(long, allow_hyphen_values = true)]
        q_gh: String,
        /// Rotation from H to C
        #[arg(long, allow_hyphen_values = true)]
        q_hc: String,
        #[arg(long)]
        from: Option<String>,
    },
    /// Tilt vector addition of phases
    Add {
        #[arg(long)]
        from: Option<String>,
        #[arg(required = true, allow_hyphen_values = true)]
        values: Vec<String>,
    },
    /// Mean of phases
    Mean {
        #[arg(long)]
        from: Option<String>,
        #[arg(required = true, allow_hyphen_values = true)]
        values: Vec<String>,
    },
    /// Phase of the inverse rotation (relative in, absolute out and vice versa)
    Invert {
        #[arg(long)]
        from: Option<String>,
        #[arg(allow_hyphen_values = true)]
        value: String,
    },
    /// Spherical linear interpolation
    Slerp {
        #[arg(long)]
        from: Option<String>,
        #[arg(long)]
        to: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        u: f64,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Sample a cubic spline through tilt phase keyframes as CSV
    Spline {
        /// JSON array of {"t", "phase": [px,py,pz], "vel"?: [..]}
        #[arg(long)]
        keys: PathBuf,
        /// Keys are absolute tilt phases
        #[arg(long)]
        absolute: bool,
        #[arg(long, default_value_t = 101)]
        samples: usize,
        /// Explicit comma separated sample times
        #[arg(long, allow_hyphen_values = true)]
        times: Option<String>,
    },
    /// Convert a rotational velocity at a given orientation
    Velconv {
        #[arg(long, value_enum)]
        from: VelRepr,
        #[arg(long, value_enum)]
        to: VelRepr,
        /// Orientation as tilt angles psi,gamma,alpha
        #[arg(long, allow_hyphen_values = true)]
        state: String,
        #[arg(allow_hyphen_values = true)]
        value: String,
    },
    /// Emit figure data
    Figure {
        #[command(subcommand)]
        which: Figure,
    },
    /// Run the randomized invariant suites
    Fuzz {
        #[arg(long, default_value_t = 1000)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TiltForm {
    Angles,
    Fused,
    Quat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VelRepr {
    Tiltvel,
    Phasevel,
    Absphasevel,
    Angvel,
}

impl VelRepr {
    fn name(self) -> &'static str {
        match self {
            VelRepr::Tiltvel => "tiltvel",
            VelRepr::Phasevel => "phasevel",
            VelRepr::Absphasevel => "absphasevel",
            VelRepr::Angvel => "angvel",
        }
    }

    fn fields(self) -> [&'static str; 3] {
        match self {
            VelRepr::Tiltvel => ["dpsi", "dgamma", "dalpha"],
            VelRepr::Phasevel => ["dpx", "dpy", "dpz"],
            VelRepr::Absphasevel => ["dptx", "dpty", "dptz"],
            VelRepr::Angvel => ["wx", "wy", "wz"],
        }
    }
}

#[derive(Debug, Subcommand)]
enum Figure {
    /// Difference between tilt phase and fused angles, relative to the tilt angle
    FusedPhase(FusedPhaseArgs),
}

#[derive(Debug, Args)]
struct FusedPhaseArgs {
    /// Summarise a single tilt angle instead of emitting the grid
    #[arg(long)]
    alpha: Option<f64>,
    /// One summary row per tilt angle instead of the full grid
    #[arg(long)]
    summary: bool,
    #[arg(long, default_value_t = 200)]
    alpha_steps: usize,
    /// Defaults to 360 for the grid and 3600 for summaries
    #[arg(long)]
    gamma_steps: Option<usize>,
}

fn err_repr(e: Error) -> CliError {
    CliError::Lib(e)
}

enum CliError {
    Usage(String),
    Lib(Error),
    FuzzFailed,
    Closed,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

type CliResult = std::result::Result<(), CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

struct Ctx<'a> {
    out: &'a mut dyn Write,
    json: bool,
    degrees: bool,
}

impl Ctx<'_> {
    fn line(&mut self, s: &str) -> CliResult {
        writeln!(self.out, "{s}").map_err(|e| match e.kind() {
            std::io::ErrorKind::BrokenPipe => CliError::Closed,
            _ => usage(format!("write failed: {e}")),
        })
    }

    fn angle_in(&self, a: f64) -> f64 {
        if self.degrees {
            a.to_radians()
        } else {
            a
        }
    }

    fn angle_out(&self, a: f64) -> f64 {
        if self.degrees {
            a.to_degrees()
        } else {
            a
        }
    }

    fn value(&mut self, v: &ReprValue) -> CliResult {
        let s = if self.json { format_json(v, self.degrees) } else { format_plain(v, self.degrees) };
        self.line(&s)
    }

    fn labelled(&mut self, label: &str, v: &ReprValue) -> CliResult {
        let s = if self.json { format_json(v, self.degrees) } else { format_plain(v, self.degrees) };
        self.line(&format!("{label} {s}"))
    }
}

fn repr_arg(s: Option<&str>) -> std::result::Result<Option<Repr>, CliError> {
    s.map(|s| s.parse::<Repr>()).transpose().map_err(err_repr)
}

/// Runs the command line `args` (including the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let mut ctx = Ctx { out, json: cli.json, degrees: cli.degrees };
    match dispatch(cli.command, &mut ctx) {
        Ok(()) | Err(CliError::Closed) => EXIT_OK,
        Err(CliError::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(CliError::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_domain() {
                EXIT_DOMAIN
            } else {
                EXIT_USAGE
            }
        }
        Err(CliError::FuzzFailed) => {
            let _ = writeln!(err, "error: fuzz invariants violated");
            EXIT_FUZZ
        }
    }
}

fn dispatch(cmd: Command, ctx: &mut Ctx) -> CliResult {
    match cmd {
        Command::Convert { from, to, value } => {
            let v = parse_value(&value, repr_arg(from.as_deref())?, ctx.degrees)?;
            let to: Repr = to.parse()?;
            ctx.value(&v.convert(to)?)
        }
        Command::Decompose { from, to, value } => {
            let v = parse_value(&value, repr_arg(from.as_deref())?, ctx.degrees)?;
            let to: Repr = to.parse()?;
            let d = decompose(&v.to_quat()?);
            ctx.labelled("yaw", &ReprValue::from_quat(&d.yaw, to))?;
            ctx.labelled("tilt", &ReprValue::from_quat(&d.tilt, to))
        }
        Command::Compose { psi, tilt_form, to, tilt } => {
            let s = parse_scalars(&tilt)?;
            let tilt = match (tilt_form, s.as_slice()) {
                (TiltForm::Angles, &[g, a]) => Tilt::Angles { gamma: ctx.angle_in(g), alpha: ctx.angle_in(a) },
                (TiltForm::Fused, &[t, p, h]) => {
                    if h != 1.0 && h != -1.0 {
                        return Err(usage("hemisphere must be 1 or -1"));
                    }
                    Tilt::Fused { theta: ctx.angle_in(t), phi: ctx.angle_in(p), hemisphere: Hemisphere::from_sign(h) }
                }
                (TiltForm::Quat, &[w, x, y, z]) => Tilt::Quat(Quaternion::new(w, x, y, z)),
                _ => return Err(usage(format!("wrong number of values for {tilt_form:?} tilt"))),
            };
            let q = compose_yaw_tilt(ctx.angle_in(psi), &tilt)?;
            ctx.value(&ReprValue::from_quat(&q, to.parse()?))
        }
        Command::ComposeZvec { psi, to, zvec } => {
            let z = match parse_scalars(&zvec)?.as_slice() {
                &[x, y, z] => ZVector::new(x, y, z),
                _ => return Err(usage("z-vector takes 3 values")),
            };
            let q = compose_yaw_zvec(ctx.angle_in(psi), &z)?;
            ctx.value(&ReprValue::from_quat(&q, to.parse()?))
        }
        Command::ComposeMismatched { psi_g, q_gh, q_hc, from } => {
            let from = repr_arg(from.as_deref())?.or(Some(Repr::Quat));
            let g = parse_value(&q_gh, from, ctx.degrees)?.to_quat()?;
            let c = parse_value(&q_hc, from, ctx.degrees)?.to_quat()?;
            let m = compose_mismatched(ctx.angle_in(psi_g), &g, &c)?;
            ctx.labelled("q_hb", &ReprValue::Quat(m.q_hb))?;
            ctx.labelled("q_gb", &ReprValue::Quat(m.q_gb))?;
            ctx.line(&format!("multiple_solutions={}", m.multiple_solutions))
        }
        Command::Add { from, values } => {
            let vs = parse_phases(&values, from.as_deref(), ctx.degrees)?;
            let sum = vs[1..].iter().try_fold(vs[0], |acc, v| add_phases(&acc, v))?;
            ctx.value(&sum)
        }
        Command::Mean { from, values } => {
            let vs = parse_phases(&values, from.as_deref(), ctx.degrees)?;
            ctx.value(&mean_phases(&vs)?)
        }
        Command::Invert { from, value } => {
            let v = parse_value(&value, repr_arg(from.as_deref())?, ctx.degrees)?;
            let inv = match v {
                ReprValue::Phase3(p) => ReprValue::AbsPhase3(phase_invert(&p)),
                ReprValue::AbsPhase3(p) => ReprValue::Phase3(abs_phase_invert(&p)),
                ReprValue::Phase2(p) => ReprValue::AbsPhase2(AbsTiltPhase2::new(-p.px, -p.py)),
                ReprValue::AbsPhase2(p) => ReprValue::Phase2(TiltPhase2::new(-p.px, -p.py)),
                other => ReprValue::from_quat(&other.to_quat()?.conjugate(), other.repr()),
            };
            ctx.value(&inv)
        }
        Command::Slerp { from, to, u, a, b } => {
            let from = repr_arg(from.as_deref())?;
            let (a, b) = (parse_value(&a, from, ctx.degrees)?, parse_value(&b, from, ctx.degrees)?);
            let to = repr_arg(to.as_deref())?.unwrap_or(a.repr());
            let out = match (a, b) {
                (ReprValue::Phase2(p0), ReprValue::Phase2(p1)) => ReprValue::Phase2(slerp_tilt(&p0, &p1, u)?),
                _ => ReprValue::from_quat(&slerp(&a.to_quat()?, &b.to_quat()?, u), Repr::Quat),
            };
            ctx.value(&out.convert(to)?)
        }
        Command::Spline { keys, absolute, samples, times } => spline(ctx, &keys, absolute, samples, times.as_deref()),
        Command::Velconv { from, to, state, value } => velconv(ctx, from, to, &state, &value),
        Command::Figure { which: Figure::FusedPhase(args) } => fused_phase(ctx, &args),
        Command::Fuzz { n, seed } => {
            let report = run_fuzz(n, seed);
            let mut cases = 0;
            for s in &report.suites {
                cases += s.cases;
                ctx.line(&format!(
                    "{} {} cases={} skipped={} failures={} max_error={:e} tolerance={:e}",
                    if s.passed() { "PASS" } else { "FAIL" },
                    s.name,
                    s.cases,
                    s.skipped,
                    s.failures,
                    s.max_error,
                    s.tolerance
                ))?;
            }
            let ok = report.passed();
            ctx.line(&format!(
                "fuzz seed={seed} n={n}: {} suites, {cases} cases, {}",
                report.suites.len(),
                if ok { "all passed" } else { "FAILED" }
            ))?;
            if ok {
                Ok(())
            } else {
                Err(CliError::FuzzFailed)
            }
        }
    }
}

fn parse_phases(values: &[String], from: Option<&str>, degrees: bool) -> std::result::Result<Vec<ReprValue>, CliError> {
    let from = repr_arg(from)?;
    let vs = values
        .iter()
        .map(|v| parse_value(v, from, degrees))
        .collect::<tiltrot::Result<Vec<_>>>()?;
    let first = vs[0].repr();
    if !matches!(first, Repr::Phase2 | Repr::Phase3 | Repr::AbsPhase2 | Repr::AbsPhase3) {
        return Err(usage(format!("{first} is not a tilt phase")));
    }
    if let Some(v) = vs.iter().find(|v| v.repr() != first) {
        return Err(usage(format!("mixed representations {first} and {}", v.repr())));
    }
    Ok(vs)
}

fn add_phases(a: &ReprValue, b: &ReprValue) -> std::result::Result<ReprValue, CliError> {
    Ok(match (*a, *b) {
        (ReprValue::Phase2(x), ReprValue::Phase2(y)) => ReprValue::Phase2(x + y),
        (ReprValue::Phase3(x), ReprValue::Phase3(y)) => ReprValue::Phase3(x + y),
        (ReprValue::AbsPhase2(x), ReprValue::AbsPhase2(y)) => ReprValue::AbsPhase2(x + y),
        (ReprValue::AbsPhase3(x), ReprValue::AbsPhase3(y)) => ReprValue::AbsPhase3(x + y),
        _ => return Err(usage("phases must share a representation")),
    })
}

fn mean_phases(vs: &[ReprValue]) -> std::result::Result<ReprValue, CliError> {
    macro_rules! collect_mean {
        ($variant:ident, $ty:ty) => {{
            let ps: Vec<$ty> = vs
                .iter()
                .map(|v| match v {
                    ReprValue::$variant(p) => *p,
                    _ => unreachable!("checked by parse_phases"),
                })
                .collect();
            ReprValue::$variant(mean(&ps)?)
        }};
    }
    Ok(match vs[0] {
        ReprValue::Phase2(_) => collect_mean!(Phase2, TiltPhase2),
        ReprValue::Phase3(_) => collect_mean!(Phase3, TiltPhase3),
        ReprValue::AbsPhase2(_) => collect_mean!(AbsPhase2, AbsTiltPhase2),
        ReprValue::AbsPhase3(_) => collect_mean!(AbsPhase3, AbsTiltPhase3),
        _ => return Err(usage("not a tilt phase")),
    })
}

fn three(s: &str, what: &str) -> std::result::Result<[f64; 3], CliError> {
    match parse_scalars(s)?.as_slice() {
        &[a, b, c] => Ok([a, b, c]),
        _ => Err(usage(format!("{what} takes 3 values"))),
    }
}

fn velconv(ctx: &mut Ctx, from: VelRepr, to: VelRepr, state: &str, value: &str) -> CliResult {
    let st = three(state, "state")?.map(|a| ctx.angle_in(a));
    let state = TiltAngles::new(st[0], st[1], st[2]);
    let [a, b, c] = three(value, from.name())?.map(|a| ctx.angle_in(a));

    let omega = |s: &TiltAngles| -> tiltrot::Result<AngularVelocity> {
        Ok(match from {
            VelRepr::Tiltvel => angvel_from_tiltvel(&TiltAnglesVel::new(a, b, c), s),
            VelRepr::Phasevel => angvel_from_phasevel(&TiltPhaseVel::new(a, b, c), s),
            VelRepr::Absphasevel => angvel_from_abs_phasevel(&AbsTiltPhaseVel::new(a, b, c), s),
            VelRepr::Angvel => AngularVelocity::new(a, b, c),
        })
    };
    let result: [f64; 3] = match (from, to) {
        _ if from == to => [a, b, c],
        (VelRepr::Tiltvel, VelRepr::Phasevel) => phasevel_from_tiltvel(&TiltAnglesVel::new(a, b, c), &state).to_array(),
        (VelRepr::Tiltvel, VelRepr::Absphasevel) => {
            abs_phasevel_from_tiltvel(&TiltAnglesVel::new(a, b, c), &state).to_array()
        }
        (VelRepr::Phasevel, VelRepr::Tiltvel) => {
            let t = tiltvel_from_phasevel(&TiltPhaseVel::new(a, b, c), &state)?;
            [t.dpsi, t.dgamma, t.dalpha]
        }
        (VelRepr::Absphasevel, VelRepr::Tiltvel) => {
            let t = tiltvel_from_abs_phasevel(&AbsTiltPhaseVel::new(a, b, c), &state)?;
            [t.dpsi, t.dgamma, t.dalpha]
        }
        (VelRepr::Phasevel, VelRepr::Absphasevel) => {
            abs_phasevel_from_phasevel(&TiltPhaseVel::new(a, b, c), &state).to_array()
        }
        (VelRepr::Absphasevel, VelRepr::Phasevel) => {
            phasevel_from_abs_phasevel(&AbsTiltPhaseVel::new(a, b, c), &state).to_array()
        }
        (_, VelRepr::Angvel) => omega(&state)?.to_array(),
        (VelRepr::Angvel, VelRepr::Tiltvel) => {
            let t = tiltvel_from_angvel(&omega(&state)?, &state)?;
            [t.dpsi, t.dgamma, t.dalpha]
        }
        (VelRepr::Angvel, VelRepr::Phasevel) => phasevel_from_angvel(&omega(&state)?, &state)?.to_array(),
        (VelRepr::Angvel, VelRepr::Absphasevel) => abs_phasevel_from_angvel(&omega(&state)?, &state)?.to_array(),
        _ => unreachable!("all pairs covered"),
    };
    let result = result.map(|v| ctx.angle_out(v));
    if ctx.json {
        let obj = serde_json::json!({ "repr": to.name(), "data": result });
        ctx.line(&obj.to_string())
    } else {
        let s: Vec<String> = to.fields().iter().zip(result).map(|(n, v)| format!("{n}={}", format_f64(v))).collect();
        ctx.line(&s.join(" "))
    }
}

fn spline(ctx: &mut Ctx, path: &PathBuf, absolute: bool, samples: usize, times: Option<&str>) -> CliResult {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let mut keys = parse_keyframes(&text)?;
    if ctx.degrees {
        for k in &mut keys {
            k.phase = k.phase.map(f64::to_radians);
            k.vel = k.vel.map(|v| v.map(f64::to_radians));
        }
    }
    let kind = if absolute { PhaseKind::Absolute } else { PhaseKind::Relative };
    let sp = PhaseSpline::build(&keys, kind)?;
    let ts: Vec<f64> = match times {
        Some(s) => parse_scalars(s)?,
        None if samples >= 2 => {
            let (a, b) = (sp.start(), sp.end());
            (0..samples).map(|i| a + (b - a) * i as f64 / (samples - 1) as f64).collect()
        }
        None if samples == 1 => vec![sp.start()],
        None => return Err(usage("at least one sample required")),
    };
    let (p, v) = if absolute { ("ptx,pty,ptz", "dptx,dpty,dptz") } else { ("px,py,pz", "dpx,dpy,dpz") };
    ctx.line(&format!("t,{p},{v},wx,wy,wz"))?;
    for t in ts {
        let s = sp.eval(t);
        let cols: Vec<String> = std::iter::once(t)
            .chain(s.phase.iter().chain(&s.vel).chain(&s.omega.to_array()).map(|&x| ctx.angle_out(x)))
            .map(format_f64)
            .collect();
        ctx.line(&cols.join(","))?;
    }
    Ok(())
}

fn fused_phase(ctx: &mut Ctx, args: &FusedPhaseArgs) -> CliResult {
    if args.alpha_steps == 0 {
        return Err(usage("--alpha-steps must be positive"));
    }
    let alphas: Vec<f64> = match args.alpha {
        Some(a) => vec![ctx.angle_in(a)],
        None => (1..=args.alpha_steps)
            .map(|k| std::f64::consts::FRAC_PI_2 * k as f64 / args.alpha_steps as f64)
            .collect(),
    };
    if args.summary || args.alpha.is_some() {
        let n = args.gamma_steps.unwrap_or(DEFAULT_SCAN_GRID);
        ctx.line("alpha,max_rel_diff,small_angle_rel_diff,gamma_at_max")?;
        for a in alphas {
            let s = fused_phase_error_scan(a, n)?;
            let row = [ctx.angle_out(a), s.max_rel_diff, s.small_angle_rel_diff, ctx.angle_out(s.gamma_at_max)];
            ctx.line(&row.map(format_f64).join(","))?;
        }
        return Ok(());
    }
    let n = args.gamma_steps.unwrap_or(360);
    if n == 0 {
        return Err(usage("--gamma-steps must be positive"));
    }
    ctx.line("gamma,alpha,px_minus_phi_over_alpha,py_minus_theta_over_alpha")?;
    for a in alphas {
        for k in 1..=n {
            let g = -std::f64::consts::PI + 2.0 * std::f64::consts::PI * k as f64 / n as f64;
            let (dx, dy) = fused_phase_diff(g, a);
            ctx.line(&[ctx.angle_out(g), ctx.angle_out(a), dx, dy].map(format_f64).join(","))?;
        }
    }
    Ok(())
}
