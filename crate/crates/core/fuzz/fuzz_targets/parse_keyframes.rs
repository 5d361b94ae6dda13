#![no_main]

use libfuzzer_sys::fuzz_target;
use tiltrot::interp::{PhaseKind, PhaseSpline};
use tiltrot::io::parse_keyframes;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(keys) = parse_keyframes(s) else { return };
    for kind in [PhaseKind::Relative, PhaseKind::Absolute] {
        if let Ok(spline) = PhaseSpline::build(&keys, kind) {
            let (a, b) = (spline.start(), spline.end());
            for k in 0..=8 {
                let _ = spline.eval(a + (b - a) * k as f64 / 8.0);
            }
        }
    }
});
