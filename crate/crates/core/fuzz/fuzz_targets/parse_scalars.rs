#![no_main]

use libfuzzer_sys::fuzz_target;
use tiltrot::io::parse_scalars;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(v) = parse_scalars(s) {
            assert!(!v.is_empty() && v.iter().all(|x| x.is_finite()));
        }
    }
});
