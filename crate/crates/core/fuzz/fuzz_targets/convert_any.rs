#![no_main]

use libfuzzer_sys::fuzz_target;
use tiltrot::io::{parse_value, Repr};

fuzz_target!(|data: &[u8]| {
    let Some((&selector, rest)) = data.split_first() else { return };
    let Ok(s) = std::str::from_utf8(rest) else { return };
    let from = Repr::ALL[selector as usize % Repr::ALL.len()];
    let Ok(v) = parse_value(s, Some(from), false) else { return };
    for to in Repr::ALL {
        let _ = v.convert(to);
    }
});
