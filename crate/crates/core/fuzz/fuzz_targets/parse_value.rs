#![no_main]

use libfuzzer_sys::fuzz_target;
use tiltrot::io::{format_json, parse_value, Repr};

fuzz_target!(|data: &[u8]| {
    let Some((&selector, rest)) = data.split_first() else { return };
    let Ok(s) = std::str::from_utf8(rest) else { return };
    let repr = Repr::ALL.get(selector as usize % (Repr::ALL.len() + 1)).copied();
    let degrees = selector & 0x80 != 0;
    if let Ok(v) = parse_value(s, repr, degrees) {
        let again = parse_value(&format_json(&v, false), None, false).expect("formatted value parses");
        assert_eq!(again.to_scalars(), v.to_scalars());
    }
});
