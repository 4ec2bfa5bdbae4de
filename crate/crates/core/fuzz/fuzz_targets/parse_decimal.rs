#![no_main]

use atanpoly::text::{parse_decimal, parse_rational};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(r) = parse_decimal(s) {
        // every exact decimal is also a valid rational literal
        assert_eq!(parse_rational(&r.to_string()).unwrap(), r);
    }
});
