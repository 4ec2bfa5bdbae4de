#![no_main]

use atanpoly::text::parse_polynomial;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    // Display output must parse back to the same polynomial
    if let Ok(p) = parse_polynomial(s) {
        assert_eq!(parse_polynomial(&p.to_string()).unwrap(), p);
    }
});
