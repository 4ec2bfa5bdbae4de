#![no_main]

use atanpoly::hessenberg::{charpoly, RationalMatrix};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(m) = RationalMatrix::from_json(s) else { return };
    assert_eq!(RationalMatrix::from_json(&m.to_json()).unwrap(), m);
    if m.dim() <= 6 {
        let _ = charpoly(&m);
    }
});
