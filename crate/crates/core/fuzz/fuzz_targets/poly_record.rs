#![no_main]

use atanpoly::text::PolyRecord;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(rec) = PolyRecord::from_json(s) else { return };
    let again = PolyRecord::from_json(&rec.to_json()).unwrap();
    assert_eq!(again.to_json(), rec.to_json());
    let _ = rec.polynomial();
});
