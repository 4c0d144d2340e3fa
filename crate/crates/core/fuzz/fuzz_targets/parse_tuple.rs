#![no_main]

use ktri_core::format::{parse_tuple, write_tuple};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(t) = parse_tuple(text) {
        assert_eq!(parse_tuple(&write_tuple(&t)).unwrap(), t);
    }
});
