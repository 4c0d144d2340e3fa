#![no_main]

use ktri_core::dyck::{from_exponents, DyckPath};
use ktri_core::format::parse_paths;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = text.parse::<DyckPath>() {
        assert_eq!(p.to_string().parse::<DyckPath>().unwrap(), p);
        assert_eq!(from_exponents(&p.to_exponents()), p);
    }
    let _ = parse_paths(text);
});
